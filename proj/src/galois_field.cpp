#include "hallmark/galois_field.hpp"

#include "hallmark/errors.hpp"
#include "hallmark/integers.hpp"

namespace hallmark {

namespace {

fp::Poly decode(std::uint64_t v, std::uint64_t r, unsigned e)
{
  fp::Poly f(e, 0);
  for (unsigned i = 0; i < e; ++i) {
    f[i] = v % r;
    v /= r;
  }
  fp::trim(f);
  return f;
}

std::uint32_t encode(const fp::Poly& f, std::uint64_t r)
{
  std::uint64_t v = 0;
  for (std::size_t i = f.size(); i-- > 0;) v = v * r + f[i];
  return static_cast<std::uint32_t>(v);
}

}  // namespace

GaloisField::GaloisField(std::uint64_t q) : q_(q)
{
  auto [r, e] = primePowerDecomposition(q);
  if (r == 0) throw MalformedInput("field size " + std::to_string(q) + " is not a prime power");
  if (q > (1u << 24)) throw CapacityError("field size " + std::to_string(q) + " exceeds 2^24");
  r_ = r;
  e_ = e;
  modulus_ = fp::leastIrreducible(e, r);
  log_.assign(q, 0);
  for (std::uint64_t cand = 1; cand < q; ++cand) {
    fp::Poly g = decode(cand, r, e);
    exp_.clear();
    fp::Poly cur{1};
    do {
      exp_.push_back(encode(cur, r));
      cur = fp::mulmod(cur, g, modulus_, r);
    } while (!(cur.size() == 1 && cur[0] == 1) && exp_.size() < q);
    if (exp_.size() == q - 1) break;
  }
  if (exp_.size() != q - 1) throw Error("no primitive element found");
  for (std::uint32_t i = 0; i < exp_.size(); ++i) log_[exp_[i]] = i;
}

std::uint32_t GaloisField::add(std::uint32_t a, std::uint32_t b) const
{
  if (r_ == 2) return a ^ b;
  std::uint64_t out = 0, place = 1;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((a % r_ + b % r_) % r_) * place;
    a /= static_cast<std::uint32_t>(r_);
    b /= static_cast<std::uint32_t>(r_);
    place *= r_;
  }
  return static_cast<std::uint32_t>(out);
}

std::uint32_t GaloisField::neg(std::uint32_t a) const
{
  if (r_ == 2) return a;
  std::uint64_t out = 0, place = 1;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((r_ - a % r_) % r_) * place;
    a /= static_cast<std::uint32_t>(r_);
    place *= r_;
  }
  return static_cast<std::uint32_t>(out);
}

std::uint32_t GaloisField::mul(std::uint32_t a, std::uint32_t b) const
{
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

std::uint32_t GaloisField::inv(std::uint32_t a) const
{
  if (a == 0) throw PreconditionError("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t GaloisField::pow(std::uint32_t a, std::uint64_t k) const
{
  if (k == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::uint64_t>(log_[a]) * (k % (q_ - 1)) % (q_ - 1)];
}

}  // namespace hallmark
