#include "hallmark/cyclotomic.hpp"

#include <mutex>
#include <sstream>

#include "hallmark/errors.hpp"

namespace hallmark {

namespace {

std::uint64_t reduceExp(std::int64_t e, std::uint64_t n)
{
  auto r = e % static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(n) : r);
}

void addTerm(std::map<std::uint64_t, BigInt>& m, std::uint64_t e, const BigInt& c)
{
  if (c == 0) return;
  auto [it, fresh] = m.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

}  // namespace

Cyclotomic::Cyclotomic(long long value) : Cyclotomic(BigInt(value)) {}

Cyclotomic::Cyclotomic(const BigInt& value)
{
  if (value != 0) terms_.emplace(0, value);
}

Cyclotomic::Cyclotomic(std::uint64_t n, const std::vector<std::pair<BigInt, std::int64_t>>& terms) : n_(n)
{
  if (n == 0) throw MalformedInput("cyclotomic modulus must be positive");
  for (const auto& [c, e] : terms) addTerm(terms_, reduceExp(e, n), c);
  canonicalize();
}

Cyclotomic::Cyclotomic(std::uint64_t n, std::map<std::uint64_t, BigInt> raw) : n_(n), terms_(std::move(raw))
{
  canonicalize();
}

Cyclotomic Cyclotomic::rootOfUnity(std::uint64_t n, std::int64_t e) { return Cyclotomic(n, {{BigInt(1), e}}); }

void Cyclotomic::canonicalize()
{
  for (auto [p, a] : factorize(n_)) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < a; ++i) q *= p;
    const std::uint64_t top = q / p;  // weight of the top base-p digit of e mod q
    const std::uint64_t step = n_ / p;
    std::vector<std::pair<std::uint64_t, BigInt>> bad;
    for (auto it = terms_.begin(); it != terms_.end();) {
      if ((it->first % q) / top == p - 1) {
        bad.emplace_back(it->first, std::move(it->second));
        it = terms_.erase(it);
      } else {
        ++it;
      }
    }
    // Shifting by n/p moves only the p-component, so the new exponents are good for p.
    for (const auto& [e, c] : bad)
      for (std::uint64_t j = 1; j < p; ++j) addTerm(terms_, (e + j * step) % n_, -c);
  }
}

std::optional<BigInt> Cyclotomic::toInteger() const
{
  if (terms_.empty()) return BigInt(0);
  if (terms_.size() == 1 && terms_.begin()->first == 0) return terms_.begin()->second;
  return std::nullopt;
}

Cyclotomic Cyclotomic::lift(std::uint64_t N) const
{
  if (N == 0 || N % n_ != 0) throw PreconditionError("lift: " + std::to_string(N) + " is not a multiple of " + std::to_string(n_));
  if (N == n_) return *this;
  std::map<std::uint64_t, BigInt> raw;
  const std::uint64_t k = N / n_;
  for (const auto& [e, c] : terms_) raw.emplace(e * k, c);
  return Cyclotomic(N, std::move(raw));
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const
{
  if (gcd64(reduceExp(k, n_), n_) != 1 && n_ > 1) throw PreconditionError("galois: exponent not prime to modulus");
  std::map<std::uint64_t, BigInt> raw;
  auto kk = static_cast<unsigned __int128>(reduceExp(k, n_));
  for (const auto& [e, c] : terms_) addTerm(raw, static_cast<std::uint64_t>(kk * e % n_), c);
  return Cyclotomic(n_, std::move(raw));
}

std::optional<Cyclotomic> Cyclotomic::divideExact(const BigInt& d) const
{
  if (d == 0) throw PreconditionError("division by zero");
  Cyclotomic out;
  out.n_ = n_;
  for (const auto& [e, c] : terms_) {
    if (c % d != 0) return std::nullopt;
    out.terms_.emplace(e, c / d);
  }
  return out;
}

Cyclotomic Cyclotomic::operator-() const
{
  Cyclotomic out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

namespace {

std::uint64_t commonModulus(const Cyclotomic& a, const Cyclotomic& b) { return lcm64(a.modulus(), b.modulus()); }

}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b)
{
  std::uint64_t n = commonModulus(a, b);
  if (a.n_ != n || b.n_ != n) return a.lift(n) + b.lift(n);
  Cyclotomic out = a;
  for (const auto& [e, c] : b.terms_) addTerm(out.terms_, e, c);
  return out;  // basis exponents are closed under addition
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b)
{
  std::uint64_t n = commonModulus(a, b);
  if (a.n_ != n || b.n_ != n) return a.lift(n) * b.lift(n);
  std::map<std::uint64_t, BigInt> raw;
  for (const auto& [e1, c1] : a.terms_)
    for (const auto& [e2, c2] : b.terms_) addTerm(raw, (e1 + e2) % n, c1 * c2);
  return Cyclotomic(n, std::move(raw));
}

Cyclotomic operator*(const Cyclotomic& a, const BigInt& k)
{
  if (k == 0) return Cyclotomic();
  Cyclotomic out = a;
  for (auto& [e, c] : out.terms_) c *= k;
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b)
{
  if (a.n_ == b.n_) return a.terms_ == b.terms_;
  std::uint64_t n = commonModulus(a, b);
  return a.lift(n).terms_ == b.lift(n).terms_;
}

std::string Cyclotomic::toString() const
{
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "z" << n_;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

const ResidueField& residueField(std::uint64_t n, std::uint64_t p)
{
  if (!isPrime(p)) throw PreconditionError("reduceModP: " + std::to_string(p) + " is not prime");
  std::uint64_t m = n;
  while (m % p == 0) m /= p;
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, std::uint64_t>, ResidueField> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(m, p);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  ResidueField f;
  f.p = p;
  f.n = n;
  f.m = m;
  if (m == 1) {
    f.degree = 1;
    f.modulus = {p - 1, 1};  // t - 1
  } else {
    f.degree = static_cast<unsigned>(multiplicativeOrder(p % m, m));
    auto factors = fp::equalDegreeFactorization(fp::cyclotomicModP(m, p), f.degree, p);
    f.modulus = factors.front();
  }
  return cache.emplace(key, std::move(f)).first->second;
}

Residue operator+(const Residue& a, const Residue& b)
{
  if (a.modulus != b.modulus) throw PreconditionError("residues from different fields");
  return {a.p, a.modulus, fp::add(a.value, b.value, a.p)};
}

Residue operator*(const Residue& a, const Residue& b)
{
  if (a.modulus != b.modulus) throw PreconditionError("residues from different fields");
  return {a.p, a.modulus, fp::mulmod(a.value, b.value, a.modulus, a.p)};
}

Residue reduceModP(const Cyclotomic& x, std::uint64_t p)
{
  const ResidueField& f = residueField(x.modulus(), p);
  fp::Poly v(f.m, 0);
  BigInt bp = p;
  for (const auto& [e, c] : x.terms()) {
    BigInt r = c % bp;
    if (r < 0) r += bp;
    auto& slot = v[e % f.m];
    slot = (slot + static_cast<std::uint64_t>(r)) % p;
  }
  fp::trim(v);
  return {p, f.modulus, fp::mod(v, f.modulus, p)};
}

}  // namespace hallmark
