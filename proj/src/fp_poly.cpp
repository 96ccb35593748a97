#include "hallmark/fp_poly.hpp"

#include <algorithm>

#include "hallmark/errors.hpp"

namespace hallmark::fp {

namespace {

std::uint64_t mulMod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t inverseMod(std::uint64_t a, std::uint64_t p) { return powMod(a, p - 2, p); }

}  // namespace

void trim(Poly& f)
{
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::ptrdiff_t degree(const Poly& f) { return static_cast<std::ptrdiff_t>(f.size()) - 1; }

Poly add(const Poly& a, const Poly& b, std::uint64_t p)
{
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + b[i]) % p;
  trim(out);
  return out;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p)
{
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + p - b[i]) % p;
  trim(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p)
{
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  if (p < (1u << 16)) {
    // Products stay below 2^32, so 2^32 of them fit in an unreduced 64-bit sum.
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    for (auto& c : out) c %= p;
  } else {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mulMod(a[i], b[j], p)) % p;
  }
  trim(out);
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor, std::uint64_t p)
{
  if (divisor.empty()) throw PreconditionError("polynomial division by zero");
  Poly rem = dividend;
  trim(rem);
  if (rem.size() < divisor.size()) return {{}, rem};
  std::uint64_t leadInv = inverseMod(divisor.back(), p);
  Poly quot(rem.size() - divisor.size() + 1, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    std::uint64_t c = mulMod(rem[k + divisor.size() - 1], leadInv, p);
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < divisor.size(); ++j) rem[k + j] = (rem[k + j] + p - mulMod(c, divisor[j], p)) % p;
  }
  trim(quot);
  trim(rem);
  return {quot, rem};
}

Poly mod(const Poly& a, const Poly& m, std::uint64_t p) { return divmod(a, m, p).second; }

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) { return mod(mul(a, b, p), m, p); }

Poly powmod(const Poly& base, const BigInt& exponent, const Poly& m, std::uint64_t p)
{
  Poly result{1};
  result = mod(result, m, p);
  Poly b = mod(base, m, p);
  BigInt e = exponent;
  while (e > 0) {
    if ((e & 1) != 0) result = mulmod(result, b, m, p);
    e >>= 1;
    if (e > 0) b = mulmod(b, b, m, p);
  }
  return result;
}

Poly monic(const Poly& f, std::uint64_t p)
{
  if (f.empty()) return f;
  std::uint64_t inv = inverseMod(f.back(), p);
  Poly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = mulMod(f[i], inv, p);
  return out;
}

Poly gcd(Poly a, Poly b, std::uint64_t p)
{
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

bool isIrreducible(const Poly& f, std::uint64_t p)
{
  auto n = degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly x{0, 1};
  auto frobeniusPower = [&](std::ptrdiff_t k) {
    Poly r = mod(x, f, p);
    for (std::ptrdiff_t i = 0; i < k; ++i) r = powmod(r, BigInt(p), f, p);
    return r;
  };
  if (frobeniusPower(n) != mod(x, f, p)) return false;
  for (auto [l, e] : factorize(static_cast<std::uint64_t>(n))) {
    Poly h = sub(frobeniusPower(n / static_cast<std::ptrdiff_t>(l)), x, p);
    if (degree(gcd(f, h, p)) != 0) return false;
  }
  return true;
}

bool lexLess(const Poly& a, const Poly& b)
{
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Poly leastIrreducible(unsigned deg, std::uint64_t p)
{
  if (deg == 0) throw PreconditionError("irreducible polynomial of degree 0 requested");
  Poly f(deg + 1, 0);
  f[deg] = 1;
  // Counting through (c_{d-1}, ..., c_0) as a base-p number visits lexLess order.
  while (true) {
    if (isIrreducible(f, p)) return f;
    std::size_t i = 0;
    while (i < deg && ++f[i] == p) f[i++] = 0;
    if (i == deg) throw PreconditionError("no irreducible polynomial found");
  }
}

Poly cyclotomicModP(std::uint64_t m, std::uint64_t p)
{
  // Phi_m = prod_{d | m} (x^d - 1)^{mu(m/d)}
  auto primes = factorize(m);
  Poly num{1}, den{1};
  std::size_t r = primes.size();
  for (std::uint64_t mask = 0; mask < (1ULL << r); ++mask) {
    std::uint64_t sq = 1;
    int bits = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1) {
        sq *= primes[i].first;
        ++bits;
      }
    std::uint64_t d = m / sq;
    Poly term(d + 1, 0);
    term[0] = p - 1;
    term[d] = 1;
    if (bits % 2 == 0)
      num = mul(num, term, p);
    else
      den = mul(den, term, p);
  }
  auto [q, rem] = divmod(num, den, p);
  if (!rem.empty()) throw Error("cyclotomic division left a remainder");
  return q;
}

std::vector<Poly> equalDegreeFactorization(const Poly& f, unsigned d, std::uint64_t p)
{
  std::vector<Poly> done;
  std::vector<Poly> pending{monic(f, p)};
  std::mt19937_64 rng(0x4841'4c4c'4d41'524bULL);
  while (!pending.empty()) {
    Poly g = std::move(pending.back());
    pending.pop_back();
    auto n = degree(g);
    if (n <= 0) continue;
    if (n == static_cast<std::ptrdiff_t>(d)) {
      done.push_back(std::move(g));
      continue;
    }
    while (true) {
      Poly a(static_cast<std::size_t>(n));
      for (auto& c : a) c = rng() % p;
      trim(a);
      if (a.empty()) continue;
      // Trace of a from F_{p^d} down to F_p, computed factorwise modulo g.
      Poly trace = a;
      Poly cur = a;
      for (unsigned i = 1; i < d; ++i) {
        cur = powmod(cur, BigInt(p), g, p);
        trace = add(trace, cur, p);
      }
      std::vector<Poly> parts;
      std::ptrdiff_t largest = 0;
      for (std::uint64_t c = 0; c < p; ++c) {
        Poly shifted = sub(trace, Poly{c}, p);
        Poly h = shifted.empty() ? g : gcd(g, shifted, p);
        if (degree(h) > 0) {
          largest = std::max(largest, degree(h));
          parts.push_back(std::move(h));
        }
      }
      if (largest < n) {
        for (auto& part : parts) pending.push_back(std::move(part));
        break;
      }
    }
  }
  std::sort(done.begin(), done.end(), lexLess);
  return done;
}

}  // namespace hallmark::fp
