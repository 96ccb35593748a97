#include <gtest/gtest.h>

#include <random>

#include "hallmark/cyclotomic.hpp"
#include "hallmark/errors.hpp"

using namespace hallmark;

namespace {

using ZPoly = std::vector<BigInt>;

void trimZ(ZPoly& f)
{
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly mulZ(const ZPoly& a, const ZPoly& b)
{
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trimZ(out);
  return out;
}

// Remainder modulo a monic integer polynomial.
ZPoly modMonic(ZPoly a, const ZPoly& m)
{
  trimZ(a);
  while (a.size() >= m.size()) {
    BigInt c = a.back();
    std::size_t shift = a.size() - m.size();
    for (std::size_t j = 0; j < m.size(); ++j) a[shift + j] -= c * m[j];
    trimZ(a);
  }
  return a;
}

// Phi_n over Z by dividing x^n - 1 by Phi_d for proper divisors d.
ZPoly phi(std::uint64_t n)
{
  ZPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d) continue;
    ZPoly den = phi(d);
    ZPoly q(num.size() - den.size() + 1, 0);
    ZPoly r = num;
    for (std::size_t k = q.size(); k-- > 0;) {
      q[k] = r[k + den.size() - 1];
      for (std::size_t j = 0; j < den.size(); ++j) r[k + j] -= q[k] * den[j];
    }
    trimZ(q);
    num = q;
  }
  return num;
}

// Reference representation: sum c x^e reduced modulo Phi_n.
ZPoly reference(std::uint64_t n, const std::map<std::uint64_t, BigInt>& terms)
{
  ZPoly f(n, 0);
  for (const auto& [e, c] : terms) f[e] += c;
  return modMonic(f, phi(n));
}

Cyclotomic randomElement(std::mt19937_64& rng, std::uint64_t n)
{
  std::vector<std::pair<BigInt, std::int64_t>> terms;
  int k = static_cast<int>(rng() % 6);
  for (int i = 0; i < k; ++i)
    terms.emplace_back(BigInt(static_cast<int>(rng() % 11) - 5), static_cast<std::int64_t>(rng() % (3 * n)) - static_cast<std::int64_t>(n));
  return Cyclotomic(n, terms);
}

}  // namespace

TEST(Cyclotomic, Basics)
{
  Cyclotomic z5 = Cyclotomic::rootOfUnity(5, 1);
  Cyclotomic sum;
  for (int e = 0; e < 5; ++e) sum = sum + Cyclotomic::rootOfUnity(5, e);
  EXPECT_TRUE(sum.isZero());
  EXPECT_EQ(z5 * z5.conj(), Cyclotomic(1));
  EXPECT_EQ(Cyclotomic::rootOfUnity(4, 2), Cyclotomic(-1));
  EXPECT_EQ(Cyclotomic::rootOfUnity(6, 1) + Cyclotomic::rootOfUnity(6, 5), Cyclotomic(1));
  // lifting across moduli keeps the value
  EXPECT_EQ(Cyclotomic::rootOfUnity(3, 1), Cyclotomic::rootOfUnity(12, 4));
  EXPECT_EQ((Cyclotomic::rootOfUnity(3, 1) + Cyclotomic::rootOfUnity(4, 1)).modulus(), 12u);
  EXPECT_EQ(Cyclotomic(7).toInteger(), BigInt(7));
  EXPECT_FALSE(z5.toInteger());
  EXPECT_THROW(z5.galois(5), PreconditionError);
  // golden ratio relation: (z5 + z5^4)^2 + (z5 + z5^4) - 1 = 0
  Cyclotomic g = z5 + z5.conj();
  EXPECT_TRUE((g * g + g - Cyclotomic(1)).isZero());
  EXPECT_EQ((Cyclotomic(6) * z5).divideExact(3), Cyclotomic(2) * z5);
  EXPECT_FALSE((Cyclotomic(6) * z5 + Cyclotomic(1)).divideExact(3));
}

TEST(Cyclotomic, MatchesPhiDivisionReference)
{
  std::mt19937_64 rng(12345);
  for (std::uint64_t n = 1; n <= 45; ++n) {
    ZPoly phiN = phi(n);
    for (int trial = 0; trial < 20; ++trial) {
      auto a = randomElement(rng, n), b = randomElement(rng, n);
      auto ra = reference(n, a.terms()), rb = reference(n, b.terms());
      EXPECT_EQ(reference(n, (a + b).terms()), modMonic([&] {
                  ZPoly s(std::max(ra.size(), rb.size()), 0);
                  for (std::size_t i = 0; i < ra.size(); ++i) s[i] += ra[i];
                  for (std::size_t i = 0; i < rb.size(); ++i) s[i] += rb[i];
                  return s;
                }(), phiN))
          << n;
      EXPECT_EQ(reference(n, (a * b).terms()), modMonic(mulZ(ra, rb), phiN)) << n;
      // canonical form is unique: zero exactly when the reference is zero
      auto d = a - b;
      EXPECT_EQ(d.isZero(), reference(n, d.terms()).empty()) << n;
      // the number of basis exponents never exceeds phi(n)
      EXPECT_LE((a * b).terms().size(), eulerPhi(n));
    }
  }
}

TEST(Cyclotomic, GaloisIsRingAutomorphism)
{
  std::mt19937_64 rng(777);
  for (std::uint64_t n : {7u, 12u, 15u, 20u, 24u}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto a = randomElement(rng, n), b = randomElement(rng, n);
      for (std::int64_t k = 1; k < static_cast<std::int64_t>(n); ++k) {
        if (gcd64(k, n) != 1) continue;
        EXPECT_EQ((a * b).galois(k), a.galois(k) * b.galois(k));
        EXPECT_EQ((a + b).galois(k), a.galois(k) + b.galois(k));
      }
    }
  }
}

TEST(ReduceModP, Examples)
{
  EXPECT_EQ(reduceModP(Cyclotomic(1).lift(12), 5).value, (fp::Poly{1}));
  // n = 4, p = 2: zeta_4 -> 1 so 1 + zeta_4 -> 0
  auto r = reduceModP(Cyclotomic(1) + Cyclotomic::rootOfUnity(4, 1), 2);
  EXPECT_TRUE(r.value.empty());
  EXPECT_EQ(residueField(5, 2).degree, 4u);
  EXPECT_EQ(residueField(7440, 31).degree, 2u);
}

TEST(ReduceModP, IsRingHomomorphism)
{
  std::mt19937_64 rng(99);
  for (auto [n, p] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {5, 2}, {12, 2}, {12, 3}, {15, 2}, {20, 5}, {21, 2}, {30, 3}, {30, 5}, {31, 2}, {60, 7}}) {
    for (int trial = 0; trial < 30; ++trial) {
      auto a = randomElement(rng, n), b = randomElement(rng, n);
      EXPECT_EQ(reduceModP(a + b, p), reduceModP(a, p) + reduceModP(b, p)) << n << " " << p;
      EXPECT_EQ(reduceModP(a * b, p), reduceModP(a, p) * reduceModP(b, p)) << n << " " << p;
    }
  }
}

TEST(ReduceModP, LeastFactorIsIrreducibleAndDividesPhi)
{
  for (auto [n, p] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{5, 2}, {21, 2}, {31, 5}, {60, 7}, {91, 3}}) {
    const auto& f = residueField(n, p);
    EXPECT_TRUE(fp::isIrreducible(f.modulus, p));
    EXPECT_EQ(static_cast<unsigned>(fp::degree(f.modulus)), f.degree);
    EXPECT_TRUE(fp::mod(fp::cyclotomicModP(f.m, p), f.modulus, p).empty());
    // no smaller monic factor of that degree exists
    auto factors = fp::equalDegreeFactorization(fp::cyclotomicModP(f.m, p), f.degree, p);
    EXPECT_EQ(factors.size() * f.degree, eulerPhi(f.m));
    for (const auto& g : factors) EXPECT_FALSE(fp::lexLess(g, f.modulus));
  }
}
