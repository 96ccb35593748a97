#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hallmark/fp_poly.hpp"
#include "hallmark/integers.hpp"

namespace hallmark {

/// Exact element of Z[zeta_n], stored as exponent -> coefficient in a fixed
/// integral basis. For each prime p with p^a || n, exponents e whose
/// (e mod p^a) has top base-p digit p-1 are rewritten with
///   sum_{j=0}^{p-1} zeta^{e + j n/p} = 0.
/// The surviving exponents form a Z-basis, so equal values have identical
/// coefficient maps and zero is the empty map.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(long long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const BigInt& value);  // NOLINT(google-explicit-constructor)

  /// sum c * zeta_n^e over the given terms; exponents are reduced mod n.
  Cyclotomic(std::uint64_t n, const std::vector<std::pair<BigInt, std::int64_t>>& terms);

  static Cyclotomic rootOfUnity(std::uint64_t n, std::int64_t e);

  std::uint64_t modulus() const noexcept { return n_; }
  const std::map<std::uint64_t, BigInt>& terms() const noexcept { return terms_; }

  bool isZero() const noexcept { return terms_.empty(); }
  std::optional<BigInt> toInteger() const;

  /// Same value written over zeta_N; N must be a multiple of modulus().
  Cyclotomic lift(std::uint64_t N) const;

  /// Complex conjugate (zeta -> zeta^-1).
  Cyclotomic conj() const { return galois(-1); }

  /// Galois automorphism zeta_n -> zeta_n^k; k must be prime to n.
  Cyclotomic galois(std::int64_t k) const;

  /// this / d when every coefficient is divisible by d.
  std::optional<Cyclotomic> divideExact(const BigInt& d) const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const BigInt& k);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// e.g. "3", "-1 - z5^2 - z5^3".
  std::string toString() const;

 private:
  Cyclotomic(std::uint64_t n, std::map<std::uint64_t, BigInt> raw);
  void canonicalize();

  std::uint64_t n_ = 1;
  std::map<std::uint64_t, BigInt> terms_;
};

/// The residue field F_p[t]/(f) used to reduce Z[zeta_n] modulo a prime over p:
/// n = p^a m, f is the lexLess-least irreducible factor of Phi_m mod p, and
/// zeta_n maps to t.
struct ResidueField {
  std::uint64_t p = 0;
  std::uint64_t n = 1;
  std::uint64_t m = 1;
  unsigned degree = 1;  // ord_m(p)
  fp::Poly modulus;     // f
};

/// Memoized per (m, p); thread safe.
const ResidueField& residueField(std::uint64_t n, std::uint64_t p);

struct Residue {
  std::uint64_t p = 0;
  fp::Poly modulus;
  fp::Poly value;

  friend bool operator==(const Residue&, const Residue&) = default;
  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
};

/// Ring homomorphism Z[zeta_n] -> F_{p^d}, n = x.modulus().
Residue reduceModP(const Cyclotomic& x, std::uint64_t p);

}  // namespace hallmark
