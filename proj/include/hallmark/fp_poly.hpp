#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hallmark/integers.hpp"

namespace hallmark::fp {

/// Dense polynomial over F_p, coefficients low degree first, no trailing zeros.
/// The zero polynomial has an empty coefficient vector.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& f);
std::ptrdiff_t degree(const Poly& f);
Poly add(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);

/// Quotient and remainder; `divisor` must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor, std::uint64_t p);
Poly mod(const Poly& a, const Poly& m, std::uint64_t p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p);
Poly powmod(const Poly& base, const BigInt& exponent, const Poly& m, std::uint64_t p);
Poly monic(const Poly& f, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);

/// Rabin's irreducibility test.
bool isIrreducible(const Poly& f, std::uint64_t p);

/// Order on monic polynomials of equal degree: compare (c_{d-1}, ..., c_0)
/// lexicographically. Used for every "least irreducible" choice.
bool lexLess(const Poly& a, const Poly& b);

/// Least monic irreducible polynomial of the given degree over F_p.
Poly leastIrreducible(unsigned degree, std::uint64_t p);

/// The m-th cyclotomic polynomial reduced mod p (p need not be coprime to m).
Poly cyclotomicModP(std::uint64_t m, std::uint64_t p);

/// Factors a squarefree monic f whose irreducible factors all have degree d.
/// Factors are returned in lexLess order. Randomized splitting with a fixed
/// seed, so the output is reproducible.
std::vector<Poly> equalDegreeFactorization(const Poly& f, unsigned d, std::uint64_t p);

}  // namespace hallmark::fp
