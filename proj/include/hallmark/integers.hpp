#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hallmark {

using BigInt = boost::multiprecision::cpp_int;

/// Sorted list of the distinct primes dividing |n|; empty for |n| <= 1.
std::vector<std::uint64_t> primeDivisors(const BigInt& n);

/// Prime factorization of n as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

bool isPrime(std::uint64_t n);

/// If q = r^e with r prime and e >= 1, returns {r, e}; otherwise {0, 0}.
std::pair<std::uint64_t, unsigned> primePowerDecomposition(std::uint64_t q);

/// Largest divisor of n that is a power of p.
BigInt primePart(const BigInt& n, std::uint64_t p);

/// Largest divisor of n all of whose prime factors lie in `primes`.
BigInt piPart(const BigInt& n, const std::vector<std::uint64_t>& primes);

/// True iff every prime factor of n lies in `primes` (n = 1 qualifies).
bool isPiNumber(const BigInt& n, const std::vector<std::uint64_t>& primes);

/// True iff n is a positive power of p (p^k, k >= 1).
bool isPositivePowerOf(std::uint64_t n, std::uint64_t p);

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm64(std::uint64_t a, std::uint64_t b);
std::uint64_t powMod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t eulerPhi(std::uint64_t n);

BigInt ipow(const BigInt& base, unsigned exp);

/// Multiplicative order of a modulo n (gcd(a, n) must be 1, n >= 1).
std::uint64_t multiplicativeOrder(std::uint64_t a, std::uint64_t n);

/// Converts when the value fits; throws CapacityError otherwise.
std::uint64_t toUint64(const BigInt& n, const char* what);

std::string toString(const BigInt& n);

}  // namespace hallmark
