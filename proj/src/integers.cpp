#include "hallmark/integers.hpp"

#include <numeric>

#include "hallmark/errors.hpp"

namespace hallmark {

const char* toString(ParseError::Kind kind) noexcept
{
  switch (kind) {
    case ParseError::Kind::Syntax: return "syntax";
    case ParseError::Kind::Schema: return "schema";
    case ParseError::Kind::SizeSum: return "size-sum";
    case ParseError::Kind::Orthogonality: return "orthogonality";
    case ParseError::Kind::Integrality: return "integrality";
    case ParseError::Kind::NotBijection: return "not-bijection";
  }
  return "unknown";
}

bool isPrime(std::uint64_t n)
{
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n)
{
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> primeDivisors(const BigInt& n)
{
  BigInt m = abs(n);
  std::vector<std::uint64_t> out;
  if (m <= 1) return out;
  for (std::uint64_t d = 2; BigInt(d) * d <= m; ++d) {
    if (m % d != 0) continue;
    out.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) out.push_back(toUint64(m, "prime divisor"));
  return out;
}

std::pair<std::uint64_t, unsigned> primePowerDecomposition(std::uint64_t q)
{
  auto f = factorize(q);
  if (f.size() != 1) return {0, 0};
  return f.front();
}

BigInt primePart(const BigInt& n, std::uint64_t p)
{
  BigInt m = abs(n);
  BigInt part = 1;
  if (m == 0 || p < 2) return part;
  while (m % p == 0) {
    m /= p;
    part *= p;
  }
  return part;
}

BigInt piPart(const BigInt& n, const std::vector<std::uint64_t>& primes)
{
  BigInt part = 1;
  for (auto p : primes) part *= primePart(n, p);
  return part;
}

bool isPiNumber(const BigInt& n, const std::vector<std::uint64_t>& primes)
{
  return piPart(n, primes) == abs(n);
}

bool isPositivePowerOf(std::uint64_t n, std::uint64_t p)
{
  if (n < p || p < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm64(std::uint64_t a, std::uint64_t b)
{
  if (a == 0 || b == 0) return 0;
  unsigned __int128 l = static_cast<unsigned __int128>(a / std::gcd(a, b)) * b;
  if (l > UINT64_MAX) throw CapacityError("lcm exceeds 64 bits");
  return static_cast<std::uint64_t>(l);
}

std::uint64_t powMod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod)
{
  if (mod == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t eulerPhi(std::uint64_t n)
{
  std::uint64_t phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

BigInt ipow(const BigInt& base, unsigned exp)
{
  BigInt result = 1;
  for (unsigned i = 0; i < exp; ++i) result *= base;
  return result;
}

std::uint64_t multiplicativeOrder(std::uint64_t a, std::uint64_t n)
{
  if (n == 1) return 1;
  if (std::gcd(a % n, n) != 1) throw PreconditionError("multiplicative order needs gcd(a, n) = 1");
  std::uint64_t order = eulerPhi(n);
  for (auto [p, e] : factorize(order)) {
    for (unsigned i = 0; i < e && order % p == 0 && powMod(a, order / p, n) == 1; ++i) order /= p;
  }
  return order;
}

std::uint64_t toUint64(const BigInt& n, const char* what)
{
  if (n < 0 || n > BigInt(UINT64_MAX)) throw CapacityError(std::string(what) + " does not fit in 64 bits");
  return n.convert_to<std::uint64_t>();
}

std::string toString(const BigInt& n) { return n.str(); }

}  // namespace hallmark
