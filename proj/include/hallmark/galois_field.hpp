#pragma once

#include <cstdint>
#include <vector>

#include "hallmark/fp_poly.hpp"

namespace hallmark {

/// GF(r^e) for small r^e, elements encoded as integers c_0 + c_1 r + ... in
/// the polynomial basis modulo the least irreducible polynomial of degree e.
class GaloisField {
 public:
  /// Throws MalformedInput unless q is a prime power.
  explicit GaloisField(std::uint64_t q);

  std::uint64_t size() const noexcept { return q_; }
  std::uint64_t characteristic() const noexcept { return r_; }
  unsigned degree() const noexcept { return e_; }
  const fp::Poly& modulus() const noexcept { return modulus_; }

  /// Least encoded element of multiplicative order q-1.
  std::uint32_t primitiveElement() const noexcept { return exp_[1]; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const;

 private:
  std::uint64_t q_;
  std::uint64_t r_;
  unsigned e_;
  fp::Poly modulus_;
  std::vector<std::uint32_t> exp_;  // exp_[i] = w^i, i < q-1
  std::vector<std::uint32_t> log_;  // log_[w^i] = i; log_[0] unused
};

}  // namespace hallmark
