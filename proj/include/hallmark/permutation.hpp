#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hallmark {

using Point = std::uint16_t;

/// Largest degree accepted from user input and catalog constructors.
inline constexpr std::size_t kMaxDegree = 1024;

/// Largest degree of an internally constructed action (coset-action quotients).
inline constexpr std::size_t kMaxInternalDegree = 10000;

/// A bijection of {0, ..., degree-1}, stored as its image array.
///
/// Products act on the right: (a * b)(x) = b(a(x)), so `a * b` means "apply a,
/// then b". The three-way comparison is lexicographic on the image array,
/// which is the deterministic element order used throughout the library.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `images` is a bijection; throws MalformedInput otherwise.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from 0-based cycles; points not listed are fixed.
  static Permutation fromCycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles);

  /// Skips validation. Callers guarantee a bijection.
  static Permutation fromImagesUnchecked(std::vector<Point> images);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(std::size_t point) const { return images_[point]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool isIdentity() const noexcept;
  Permutation inverse() const;
  Permutation pow(std::int64_t exponent) const;

  /// lcm of the cycle lengths.
  std::uint64_t order() const;

  /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// 1-based cycle notation, e.g. "(1,2,3)(4,5)"; the identity prints as "()".
  std::string cycleString() const;

  bool commutesWith(const Permutation& other) const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// g^-1 * x * g.
Permutation conjugate(const Permutation& x, const Permutation& g);

/// a^-1 * b^-1 * a * b.
Permutation commutator(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

std::uint64_t hashPoints(std::span<const Point> points) noexcept;

}  // namespace hallmark
