#include "hallmark/permutation.hpp"

#include <numeric>
#include <sstream>

#include "hallmark/errors.hpp"
#include "hallmark/integers.hpp"

namespace hallmark {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  if (images_.size() > kMaxInternalDegree) throw CapacityError("permutation degree exceeds internal cap");
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    Point img = images_[i];
    if (img >= images_.size())
      throw MalformedInput("image of point " + std::to_string(i) + " is out of range: " + std::to_string(img));
    if (seen[img]) throw MalformedInput("point " + std::to_string(img) + " is the image of two points");
    seen[img] = true;
  }
}

Permutation Permutation::identity(std::size_t degree)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return fromImagesUnchecked(std::move(images));
}

Permutation Permutation::fromCycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      std::size_t from = cycle[i];
      std::size_t to = cycle[(i + 1) % cycle.size()];
      if (from >= degree || to >= degree) throw MalformedInput("cycle point out of range");
      if (used[from]) throw MalformedInput("point " + std::to_string(from) + " appears in two cycles");
      used[from] = true;
      images[from] = static_cast<Point>(to);
    }
  }
  return fromImagesUnchecked(std::move(images));
}

Permutation Permutation::fromImagesUnchecked(std::vector<Point> images)
{
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::isIdentity() const noexcept
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const
{
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return fromImagesUnchecked(std::move(inv));
}

Permutation Permutation::pow(std::int64_t exponent) const
{
  Permutation base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent) : static_cast<std::uint64_t>(exponent);
  std::uint64_t ord = order();
  e %= ord;
  Permutation result = identity(degree());
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::uint64_t Permutation::order() const
{
  std::uint64_t ord = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = lcm64(ord, len);
  }
  return ord;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> cycle;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(static_cast<Point>(j));
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::cycleString() const
{
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cycle : cs) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) os << (i ? "," : "") << cycle[i] + 1;
    os << ')';
  }
  return os.str();
}

bool Permutation::commutesWith(const Permutation& other) const
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (other.images_[images_[i]] != images_[other.images_[i]]) return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
  if (a.degree() != b.degree()) throw MalformedInput("degree mismatch in permutation product");
  std::vector<Point> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = b.images_[a.images_[i]];
  return Permutation::fromImagesUnchecked(std::move(images));
}

Permutation conjugate(const Permutation& x, const Permutation& g) { return g.inverse() * x * g; }

Permutation commutator(const Permutation& a, const Permutation& b)
{
  return a.inverse() * b.inverse() * a * b;
}

std::uint64_t hashPoints(std::span<const Point> points) noexcept
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Point p : points) {
    h ^= p;
    h *= 0x100000001b3ULL;
  }
  return h ^ (h >> 29);
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept
{
  return static_cast<std::size_t>(hashPoints(p.images()));
}

}  // namespace hallmark
