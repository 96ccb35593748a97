#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hallmark/integers.hpp"
#include "hallmark/permutation.hpp"

namespace hallmark {

/// Default element-enumeration cap; overridden by HALLMARK_CAP_ELEMENTS.
inline constexpr std::uint64_t kDefaultEnumerationCap = 5'000'000;

/// Default cap on the number of cosets in a coset-action quotient.
inline constexpr std::uint64_t kDefaultQuotientCap = 10'000;

std::uint64_t defaultEnumerationCap();

/// One level of a stabilizer chain: the orbit of `basePoint` under the strong
/// generators fixing all earlier base points, with a transversal.
struct StabilizerLevel {
  Point basePoint = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  std::vector<std::int32_t> orbitPosition;  // point -> index in orbit, or -1
  std::vector<Permutation> transversal;      // basePoint^transversal[i] == orbit[i]
  std::vector<Permutation> transversalInverse;
};

/// Base and strong generating set built by the deterministic Schreier-Sims
/// algorithm. New base points are always the smallest point moved by the
/// element that forces them.
class StabilizerChain {
 public:
  StabilizerChain() = default;
  StabilizerChain(std::size_t degree, const std::vector<Permutation>& generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<StabilizerLevel>& levels() const noexcept { return levels_; }
  std::vector<Point> base() const;
  std::vector<std::size_t> orbitLengths() const;
  BigInt order() const;

  /// Sifts g through the chain; true iff g is a member.
  bool contains(const Permutation& g) const;

  /// Every element, in chain order (not sorted).
  std::vector<Point> enumerateFlat() const;

 private:
  struct Strip {
    Permutation residue;
    std::size_t level;
  };

  Strip strip(Permutation g, std::size_t from) const;
  void rebuildLevel(std::size_t i, const std::vector<Permutation>& strong);

  std::size_t degree_ = 0;
  std::vector<StabilizerLevel> levels_;
};

/// Materialized element list of a group, sorted lexicographically by image
/// array, with hash lookup. Index 0 is always the identity.
class ElementList {
 public:
  ElementList(std::size_t degree, std::vector<Point> sortedFlat);

  std::size_t size() const noexcept { return size_; }
  std::size_t degree() const noexcept { return degree_; }

  std::span<const Point> images(std::uint32_t index) const
  {
    return {flat_.data() + static_cast<std::size_t>(index) * degree_, degree_};
  }
  Permutation at(std::uint32_t index) const;

  std::optional<std::uint32_t> find(std::span<const Point> images) const;
  std::optional<std::uint32_t> find(const Permutation& p) const { return find(p.images()); }

  /// Index of p; throws PreconditionError if p is not an element.
  std::uint32_t indexOf(const Permutation& p) const;

  /// Index of "a then b".
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }

  /// Index of g^-1 x g.
  std::uint32_t conjugate(std::uint32_t x, std::uint32_t g) const;

  std::uint64_t elementOrder(std::uint32_t index) const;

 private:
  std::size_t degree_;
  std::size_t size_;
  std::vector<Point> flat_;
  std::vector<std::uint32_t> slots_;
  std::uint64_t mask_ = 0;
  std::vector<std::uint32_t> inverse_;
};

/// A finite group given by permutation generators. Immutable and cheap to
/// copy; copies share the stabilizer chain and the lazily built element list.
class PermutationGroup {
 public:
  PermutationGroup();

  /// Validates generator degrees and builds the stabilizer chain.
  static PermutationGroup build(std::size_t degree, std::vector<Permutation> generators, std::string name = {});

  std::size_t degree() const noexcept;
  const std::string& name() const noexcept;
  const std::vector<Permutation>& generators() const noexcept;
  const StabilizerChain& chain() const noexcept;
  const BigInt& order() const noexcept;
  bool contains(const Permutation& g) const;

  /// Materializes (once) and returns the sorted element list.
  /// Throws CapacityError if the order exceeds `cap`.
  const ElementList& elements(std::uint64_t cap = defaultEnumerationCap()) const;

  PermutationGroup renamed(std::string name) const;

 private:
  struct Data;
  explicit PermutationGroup(std::shared_ptr<Data> data);
  std::shared_ptr<Data> data_;
};

/// A subgroup of a parent group, stored by its own generators and chain.
class Subgroup {
 public:
  Subgroup() = default;

  /// Throws PreconditionError if a generator is not in `parent`.
  Subgroup(PermutationGroup parent, std::vector<Permutation> generators);

  static Subgroup trivial(const PermutationGroup& parent);
  static Subgroup whole(const PermutationGroup& parent);

  const PermutationGroup& parent() const noexcept { return parent_; }
  const PermutationGroup& group() const noexcept { return group_; }
  const std::vector<Permutation>& generators() const noexcept { return group_.generators(); }
  const BigInt& order() const noexcept { return group_.order(); }
  bool contains(const Permutation& g) const { return group_.contains(g); }

 private:
  PermutationGroup parent_;
  PermutationGroup group_;
};

PermutationGroup buildGroup(std::size_t degree, std::vector<Permutation> generators);

/// Membership by sifting. Throws MalformedInput on degree mismatch.
bool isMember(const PermutationGroup& group, const Permutation& g);

/// All elements in lexicographic order. Throws CapacityError if |G| > cap.
std::vector<Permutation> enumerateElements(const PermutationGroup& group, std::uint64_t cap);

/// Normality checked by conjugating generators of `sub` by generators of the parent.
bool isNormal(const Subgroup& sub);

/// Smallest normal subgroup containing `seeds`.
Subgroup normalClosure(const PermutationGroup& group, const std::vector<Permutation>& seeds);

/// Action of G on the right cosets of a normal subgroup N.
PermutationGroup cosetActionQuotient(const PermutationGroup& group, const Subgroup& normal,
                                     std::uint64_t quotientCap = kDefaultQuotientCap);

/// [G, G] as a normal closure of generator commutators.
Subgroup derivedSubgroup(const PermutationGroup& group);

}  // namespace hallmark
