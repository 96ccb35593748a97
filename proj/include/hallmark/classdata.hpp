#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hallmark/group.hpp"

namespace hallmark {

/// Class data as the criteria see it: sizes and element orders only. Built
/// either from a permutation group or from a character table, so the two
/// paths feed identical predicates.
struct ClassProfile {
  struct Entry {
    std::string label;
    BigInt size;
    std::uint64_t elementOrder = 1;
  };
  BigInt groupOrder = 1;
  std::vector<Entry> classes;

  /// Prime divisors of groupOrder.
  std::vector<std::uint64_t> primes() const;
};

/// Indices of classes whose element order is a positive power of p.
std::vector<std::size_t> pElements(const ClassProfile& profile, std::uint64_t p);

struct ConjugacyClass {
  Permutation representative;  // lexicographically least member
  std::uint32_t representativeIndex = 0;
  BigInt size;
  std::uint64_t elementOrder = 1;
};

/// Conjugacy classes of an enumerated group. Classes are listed in order of
/// their representatives, so the identity class comes first.
class ClassTable {
 public:
  /// Throws CapacityError if |G| exceeds the enumeration cap.
  explicit ClassTable(PermutationGroup group, std::uint64_t cap = defaultEnumerationCap());

  const PermutationGroup& group() const noexcept { return group_; }
  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  std::size_t size() const noexcept { return classes_.size(); }
  const ConjugacyClass& operator[](std::size_t i) const { return classes_[i]; }

  /// Class index of an element given by its index in group().elements().
  std::uint32_t classOfIndex(std::uint32_t elementIndex) const { return classOf_[elementIndex]; }

  /// Throws PreconditionError for non-members.
  std::uint32_t classOf(const Permutation& g) const;

  /// Class of rep^k for every class.
  std::vector<std::uint32_t> powerMap(std::int64_t k) const;

  BigInt centralizerOrder(std::size_t classIndex) const;

  ClassProfile profile() const;

 private:
  PermutationGroup group_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::uint32_t> classOf_;
};

ClassTable classTable(const PermutationGroup& group);

/// |C_G(x)| from the conjugation orbit of x. Throws PreconditionError if x is
/// not in G.
BigInt centralizerOrder(const PermutationGroup& group, const Permutation& x);

/// p-part x^(m t) of x, where ord(x) = p^a m and m t = 1 mod p^a.
Permutation pPart(const Permutation& x, std::uint64_t p);
Permutation pPrimePart(const Permutation& x, std::uint64_t p);

}  // namespace hallmark
