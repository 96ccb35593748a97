#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hallmark/classdata.hpp"
#include "hallmark/subgroups.hpp"
#include "hallmark/verdict.hpp"

namespace hallmark {

/// Degrees of the irreducible characters in the principal p-block.
struct BlockDegrees {
  std::vector<std::size_t> characters;
  std::vector<BigInt> degrees;
};
using BlockDegreeMap = std::map<std::uint64_t, BlockDegrees>;

/// q divides no p-element class size and p divides no q-element class size.
/// Both sides are always evaluated and reported as conditions.
Verdict crossDivisibilityCriterion(const ClassProfile& profile, std::uint64_t p, std::uint64_t q,
                                   Provenance provenance = Provenance::Criterion);

/// crossDivisibilityCriterion for every pair from pi ∩ primes(|G|).
Verdict nilpotentHallCriterion(const ClassProfile& profile, const std::vector<std::uint64_t>& pi,
                               Provenance provenance = Provenance::Criterion);

/// (i) p-element classes (p in pi) have pi'-size; (ii) for p in pi ∩ {3,5}
/// dividing |G|, no principal-block degree is divisible by p. Without block
/// data for a required prime the outcome is Undetermined.
Verdict abelianHallCriterion(const ClassProfile& profile, const std::vector<std::uint64_t>& pi,
                             const std::optional<BlockDegreeMap>& blockDegrees,
                             Provenance provenance = Provenance::Criterion);

/// pi ∩ primes(order), sorted and deduplicated.
std::vector<std::uint64_t> relevantPrimes(const BigInt& order, std::vector<std::uint64_t> pi);

struct TheoremReport {
  std::string theorem;  // A, B, C, t4.1, t4.2, t4.3
  std::string group;
  std::vector<std::uint64_t> primes;
  std::string relation;       // "equivalence" or "implication"
  bool tested = true;         // false when a cap stopped either side or data is missing
  bool capped = false;        // a capacity limit stopped the check
  bool applicable = true;     // false when the theorem's hypothesis fails
  std::string note;
  Verdict criterion;
  Verdict oracle;
  bool agree = true;
};

/// Pairs each criterion with its oracle for one group. Class data and Sylow
/// systems are computed once and shared across checks.
class TheoremVerifier {
 public:
  explicit TheoremVerifier(PermutationGroup group);
  ~TheoremVerifier();

  const PermutationGroup& group() const noexcept { return group_; }
  const ClassTable& classTable();
  GroupOracle& oracle();

  TheoremReport theoremA(std::uint64_t p, std::uint64_t q);
  TheoremReport theoremB(const std::vector<std::uint64_t>& pi);
  TheoremReport theoremC(const std::vector<std::uint64_t>& pi, const std::optional<BlockDegreeMap>& blocks);
  TheoremReport pSolvableNormalization(std::uint64_t p, std::uint64_t q);
  TheoremReport opPrimeCharacterization(std::uint64_t p, std::uint64_t q);
  TheoremReport qSolvabilityFromOddClasses(std::uint64_t q);

  bool qSolvable(std::uint64_t q);

 private:
  template <class F>
  TheoremReport guarded(TheoremReport base, F&& body);

  PermutationGroup group_;
  std::unique_ptr<ClassTable> table_;
  std::unique_ptr<ClassProfile> profile_;
  std::unique_ptr<GroupOracle> oracle_;
  std::map<std::uint64_t, bool> qSolvable_;
  const ClassProfile& profile();
};

TheoremReport verifyTheoremA(const PermutationGroup& g, std::uint64_t p, std::uint64_t q);
TheoremReport verifyTheoremB(const PermutationGroup& g, const std::vector<std::uint64_t>& pi);
TheoremReport verifyTheoremC(const PermutationGroup& g, const std::vector<std::uint64_t>& pi,
                             const std::optional<BlockDegreeMap>& blocks);
TheoremReport verifyPSolvableNormalization(const PermutationGroup& g, std::uint64_t p, std::uint64_t q);
TheoremReport verifyOpPrimeCharacterization(const PermutationGroup& g, std::uint64_t p, std::uint64_t q);
TheoremReport verifyQSolvabilityFromOddClasses(const PermutationGroup& g, std::uint64_t q);

}  // namespace hallmark
