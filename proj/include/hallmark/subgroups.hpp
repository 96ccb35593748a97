#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hallmark/group.hpp"
#include "hallmark/verdict.hpp"

namespace hallmark {

struct SylowWitness {
  std::uint64_t p = 0;
  Subgroup subgroup;
  std::optional<std::vector<Subgroup>> conjugates;
};

enum class HallStructure { Abelian, NilpotentNonabelian, Neither };
enum class HallStatus { Found, ProvedAbsent };

const char* toString(HallStructure s) noexcept;
const char* toString(HallStatus s) noexcept;

struct HallWitness {
  std::vector<std::uint64_t> pi;
  Subgroup subgroup;
  HallStructure structure = HallStructure::Neither;
};

struct HallResult {
  HallStatus status = HallStatus::ProvedAbsent;
  std::optional<HallWitness> witness;
  std::string strategy;  // "trivial", "sylow", "product" or "exhaustive"
  std::uint64_t tuplesExamined = 0;
};

struct HallLimits {
  std::uint64_t productTuples = 20'000;
  std::uint64_t exhaustiveTuples = 5'000'000;
};

/// Default cap on the number of Sylow conjugates held at once.
inline constexpr std::uint64_t kDefaultSylowCap = 1'000'000;

/// Enumeration-mode oracles for one group. Sylow systems are computed once per
/// prime and shared by later queries; safe for concurrent use.
class GroupOracle {
 public:
  explicit GroupOracle(PermutationGroup group, std::uint64_t sylowCap = kDefaultSylowCap);
  ~GroupOracle();
  GroupOracle(const GroupOracle&) = delete;
  GroupOracle& operator=(const GroupOracle&) = delete;

  const PermutationGroup& group() const noexcept { return group_; }

  SylowWitness sylow(std::uint64_t p);

  /// All Sylow p-subgroups, ordered by their sorted element sets.
  std::vector<Subgroup> allSylow(std::uint64_t p);

  Verdict commutingSylowPair(std::uint64_t p, std::uint64_t q);

  /// Does some Sylow p-subgroup normalize some Sylow q-subgroup?
  Verdict normalizingSylowPair(std::uint64_t p, std::uint64_t q);

  HallResult hall(std::vector<std::uint64_t> pi, const HallLimits& limits = {});

 private:
  struct SylowSet;
  const SylowSet& sylowSet(std::uint64_t p);

  PermutationGroup group_;
  std::uint64_t sylowCap_;
  std::mutex mutex_;
  std::vector<std::uint64_t> orders_;
  std::map<std::uint64_t, std::unique_ptr<SylowSet>> sylows_;
};

SylowWitness sylow(const PermutationGroup& group, std::uint64_t p);
std::vector<Subgroup> allSylow(const PermutationGroup& group, std::uint64_t p, std::uint64_t cap = kDefaultSylowCap);
Verdict existsCommutingSylowPair(const PermutationGroup& group, std::uint64_t p, std::uint64_t q);
Verdict existsNormalizingSylowPair(const PermutationGroup& group, std::uint64_t p, std::uint64_t q);

/// Searches for a Hall pi-subgroup. A ProvedAbsent status means the
/// exhaustive search completed; if its limit is hit, CapacityError is thrown.
HallResult hallSubgroup(const PermutationGroup& group, const std::vector<std::uint64_t>& pi,
                        const HallLimits& limits = {});

bool isAbelian(const Subgroup& s);
bool isAbelian(const PermutationGroup& g);

/// Every Sylow subgroup is normal.
bool isNilpotent(const Subgroup& s);
bool isNilpotent(const PermutationGroup& g);

/// Largest normal p'-subgroup.
Subgroup opPrimeCore(const PermutationGroup& group, std::uint64_t p);

/// Minimal members of the normal closures of single class representatives,
/// ordered by order and then by least representative.
std::vector<Subgroup> minimalNormalSubgroups(const PermutationGroup& group);

bool isSolvable(const PermutationGroup& group);

/// Every composition factor is a q-group or a q'-group.
bool isQSolvable(const PermutationGroup& group, std::uint64_t q,
                 std::uint64_t quotientCap = kDefaultQuotientCap);

}  // namespace hallmark
