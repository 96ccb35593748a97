#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hallmark/integers.hpp"
#include "hallmark/permutation.hpp"

namespace hallmark {

enum class Outcome { Holds, Fails, Undetermined };
enum class Provenance { Criterion, Oracle, Table };

const char* toString(Outcome o) noexcept;
const char* toString(Provenance p) noexcept;

/// A class whose size breaks a criterion: the class holds `elementPrime`-elements
/// and its size is divisible by `divisor`.
struct ClassWitness {
  std::size_t classIndex = 0;
  std::string label;
  std::uint64_t elementPrime = 0;
  std::uint64_t divisor = 0;
  BigInt size;
};

/// A principal-block character whose degree is divisible by `prime`.
struct CharacterWitness {
  std::uint64_t prime = 0;
  std::size_t characterIndex = 0;
  BigInt degree;
};

struct SubgroupWitness {
  std::string role;  // e.g. "P", "Q", "hall"
  BigInt order;
  std::vector<Permutation> generators;
};

/// A named sub-condition and whether it held, e.g. {"(i)", true}.
struct Condition {
  std::string name;
  bool holds = false;
};

struct Verdict {
  Outcome outcome = Outcome::Undetermined;
  Provenance provenance = Provenance::Criterion;
  std::vector<Condition> conditions;
  std::optional<ClassWitness> offendingClass;
  std::optional<CharacterWitness> offendingCharacter;
  std::vector<SubgroupWitness> subgroups;
  std::optional<std::uint64_t> missingPrime;
  std::string detail;

  bool holds() const noexcept { return outcome == Outcome::Holds; }
  bool fails() const noexcept { return outcome == Outcome::Fails; }
};

}  // namespace hallmark
