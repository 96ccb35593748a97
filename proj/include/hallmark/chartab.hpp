#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hallmark/classdata.hpp"
#include "hallmark/criteria.hpp"
#include "hallmark/cyclotomic.hpp"
#include "hallmark/verdict.hpp"

namespace hallmark {

struct TableClass {
  std::string label;
  BigInt size;
  std::uint64_t elementOrder = 1;
};

/// An abstract character table. Construction validates every invariant
/// (size sum, first orthogonality, integral degrees dividing the order,
/// integral central characters) and throws ParseError on the first violation.
class CharacterTable {
 public:
  /// `values[i][j]` is chi_i on class j; each modulus must divide `exponent`.
  CharacterTable(std::string name, BigInt order, std::uint64_t exponent, std::vector<TableClass> classes,
                 std::vector<std::vector<Cyclotomic>> values, std::string group = {});

  const std::string& name() const noexcept { return name_; }
  /// Catalog name of the group the table belongs to, if recorded.
  const std::string& group() const noexcept { return group_; }
  const BigInt& groupOrder() const noexcept { return order_; }
  std::uint64_t exponent() const noexcept { return exponent_; }
  const std::vector<TableClass>& classes() const noexcept { return classes_; }
  std::size_t classCount() const noexcept { return classes_.size(); }
  std::size_t characterCount() const noexcept { return values_.size(); }

  const Cyclotomic& value(std::size_t chi, std::size_t k) const { return values_.at(chi).at(k); }
  const std::vector<Cyclotomic>& character(std::size_t chi) const { return values_.at(chi); }
  const BigInt& degree(std::size_t chi) const { return degrees_.at(chi); }
  std::size_t trivialIndex() const noexcept { return trivial_; }

  /// size(K) chi(g_K) / chi(1), precomputed at construction.
  const Cyclotomic& omega(std::size_t chi, std::size_t k) const { return omega_.at(chi).at(k); }

  ClassProfile profile() const;

 private:
  std::string name_;
  std::string group_;
  BigInt order_;
  std::uint64_t exponent_ = 1;
  std::vector<TableClass> classes_;
  std::vector<std::vector<Cyclotomic>> values_;
  std::vector<BigInt> degrees_;
  std::vector<std::vector<Cyclotomic>> omega_;
  std::size_t trivial_ = 0;
};

/// Parses the "hallmark-ct/1" JSON schema. Errors carry a path such as
/// "characters[2][3].terms[1]".
CharacterTable parseTable(std::string_view text);
CharacterTable loadTable(const std::string& path);
std::string writeTable(const CharacterTable& table);

/// size(K) chi(g_K) / chi(1); throws ParseError(Integrality) when not integral.
Cyclotomic centralCharacter(const CharacterTable& table, std::size_t chi, std::size_t k);

struct BlockPartition {
  std::uint64_t p = 0;
  std::vector<std::vector<std::size_t>> blocks;  // ordered by least member
  std::size_t principalIndex = 0;
  bool vacuous = false;  // p does not divide the order

  const std::vector<std::size_t>& principal() const { return blocks.at(principalIndex); }
};

/// chi and psi share a block iff their central characters agree modulo a
/// fixed prime over p on every class.
BlockPartition blockPartition(const CharacterTable& table, std::uint64_t p);

/// Principal-block degrees for each prime in `primes` that divides the order;
/// primes are processed concurrently.
BlockDegreeMap principalBlockDegrees(const CharacterTable& table, const std::vector<std::uint64_t>& primes);

/// Theorem B / Theorem C criteria computed from the table alone.
Verdict tableCriterionB(const CharacterTable& table, const std::vector<std::uint64_t>& pi);
Verdict tableCriterionC(const CharacterTable& table, const std::vector<std::uint64_t>& pi);

/// Applies zeta -> zeta^k to every value; k must be prime to the exponent.
CharacterTable galoisConjugate(const CharacterTable& table, std::int64_t k);

/// Shipped tables (data/tables/*.json) by file stem.
std::vector<std::string> shippedTableNames();
CharacterTable shippedTable(const std::string& stem);

/// Stem of a shipped table for a catalog group, matching the recorded group
/// name or a known isomorphism (psl2_4 and psl2_5 are A5, psl3_2 is PSL(2,7)).
std::optional<std::string> shippedTableFor(const std::string& catalogName);

}  // namespace hallmark
