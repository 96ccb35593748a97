#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hallmark/integers.hpp"

namespace hallmark {

/// Classical families. GL and GU take the matrix dimension n; the others take
/// the rank n: Sp_{2n}, SO_{2n+1}, SO^+_{2n}, SO^-_{2n}.
enum class Family { GL, GU, Sp, SOodd, SOplus, SOminus };

const char* toString(Family f) noexcept;
/// Accepts the names printed by toString (case-insensitive); throws MalformedInput.
Family parseFamily(const std::string& name);

/// Generic order. GL: q^{n(n-1)/2} prod (q^j - 1); GU: prod (q^j - (-1)^j);
/// Sp and SOodd: q^{n^2} prod (q^{2j} - 1); SO^{+/-}: q^{n(n-1)} (q^n -/+ 1)
/// prod_{j<n} (q^{2j} - 1). Throws MalformedInput unless q is a prime power
/// and n >= 1.
BigInt groupOrder(Family family, unsigned n, std::uint64_t q);

/// |SL_n(q)|, |SU_n(q)| for GL, GU; the group itself for the other families.
BigInt simpleCoverOrder(Family family, unsigned n, std::uint64_t q);

/// Least k >= 1 with q^k = 1 mod r (ordModNeg: (-q)^k). r must be a prime
/// not dividing q.
std::uint64_t ordMod(std::uint64_t r, std::uint64_t q);
std::uint64_t ordModNeg(std::uint64_t r, std::uint64_t q);

/// r divides q^k - 1 and no q^j - 1 with j < k.
bool isPrimitivePrimeDivisor(std::uint64_t r, std::uint64_t q, std::uint64_t k);

/// A displayed class size |g^G| from the classical-group propositions,
/// with the divisor the proof asserts.
struct ClassSizeExpression {
  std::string proposition;  // "sl(a)", "sl(b)", "su(a1)", "su(a2)", "su(b)", "clas(a2)", ... "clas(b4)"
  Family family = Family::GL;
  unsigned n = 0;
  std::uint64_t q = 0;
  std::uint64_t r = 0;
  std::vector<std::pair<std::string, std::int64_t>> parameters;  // k, m, kappa, ...
  BigInt value;
  BigInt divisor;
  BigInt ambientOrder;
  bool divisorHolds = false;   // divisor | value
  bool dividesAmbient = false;  // value | ambientOrder

  std::int64_t parameter(const std::string& name) const;
};

/// Prop (sl) case "a" (k = ord_r(q) >= 2, Singer-cycle element) or "b"
/// (r | q - 1, n >= r + 1). Throws PreconditionError naming the violated
/// constraint.
ClassSizeExpression classSizeSL(unsigned n, std::uint64_t q, std::uint64_t r, const std::string& caseTag = "a");

/// Prop (su): "a1" (k = ord_r(-q) odd >= 3), "a2" (r | q + 1, n >= r + 1),
/// "b" (k even). Empty caseTag selects from k.
ClassSizeExpression classSizeSU(unsigned n, std::uint64_t q, std::uint64_t r, const std::string& caseTag = "");

/// Prop (clas) cases "a2", "a3", "b2", "b3", "b4" for Sp and SO families
/// (n is the rank). Empty caseTag selects a2/a3 or b2/b4 from k.
ClassSizeExpression classSizeClassical(Family family, unsigned n, std::uint64_t q, std::uint64_t r,
                                       const std::string& caseTag = "");
ClassSizeExpression classSizeSp(unsigned n, std::uint64_t q, std::uint64_t r, const std::string& caseTag = "");
/// d odd: SO_d (eps ignored); d even: SO^eps_d with eps = +1 or -1.
ClassSizeExpression classSizeSO(unsigned d, int eps, std::uint64_t q, std::uint64_t r, const std::string& caseTag = "");

/// The proof's contrapositive at concrete parameters: evaluate the r-element
/// class size, test whether s divides it, and check that s not dividing it
/// forces what the proof says (e.g. k = l and m = 0).
struct DivisibilityReport {
  Family family = Family::GL;
  unsigned n = 0;
  std::uint64_t q = 0;
  std::uint64_t r = 0;  // after ordering so that k >= l
  std::uint64_t s = 0;
  bool swapped = false;
  std::uint64_t k = 0;
  std::uint64_t l = 0;
  bool vacuous = false;  // r or s does not divide the group order
  std::string note;
  std::optional<ClassSizeExpression> element;
  bool sDividesClass = false;
  std::string claim;
  bool claimHolds = false;
  bool consistent = true;
  bool torusChain = false;  // k = l and n/k (n/k_1) < min(r, s)
  std::string chain;
};

DivisibilityReport verifySection2Divisibility(Family family, unsigned n, std::uint64_t q, std::uint64_t r,
                                              std::uint64_t s);

/// A deterministic parameter grid (see docs/formats.md).
struct LieGrid {
  std::vector<Family> families;
  std::vector<std::uint64_t> qs;
  unsigned minRank = 1;
  unsigned maxRank = 8;
  std::uint64_t maxPrime = 31;
};

LieGrid parseLieGrid(const std::string& text);
LieGrid loadLieGrid(const std::string& path);
/// The grid shipped in data/lie_grid.json.
LieGrid shippedLieGrid();

struct LieGridFailure {
  std::string what;
  std::string parameters;
};

struct LieGridResult {
  std::size_t expressions = 0;
  std::size_t divisibilityChecks = 0;
  std::size_t vacuous = 0;
  std::size_t torusChains = 0;
  std::vector<LieGridFailure> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/// Evaluates every applicable case for each (family, rank, q, odd prime r)
/// and every divisibility report for each pair r < s.
LieGridResult runLieGrid(const LieGrid& grid);

/// Rows of the exceptional-group table of non-maximal non-cyclic Sylow tori,
/// kept for order-level consistency checks only.
struct ExceptionalTorusRow {
  std::string group;  // "3D4", "E6", "2E6", "E7"
  std::vector<unsigned> d;
  std::string centralizers;
};
const std::vector<ExceptionalTorusRow>& exceptionalTorusRows();

/// Generic orders of 3D4, E6, 2E6, E7 (simply connected form without the
/// centre quotient) and of the centralizers in the table rows.
BigInt exceptionalOrder(const std::string& group, std::uint64_t q);
/// Orders of the listed centralizers of one row at q (the E7 row gives both signs).
std::vector<BigInt> exceptionalCentralizerOrders(const ExceptionalTorusRow& row, std::uint64_t q);
/// Value of the d-th cyclotomic polynomial at q.
BigInt cyclotomicValue(unsigned d, std::uint64_t q);

}  // namespace hallmark
