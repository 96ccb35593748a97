#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hallmark/chartab.hpp"
#include "hallmark/classdata.hpp"
#include "hallmark/criteria.hpp"
#include "hallmark/lieorders.hpp"
#include "hallmark/subgroups.hpp"

namespace hallmark {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "hallmark-report/1";

const char* toolVersion() noexcept;

Json toJson(const Verdict& v);
Json toJson(const TheoremReport& r);
Json toJson(const HallResult& h);
Json toJson(const ClassTable& t);
Json toJson(const ClassSizeExpression& e);
Json toJson(const DivisibilityReport& r);
Json toJson(const BlockPartition& b, const CharacterTable& t);
Json toJson(const LieGridResult& r);

/// Limits in effect for a run, as recorded in every report.
Json capsJson(bool extended);

/// "catalog:NAME" or a group file path. Entries tagged sporadic-stretch
/// throw CapacityError unless `extended` is set.
PermutationGroup resolveGroup(const std::string& source, bool extended);

/// A table file path or "shipped:STEM".
CharacterTable resolveTable(const std::string& source);

/// Catalog name behind a "catalog:NAME" source, empty for files.
std::string catalogNameOf(const std::string& source);

/// Principal-block degrees from the shipped table for a catalog group, if one exists.
std::optional<BlockDegreeMap> shippedBlockDegrees(const std::string& catalogName, const std::vector<std::uint64_t>& primes);

/// Comma-separated primes, e.g. "3,5". Throws MalformedInput on non-primes.
std::vector<std::uint64_t> parsePrimeList(const std::string& text);

enum class RunStatus { Agree, Disagree, Capacity };
int exitCode(RunStatus status) noexcept;

/// Tally of a list of theorem checks.
struct CheckTally {
  std::size_t checks = 0;
  std::size_t agree = 0;
  std::size_t disagree = 0;
  std::size_t untested = 0;
  std::size_t capped = 0;
  std::size_t notApplicable = 0;

  void add(const TheoremReport& r);
  void add(const CheckTally& other);
  RunStatus status() const noexcept;
  Json json() const;
};

/// A report skeleton: schema, tool, version, command, inputs, caps.
Json reportEnvelope(const std::string& command, Json inputs, bool extended);

struct CheckRequest {
  std::string theorem;  // A, B, C, t4.1, t4.2, t4.3
  std::string group;    // group source, see resolveGroup
  std::vector<std::uint64_t> pi;
  std::optional<std::string> table;  // overrides the shipped table for C
  bool extended = false;
};

/// Runs one theorem check; results[0] is the TheoremReport, summary the tally.
Json runCheck(const CheckRequest& request, CheckTally& tally);

/// Sections of the verification battery, in run order.
const std::vector<std::string>& suiteSections();

struct SuiteOptions {
  std::vector<std::string> sections;  // empty runs every section
  bool extended = false;
  bool timings = true;
  std::function<void(const std::string&)> progress;
};

struct SuiteSectionResult {
  std::string name;
  CheckTally tally;
  std::size_t failures = 0;  // property violations outside the tally (simple2, lie-grid)
  double seconds = 0;
  Json details = Json::array();

  bool ok() const noexcept { return tally.disagree == 0 && failures == 0 && tally.capped == 0; }
};

struct SuiteResult {
  std::vector<SuiteSectionResult> sections;
  Json report;

  const SuiteSectionResult* section(const std::string& name) const;
  RunStatus status() const noexcept;
};

/// Runs the battery over the default catalog (plus sporadic-stretch entries
/// with `extended`). Disagreements are listed in full; agreeing checks are
/// summarized per group.
SuiteResult runSuite(const SuiteOptions& options);

/// The simple-group property: for every odd prime r dividing |S| some r-class
/// has even size, and every real class of r-elements has even size.
struct EvenClassCheck {
  std::uint64_t r = 0;
  bool someEven = false;
  std::size_t realClasses = 0;
  std::size_t realOdd = 0;
  std::vector<std::string> sizes;  // r-element class sizes in class order

  bool holds() const noexcept { return someEven && realOdd == 0; }
};
std::vector<EvenClassCheck> evenClassChecks(const ClassTable& table);

}  // namespace hallmark
