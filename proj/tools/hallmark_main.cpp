// hallmark command-line tool. See docs/cli.md.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hallmark/catalog.hpp"
#include "hallmark/errors.hpp"
#include "hallmark/harness.hpp"

using namespace hallmark;

namespace {

struct Common {
  bool extended = false;
  bool noTimings = false;
  bool compact = false;
  std::string output;
};

void emit(const Common& c, Json report, double seconds)
{
  if (!c.noTimings) {
    if (!report.contains("timings")) report["timings"] = Json::object();
    report["timings"]["wall_seconds"] = seconds;
  }
  std::string text = report.dump(c.compact ? -1 : 2) + "\n";
  if (c.output.empty() || c.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw MalformedInput("cannot write " + c.output);
  out << text;
}

Json summaryOf(const CheckTally& t) { return t.json(); }

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Hall subgroup criteria, oracles and classical-group order checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", toolVersion());

  Common common;
  app.add_flag("--extended", common.extended, "Allow sporadic-stretch catalog entries (J1)");
  app.add_flag("--no-timings", common.noTimings, "Omit timings so reports are byte-identical across runs");
  app.add_flag("--compact", common.compact, "Print JSON on one line");
  app.add_option("-o,--output", common.output, "Write the report to a file instead of stdout");

  // catalog
  auto* catalogCmd = app.add_subcommand("catalog", "List the default catalog");
  std::string tag;
  catalogCmd->add_option("--tag", tag, "Only entries with this tag (simple, solvable, p-solvable, sporadic-stretch)");

  // classes
  auto* classesCmd = app.add_subcommand("classes", "Conjugacy classes of a group");
  std::string group;
  classesCmd->add_option("-g,--group", group, "catalog:NAME or a group file")->required();

  // hall
  auto* hallCmd = app.add_subcommand("hall", "Search for a Hall pi-subgroup");
  std::string pi;
  hallCmd->add_option("-g,--group", group, "catalog:NAME or a group file")->required();
  hallCmd->add_option("--pi", pi, "Comma-separated primes")->required();

  // check
  auto* checkCmd = app.add_subcommand("check", "Pair a criterion with its oracle on one group");
  std::string theorem;
  std::string tableSource;
  checkCmd->add_option("--theorem", theorem, "A, B, C, t4.1, t4.2 or t4.3")->required();
  checkCmd->add_option("-g,--group", group, "catalog:NAME or a group file")->required();
  checkCmd->add_option("--pi", pi, "Comma-separated primes")->required();
  checkCmd->add_option("--table", tableSource, "Character table for theorem C block data (file or shipped:STEM)");

  // ct-analyze
  auto* ctAnalyzeCmd = app.add_subcommand("ct-analyze", "Table-only criteria for theorems B and C");
  std::string table;
  std::string ctTheorem;
  bool withOracle = false;
  ctAnalyzeCmd->add_option("table", table, "Table file or shipped:STEM")->required();
  ctAnalyzeCmd->add_option("--pi", pi, "Comma-separated primes")->required();
  ctAnalyzeCmd->add_option("--theorem", ctTheorem, "B or C (default both)")->check(CLI::IsMember({"B", "C"}));
  ctAnalyzeCmd->add_flag("--oracle", withOracle, "Compare with the Hall oracle of the table's recorded group");

  // ct-blocks
  auto* ctBlocksCmd = app.add_subcommand("ct-blocks", "p-block partition of a character table");
  std::uint64_t prime = 0;
  ctBlocksCmd->add_option("table", table, "Table file or shipped:STEM")->required();
  ctBlocksCmd->add_option("-p,--prime", prime, "Prime")->required();

  // lie-verify
  auto* lieVerifyCmd = app.add_subcommand("lie-verify", "Evaluate one classical-group class-size formula");
  std::string family;
  unsigned n = 0;
  std::uint64_t q = 0, r = 0, s = 0;
  std::string caseTag;
  lieVerifyCmd->add_option("--family", family, "GL, GU, Sp, SOodd, SOplus or SOminus")->required();
  lieVerifyCmd->add_option("--n", n, "Dimension (GL, GU) or rank (Sp, SO)")->required();
  lieVerifyCmd->add_option("--q", q, "Field size")->required();
  lieVerifyCmd->add_option("--r", r, "Odd prime")->required();
  lieVerifyCmd->add_option("--s", s, "Second odd prime: run the pairwise divisibility replay");
  lieVerifyCmd->add_option("--case", caseTag, "Force a case (a, b, a1, a2, a3, b2, b3, b4)");

  // lie-grid
  auto* lieGridCmd = app.add_subcommand("lie-grid", "Run the class-size grid");
  std::string manifest;
  lieGridCmd->add_option("manifest", manifest, "Grid manifest (default: shipped grid)");

  // suite
  auto* suiteCmd = app.add_subcommand("suite", "Full verification battery over the default catalog");
  std::vector<std::string> sections;
  suiteCmd->add_option("--sections", sections, "Subset of sections")->delimiter(',');
  bool quiet = false;
  suiteCmd->add_flag("-q,--quiet", quiet, "No progress on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

  try {
    if (*catalogCmd) {
      Json entries = Json::array();
      for (const auto& e : defaultCatalog()) {
        if (!tag.empty() && !e.tags.contains(tag)) continue;
        Json tags = Json::array();
        for (const auto& t : e.tags) tags.push_back(t);
        entries.push_back({{"name", e.name}, {"order", toString(e.expectedOrder)}, {"tags", tags}});
      }
      Json report = reportEnvelope("catalog", {{"tag", tag}}, common.extended);
      report["results"] = entries;
      report["summary"] = {{"entries", entries.size()}, {"status", "agree"}};
      emit(common, report, elapsed());
      return 0;
    }

    if (*classesCmd) {
      auto g = resolveGroup(group, common.extended);
      Json report = reportEnvelope("classes", {{"group", group}}, common.extended);
      report["results"] = Json::array({toJson(classTable(g))});
      report["summary"] = {{"status", "agree"}};
      emit(common, report, elapsed());
      return 0;
    }

    if (*hallCmd) {
      auto primes = parsePrimeList(pi);
      auto g = resolveGroup(group, common.extended);
      auto h = hallSubgroup(g, primes);
      Json report = reportEnvelope("hall", {{"group", group}, {"pi", primes}}, common.extended);
      report["results"] = Json::array({toJson(h)});
      report["summary"] = {{"status", "agree"}};
      emit(common, report, elapsed());
      return 0;
    }

    if (*checkCmd) {
      CheckRequest req;
      req.theorem = theorem;
      req.group = group;
      req.pi = parsePrimeList(pi);
      req.extended = common.extended;
      if (!tableSource.empty()) req.table = tableSource;
      Json inputs{{"theorem", theorem}, {"group", group}, {"pi", req.pi}};
      if (req.table) inputs["table"] = *req.table;
      CheckTally tally;
      Json result = runCheck(req, tally);
      Json report = reportEnvelope("check", inputs, common.extended);
      report["results"] = Json::array({result});
      report["summary"] = summaryOf(tally);
      emit(common, report, elapsed());
      return exitCode(tally.status());
    }

    if (*ctAnalyzeCmd) {
      auto t = resolveTable(table);
      auto primes = parsePrimeList(pi);
      Json inputs{{"table", table}, {"pi", primes}, {"oracle", withOracle}};
      Json results = Json::array();
      CheckTally tally;
      std::optional<HallResult> hall;
      if (withOracle) {
        if (t.group().empty()) throw MalformedInput("table " + t.name() + " records no group for --oracle");
        hall = hallSubgroup(catalogGroup(t.group()), primes);
      }
      for (const std::string which : {"B", "C"}) {
        if (!ctTheorem.empty() && ctTheorem != which) continue;
        Verdict v = which == "B" ? tableCriterionB(t, primes) : tableCriterionC(t, primes);
        Json row{{"theorem", which}, {"table", t.name()}, {"primes", primes}, {"criterion", toJson(v)}};
        if (hall) {
          bool exists = hall->status == HallStatus::Found &&
                        (which == "B" ? hall->witness->structure != HallStructure::Neither
                                      : hall->witness->structure == HallStructure::Abelian);
          TheoremReport rep;
          rep.criterion = v;
          rep.agree = v.outcome == Outcome::Undetermined || v.holds() == exists;
          rep.tested = v.outcome != Outcome::Undetermined;
          tally.add(rep);
          row["oracle"] = toJson(*hall);
          row["agree"] = rep.agree;
        }
        results.push_back(row);
      }
      Json report = reportEnvelope("ct-analyze", inputs, common.extended);
      report["results"] = results;
      report["summary"] = withOracle ? summaryOf(tally) : Json{{"status", "agree"}};
      emit(common, report, elapsed());
      return exitCode(tally.status());
    }

    if (*ctBlocksCmd) {
      auto t = resolveTable(table);
      if (!isPrime(prime)) throw MalformedInput(std::to_string(prime) + " is not prime");
      Json report = reportEnvelope("ct-blocks", {{"table", table}, {"p", prime}}, common.extended);
      report["results"] = Json::array({toJson(blockPartition(t, prime), t)});
      report["summary"] = {{"status", "agree"}};
      emit(common, report, elapsed());
      return 0;
    }

    if (*lieVerifyCmd) {
      Family f = parseFamily(family);
      Json inputs{{"family", toString(f)}, {"n", n}, {"q", q}, {"r", r}};
      Json result;
      bool ok = true;
      if (s != 0) {
        inputs["s"] = s;
        auto rep = verifySection2Divisibility(f, n, q, r, s);
        ok = rep.consistent && (!rep.element || rep.element->divisorHolds);
        result = toJson(rep);
      } else {
        if (!caseTag.empty()) inputs["case"] = caseTag;
        ClassSizeExpression e = f == Family::GL   ? classSizeSL(n, q, r, caseTag.empty() ? "a" : caseTag)
                                : f == Family::GU ? classSizeSU(n, q, r, caseTag)
                                                  : classSizeClassical(f, n, q, r, caseTag);
        ok = e.divisorHolds && e.dividesAmbient;
        result = toJson(e);
      }
      Json report = reportEnvelope("lie-verify", inputs, common.extended);
      report["results"] = Json::array({result});
      report["summary"] = {{"status", ok ? "agree" : "disagree"}};
      emit(common, report, elapsed());
      return ok ? 0 : 1;
    }

    if (*lieGridCmd) {
      auto grid = manifest.empty() ? shippedLieGrid() : loadLieGrid(manifest);
      auto result = runLieGrid(grid);
      Json report = reportEnvelope("lie-grid", {{"manifest", manifest.empty() ? "shipped" : manifest}},
                                   common.extended);
      report["results"] = Json::array({toJson(result)});
      report["summary"] = {{"failures", result.failures.size()}, {"status", result.ok() ? "agree" : "disagree"}};
      emit(common, report, elapsed());
      return result.ok() ? 0 : 1;
    }

    if (*suiteCmd) {
      SuiteOptions opts;
      opts.sections = sections;
      opts.extended = common.extended;
      opts.timings = !common.noTimings;
      if (!quiet) opts.progress = [](const std::string& what) { std::cerr << "suite: " << what << "\n"; };
      auto result = runSuite(opts);
      emit(common, result.report, elapsed());
      return exitCode(result.status());
    }
  } catch (const CapacityError& e) {
    std::cerr << "hallmark: capacity: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "hallmark: " << toString(e.kind()) << " error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "hallmark: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hallmark: internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
