// Acceptance run: one line per criterion. Criteria 1-8 gate the exit code,
// criterion 9 (J1) is reported but never gates.

#include <chrono>
#include <cstring>
#include <iostream>
#include <set>
#include <sstream>

#include "hallmark/catalog.hpp"
#include "hallmark/chartab.hpp"
#include "hallmark/classdata.hpp"
#include "hallmark/criteria.hpp"
#include "hallmark/errors.hpp"
#include "hallmark/harness.hpp"
#include "hallmark/lieorders.hpp"
#include "hallmark/subgroups.hpp"

using namespace hallmark;

namespace {

struct Line {
  int id;
  bool gating;
  bool pass;
  std::string text;
};

std::vector<Line> lines;

void report(int id, bool gating, bool pass, const std::string& text)
{
  lines.push_back({id, gating, pass, text});
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << (gating ? "" : " (extended, non-gating)") << ": "
            << text << std::endl;
}

template <class F>
void guard(int id, bool gating, F&& body)
{
  try {
    body();
  } catch (const std::exception& e) {
    report(id, gating, false, std::string("exception: ") + e.what());
  }
}

double since(std::chrono::steady_clock::time_point t)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string fmt(double seconds)
{
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << seconds << " s";
  return os.str();
}

std::string join(const std::vector<std::string>& xs)
{
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ",") + x;
  return out;
}

// Conjugacy class sizes by brute force: the orbit of x under conjugation by
// every element, computed from the element list alone.
std::map<std::uint64_t, std::multiset<std::size_t>> bruteClassSizesByOrder(const PermutationGroup& g)
{
  const auto& els = g.elements();
  const auto n = static_cast<std::uint32_t>(els.size());
  std::vector<bool> seen(n, false);
  std::map<std::uint64_t, std::multiset<std::size_t>> out;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::set<std::uint32_t> orbit;
    for (std::uint32_t h = 0; h < n; ++h) orbit.insert(els.conjugate(x, h));
    for (auto y : orbit) seen[y] = true;
    out[els.elementOrder(x)].insert(orbit.size());
  }
  return out;
}

std::multiset<std::size_t> sizesOfPrimePowerOrder(const std::map<std::uint64_t, std::multiset<std::size_t>>& m,
                                                  std::uint64_t p)
{
  std::multiset<std::size_t> out;
  for (const auto& [order, sizes] : m)
    if (isPositivePowerOf(order, p)) out.insert(sizes.begin(), sizes.end());
  return out;
}

std::string sizesText(const std::multiset<std::size_t>& s)
{
  std::vector<std::string> xs;
  for (auto v : s) xs.push_back(std::to_string(v));
  return "{" + join(xs) + "}";
}

bool sectionClean(const SuiteSectionResult* s) { return s && s->ok(); }

std::string tallyText(const SuiteSectionResult& s)
{
  const auto& t = s.tally;
  std::ostringstream os;
  os << t.checks << " checks, " << t.disagree << " disagreements, " << t.capped << " capped";
  if (s.failures) os << ", " << s.failures << " failures";
  os << ", " << fmt(s.seconds);
  return os.str();
}

std::set<std::string> groupsIn(const SuiteSectionResult& s)
{
  std::set<std::string> out;
  for (const auto& e : s.details)
    if (e.contains("group")) out.insert(e["group"].get<std::string>());
  return out;
}

}  // namespace

int main(int argc, char** argv)
{
  bool skipExtended = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--skip-extended") == 0) skipExtended = true;
    else {
      std::cerr << "usage: hallmark_acceptance [--skip-extended]\n";
      return 2;
    }
  }

  SuiteOptions opts;
  opts.timings = true;
  auto suiteStart = std::chrono::steady_clock::now();
  SuiteResult suite;
  try {
    suite = runSuite(opts);
  } catch (const std::exception& e) {
    std::cerr << "suite failed to run: " << e.what() << "\n";
  }
  const double suiteSeconds = since(suiteStart);

  // 1. Theorem A over the whole default catalog.
  guard(1, true, [&] {
    const auto* a = suite.section("A");
    std::vector<std::string> missing;
    std::set<std::string> seen = a ? groupsIn(*a) : std::set<std::string>{};
    for (const char* name : {"sym_4", "sym_5", "sym_6", "alt_5", "alt_6", "alt_7", "alt_8", "psl2_4", "psl2_5",
                             "psl2_7", "psl2_8", "psl2_9", "psl2_11", "psl2_13", "psl2_31", "psl3_3",
                             "semiaffine_2_3", "semiaffine_3_2", "semiaffine_2_5", "a5xa5", "dihedral_5",
                             "frobenius_7_3", "cyclic_6"})
      if (!seen.contains(name)) missing.push_back(name);
    bool pass = sectionClean(a) && missing.empty() && suiteSeconds < 600;
    report(1, true, pass,
           a ? std::to_string(seen.size()) + " groups, " + tallyText(*a) +
                   (missing.empty() ? "" : ", missing " + join(missing)) + "; whole suite " + fmt(suiteSeconds)
             : "section A missing");
  });

  // 2. semiAffine(2,3): one-sided criterion profile.
  guard(2, true, [&] {
    auto g = catalogGroup("semiaffine_2_3");
    auto brute = bruteClassSizesByOrder(g);
    auto two = sizesOfPrimePowerOrder(brute, 2), three = sizesOfPrimePowerOrder(brute, 3);
    auto prof = classTable(g).profile();
    std::multiset<std::size_t> twoLib, threeLib;
    for (auto i : pElements(prof, 2)) twoLib.insert(static_cast<std::size_t>(prof.classes[i].size));
    for (auto i : pElements(prof, 3)) threeLib.insert(static_cast<std::size_t>(prof.classes[i].size));
    auto rep = verifyTheoremA(g, 2, 3);
    bool oneSided = rep.criterion.conditions.size() == 2 && rep.criterion.conditions[0].holds != rep.criterion.conditions[1].holds;
    bool threeFree = true;  // 3 divides no 2-element class size
    for (auto s : two) threeFree &= s % 3 != 0;
    bool pass = two == std::multiset<std::size_t>{7} && !three.empty() &&
                std::all_of(three.begin(), three.end(), [](auto s) { return s == 28; }) && two == twoLib &&
                three == threeLib && threeFree && oneSided && rep.criterion.fails() && rep.oracle.fails() && rep.agree;
    report(2, true, pass,
           "2-element class sizes " + sizesText(two) + ", 3-element class sizes " + sizesText(three) +
               " (brute force = class table: " + (two == twoLib && three == threeLib ? "yes" : "no") +
               "); criterion " + toString(rep.criterion.outcome) + ", commuting Sylow pair " +
               (rep.oracle.holds() ? "exists" : "absent"));
  });

  // 3. PSL(2,31), pi = {3,5}.
  guard(3, true, [&] {
    auto g = catalogGroup("psl2_31");
    TheoremVerifier v(g);
    auto a = v.theoremA(3, 5);
    auto hall = hallSubgroup(g, {3, 5});
    auto c = v.theoremC({3, 5}, shippedBlockDegrees("psl2_31", {3, 5}));
    auto chain = verifySection2Divisibility(Family::GL, 2, 31, 3, 5);
    bool witness = hall.status == HallStatus::Found && hall.witness->subgroup.order() == 15 &&
                   hall.witness->structure == HallStructure::Abelian;
    bool pass = a.criterion.holds() && a.agree && witness && c.tested && c.criterion.holds() && c.agree &&
                chain.torusChain && chain.consistent;
    report(3, true, pass,
           std::string("criterion ") + toString(a.criterion.outcome) + ", Hall {3,5} witness order " +
               (hall.witness ? toString(hall.witness->subgroup.order()) : std::string("none")) + " " +
               (hall.witness ? toString(hall.witness->structure) : "") + ", table criterion C " +
               toString(c.criterion.outcome) + ", torus chain " + chain.chain);
  });

  // 4. Even-size r-classes in simple groups.
  guard(4, true, [&] {
    const auto* s = suite.section("simple2");
    std::set<std::string> seen = s ? groupsIn(*s) : std::set<std::string>{};
    std::vector<std::string> missing;
    for (const auto& e : defaultCatalog())
      if (e.tags.contains("simple") && !e.extended() && !seen.contains(e.name)) missing.push_back(e.name);
    bool pass = sectionClean(s) && missing.empty() && s->tally.checks > 0;
    report(4, true, pass,
           s ? std::to_string(seen.size()) + " simple groups, " + std::to_string(s->tally.checks) + " odd primes, " +
                   std::to_string(s->failures) + " exceptions" + (missing.empty() ? "" : ", missing " + join(missing))
             : "section simple2 missing");
  });

  // 5. Theorem B for |pi| <= 3.
  guard(5, true, [&] {
    const auto* b = suite.section("B");
    auto a5 = catalogGroup("alt_5");
    auto hall = hallSubgroup(a5, {2, 5});
    auto rep = verifyTheoremB(a5, {2, 5});
    bool absent = hall.status == HallStatus::ProvedAbsent && hall.strategy == "exhaustive";
    bool pass = sectionClean(b) && b->tally.untested == 0 && absent && rep.criterion.fails() && rep.agree;
    report(5, true, pass,
           (b ? tallyText(*b) : std::string("section B missing")) + "; A5 pi={2,5}: Hall subgroup " +
               toString(hall.status) + " (" + hall.strategy + "), criterion " + toString(rep.criterion.outcome));
  });

  // 6. Theorem C on shipped tables, with block checks.
  guard(6, true, [&] {
    const auto* c = suite.section("C");
    const auto* t = suite.section("tables");
    // (a) defect zero characters are singleton blocks.
    std::size_t defectZero = 0, defectZeroBad = 0;
    for (const auto& stem : shippedTableNames()) {
      auto table = shippedTable(stem);
      for (auto p : primeDivisors(table.groupOrder())) {
        auto bp = blockPartition(table, p);
        BigInt pPart = primePart(table.groupOrder(), p);
        for (const auto& block : bp.blocks)
          for (auto chi : block)
            if (table.degree(chi) % pPart == 0) {
              ++defectZero;
              if (block.size() != 1) ++defectZeroBad;
            }
      }
    }
    // (b) A5 at p = 5.
    auto a5 = shippedTable("a5");
    auto b5 = blockPartition(a5, 5);
    std::multiset<std::vector<std::string>> got;
    for (const auto& block : b5.blocks) {
      std::vector<std::string> d;
      for (auto chi : block) d.push_back(toString(a5.degree(chi)));
      std::sort(d.begin(), d.end());
      got.insert(d);
    }
    bool a5ok = got == std::multiset<std::vector<std::string>>{{"1", "3", "3", "4"}, {"5"}} &&
                b5.principal().size() == 4;
    // (c) Galois conjugates give the same verdicts and block shapes.
    std::size_t galois = 0, galoisBad = 0;
    for (const auto& stem : shippedTableNames()) {
      auto table = shippedTable(stem);
      auto primes = primeDivisors(table.groupOrder());
      for (std::int64_t k = 2; k < static_cast<std::int64_t>(table.exponent()) && k <= 13; ++k) {
        if (gcd64(static_cast<std::uint64_t>(k), table.exponent()) != 1) continue;
        auto conj = galoisConjugate(table, k);
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << primes.size()); ++mask) {
          std::vector<std::uint64_t> pi;
          for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask >> i & 1) pi.push_back(primes[i]);
          ++galois;
          if (tableCriterionC(table, pi).outcome != tableCriterionC(conj, pi).outcome) ++galoisBad;
        }
        for (auto p : primes) {
          std::multiset<std::size_t> x, y;
          for (const auto& bl : blockPartition(table, p).blocks) x.insert(bl.size());
          for (const auto& bl : blockPartition(conj, p).blocks) y.insert(bl.size());
          ++galois;
          if (x != y) ++galoisBad;
        }
      }
    }
    bool pass = sectionClean(c) && sectionClean(t) && defectZero > 0 && defectZeroBad == 0 && a5ok && galois > 0 &&
                galoisBad == 0;
    std::string a5text;
    for (const auto& d : got) a5text += (a5text.empty() ? "" : " | ") + join(d);
    report(6, true, pass,
           "catalog " + (c ? tallyText(*c) : std::string("missing")) + "; tables " +
               (t ? tallyText(*t) : std::string("missing")) + "; defect-zero singletons " +
               std::to_string(defectZero - defectZeroBad) + "/" + std::to_string(defectZero) +
               "; A5 p=5 blocks {" + a5text + "}; Galois checks " + std::to_string(galois - galoisBad) + "/" +
               std::to_string(galois));
  });

  // 7. Solvability theorems.
  guard(7, true, [&] {
    bool pass = true;
    std::string text;
    for (const char* name : {"t4.1", "t4.2", "t4.3"}) {
      const auto* s = suite.section(name);
      pass &= sectionClean(s);
      text += std::string(text.empty() ? "" : "; ") + name + " " + (s ? tallyText(*s) : std::string("missing"));
    }
    // Every solvable catalog group is among the t4.1/t4.2 groups.
    std::set<std::string> seen;
    if (const auto* s = suite.section("t4.2")) seen = groupsIn(*s);
    for (const auto& e : defaultCatalog())
      if (e.tags.contains("solvable") && primeDivisors(e.expectedOrder).size() >= 2 && !seen.contains(e.name)) {
        pass = false;
        text += "; missing " + e.name;
      }
    report(7, true, pass, text);
  });

  // 8. lieorders grid.
  guard(8, true, [&] {
    auto start = std::chrono::steady_clock::now();
    auto grid = runLieGrid(shippedLieGrid());
    double secs = since(start);
    auto e = classSizeSL(3, 2, 7);
    auto prof = classTable(catalogGroup("psl3_2")).profile();
    std::vector<std::string> sizes;
    bool groupSide = false;
    for (const auto& c : prof.classes)
      if (c.elementOrder == 7) {
        sizes.push_back(toString(c.size));
        groupSide = true;
      }
    for (const auto& s : sizes) groupSide &= s == "24";
    bool pass = grid.ok() && secs < 60 && e.value == 24 && e.divisorHolds && groupSide;
    report(8, true, pass,
           std::to_string(grid.expressions) + " class-size expressions, " + std::to_string(grid.divisibilityChecks) +
               " pair replays, " + std::to_string(grid.failures.size()) + " failures, " + fmt(secs) +
               "; PSL(3,2) order-7: formula " + toString(e.value) + ", group classes {" + join(sizes) + "}");
  });

  // 9. J1, pi = {3,5}.
  if (skipExtended) {
    report(9, false, false, "skipped (--skip-extended)");
  } else {
    guard(9, false, [&] {
      auto start = std::chrono::steady_clock::now();
      auto g = resolveGroup("catalog:j1", true);
      TheoremVerifier v(g);
      auto a = v.theoremA(3, 5);
      auto b = v.theoremB({3, 5});
      auto hall = v.oracle().hall({3, 5});
      bool cyclic = false;
      if (hall.witness) {
        const auto& els = hall.witness->subgroup.group().elements();
        for (std::uint32_t i = 0; i < els.size() && !cyclic; ++i) cyclic = els.elementOrder(i) == 15;
      }
      double secs = since(start);
      bool pass = a.criterion.holds() && a.agree && b.criterion.holds() && b.agree && hall.witness &&
                  hall.witness->subgroup.order() == 15 && cyclic;
      report(9, false, pass,
             "|J1| = " + toString(g.order()) + ", criterion " + toString(a.criterion.outcome) + ", Hall {3,5} order " +
                 (hall.witness ? toString(hall.witness->subgroup.order()) : std::string("none")) +
                 (cyclic ? " cyclic" : " not cyclic") + ", " + fmt(secs) + " (expected under 30 s)");
    });
  }

  bool gatingOk = true;
  int gated = 0, passed = 0;
  for (const auto& l : lines)
    if (l.gating) {
      ++gated;
      passed += l.pass;
      gatingOk &= l.pass;
    }
  std::cout << "gating criteria passed: " << passed << "/" << gated << std::endl;
  return gatingOk && gated == 8 ? 0 : 1;
}
