#include <gtest/gtest.h>

#include "hallmark/catalog.hpp"
#include "hallmark/criteria.hpp"
#include "hallmark/errors.hpp"

using namespace hallmark;

namespace {

ClassProfile profileOf(const char* name) { return ClassTable(catalogGroup(name)).profile(); }

std::vector<std::vector<std::uint64_t>> subsetsUpTo3(const std::vector<std::uint64_t>& primes)
{
  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t mask = 1; mask < (1u << primes.size()); ++mask) {
    std::vector<std::uint64_t> pi;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask >> i & 1) pi.push_back(primes[i]);
    if (pi.size() <= 3) out.push_back(pi);
  }
  return out;
}

bool oneSided(const ClassProfile& prof, std::uint64_t p, std::uint64_t q)
{
  for (auto i : pElements(prof, p))
    if (prof.classes[i].size % q == 0) return false;
  return true;
}

}  // namespace

TEST(CrossDivisibility, Examples)
{
  auto psl = profileOf("psl2_31");
  auto v = crossDivisibilityCriterion(psl, 3, 5);
  EXPECT_TRUE(v.holds());
  for (auto p : {3u, 5u})
    for (auto i : pElements(psl, p)) EXPECT_EQ(psl.classes[i].size, 992);

  auto a5 = crossDivisibilityCriterion(profileOf("alt_5"), 2, 5);
  ASSERT_TRUE(a5.fails());
  ASSERT_TRUE(a5.offendingClass);
  EXPECT_EQ(a5.offendingClass->size, 15);
  EXPECT_EQ(a5.offendingClass->divisor, 5u);
  EXPECT_EQ(a5.offendingClass->elementPrime, 2u);

  auto sa = crossDivisibilityCriterion(profileOf("semiaffine_2_3"), 3, 2);
  ASSERT_TRUE(sa.fails());
  ASSERT_EQ(sa.conditions.size(), 2u);
  EXPECT_FALSE(sa.conditions[0].holds);  // 3-element classes have even size 28
  EXPECT_TRUE(sa.conditions[1].holds);   // 2-element class size 7 is prime to 3
  EXPECT_EQ(sa.offendingClass->size, 28);

  EXPECT_THROW(crossDivisibilityCriterion(psl, 3, 3), PreconditionError);
}

TEST(NilpotentHall, Examples)
{
  EXPECT_TRUE(nilpotentHallCriterion(profileOf("psl2_31"), {3, 5}).holds());
  auto a5 = nilpotentHallCriterion(profileOf("alt_5"), {2, 3, 5});
  EXPECT_TRUE(a5.fails());
  EXPECT_TRUE(nilpotentHallCriterion(profileOf("alt_5"), {5, 7, 11}).holds());
}

TEST(AbelianHall, Examples)
{
  auto a5 = profileOf("alt_5");
  auto v = abelianHallCriterion(a5, {3, 5}, std::nullopt);
  ASSERT_TRUE(v.fails());
  EXPECT_EQ(v.offendingClass->size, 20);
  auto w = abelianHallCriterion(a5, {2, 5}, std::nullopt);
  ASSERT_TRUE(w.fails());
  EXPECT_EQ(w.offendingClass->size, 15);

  auto psl = profileOf("psl2_31");
  auto u = abelianHallCriterion(psl, {3, 5}, std::nullopt);
  EXPECT_EQ(u.outcome, Outcome::Undetermined);
  EXPECT_EQ(u.missingPrime, 3u);
  BlockDegreeMap blocks{{3, {{0, 1}, {1, 32}}}, {5, {{0, 1}, {1, 31}}}};
  EXPECT_TRUE(abelianHallCriterion(psl, {3, 5}, blocks).holds());
  BlockDegreeMap bad{{3, {{0, 1}, {1, 30}}}, {5, {{0}, {1}}}};
  auto f = abelianHallCriterion(psl, {3, 5}, bad);
  ASSERT_TRUE(f.fails());
  EXPECT_EQ(f.offendingCharacter->characterIndex, 1u);
}

TEST(Verify, SpecExamples)
{
  auto a = verifyTheoremA(alternating(5), 2, 5);
  EXPECT_TRUE(a.criterion.fails());
  EXPECT_TRUE(a.oracle.fails());
  EXPECT_TRUE(a.agree);
  auto b = verifyTheoremA(psl2(31), 3, 5);
  EXPECT_TRUE(b.criterion.holds());
  EXPECT_TRUE(b.oracle.holds());
  EXPECT_TRUE(b.agree);
  auto c = verifyQSolvabilityFromOddClasses(frobenius(7, 3), 7);
  EXPECT_TRUE(c.criterion.holds());
  EXPECT_TRUE(c.oracle.holds());
  EXPECT_TRUE(c.agree);
  auto prof = profileOf("frobenius_7_3");
  for (auto i : pElements(prof, 7)) EXPECT_EQ(prof.classes[i].size, 3);
}

TEST(Verify, CapacityBecomesUntested)
{
  setenv("HALLMARK_CAP_ELEMENTS", "100", 1);
  auto r = verifyTheoremA(alternating(6), 2, 3);
  unsetenv("HALLMARK_CAP_ELEMENTS");
  EXPECT_FALSE(r.tested);
  EXPECT_TRUE(r.agree);
}

// The full equivalences over groups small enough for a unit test; the
// acceptance suite covers the whole catalog.
TEST(Verify, TheoremsOnSmallCatalogGroups)
{
  for (const auto& e : defaultCatalog()) {
    if (e.extended() || e.expectedOrder > 1000) continue;
    TheoremVerifier v(e.builder());
    auto primes = primeDivisors(e.expectedOrder);
    for (std::size_t i = 0; i < primes.size(); ++i)
      for (std::size_t j = 0; j < primes.size(); ++j) {
        if (i == j) continue;
        if (i < j) EXPECT_TRUE(v.theoremA(primes[i], primes[j]).agree) << e.name;
        EXPECT_TRUE(v.pSolvableNormalization(primes[i], primes[j]).agree) << e.name;
        EXPECT_TRUE(v.opPrimeCharacterization(primes[i], primes[j]).agree) << e.name;
      }
    for (const auto& pi : subsetsUpTo3(primes)) EXPECT_TRUE(v.theoremB(pi).agree) << e.name;
    for (auto q : primes)
      if (q != 2) EXPECT_TRUE(v.qSolvabilityFromOddClasses(q).agree) << e.name;
  }
}

// One-sided class-size condition passes to normal subgroups and quotients.
TEST(Inheritance, NormalSubgroupsAndQuotients)
{
  for (const char* name : {"sym_4", "s3xs3", "a4xc5", "s4xc3", "a5xc7", "semiaffine_2_3", "semiaffine_3_2",
                           "frobenius_7_6", "dihedral_15", "a5xs3"}) {
    auto g = catalogGroup(name);
    auto pg = ClassTable(g).profile();
    std::vector<Subgroup> normals = minimalNormalSubgroups(g);
    normals.push_back(derivedSubgroup(g));
    for (const auto& n : normals) {
      if (n.order() == 1 || n.order() == g.order()) continue;
      auto pn = ClassTable(n.group()).profile();
      auto pq = ClassTable(cosetActionQuotient(g, n)).profile();
      for (auto p : pg.primes())
        for (auto q : pg.primes()) {
          if (p == q || !oneSided(pg, p, q)) continue;
          EXPECT_TRUE(oneSided(pn, p, q)) << name << " N p=" << p << " q=" << q;
          EXPECT_TRUE(oneSided(pq, p, q)) << name << " G/N p=" << p << " q=" << q;
        }
    }
  }
}

// If q-element classes have p'-size and N is a normal q'-subgroup, any
// Q-invariant Sylow p-subgroup of N commutes with Q.
TEST(Inheritance, CoprimeActionCentralizes)
{
  std::size_t checked = 0;
  for (const char* name : {"sym_4", "s3xs3", "a4xc5", "s4xc3", "semiaffine_2_3", "semiaffine_3_2", "frobenius_7_6",
                           "frobenius_5_4", "dihedral_15", "a5xc7"}) {
    auto g = catalogGroup(name);
    auto pg = ClassTable(g).profile();
    std::vector<Subgroup> normals = minimalNormalSubgroups(g);
    normals.push_back(derivedSubgroup(g));
    for (auto q : pg.primes())
      normals.push_back(opPrimeCore(g, q));
    for (const auto& n : normals)
      for (auto q : pg.primes()) {
        if (n.order() % q == 0) continue;
        for (auto p : pg.primes()) {
          if (p == q || n.order() % p != 0 || !oneSided(pg, q, p)) continue;
          auto qs = allSylow(g, q);
          auto ps = allSylow(n.group(), p);
          for (const auto& Q : qs)
            for (const auto& P : ps) {
              bool invariant = true;
              for (const auto& x : P.generators())
                for (const auto& y : Q.generators()) invariant &= P.contains(conjugate(x, y));
              if (!invariant) continue;
              ++checked;
              for (const auto& x : P.generators())
                for (const auto& y : Q.generators()) EXPECT_TRUE(x.commutesWith(y)) << name;
            }
        }
      }
  }
  EXPECT_GT(checked, 0u);
}
