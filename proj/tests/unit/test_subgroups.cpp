#include <gtest/gtest.h>

#include <set>

#include "hallmark/catalog.hpp"
#include "hallmark/classdata.hpp"
#include "hallmark/errors.hpp"
#include "hallmark/subgroups.hpp"

using namespace hallmark;

namespace {

using ElementSet = std::set<Permutation>;

ElementSet elementSet(const Subgroup& s)
{
  auto els = enumerateElements(s.group(), 1'000'000);
  return {els.begin(), els.end()};
}

// All subgroups generated by at most two elements, as element sets. For the
// small groups used here this includes every subgroup.
std::set<ElementSet> twoGenerated(const PermutationGroup& g)
{
  auto els = enumerateElements(g, 10'000);
  std::set<ElementSet> out;
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i; j < els.size(); ++j) {
      auto h = buildGroup(g.degree(), {els[i], els[j]});
      auto e = enumerateElements(h, 10'000);
      out.emplace(e.begin(), e.end());
    }
  return out;
}

bool lowerCentralSeriesTerminates(const PermutationGroup& g)
{
  PermutationGroup cur = g;
  BigInt last = g.order() + 1;
  while (cur.order() > 1 && cur.order() < last) {
    last = cur.order();
    std::vector<Permutation> comms;
    for (const auto& x : cur.generators())
      for (const auto& s : g.generators()) comms.push_back(commutator(x, s));
    cur = normalClosure(g, comms).group();
  }
  return cur.order() == 1;
}

}  // namespace

TEST(Sylow, Orders)
{
  auto a5 = alternating(5);
  auto s2 = sylow(a5, 2);
  EXPECT_EQ(s2.subgroup.order(), 4);
  EXPECT_TRUE(isAbelian(s2.subgroup));
  EXPECT_EQ(sylow(a5, 5).subgroup.order(), 5);
  EXPECT_EQ(sylow(psl2(31), 3).subgroup.order(), 3);
  EXPECT_EQ(sylow(a5, 7).subgroup.order(), 1);
}

TEST(Sylow, AllSylowCounts)
{
  auto a5 = alternating(5);
  EXPECT_EQ(allSylow(a5, 5).size(), 6u);
  EXPECT_EQ(allSylow(a5, 2).size(), 5u);
  EXPECT_EQ(allSylow(directProduct(cyclic(3), cyclic(5)), 3).size(), 1u);
  EXPECT_THROW(allSylow(a5, 5, 3), CapacityError);
}

TEST(Sylow, CountsMatchSubgroupEnumeration)
{
  for (const char* name : {"alt_5", "sym_4", "frobenius_7_3", "dihedral_6", "s3xs3"}) {
    auto g = catalogGroup(name);
    auto subs = twoGenerated(g);
    for (auto p : primeDivisors(g.order())) {
      BigInt pe = primePart(g.order(), p);
      std::size_t brute = 0;
      for (const auto& s : subs) brute += BigInt(s.size()) == pe;
      EXPECT_EQ(allSylow(g, p).size(), brute) << name << " p=" << p;
    }
  }
}

TEST(Sylow, CountIsOneModPAndDividesOrder)
{
  for (const auto& e : defaultCatalog()) {
    if (e.extended()) continue;
    auto g = e.builder();
    GroupOracle oracle(g);
    for (auto p : primeDivisors(g.order())) {
      auto all = oracle.allSylow(p);
      EXPECT_EQ(all.size() % p, 1u) << e.name << " p=" << p;
      EXPECT_EQ(g.order() % all.size(), 0) << e.name;
      EXPECT_EQ(all.front().order(), primePart(g.order(), p));
    }
  }
}

TEST(SylowPairs, Commuting)
{
  auto v = existsCommutingSylowPair(psl2(31), 3, 5);
  ASSERT_TRUE(v.holds());
  ASSERT_EQ(v.subgroups.size(), 2u);
  std::vector<Permutation> gens;
  for (const auto& s : v.subgroups) gens.insert(gens.end(), s.generators.begin(), s.generators.end());
  auto h = buildGroup(32, gens);
  EXPECT_EQ(h.order(), 15);
  EXPECT_TRUE(isAbelian(h));
  EXPECT_TRUE(existsCommutingSylowPair(alternating(5), 2, 5).fails());
  EXPECT_TRUE(existsCommutingSylowPair(semiAffine(2, 3), 3, 2).fails());
}

TEST(SylowPairs, Normalizing)
{
  auto sa = semiAffine(2, 3);
  EXPECT_TRUE(existsNormalizingSylowPair(sa, 3, 2).holds());
  // the normal Sylow 2-subgroup T would have to centralize Q, but Frobenius moves T
  EXPECT_TRUE(existsNormalizingSylowPair(sa, 2, 3).fails());
  EXPECT_TRUE(existsNormalizingSylowPair(alternating(5), 5, 2).fails());
}

TEST(Hall, A5)
{
  auto a5 = alternating(5);
  auto h = hallSubgroup(a5, {2, 3});
  ASSERT_EQ(h.status, HallStatus::Found);
  EXPECT_EQ(h.witness->subgroup.order(), 12);
  EXPECT_EQ(h.witness->structure, HallStructure::Neither);
  auto none = hallSubgroup(a5, {2, 5});
  EXPECT_EQ(none.status, HallStatus::ProvedAbsent);
  EXPECT_EQ(none.strategy, "exhaustive");
  bool order20 = false;
  for (const auto& s : twoGenerated(a5)) order20 |= s.size() == 20;
  EXPECT_FALSE(order20);
}

TEST(Hall, Psl231)
{
  auto h = hallSubgroup(psl2(31), {3, 5});
  ASSERT_EQ(h.status, HallStatus::Found);
  EXPECT_EQ(h.witness->subgroup.order(), 15);
  EXPECT_EQ(h.witness->structure, HallStructure::Abelian);
}

TEST(Hall, AgreesWithSubgroupEnumeration)
{
  for (const char* name : {"alt_5", "sym_4", "frobenius_7_3", "s3xs3", "alt_4", "dihedral_6", "frobenius_5_4"}) {
    auto g = catalogGroup(name);
    auto subs = twoGenerated(g);
    auto primes = primeDivisors(g.order());
    for (std::uint64_t mask = 1; mask < (1u << primes.size()); ++mask) {
      std::vector<std::uint64_t> pi;
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (mask >> i & 1) pi.push_back(primes[i]);
      BigInt target = piPart(g.order(), pi);
      bool brute = false;
      for (const auto& s : subs) brute |= BigInt(s.size()) == target;
      auto h = hallSubgroup(g, pi);
      EXPECT_EQ(h.status == HallStatus::Found, brute) << name << " mask " << mask;
      if (h.witness) EXPECT_EQ(h.witness->subgroup.order(), target);
    }
  }
}

TEST(Hall, CapacityWhenLimitsAreTiny)
{
  HallLimits tiny{0, 1};
  EXPECT_THROW(hallSubgroup(alternating(5), {2, 5}, tiny), CapacityError);
}

TEST(Structure, NilpotentAndAbelian)
{
  EXPECT_TRUE(isAbelian(directProduct(cyclic(3), cyclic(5))));
  auto d4 = dihedral(4);
  EXPECT_TRUE(isNilpotent(d4));
  EXPECT_FALSE(isAbelian(d4));
  EXPECT_FALSE(isNilpotent(alternating(4)));
  for (const char* name : {"dihedral_4", "dihedral_6", "alt_4", "s3xs3", "cyclic_12", "frobenius_7_3", "c3xc5"}) {
    auto g = catalogGroup(name);
    EXPECT_EQ(isNilpotent(g), lowerCentralSeriesTerminates(g)) << name;
  }
}

TEST(Cores, OpPrime)
{
  EXPECT_EQ(opPrimeCore(alternating(5), 2).order(), 1);
  EXPECT_EQ(opPrimeCore(alternating(5), 5).order(), 1);
  auto c15 = directProduct(cyclic(3), cyclic(5));
  EXPECT_EQ(opPrimeCore(c15, 3).order(), 5);
  // translations form a normal 3-subgroup, so no nontrivial normal 3'-subgroup
  EXPECT_EQ(opPrimeCore(semiAffine(3, 2), 3).order(), 1);
  EXPECT_EQ(opPrimeCore(semiAffine(3, 2), 2).order(), 9);
  auto s4 = symmetric(4);
  EXPECT_EQ(opPrimeCore(s4, 3).order(), 4);
  EXPECT_TRUE(isNormal(opPrimeCore(s4, 3)));
}

TEST(Solvability, Examples)
{
  auto mins = minimalNormalSubgroups(symmetric(4));
  ASSERT_EQ(mins.size(), 1u);
  EXPECT_EQ(mins[0].order(), 4);
  EXPECT_TRUE(isSolvable(symmetric(4)));
  EXPECT_FALSE(isSolvable(alternating(5)));
  EXPECT_FALSE(isQSolvable(alternating(5), 5));
  EXPECT_TRUE(isQSolvable(alternating(5), 7));
  EXPECT_TRUE(isQSolvable(directProduct(alternating(5), cyclic(7)), 7));
  EXPECT_FALSE(isQSolvable(directProduct(alternating(5), cyclic(7)), 3));
  EXPECT_EQ(minimalNormalSubgroups(directProduct(alternating(5), alternating(5))).size(), 2u);
  for (const auto& e : defaultCatalog()) {
    if (e.extended()) continue;
    EXPECT_EQ(isSolvable(e.builder()), e.tags.contains("solvable")) << e.name;
  }
}

TEST(Solvability, SimpleGroupsHaveNoProperNormalClosure)
{
  for (const char* name : {"psl2_4", "psl2_5", "psl2_7", "psl2_8", "psl2_9", "psl2_11", "psl2_13", "psl2_31"}) {
    auto g = catalogGroup(name);
    ClassTable t(g);
    for (std::size_t i = 1; i < t.size(); ++i) EXPECT_EQ(normalClosure(g, {t[i].representative}).order(), g.order());
  }
}

// A Hall subgroup found nilpotent contains a conjugate of every Sylow subgroup
// for its primes (conjugates of H cover all of them).
TEST(Hall, WielandtCover)
{
  for (const auto& e : defaultCatalog()) {
    if (e.extended() || e.expectedOrder > 10'000) continue;
    auto g = e.builder();
    GroupOracle oracle(g);
    auto primes = primeDivisors(g.order());
    for (std::size_t i = 0; i < primes.size(); ++i)
      for (std::size_t j = i + 1; j < primes.size(); ++j) {
        auto h = oracle.hall({primes[i], primes[j]});
        if (!h.witness || h.witness->structure == HallStructure::Neither) continue;
        const auto& els = g.elements();
        std::set<ElementSet> conjugates;
        auto hs = elementSet(h.witness->subgroup);
        for (std::uint32_t k = 0; k < els.size(); ++k) {
          auto x = els.at(k);
          ElementSet c;
          for (const auto& y : hs) c.insert(conjugate(y, x));
          conjugates.insert(std::move(c));
        }
        for (auto p : {primes[i], primes[j]})
          for (const auto& s : oracle.allSylow(p)) {
            auto ss = elementSet(s);
            bool covered = std::any_of(conjugates.begin(), conjugates.end(), [&](const ElementSet& c) {
              return std::includes(c.begin(), c.end(), ss.begin(), ss.end());
            });
            EXPECT_TRUE(covered) << e.name;
          }
      }
  }
}
