#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "hallmark/catalog.hpp"
#include "hallmark/classdata.hpp"
#include "hallmark/errors.hpp"

using namespace hallmark;

namespace {

std::multiset<std::pair<BigInt, std::uint64_t>> sizeOrderPairs(const ClassTable& t)
{
  std::multiset<std::pair<BigInt, std::uint64_t>> out;
  for (const auto& c : t.classes()) out.emplace(c.size, c.elementOrder);
  return out;
}

// Counts commuting elements directly.
std::uint64_t bruteCentralizer(const PermutationGroup& g, const Permutation& x)
{
  std::uint64_t n = 0;
  for (const auto& y : enumerateElements(g, 1'000'000)) n += x.commutesWith(y);
  return n;
}

}  // namespace

TEST(ClassTable, A5)
{
  ClassTable t(alternating(5));
  std::multiset<std::pair<BigInt, std::uint64_t>> expected{{1, 1}, {15, 2}, {20, 3}, {12, 5}, {12, 5}};
  EXPECT_EQ(sizeOrderPairs(t), expected);
  EXPECT_EQ(t[0].size, 1);
  EXPECT_EQ(t[0].elementOrder, 1u);
  EXPECT_TRUE(t[0].representative.isIdentity());
}

TEST(ClassTable, S5FiveCycle)
{
  ClassTable t(symmetric(5));
  EXPECT_EQ(t[t.classOf(Permutation::fromCycles(5, {{0, 1, 2, 3, 4}}))].size, 24);
}

TEST(ClassTable, CyclicAllSingletons)
{
  ClassTable t(cyclic(6));
  ASSERT_EQ(t.size(), 6u);
  for (const auto& c : t.classes()) EXPECT_EQ(c.size, 1);
}

TEST(ClassTable, InvariantsOnCatalog)
{
  for (const auto& e : defaultCatalog()) {
    if (e.extended()) continue;
    auto g = e.builder();
    ClassTable t(g);
    BigInt sum = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      sum += t[i].size;
      EXPECT_EQ(g.order() % t[i].size, 0) << e.name;
      EXPECT_EQ(t[i].size * t.centralizerOrder(i), g.order());
      EXPECT_EQ(t.classOf(t[i].representative), i);
    }
    EXPECT_EQ(sum, g.order()) << e.name;
    // Representatives are the least members: every element's class has a rep <= it.
    const auto& els = g.elements();
    for (std::uint32_t k = 0; k < els.size(); k += 97) {
      auto c = t.classOfIndex(k);
      EXPECT_LE(t[c].representativeIndex, k);
      EXPECT_EQ(els.elementOrder(k), t[c].elementOrder);
    }
  }
}

TEST(ClassTable, PowerMapInverse)
{
  ClassTable t(alternating(5));
  auto inv = t.powerMap(-1);
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(inv[i], i);  // all classes of A5 are real
  ClassTable c(frobenius(7, 3));
  auto cinv = c.powerMap(-1);
  std::size_t nonreal = 0;
  for (std::size_t i = 0; i < c.size(); ++i) nonreal += cinv[i] != i;
  EXPECT_EQ(nonreal, 4u);
}

TEST(Centralizer, Examples)
{
  auto a5 = alternating(5);
  auto five = Permutation::fromCycles(5, {{0, 1, 2, 3, 4}});
  EXPECT_EQ(centralizerOrder(a5, five), 5);
  EXPECT_EQ(bruteCentralizer(a5, five), 5u);
  EXPECT_EQ(centralizerOrder(a5, Permutation::identity(5)), 60);
  auto sa = semiAffine(2, 3);
  ClassTable t(sa);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i].elementOrder == 2) {
      EXPECT_EQ(centralizerOrder(sa, t[i].representative), 24);
      EXPECT_EQ(bruteCentralizer(sa, t[i].representative), 24u);
    }
  EXPECT_THROW(centralizerOrder(a5, Permutation::fromCycles(5, {{0, 1}})), PreconditionError);
}

TEST(PElements, Examples)
{
  auto p = ClassTable(alternating(5)).profile();
  auto two = pElements(p, 2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(p.classes[two[0]].size, 15);
  EXPECT_TRUE(pElements(p, 7).empty());
  auto sa = ClassTable(semiAffine(2, 3)).profile();
  // phi and phi^2 have different images in the abelian quotient C3, so there are
  // two classes of 3-elements, each of size 28.
  auto three = pElements(sa, 3);
  ASSERT_EQ(three.size(), 2u);
  for (auto i : three) EXPECT_EQ(sa.classes[i].size, 28);
  auto twos = pElements(sa, 2);
  ASSERT_EQ(twos.size(), 1u);
  EXPECT_EQ(sa.classes[twos[0]].size, 7);
}

TEST(PPart, Crt)
{
  auto x6 = Permutation::fromCycles(5, {{0, 1, 2}, {3, 4}});
  EXPECT_EQ(pPart(x6, 2), x6.pow(3));
  EXPECT_EQ(pPart(x6, 2).order(), 2u);
  auto x5 = Permutation::fromCycles(5, {{0, 1, 2, 3, 4}});
  EXPECT_TRUE(pPart(x5, 2).isIdentity());
  auto x12 = Permutation::fromCycles(7, {{0, 1, 2, 3}, {4, 5, 6}});
  EXPECT_EQ(pPart(x12, 3), x12.pow(4));
  EXPECT_EQ(pPart(x12, 3).order(), 3u);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    auto a = pPart(x12, p), b = pPrimePart(x12, p);
    EXPECT_EQ(a * b, x12);
    EXPECT_TRUE(a.commutesWith(b));
  }
}

// Every odd-prime class of a nonabelian simple group: some r-class has even size,
// and every real r-class has even size.
TEST(ClassTable, SimpleGroupsHaveEvenRClasses)
{
  for (const char* name : {"alt_5", "alt_6", "alt_7", "alt_8", "psl2_7", "psl2_8", "psl2_11", "psl2_13", "psl2_31",
                           "psl3_3"}) {
    ClassTable t(catalogGroup(name));
    auto prof = t.profile();
    auto inv = t.powerMap(-1);
    for (auto r : prof.primes()) {
      if (r == 2) continue;
      bool even = false;
      for (auto i : pElements(prof, r)) {
        even |= prof.classes[i].size % 2 == 0;
        if (inv[i] == i && prof.classes[i].elementOrder == r) EXPECT_EQ(prof.classes[i].size % 2, 0) << name;
      }
      EXPECT_TRUE(even) << name << " r=" << r;
    }
  }
}
