#include <gtest/gtest.h>

#include <set>

#include "hallmark/catalog.hpp"
#include "hallmark/errors.hpp"
#include "hallmark/group.hpp"
#include "hallmark/group_io.hpp"

using namespace hallmark;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<std::size_t>> c) { return Permutation::fromCycles(n, c); }

PermutationGroup a5() { return buildGroup(5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{2, 3, 4}})}); }
PermutationGroup s4() { return buildGroup(4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})}); }

// Naive closure: multiply until nothing new appears.
std::set<Permutation> closure(const std::vector<Permutation>& gens, std::size_t degree)
{
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        auto y = x * g;
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier.swap(next);
  }
  return seen;
}

}  // namespace

TEST(Permutation, RightActionComposition)
{
  auto a = cyc(3, {{0, 1}});
  auto b = cyc(3, {{1, 2}});
  // apply a then b: 0 -> 1 -> 2
  EXPECT_EQ((a * b)(0), 2);
  EXPECT_TRUE((a.inverse() * a).isIdentity());
  EXPECT_EQ(cyc(6, {{0, 1, 2}, {3, 4}}).order(), 6u);
  EXPECT_EQ(cyc(5, {{0, 2}, {1, 3, 4}}).cycleString(), "(1,3)(2,4,5)");
  EXPECT_EQ(Permutation::identity(4).cycleString(), "()");
}

TEST(Permutation, RejectsNonBijection) { EXPECT_THROW(Permutation({0, 0, 1}), MalformedInput); }

TEST(BuildGroup, Orders)
{
  EXPECT_EQ(a5().order(), 60);
  EXPECT_EQ(s4().order(), 24);
  EXPECT_EQ(buildGroup(3, {}).order(), 1);
  EXPECT_EQ(closure(a5().generators(), 5).size(), 60u);
}

TEST(BuildGroup, DegreeZeroWithGenerators)
{
  EXPECT_THROW(buildGroup(0, {Permutation::identity(1)}), MalformedInput);
}

TEST(Membership, Basic)
{
  EXPECT_FALSE(isMember(a5(), cyc(5, {{0, 1}})));
  EXPECT_TRUE(isMember(a5(), cyc(5, {{0, 1, 2}})));
  EXPECT_TRUE(isMember(s4(), Permutation::identity(4)));
  EXPECT_THROW(isMember(s4(), Permutation::identity(5)), MalformedInput);
}

TEST(Enumerate, CountsAndOrder)
{
  auto s3 = buildGroup(3, {cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})});
  auto els = enumerateElements(s3, 1'000'000);
  EXPECT_EQ(els.size(), 6u);
  EXPECT_TRUE(std::is_sorted(els.begin(), els.end()));
  EXPECT_EQ(enumerateElements(a5(), 1'000'000).size(), 60u);
  EXPECT_THROW(enumerateElements(a5(), 10), CapacityError);
}

TEST(Enumerate, MatchesNaiveClosure)
{
  for (const char* name : {"dihedral_6", "frobenius_7_3", "alt_5", "sym_4", "psl2_7", "semiaffine_2_3"}) {
    auto g = catalogGroup(name);
    auto naive = closure(g.generators(), g.degree());
    auto els = enumerateElements(g, 1'000'000);
    ASSERT_EQ(naive.size(), els.size()) << name;
    EXPECT_TRUE(std::equal(naive.begin(), naive.end(), els.begin())) << name;
  }
}

TEST(Quotient, Orders)
{
  auto g = s4();
  auto v4 = Subgroup(g, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  EXPECT_EQ(cosetActionQuotient(g, v4).order(), 6);
  auto a4 = Subgroup(g, {cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})});
  EXPECT_EQ(cosetActionQuotient(g, a4).order(), 2);
  EXPECT_EQ(cosetActionQuotient(a5(), Subgroup::trivial(a5())).order(), 60);
  auto notNormal = Subgroup(g, {cyc(4, {{0, 1}})});
  EXPECT_THROW(cosetActionQuotient(g, notNormal), PreconditionError);
}

TEST(NormalClosure, Examples)
{
  auto g = s4();
  auto n = normalClosure(g, {cyc(4, {{0, 1, 2}})});
  EXPECT_EQ(n.order(), 12);
  for (const auto& x : n.generators())
    for (const auto& s : g.generators()) EXPECT_TRUE(n.contains(conjugate(x, s)));
  EXPECT_EQ(normalClosure(a5(), {cyc(5, {{0, 1}, {2, 3}})}).order(), 60);
  EXPECT_EQ(normalClosure(g, {}).order(), 1);
  EXPECT_THROW(normalClosure(a5(), {cyc(5, {{0, 1}})}), PreconditionError);
}

TEST(GroupFile, RoundTripAndErrors)
{
  auto g = a5();
  auto text = writeGroupFile(g);
  auto back = parseGroupFile(text);
  EXPECT_EQ(back.order(), 60);
  EXPECT_EQ(back.generators(), g.generators());
  try {
    parseGroupFile(R"({"name": "bad", "degree": 3, "generators": [[1,2,3],[2,2,3]]})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::NotBijection);
    EXPECT_NE(std::string(e.what()).find("generators[1][1]"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parseGroupFile("{\"degree\": 3,"), ParseError);
}
