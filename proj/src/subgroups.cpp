#include "hallmark/subgroups.hpp"

#include <algorithm>
#include <numeric>

#include "hallmark/classdata.hpp"
#include "hallmark/errors.hpp"

namespace hallmark {

const char* toString(HallStructure s) noexcept
{
  switch (s) {
    case HallStructure::Abelian: return "abelian";
    case HallStructure::NilpotentNonabelian: return "nilpotent-nonabelian";
    case HallStructure::Neither: return "neither";
  }
  return "?";
}

const char* toString(HallStatus s) noexcept
{
  return s == HallStatus::Found ? "found" : "proved-absent";
}

namespace {

using Members = std::vector<std::uint32_t>;

bool contains(const Members& sorted, std::uint32_t x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

/// Elements of <gens>, sorted.
Members closeIndices(const ElementList& els, const std::vector<std::uint32_t>& gens)
{
  std::vector<bool> seen(els.size(), false);
  Members out{0};
  seen[0] = true;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (auto s : gens) {
      auto y = els.multiply(out[head], s);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> toPerms(const ElementList& els, const std::vector<std::uint32_t>& idx)
{
  std::vector<Permutation> out;
  for (auto i : idx) out.push_back(els.at(i));
  return out;
}

BigInt orderOf(std::size_t degree, const std::vector<Permutation>& gens) { return StabilizerChain(degree, gens).order(); }

std::string primeList(const std::vector<std::uint64_t>& pi)
{
  std::string s;
  for (auto p : pi) s += (s.empty() ? "" : ",") + std::to_string(p);
  return "{" + s + "}";
}

}  // namespace

struct GroupOracle::SylowSet {
  std::uint64_t p = 0;
  std::vector<Members> members;                   // sorted, one per Sylow subgroup
  std::vector<std::vector<std::uint32_t>> gens;   // generator indices per Sylow subgroup
  std::vector<std::uint32_t> climbed;             // generators of the subgroup found by climbing
};

GroupOracle::GroupOracle(PermutationGroup group, std::uint64_t sylowCap) : group_(std::move(group)), sylowCap_(sylowCap)
{
  const ElementList& els = group_.elements();
  orders_.resize(els.size());
  for (std::uint32_t i = 0; i < els.size(); ++i) orders_[i] = els.elementOrder(i);
}

GroupOracle::~GroupOracle() = default;

const GroupOracle::SylowSet& GroupOracle::sylowSet(std::uint64_t p)
{
  std::lock_guard lock(mutex_);
  if (auto it = sylows_.find(p); it != sylows_.end()) return *it->second;
  if (!isPrime(p)) throw PreconditionError("sylow: " + std::to_string(p) + " is not prime");

  const ElementList& els = group_.elements();
  auto set = std::make_unique<SylowSet>();
  set->p = p;
  BigInt target = primePart(group_.order(), p);

  // Seed with a p-element of largest order, then climb through normalizers.
  std::vector<std::uint32_t> gens;
  Members s{0};
  if (target > 1) {
    std::uint32_t seed = 0;
    for (std::uint32_t i = 1; i < els.size(); ++i)
      if (isPositivePowerOf(orders_[i], p) && orders_[i] > orders_[seed]) seed = i;
    gens.push_back(seed);
    s = closeIndices(els, gens);
    while (s.size() < target) {
      std::optional<std::uint32_t> next;
      for (std::uint32_t g = 1; g < els.size() && !next; ++g) {
        if (!isPositivePowerOf(orders_[g], p) || contains(s, g)) continue;
        bool normalizes = std::all_of(gens.begin(), gens.end(), [&](auto x) { return contains(s, els.conjugate(x, g)); });
        if (normalizes) next = g;
      }
      if (!next) throw Error("sylow: climb stalled below the Sylow order");
      gens.push_back(*next);
      s = closeIndices(els, gens);
    }
  }

  // Conjugacy orbit under the generators of G, ordered by element set.
  std::map<Members, std::vector<std::uint32_t>> orbit{{s, gens}};
  std::vector<const Members*> queue{&orbit.begin()->first};
  std::vector<std::uint32_t> ggens;
  for (const auto& x : group_.generators())
    if (!x.isIdentity()) ggens.push_back(els.indexOf(x));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Members& cur = *queue[head];
    const auto& curGens = orbit.at(cur);
    for (auto g : ggens) {
      Members img;
      img.reserve(cur.size());
      for (auto m : cur) img.push_back(els.conjugate(m, g));
      std::sort(img.begin(), img.end());
      if (orbit.contains(img)) continue;
      std::vector<std::uint32_t> imgGens;
      for (auto x : curGens) imgGens.push_back(els.conjugate(x, g));
      auto [it, _] = orbit.emplace(std::move(img), std::move(imgGens));
      queue.push_back(&it->first);
      if (orbit.size() > sylowCap_)
        throw CapacityError("allSylow: more than " + std::to_string(sylowCap_) + " Sylow " + std::to_string(p) +
                            "-subgroups");
    }
  }
  set->climbed = gens;
  for (auto& [m, g] : orbit) {
    set->members.push_back(m);
    set->gens.push_back(g);
  }
  auto [it, _] = sylows_.emplace(p, std::move(set));
  return *it->second;
}

SylowWitness GroupOracle::sylow(std::uint64_t p)
{
  const auto& set = sylowSet(p);
  const ElementList& els = group_.elements();
  SylowWitness w;
  w.p = p;
  w.subgroup = Subgroup(group_, toPerms(els, set.climbed));
  return w;
}

std::vector<Subgroup> GroupOracle::allSylow(std::uint64_t p)
{
  const auto& set = sylowSet(p);
  const ElementList& els = group_.elements();
  std::vector<Subgroup> out;
  out.reserve(set.members.size());
  for (const auto& g : set.gens) out.emplace_back(group_, toPerms(els, g));
  return out;
}

Verdict GroupOracle::commutingSylowPair(std::uint64_t p, std::uint64_t q)
{
  Verdict v;
  v.provenance = Provenance::Oracle;
  const auto& sp = sylowSet(p);
  const auto& sq = sylowSet(q);
  const ElementList& els = group_.elements();
  // Any commuting pair can be conjugated so that P is the first Sylow p-subgroup.
  const auto& pg = sp.gens.front();
  for (std::size_t j = 0; j < sq.gens.size(); ++j) {
    bool ok = true;
    for (auto a : pg) {
      for (auto b : sq.gens[j])
        if (els.multiply(a, b) != els.multiply(b, a)) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) {
      v.outcome = Outcome::Holds;
      v.subgroups.push_back({"P", BigInt(sp.members.front().size()), toPerms(els, pg)});
      v.subgroups.push_back({"Q", BigInt(sq.members[j].size()), toPerms(els, sq.gens[j])});
      v.detail = "Sylow " + std::to_string(p) + " and Sylow " + std::to_string(q) + " subgroups commute";
      return v;
    }
  }
  v.outcome = Outcome::Fails;
  v.detail = "no Sylow " + std::to_string(q) + "-subgroup among " + std::to_string(sq.gens.size()) +
             " centralizes a Sylow " + std::to_string(p) + "-subgroup";
  return v;
}

Verdict GroupOracle::normalizingSylowPair(std::uint64_t p, std::uint64_t q)
{
  Verdict v;
  v.provenance = Provenance::Oracle;
  const auto& sp = sylowSet(p);
  const auto& sq = sylowSet(q);
  const ElementList& els = group_.elements();
  const auto& pg = sp.gens.front();
  for (std::size_t j = 0; j < sq.gens.size(); ++j) {
    bool ok = true;
    for (auto a : pg) {
      for (auto b : sq.gens[j])
        if (!contains(sq.members[j], els.conjugate(b, a))) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) {
      v.outcome = Outcome::Holds;
      v.subgroups.push_back({"P", BigInt(sp.members.front().size()), toPerms(els, pg)});
      v.subgroups.push_back({"Q", BigInt(sq.members[j].size()), toPerms(els, sq.gens[j])});
      v.detail = "a Sylow " + std::to_string(p) + "-subgroup normalizes a Sylow " + std::to_string(q) + "-subgroup";
      return v;
    }
  }
  v.outcome = Outcome::Fails;
  v.detail = "no Sylow " + std::to_string(q) + "-subgroup among " + std::to_string(sq.gens.size()) +
             " is normalized by a Sylow " + std::to_string(p) + "-subgroup";
  return v;
}

namespace {

HallStructure structureOf(const Subgroup& h)
{
  if (isAbelian(h)) return HallStructure::Abelian;
  if (isNilpotent(h)) return HallStructure::NilpotentNonabelian;
  return HallStructure::Neither;
}

}  // namespace

HallResult GroupOracle::hall(std::vector<std::uint64_t> pi, const HallLimits& limits)
{
  std::sort(pi.begin(), pi.end());
  pi.erase(std::unique(pi.begin(), pi.end()), pi.end());
  for (auto p : pi)
    if (!isPrime(p)) throw PreconditionError("hall: " + std::to_string(p) + " is not prime");
  std::vector<std::uint64_t> primes;
  for (auto p : pi)
    if (group_.order() % p == 0) primes.push_back(p);

  const ElementList& els = group_.elements();
  const std::size_t degree = group_.degree();
  const BigInt target = piPart(group_.order(), primes);
  HallResult result;
  auto found = [&](std::vector<Permutation> gens, std::string strategy) {
    result.status = HallStatus::Found;
    result.strategy = std::move(strategy);
    Subgroup h(group_, std::move(gens));
    result.witness = HallWitness{pi, h, structureOf(h)};
    return result;
  };

  if (primes.empty()) return found({}, "trivial");
  if (primes.size() == 1) return found(toPerms(els, sylowSet(primes[0]).gens.front()), "sylow");

  std::vector<const SylowSet*> sets;
  for (auto p : primes) sets.push_back(&sylowSet(p));

  auto gensOf = [&](const std::vector<std::pair<std::size_t, std::size_t>>& chosen) {
    std::vector<Permutation> gens;
    for (auto [k, j] : chosen)
      for (auto x : sets[k]->gens[j]) gens.push_back(els.at(x));
    return gens;
  };

  // Strategy 1: Sylow subgroups that pairwise commute or normalize one another.
  {
    auto compatible = [&](std::size_t ka, std::size_t ja, std::size_t kb, std::size_t jb) {
      const auto& ga = sets[ka]->gens[ja];
      const auto& gb = sets[kb]->gens[jb];
      const auto& ma = sets[ka]->members[ja];
      const auto& mb = sets[kb]->members[jb];
      bool aNormalizesB = true, bNormalizesA = true;
      for (auto a : ga)
        for (auto b : gb) {
          if (aNormalizesB && !contains(mb, els.conjugate(b, a))) aNormalizesB = false;
          if (bNormalizesA && !contains(ma, els.conjugate(a, b))) bNormalizesA = false;
        }
      return aNormalizesB || bNormalizesA;
    };
    std::vector<std::pair<std::size_t, std::size_t>> chosen{{0, 0}};
    std::uint64_t budget = limits.productTuples;
    std::optional<std::vector<Permutation>> hit;
    auto dfs = [&](auto&& self, std::size_t k) -> void {
      if (hit || budget == 0) return;
      if (k == sets.size()) {
        --budget;
        ++result.tuplesExamined;
        auto gens = gensOf(chosen);
        if (orderOf(degree, gens) == target) hit = gens;
        return;
      }
      for (std::size_t j = 0; j < sets[k]->gens.size() && !hit && budget > 0; ++j) {
        bool ok = std::all_of(chosen.begin(), chosen.end(), [&](auto c) { return compatible(c.first, c.second, k, j); });
        if (!ok) continue;
        chosen.emplace_back(k, j);
        self(self, k + 1);
        chosen.pop_back();
      }
    };
    dfs(dfs, 1);
    if (hit) return found(*hit, "product");
  }

  // Strategy 2: a Hall subgroup, after conjugation, contains the first Sylow
  // subgroup of the prime with the most Sylow subgroups, and is generated by
  // it together with one Sylow subgroup of G for each remaining prime.
  std::vector<std::size_t> order(sets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return sets[a]->gens.size() > sets[b]->gens.size(); });
  std::stable_sort(order.begin() + 1, order.end(),
                   [&](auto a, auto b) { return sets[a]->gens.size() < sets[b]->gens.size(); });
  std::vector<std::pair<std::size_t, std::size_t>> chosen{{order[0], 0}};
  std::uint64_t examined = 0;
  std::optional<std::vector<Permutation>> hit;
  auto dfs = [&](auto&& self, std::size_t level) -> void {
    if (hit) return;
    std::size_t k = order[level];
    for (std::size_t j = 0; j < sets[k]->gens.size() && !hit; ++j) {
      if (++examined > limits.exhaustiveTuples)
        throw CapacityError("hall " + primeList(primes) + ": not found within " +
                            std::to_string(limits.exhaustiveTuples) + " exhaustive-search steps");
      chosen.emplace_back(k, j);
      auto gens = gensOf(chosen);
      BigInt o = orderOf(degree, gens);
      if (o == target)
        hit = gens;
      else if (target % o == 0 && level + 1 < order.size())
        self(self, level + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, 1);
  result.tuplesExamined += examined;
  if (hit) return found(*hit, "exhaustive");
  result.status = HallStatus::ProvedAbsent;
  result.strategy = "exhaustive";
  return result;
}

SylowWitness sylow(const PermutationGroup& group, std::uint64_t p) { return GroupOracle(group).sylow(p); }

std::vector<Subgroup> allSylow(const PermutationGroup& group, std::uint64_t p, std::uint64_t cap)
{
  return GroupOracle(group, cap).allSylow(p);
}

Verdict existsCommutingSylowPair(const PermutationGroup& group, std::uint64_t p, std::uint64_t q)
{
  return GroupOracle(group).commutingSylowPair(p, q);
}

Verdict existsNormalizingSylowPair(const PermutationGroup& group, std::uint64_t p, std::uint64_t q)
{
  return GroupOracle(group).normalizingSylowPair(p, q);
}

HallResult hallSubgroup(const PermutationGroup& group, const std::vector<std::uint64_t>& pi, const HallLimits& limits)
{
  return GroupOracle(group).hall(pi, limits);
}

bool isAbelian(const PermutationGroup& g)
{
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].commutesWith(gens[j])) return false;
  return true;
}

bool isAbelian(const Subgroup& s) { return isAbelian(s.group()); }

bool isNilpotent(const PermutationGroup& g)
{
  GroupOracle oracle(g);
  for (auto p : primeDivisors(g.order()))
    if (!isNormal(oracle.sylow(p).subgroup)) return false;
  return true;
}

bool isNilpotent(const Subgroup& s) { return isNilpotent(s.group()); }

Subgroup opPrimeCore(const PermutationGroup& group, std::uint64_t p)
{
  ClassTable table(group);
  std::vector<Permutation> seeds;
  for (std::size_t i = 1; i < table.size(); ++i) {
    const auto& rep = table[i].representative;
    if (normalClosure(group, {rep}).order() % p != 0) seeds.push_back(rep);
  }
  Subgroup core = normalClosure(group, seeds);
  if (core.order() % p == 0) throw Error("opPrimeCore: result is not a p'-group");
  return core;
}

namespace {

bool subgroupOf(const Subgroup& a, const Subgroup& b)
{
  return std::all_of(a.generators().begin(), a.generators().end(), [&](const auto& x) { return b.contains(x); });
}

}  // namespace

std::vector<Subgroup> minimalNormalSubgroups(const PermutationGroup& group)
{
  ClassTable table(group);
  std::vector<Subgroup> closures;
  for (std::size_t i = 1; i < table.size(); ++i) {
    Subgroup n = normalClosure(group, {table[i].representative});
    bool seen = std::any_of(closures.begin(), closures.end(),
                            [&](const Subgroup& m) { return m.order() == n.order() && subgroupOf(n, m); });
    if (!seen) closures.push_back(std::move(n));
  }
  std::vector<Subgroup> minimal;
  for (const auto& n : closures) {
    bool properlyContains = std::any_of(closures.begin(), closures.end(), [&](const Subgroup& m) {
      return m.order() < n.order() && subgroupOf(m, n);
    });
    if (!properlyContains) minimal.push_back(n);
  }
  std::stable_sort(minimal.begin(), minimal.end(), [](const auto& a, const auto& b) { return a.order() < b.order(); });
  return minimal;
}

bool isSolvable(const PermutationGroup& group)
{
  PermutationGroup g = group;
  while (g.order() > 1) {
    Subgroup d = derivedSubgroup(g);
    if (d.order() == g.order()) return false;
    g = d.group();
  }
  return true;
}

bool isQSolvable(const PermutationGroup& group, std::uint64_t q, std::uint64_t quotientCap)
{
  if (group.order() % q != 0) return true;
  Subgroup n = minimalNormalSubgroups(group).front();
  if (!isSolvable(n.group()) && n.order() % q == 0) return false;
  if (n.order() == group.order()) return true;
  return isQSolvable(cosetActionQuotient(group, n, quotientCap), q, quotientCap);
}

}  // namespace hallmark
