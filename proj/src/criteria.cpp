#include "hallmark/criteria.hpp"

#include <algorithm>

#include "hallmark/errors.hpp"

namespace hallmark {

namespace {

std::string s(std::uint64_t v) { return std::to_string(v); }

std::string primeSet(const std::vector<std::uint64_t>& pi)
{
  std::string out;
  for (auto p : pi) out += (out.empty() ? "" : ",") + s(p);
  return "{" + out + "}";
}

/// First p-element class whose size is divisible by q, if any.
std::optional<ClassWitness> divisibleClass(const ClassProfile& profile, std::uint64_t p, std::uint64_t q)
{
  for (auto i : pElements(profile, p))
    if (profile.classes[i].size % q == 0) return ClassWitness{i, profile.classes[i].label, p, q, profile.classes[i].size};
  return std::nullopt;
}

}  // namespace

std::vector<std::uint64_t> relevantPrimes(const BigInt& order, std::vector<std::uint64_t> pi)
{
  std::sort(pi.begin(), pi.end());
  pi.erase(std::unique(pi.begin(), pi.end()), pi.end());
  std::vector<std::uint64_t> out;
  for (auto p : pi) {
    if (!isPrime(p)) throw PreconditionError(s(p) + " is not prime");
    if (order % p == 0) out.push_back(p);
  }
  return out;
}

Verdict crossDivisibilityCriterion(const ClassProfile& profile, std::uint64_t p, std::uint64_t q, Provenance provenance)
{
  if (p == q || !isPrime(p) || !isPrime(q)) throw PreconditionError("cross-divisibility needs two distinct primes");
  Verdict v;
  v.provenance = provenance;
  auto a = divisibleClass(profile, p, q);
  auto b = divisibleClass(profile, q, p);
  v.conditions.push_back({s(q) + " divides no " + s(p) + "-element class size", !a});
  v.conditions.push_back({s(p) + " divides no " + s(q) + "-element class size", !b});
  v.outcome = (a || b) ? Outcome::Fails : Outcome::Holds;
  v.offendingClass = a ? a : b;
  return v;
}

Verdict nilpotentHallCriterion(const ClassProfile& profile, const std::vector<std::uint64_t>& pi, Provenance provenance)
{
  auto primes = relevantPrimes(profile.groupOrder, pi);
  Verdict v;
  v.provenance = provenance;
  v.outcome = Outcome::Holds;
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      auto pair = crossDivisibilityCriterion(profile, primes[i], primes[j], provenance);
      bool ok = pair.holds();
      v.conditions.push_back({"pair {" + s(primes[i]) + "," + s(primes[j]) + "}", ok});
      if (!ok && v.outcome == Outcome::Holds) {
        v.outcome = Outcome::Fails;
        v.offendingClass = pair.offendingClass;
      }
    }
  if (primes.size() <= 1) v.detail = "at most one prime of " + primeSet(pi) + " divides the order";
  return v;
}

Verdict abelianHallCriterion(const ClassProfile& profile, const std::vector<std::uint64_t>& pi,
                             const std::optional<BlockDegreeMap>& blockDegrees, Provenance provenance)
{
  auto primes = relevantPrimes(profile.groupOrder, pi);
  Verdict v;
  v.provenance = provenance;

  std::optional<ClassWitness> bad;
  for (auto p : primes) {
    for (auto i : pElements(profile, p)) {
      for (auto r : primes)
        if (profile.classes[i].size % r == 0) {
          bad = ClassWitness{i, profile.classes[i].label, p, r, profile.classes[i].size};
          break;
        }
      if (bad) break;
    }
    if (bad) break;
  }
  v.conditions.push_back({"(i)", !bad});
  if (bad) {
    v.outcome = Outcome::Fails;
    v.offendingClass = bad;
    return v;
  }

  for (std::uint64_t p : {3u, 5u}) {
    if (!std::binary_search(primes.begin(), primes.end(), p)) continue;
    const BlockDegrees* blocks = nullptr;
    if (blockDegrees)
      if (auto it = blockDegrees->find(p); it != blockDegrees->end()) blocks = &it->second;
    if (!blocks) {
      v.outcome = Outcome::Undetermined;
      v.missingPrime = p;
      v.detail = "principal " + s(p) + "-block degrees not supplied";
      return v;
    }
    for (std::size_t k = 0; k < blocks->degrees.size(); ++k)
      if (blocks->degrees[k] % p == 0) {
        v.conditions.push_back({"(ii) p=" + s(p), false});
        v.outcome = Outcome::Fails;
        v.offendingCharacter = CharacterWitness{p, blocks->characters.at(k), blocks->degrees[k]};
        return v;
      }
    v.conditions.push_back({"(ii) p=" + s(p), true});
  }
  v.outcome = Outcome::Holds;
  return v;
}

TheoremVerifier::TheoremVerifier(PermutationGroup group) : group_(std::move(group)) {}
TheoremVerifier::~TheoremVerifier() = default;

const ClassTable& TheoremVerifier::classTable()
{
  if (!table_) table_ = std::make_unique<ClassTable>(group_);
  return *table_;
}

const ClassProfile& TheoremVerifier::profile()
{
  if (!profile_) profile_ = std::make_unique<ClassProfile>(classTable().profile());
  return *profile_;
}

GroupOracle& TheoremVerifier::oracle()
{
  if (!oracle_) oracle_ = std::make_unique<GroupOracle>(group_);
  return *oracle_;
}

bool TheoremVerifier::qSolvable(std::uint64_t q)
{
  if (auto it = qSolvable_.find(q); it != qSolvable_.end()) return it->second;
  bool r = isQSolvable(group_, q);
  qSolvable_[q] = r;
  return r;
}

namespace {

TheoremReport report(std::string theorem, std::vector<std::uint64_t> primes, std::string relation)
{
  TheoremReport r;
  r.theorem = std::move(theorem);
  r.primes = std::move(primes);
  r.relation = std::move(relation);
  return r;
}

}  // namespace

template <class F>
TheoremReport TheoremVerifier::guarded(TheoremReport base, F&& body)
{
  base.group = group_.name();
  try {
    body(base);
  } catch (const CapacityError& e) {
    base.tested = false;
    base.capped = true;
    base.agree = true;
    base.note = std::string("untested: ") + e.what();
  }
  return base;
}

TheoremReport TheoremVerifier::theoremA(std::uint64_t p, std::uint64_t q)
{
  return guarded(report("A", {p, q}, "equivalence"), [&](TheoremReport& r) {
    r.criterion = crossDivisibilityCriterion(profile(), p, q);
    r.oracle = oracle().commutingSylowPair(p, q);
    r.agree = r.criterion.holds() == r.oracle.holds();
  });
}

namespace {

Verdict hallOracleVerdict(const HallResult& h, bool wantAbelian)
{
  Verdict v;
  v.provenance = Provenance::Oracle;
  if (h.status == HallStatus::ProvedAbsent) {
    v.outcome = Outcome::Fails;
    v.detail = "no Hall subgroup (proved absent by exhaustive search)";
    return v;
  }
  const auto& w = *h.witness;
  v.subgroups.push_back({"hall", w.subgroup.order(), w.subgroup.generators()});
  bool ok = wantAbelian ? w.structure == HallStructure::Abelian : w.structure != HallStructure::Neither;
  v.outcome = ok ? Outcome::Holds : Outcome::Fails;
  v.detail = std::string("Hall subgroup found (") + h.strategy + "), structure " + toString(w.structure);
  return v;
}

}  // namespace

TheoremReport TheoremVerifier::theoremB(const std::vector<std::uint64_t>& pi)
{
  auto primes = relevantPrimes(group_.order(), pi);
  return guarded(report("B", primes, "equivalence"), [&](TheoremReport& r) {
    r.criterion = nilpotentHallCriterion(profile(), primes);
    r.oracle = hallOracleVerdict(oracle().hall(primes), false);
    r.agree = r.criterion.holds() == r.oracle.holds();
  });
}

TheoremReport TheoremVerifier::theoremC(const std::vector<std::uint64_t>& pi, const std::optional<BlockDegreeMap>& blocks)
{
  auto primes = relevantPrimes(group_.order(), pi);
  return guarded(report("C", primes, "equivalence"), [&](TheoremReport& r) {
    r.criterion = abelianHallCriterion(profile(), primes, blocks);
    r.oracle = hallOracleVerdict(oracle().hall(primes), true);
    if (r.criterion.outcome == Outcome::Undetermined) {
      r.tested = false;
      r.note = "untested: criterion undetermined without block data";
      return;
    }
    r.agree = r.criterion.holds() == r.oracle.holds();
  });
}

TheoremReport TheoremVerifier::pSolvableNormalization(std::uint64_t p, std::uint64_t q)
{
  return guarded(report("t4.1", {p, q}, "implication"), [&](TheoremReport& r) {
    auto side = divisibleClass(profile(), q, p);
    bool pSolv = qSolvable(p), qSolv = qSolvable(q);
    r.criterion.provenance = Provenance::Criterion;
    r.criterion.conditions = {{s(p) + " divides no " + s(q) + "-element class size", !side},
                              {"G is " + s(p) + "-solvable", pSolv},
                              {"G is " + s(q) + "-solvable", qSolv}};
    r.criterion.offendingClass = side;
    r.criterion.outcome = (!side && (pSolv || qSolv)) ? Outcome::Holds : Outcome::Fails;
    r.applicable = pSolv || qSolv;
    r.oracle = oracle().normalizingSylowPair(p, q);
    r.agree = !r.criterion.holds() || r.oracle.holds();
  });
}

TheoremReport TheoremVerifier::opPrimeCharacterization(std::uint64_t p, std::uint64_t q)
{
  return guarded(report("t4.2", {p, q}, "equivalence"), [&](TheoremReport& r) {
    r.applicable = qSolvable(p);
    r.oracle = oracle().normalizingSylowPair(p, q);
    Subgroup core = opPrimeCore(group_, p);
    BigInt index = group_.order() / core.order();
    r.criterion.provenance = Provenance::Criterion;
    r.criterion.conditions = {{"G is " + s(p) + "-solvable", r.applicable},
                              {s(q) + " does not divide |G:O_" + s(p) + "'(G)|", index % q != 0}};
    r.criterion.outcome = index % q != 0 ? Outcome::Holds : Outcome::Fails;
    r.criterion.subgroups.push_back({"O_p'", core.order(), core.generators()});
    r.criterion.detail = "|G:O_" + s(p) + "'(G)| = " + toString(index);
    if (!r.applicable) {
      r.note = "G is not " + s(p) + "-solvable; the equivalence is not claimed";
      r.agree = true;
      return;
    }
    r.agree = r.criterion.holds() == r.oracle.holds();
  });
}

TheoremReport TheoremVerifier::qSolvabilityFromOddClasses(std::uint64_t q)
{
  if (q == 2 || !isPrime(q)) throw PreconditionError("q must be an odd prime");
  return guarded(report("t4.3", {q}, "implication"), [&](TheoremReport& r) {
    auto even = divisibleClass(profile(), q, 2);
    r.criterion.provenance = Provenance::Criterion;
    r.criterion.conditions = {{"every " + s(q) + "-element class has odd size", !even}};
    r.criterion.offendingClass = even;
    r.criterion.outcome = even ? Outcome::Fails : Outcome::Holds;
    bool solv = qSolvable(q);
    r.oracle = oracle().normalizingSylowPair(2, q);
    r.oracle.conditions.insert(r.oracle.conditions.begin(), {"G is " + s(q) + "-solvable", solv});
    r.oracle.conditions.push_back({"a Sylow 2-subgroup normalizes a Sylow " + s(q) + "-subgroup", r.oracle.holds()});
    if (!solv) r.oracle.outcome = Outcome::Fails;
    r.agree = !r.criterion.holds() || r.oracle.holds();
  });
}

TheoremReport verifyTheoremA(const PermutationGroup& g, std::uint64_t p, std::uint64_t q)
{
  return TheoremVerifier(g).theoremA(p, q);
}

TheoremReport verifyTheoremB(const PermutationGroup& g, const std::vector<std::uint64_t>& pi)
{
  return TheoremVerifier(g).theoremB(pi);
}

TheoremReport verifyTheoremC(const PermutationGroup& g, const std::vector<std::uint64_t>& pi,
                             const std::optional<BlockDegreeMap>& blocks)
{
  return TheoremVerifier(g).theoremC(pi, blocks);
}

TheoremReport verifyPSolvableNormalization(const PermutationGroup& g, std::uint64_t p, std::uint64_t q)
{
  return TheoremVerifier(g).pSolvableNormalization(p, q);
}

TheoremReport verifyOpPrimeCharacterization(const PermutationGroup& g, std::uint64_t p, std::uint64_t q)
{
  return TheoremVerifier(g).opPrimeCharacterization(p, q);
}

TheoremReport verifyQSolvabilityFromOddClasses(const PermutationGroup& g, std::uint64_t q)
{
  return TheoremVerifier(g).qSolvabilityFromOddClasses(q);
}

}  // namespace hallmark
