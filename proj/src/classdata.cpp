#include "hallmark/classdata.hpp"

#include "hallmark/errors.hpp"

namespace hallmark {

std::vector<std::uint64_t> ClassProfile::primes() const { return primeDivisors(groupOrder); }

std::vector<std::size_t> pElements(const ClassProfile& profile, std::uint64_t p)
{
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < profile.classes.size(); ++i)
    if (isPositivePowerOf(profile.classes[i].elementOrder, p)) out.push_back(i);
  return out;
}

namespace {

std::vector<std::uint32_t> generatorIndices(const PermutationGroup& g, const ElementList& els)
{
  std::vector<std::uint32_t> idx;
  for (const auto& s : g.generators())
    if (!s.isIdentity()) idx.push_back(els.indexOf(s));
  return idx;
}

}  // namespace

ClassTable::ClassTable(PermutationGroup group, std::uint64_t cap) : group_(std::move(group))
{
  const ElementList& els = group_.elements(cap);
  auto gens = generatorIndices(group_, els);
  constexpr std::uint32_t unset = ~0u;
  classOf_.assign(els.size(), unset);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t i = 0; i < els.size(); ++i) {
    if (classOf_[i] != unset) continue;
    auto cls = static_cast<std::uint32_t>(classes_.size());
    classOf_[i] = cls;
    queue.assign(1, i);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (auto s : gens) {
        auto y = els.conjugate(queue[head], s);
        if (classOf_[y] == unset) {
          classOf_[y] = cls;
          queue.push_back(y);
        }
      }
    classes_.push_back({els.at(i), i, BigInt(queue.size()), els.elementOrder(i)});
  }
}

std::uint32_t ClassTable::classOf(const Permutation& g) const
{
  return classOf_[group_.elements().indexOf(g)];
}

std::vector<std::uint32_t> ClassTable::powerMap(std::int64_t k) const
{
  std::vector<std::uint32_t> out;
  out.reserve(classes_.size());
  for (const auto& c : classes_) out.push_back(classOf(c.representative.pow(k)));
  return out;
}

BigInt ClassTable::centralizerOrder(std::size_t classIndex) const
{
  return group_.order() / classes_.at(classIndex).size;
}

ClassProfile ClassTable::profile() const
{
  ClassProfile p;
  p.groupOrder = group_.order();
  for (std::size_t i = 0; i < classes_.size(); ++i)
    p.classes.push_back({std::to_string(classes_[i].elementOrder) + "_" + std::to_string(i), classes_[i].size,
                         classes_[i].elementOrder});
  return p;
}

ClassTable classTable(const PermutationGroup& group) { return ClassTable(group); }

BigInt centralizerOrder(const PermutationGroup& group, const Permutation& x)
{
  if (!isMember(group, x)) throw PreconditionError("centralizerOrder: element " + x.cycleString() + " is not in the group");
  const ElementList& els = group.elements();
  auto gens = generatorIndices(group, els);
  std::vector<bool> seen(els.size(), false);
  std::vector<std::uint32_t> orbit{els.indexOf(x)};
  seen[orbit[0]] = true;
  for (std::size_t head = 0; head < orbit.size(); ++head)
    for (auto s : gens) {
      auto y = els.conjugate(orbit[head], s);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  return group.order() / orbit.size();
}

Permutation pPart(const Permutation& x, std::uint64_t p)
{
  std::uint64_t n = x.order();
  std::uint64_t pa = 1;
  while (n % (pa * p) == 0) pa *= p;
  std::uint64_t m = n / pa;
  if (pa == 1) return Permutation::identity(x.degree());
  if (m == 1) return x;
  // t = m^-1 mod p^a
  std::uint64_t t = 1;
  while ((m % pa) * t % pa != 1) ++t;
  return x.pow(static_cast<std::int64_t>((m * t) % n));
}

Permutation pPrimePart(const Permutation& x, std::uint64_t p) { return pPart(x, p).inverse() * x; }

}  // namespace hallmark
