#include "hallmark/group.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <mutex>
#include <numeric>

#include "hallmark/errors.hpp"

namespace hallmark {

namespace {

Point smallestMovedPoint(const Permutation& g)
{
  for (std::size_t i = 0; i < g.degree(); ++i)
    if (g(i) != i) return static_cast<Point>(i);
  throw PreconditionError("identity moves no point");
}

bool fixesAll(const Permutation& g, std::span<const Point> points)
{
  return std::all_of(points.begin(), points.end(), [&](Point b) { return g(b) == b; });
}

}  // namespace

std::uint64_t defaultEnumerationCap()
{
  if (const char* env = std::getenv("HALLMARK_CAP_ELEMENTS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultEnumerationCap;
}

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(std::size_t degree, const std::vector<Permutation>& generators) : degree_(degree)
{
  std::vector<Permutation> strong;
  for (const auto& g : generators) {
    if (g.isIdentity()) continue;
    if (std::find(strong.begin(), strong.end(), g) == strong.end()) strong.push_back(g);
  }

  std::vector<Point> base;
  for (const auto& s : strong)
    if (fixesAll(s, base)) base.push_back(smallestMovedPoint(s));

  levels_.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    levels_[i].basePoint = base[i];
    rebuildLevel(i, strong);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    const auto level = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; !extended && oi < levels_[level].orbit.size(); ++oi) {
      for (std::size_t si = 0; !extended && si < levels_[level].generators.size(); ++si) {
        const StabilizerLevel& lvl = levels_[level];
        const Permutation& s = lvl.generators[si];
        Point image = s(lvl.orbit[oi]);
        const Permutation& back = lvl.transversalInverse[static_cast<std::size_t>(lvl.orbitPosition[image])];
        Permutation schreier = lvl.transversal[oi] * s * back;
        if (schreier.isIdentity()) continue;
        auto [residue, reached] = strip(std::move(schreier), level + 1);
        if (reached == levels_.size() && residue.isIdentity()) continue;
        if (reached == levels_.size()) {
          levels_.emplace_back();
          levels_.back().basePoint = smallestMovedPoint(residue);
        }
        strong.push_back(std::move(residue));
        for (std::size_t l = 0; l <= reached; ++l) rebuildLevel(l, strong);
        i = static_cast<std::ptrdiff_t>(reached);
        extended = true;
      }
    }
    if (!extended) --i;
  }
}

void StabilizerChain::rebuildLevel(std::size_t i, const std::vector<Permutation>& strong)
{
  StabilizerLevel& lvl = levels_[i];
  std::vector<Point> prefix;
  for (std::size_t j = 0; j < i; ++j) prefix.push_back(levels_[j].basePoint);

  lvl.generators.clear();
  for (const auto& s : strong)
    if (fixesAll(s, prefix)) lvl.generators.push_back(s);

  lvl.orbit.assign(1, lvl.basePoint);
  lvl.orbitPosition.assign(degree_, -1);
  lvl.orbitPosition[lvl.basePoint] = 0;
  lvl.transversal.assign(1, Permutation::identity(degree_));
  for (std::size_t k = 0; k < lvl.orbit.size(); ++k) {
    for (const auto& s : lvl.generators) {
      Point y = s(lvl.orbit[k]);
      if (lvl.orbitPosition[y] >= 0) continue;
      lvl.orbitPosition[y] = static_cast<std::int32_t>(lvl.orbit.size());
      lvl.orbit.push_back(y);
      lvl.transversal.push_back(lvl.transversal[k] * s);
    }
  }
  lvl.transversalInverse.clear();
  lvl.transversalInverse.reserve(lvl.transversal.size());
  for (const auto& u : lvl.transversal) lvl.transversalInverse.push_back(u.inverse());
}

StabilizerChain::Strip StabilizerChain::strip(Permutation g, std::size_t from) const
{
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const auto& lvl = levels_[l];
    std::int32_t pos = lvl.orbitPosition[g(lvl.basePoint)];
    if (pos < 0) return {std::move(g), l};
    g = g * lvl.transversalInverse[static_cast<std::size_t>(pos)];
  }
  return {std::move(g), levels_.size()};
}

std::vector<Point> StabilizerChain::base() const
{
  std::vector<Point> out;
  for (const auto& l : levels_) out.push_back(l.basePoint);
  return out;
}

std::vector<std::size_t> StabilizerChain::orbitLengths() const
{
  std::vector<std::size_t> out;
  for (const auto& l : levels_) out.push_back(l.orbit.size());
  return out;
}

BigInt StabilizerChain::order() const
{
  BigInt n = 1;
  for (const auto& l : levels_) n *= l.orbit.size();
  return n;
}

bool StabilizerChain::contains(const Permutation& g) const
{
  if (g.degree() != degree_) throw MalformedInput("degree mismatch: element has degree " + std::to_string(g.degree()) +
                                                  ", group has degree " + std::to_string(degree_));
  auto [residue, reached] = strip(g, 0);
  return reached == levels_.size() && residue.isIdentity();
}

std::vector<Point> StabilizerChain::enumerateFlat() const
{
  std::vector<Point> current(degree_);
  std::iota(current.begin(), current.end(), Point{0});
  std::size_t count = 1;
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const auto& trans = levels_[l].transversal;
    std::vector<Point> next(count * trans.size() * degree_);
    Point* out = next.data();
    for (std::size_t x = 0; x < count; ++x) {
      const Point* xs = current.data() + x * degree_;
      for (const auto& u : trans) {
        for (std::size_t i = 0; i < degree_; ++i) out[i] = u(xs[i]);
        out += degree_;
      }
    }
    count *= trans.size();
    current = std::move(next);
  }
  return current;
}

// ---------------------------------------------------------------------------
// ElementList

ElementList::ElementList(std::size_t degree, std::vector<Point> sortedFlat)
    : degree_(degree), size_(degree ? sortedFlat.size() / degree : 1), flat_(std::move(sortedFlat))
{
  std::size_t capacity = 16;
  while (capacity < 2 * size_) capacity <<= 1;
  slots_.assign(capacity, UINT32_MAX);
  mask_ = capacity - 1;
  for (std::uint32_t i = 0; i < size_; ++i) {
    std::uint64_t h = hashPoints(images(i)) & mask_;
    while (slots_[h] != UINT32_MAX) h = (h + 1) & mask_;
    slots_[h] = i;
  }
  inverse_.resize(size_);
  std::vector<Point> inv(degree_);
  for (std::uint32_t i = 0; i < size_; ++i) {
    auto img = images(i);
    for (std::size_t k = 0; k < degree_; ++k) inv[img[k]] = static_cast<Point>(k);
    inverse_[i] = *find(inv);
  }
}

Permutation ElementList::at(std::uint32_t index) const
{
  auto img = images(index);
  return Permutation::fromImagesUnchecked(std::vector<Point>(img.begin(), img.end()));
}

std::optional<std::uint32_t> ElementList::find(std::span<const Point> imgs) const
{
  if (imgs.size() != degree_) return std::nullopt;
  std::uint64_t h = hashPoints(imgs) & mask_;
  while (slots_[h] != UINT32_MAX) {
    auto cand = images(slots_[h]);
    if (std::equal(cand.begin(), cand.end(), imgs.begin())) return slots_[h];
    h = (h + 1) & mask_;
  }
  return std::nullopt;
}

std::uint32_t ElementList::indexOf(const Permutation& p) const
{
  auto idx = find(p);
  if (!idx) throw PreconditionError("permutation " + p.cycleString() + " is not an element of the group");
  return *idx;
}

std::uint32_t ElementList::multiply(std::uint32_t a, std::uint32_t b) const
{
  std::array<Point, kMaxInternalDegree> buf;
  auto x = images(a);
  auto y = images(b);
  for (std::size_t i = 0; i < degree_; ++i) buf[i] = y[x[i]];
  return *find(std::span<const Point>(buf.data(), degree_));
}

std::uint32_t ElementList::conjugate(std::uint32_t x, std::uint32_t g) const
{
  std::array<Point, kMaxInternalDegree> buf;
  auto gi = images(inverse_[g]);
  auto xs = images(x);
  auto gs = images(g);
  for (std::size_t i = 0; i < degree_; ++i) buf[i] = gs[xs[gi[i]]];
  return *find(std::span<const Point>(buf.data(), degree_));
}

std::uint64_t ElementList::elementOrder(std::uint32_t index) const { return at(index).order(); }

// ---------------------------------------------------------------------------
// PermutationGroup

struct PermutationGroup::Data {
  std::size_t degree = 0;
  std::string name;
  std::vector<Permutation> generators;
  StabilizerChain chain;
  BigInt order = 1;
  mutable std::once_flag once;
  mutable std::shared_ptr<const ElementList> elements;
};

PermutationGroup::PermutationGroup() : data_(std::make_shared<Data>()) {}

PermutationGroup::PermutationGroup(std::shared_ptr<Data> data) : data_(std::move(data)) {}

PermutationGroup PermutationGroup::build(std::size_t degree, std::vector<Permutation> generators, std::string name)
{
  if (degree == 0 && !generators.empty()) throw MalformedInput("degree 0 with a nonempty generating set");
  if (degree > kMaxInternalDegree) throw CapacityError("degree " + std::to_string(degree) + " exceeds the cap");
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].degree() != degree)
      throw MalformedInput("generator " + std::to_string(i) + " has degree " + std::to_string(generators[i].degree()) +
                           ", expected " + std::to_string(degree));
  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->name = std::move(name);
  data->chain = StabilizerChain(degree, generators);
  data->order = data->chain.order();
  data->generators = std::move(generators);
  return PermutationGroup(std::move(data));
}

std::size_t PermutationGroup::degree() const noexcept { return data_->degree; }
const std::string& PermutationGroup::name() const noexcept { return data_->name; }
const std::vector<Permutation>& PermutationGroup::generators() const noexcept { return data_->generators; }
const StabilizerChain& PermutationGroup::chain() const noexcept { return data_->chain; }
const BigInt& PermutationGroup::order() const noexcept { return data_->order; }

bool PermutationGroup::contains(const Permutation& g) const
{
  if (g.degree() != data_->degree)
    throw MalformedInput("degree mismatch: element has degree " + std::to_string(g.degree()) +
                         ", group has degree " + std::to_string(data_->degree));
  if (data_->degree == 0) return true;
  return data_->chain.contains(g);
}

const ElementList& PermutationGroup::elements(std::uint64_t cap) const
{
  if (data_->order > cap)
    throw CapacityError("group order " + data_->order.str() + " exceeds the enumeration cap " + std::to_string(cap));
  std::call_once(data_->once, [this] {
    std::size_t deg = data_->degree;
    std::vector<Point> flat = data_->chain.enumerateFlat();
    std::size_t n = deg ? flat.size() / deg : 1;
    std::vector<std::uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
      return std::lexicographical_compare(flat.begin() + a * deg, flat.begin() + (a + 1) * deg, flat.begin() + b * deg,
                                          flat.begin() + (b + 1) * deg);
    });
    std::vector<Point> sorted(flat.size());
    for (std::size_t k = 0; k < n; ++k)
      std::copy_n(flat.begin() + idx[k] * deg, deg, sorted.begin() + k * deg);
    data_->elements = std::make_shared<const ElementList>(deg, std::move(sorted));
  });
  return *data_->elements;
}

PermutationGroup PermutationGroup::renamed(std::string name) const
{
  auto data = std::make_shared<Data>();
  data->degree = data_->degree;
  data->name = std::move(name);
  data->generators = data_->generators;
  data->chain = data_->chain;
  data->order = data_->order;
  return PermutationGroup(std::move(data));
}

// ---------------------------------------------------------------------------
// Subgroup and free operations

Subgroup::Subgroup(PermutationGroup parent, std::vector<Permutation> generators) : parent_(std::move(parent))
{
  for (const auto& g : generators)
    if (!parent_.contains(g))
      throw PreconditionError("generator " + g.cycleString() + " is not a member of the parent group");
  group_ = PermutationGroup::build(parent_.degree(), std::move(generators));
}

Subgroup Subgroup::trivial(const PermutationGroup& parent) { return Subgroup(parent, {}); }

Subgroup Subgroup::whole(const PermutationGroup& parent) { return Subgroup(parent, parent.generators()); }

PermutationGroup buildGroup(std::size_t degree, std::vector<Permutation> generators)
{
  if (degree > kMaxDegree)
    throw CapacityError("degree " + std::to_string(degree) + " exceeds the cap of " + std::to_string(kMaxDegree));
  return PermutationGroup::build(degree, std::move(generators));
}

bool isMember(const PermutationGroup& group, const Permutation& g) { return group.contains(g); }

std::vector<Permutation> enumerateElements(const PermutationGroup& group, std::uint64_t cap)
{
  const ElementList& list = group.elements(cap);
  std::vector<Permutation> out;
  out.reserve(list.size());
  for (std::uint32_t i = 0; i < list.size(); ++i) out.push_back(list.at(i));
  return out;
}

bool isNormal(const Subgroup& sub)
{
  for (const auto& n : sub.generators())
    for (const auto& g : sub.parent().generators())
      if (!sub.contains(conjugate(n, g))) return false;
  return true;
}

Subgroup normalClosure(const PermutationGroup& group, const std::vector<Permutation>& seeds)
{
  std::vector<Permutation> gens;
  for (const auto& s : seeds) {
    if (!group.contains(s)) throw PreconditionError("seed " + s.cycleString() + " is not a member of the group");
    if (!s.isIdentity()) gens.push_back(s);
  }
  PermutationGroup closure = PermutationGroup::build(group.degree(), gens);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < gens.size() && !changed; ++i) {
      for (const auto& g : group.generators()) {
        Permutation c = conjugate(gens[i], g);
        if (closure.contains(c)) continue;
        gens.push_back(std::move(c));
        closure = PermutationGroup::build(group.degree(), gens);
        changed = true;
        break;
      }
    }
  }
  return Subgroup(group, std::move(gens));
}

PermutationGroup cosetActionQuotient(const PermutationGroup& group, const Subgroup& normal, std::uint64_t quotientCap)
{
  if (normal.parent().degree() != group.degree()) throw PreconditionError("subgroup belongs to a different group");
  for (const auto& n : normal.generators())
    if (!group.contains(n)) throw PreconditionError("subgroup generator is not a member of the group");
  for (const auto& n : normal.generators())
    for (const auto& g : group.generators())
      if (!normal.contains(conjugate(n, g)))
        throw PreconditionError("subgroup is not normal: conjugate of " + n.cycleString() + " by " + g.cycleString() +
                                " leaves it");
  BigInt index = group.order() / normal.order();
  if (index > quotientCap)
    throw CapacityError("quotient has " + index.str() + " cosets, above the cap of " + std::to_string(quotientCap));

  const ElementList& elems = group.elements();
  const ElementList& sub = normal.group().elements();
  std::vector<std::uint32_t> members;
  members.reserve(sub.size());
  for (std::uint32_t i = 0; i < sub.size(); ++i) members.push_back(*elems.find(sub.images(i)));

  std::vector<std::int32_t> label(elems.size(), -1);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t g = 0; g < elems.size(); ++g) {
    if (label[g] >= 0) continue;
    auto c = static_cast<std::int32_t>(reps.size());
    reps.push_back(g);
    for (auto n : members) label[elems.multiply(n, g)] = c;
  }

  std::vector<Permutation> gens;
  for (const auto& x : group.generators()) {
    std::uint32_t xi = elems.indexOf(x);
    std::vector<Point> images(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      images[c] = static_cast<Point>(label[elems.multiply(reps[c], xi)]);
    gens.push_back(Permutation::fromImagesUnchecked(std::move(images)));
  }
  std::string name = group.name().empty() ? std::string() : group.name() + "/N";
  return PermutationGroup::build(reps.size(), std::move(gens), std::move(name));
}

Subgroup derivedSubgroup(const PermutationGroup& group)
{
  std::vector<Permutation> seeds;
  const auto& gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(commutator(gens[i], gens[j]));
  return normalClosure(group, seeds);
}

}  // namespace hallmark
