#include "hallmark/catalog.hpp"

#include <map>
#include <mutex>
#include <regex>

#include "hallmark/embedded_data.hpp"
#include "hallmark/errors.hpp"
#include "hallmark/galois_field.hpp"
#include "hallmark/group_io.hpp"

namespace hallmark {

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

BigInt factorial(unsigned n)
{
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

void checkSmallN(unsigned n, const char* what)
{
  if (n < 1 || n > 12) throw CapacityError(std::string(what) + "(" + str(n) + "): n must lie in 1..12");
}

}  // namespace

PermutationGroup symmetric(unsigned n)
{
  checkSmallN(n, "symmetric");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::fromCycles(n, {{0, 1}}));
    if (n >= 3) {
      std::vector<std::size_t> cyc(n);
      for (unsigned i = 0; i < n; ++i) cyc[i] = i;
      gens.push_back(Permutation::fromCycles(n, {cyc}));
    }
  }
  return PermutationGroup::build(n, std::move(gens), "S" + str(n));
}

PermutationGroup alternating(unsigned n)
{
  checkSmallN(n, "alternating");
  std::vector<Permutation> gens;
  for (unsigned i = 2; i < n; ++i) gens.push_back(Permutation::fromCycles(n, {{0, 1, i}}));
  return PermutationGroup::build(n, std::move(gens), "A" + str(n));
}

PermutationGroup cyclic(unsigned n)
{
  if (n < 1) throw MalformedInput("cyclic(0) is undefined");
  if (n > kMaxDegree) throw CapacityError("cyclic(" + str(n) + "): degree exceeds " + str(kMaxDegree));
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<Point> img(n);
    for (unsigned i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
    gens.emplace_back(std::move(img));
  }
  return PermutationGroup::build(n, std::move(gens), "C" + str(n));
}

PermutationGroup dihedral(unsigned n)
{
  if (n < 3) throw MalformedInput("dihedral(" + str(n) + "): need n >= 3");
  if (n > kMaxDegree) throw CapacityError("dihedral(" + str(n) + "): degree exceeds " + str(kMaxDegree));
  std::vector<Point> rot(n), refl(n);
  for (unsigned i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    refl[i] = static_cast<Point>((n - i) % n);
  }
  return PermutationGroup::build(n, {Permutation(rot), Permutation(refl)}, "D" + str(n));
}

PermutationGroup psl2(unsigned q)
{
  auto [r, e] = primePowerDecomposition(q);
  if (r == 0) throw MalformedInput("psl2(" + str(q) + "): q is not a prime power");
  if (q < 4 || q > 32) throw CapacityError("psl2(" + str(q) + "): q must lie in 4..32");
  GaloisField F(q);
  const std::uint32_t inf = q;
  // Row vector [x y] times [[a b][c d]]: z -> (a z + c) / (b z + d).
  auto moebius = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
    std::vector<Point> img(q + 1);
    for (std::uint32_t z = 0; z <= q; ++z) {
      std::uint32_t num, den;
      if (z == inf) {
        num = a;
        den = b;
      } else {
        num = F.add(F.mul(a, z), c);
        den = F.add(F.mul(b, z), d);
      }
      img[z] = static_cast<Point>(den == 0 ? inf : F.mul(num, F.inv(den)));
    }
    return Permutation(std::move(img));
  };
  std::uint32_t w = F.primitiveElement();
  std::vector<Permutation> gens{moebius(1, 1, 0, 1), moebius(w, 0, 0, F.inv(w)), moebius(0, 1, F.neg(1), 0)};
  return PermutationGroup::build(q + 1, std::move(gens), "PSL(2," + str(q) + ")");
}

PermutationGroup semiAffine(unsigned q, unsigned p)
{
  if (!isPrime(q) || !isPrime(p) || q == p)
    throw MalformedInput("semiAffine(" + str(q) + "," + str(p) + "): need distinct primes");
  BigInt size = ipow(BigInt(q), p);
  if (size > (1u << 14))
    throw CapacityError("semiAffine(" + str(q) + "," + str(p) + "): q^p exceeds 2^14");
  auto n = static_cast<std::uint32_t>(size);
  if (n > kMaxInternalDegree) throw CapacityError("semiAffine degree exceeds " + str(kMaxInternalDegree));
  GaloisField F(n);
  std::uint32_t w = F.primitiveElement();
  std::vector<Point> trans(n), mult(n), frob(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    trans[x] = static_cast<Point>(F.add(x, 1));
    mult[x] = static_cast<Point>(F.mul(w, x));
    frob[x] = static_cast<Point>(F.pow(x, q));
  }
  return PermutationGroup::build(n, {Permutation(trans), Permutation(mult), Permutation(frob)},
                                 "AGammaL(1," + str(q) + "^" + str(p) + ")");
}

PermutationGroup frobenius(unsigned n, unsigned k)
{
  if (n < 2 || k < 1) throw MalformedInput("frobenius(" + str(n) + "," + str(k) + "): need n >= 2, k >= 1");
  if (n > kMaxDegree) throw CapacityError("frobenius(" + str(n) + "," + str(k) + "): degree exceeds " + str(kMaxDegree));
  std::optional<unsigned> unit;
  for (unsigned u = 1; u < n; ++u)
    if (gcd64(u, n) == 1 && multiplicativeOrder(u, n) == k) {
      unit = u;
      break;
    }
  if (!unit)
    throw MalformedInput("frobenius(" + str(n) + "," + str(k) + "): no unit of order " + str(k) + " mod " + str(n));
  std::vector<Point> trans(n), mult(n);
  for (unsigned x = 0; x < n; ++x) {
    trans[x] = static_cast<Point>((x + 1) % n);
    mult[x] = static_cast<Point>(static_cast<std::uint64_t>(x) * *unit % n);
  }
  return PermutationGroup::build(n, {Permutation(trans), Permutation(mult)},
                                 "C" + str(n) + ":C" + str(k));
}

PermutationGroup directProduct(const PermutationGroup& g, const PermutationGroup& h)
{
  std::size_t a = g.degree(), b = h.degree();
  if (a + b > kMaxDegree) throw CapacityError("direct product degree " + str(a + b) + " exceeds " + str(kMaxDegree));
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) {
    std::vector<Point> img(a + b);
    for (std::size_t i = 0; i < a; ++i) img[i] = x(i);
    for (std::size_t i = 0; i < b; ++i) img[a + i] = static_cast<Point>(a + i);
    gens.push_back(Permutation::fromImagesUnchecked(std::move(img)));
  }
  for (const auto& y : h.generators()) {
    std::vector<Point> img(a + b);
    for (std::size_t i = 0; i < a; ++i) img[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < b; ++i) img[a + i] = static_cast<Point>(a + y(i));
    gens.push_back(Permutation::fromImagesUnchecked(std::move(img)));
  }
  return PermutationGroup::build(a + b, std::move(gens), g.name() + "x" + h.name());
}

PermutationGroup shippedGroup(const std::string& stem)
{
  const auto& files = detail::embeddedGroupFiles();
  auto it = files.find(stem);
  if (it == files.end()) throw MalformedInput("no shipped group file named " + stem);
  return parseGroupFile(it->second);
}

PermutationGroup psl3_2() { return shippedGroup("psl3_2"); }
PermutationGroup psl3_3() { return shippedGroup("psl3_3"); }
PermutationGroup j1() { return shippedGroup("j1"); }

namespace {

using Tags = std::set<std::string>;

CatalogEntry entry(std::string name, std::function<PermutationGroup()> builder, BigInt order, Tags tags)
{
  return {std::move(name), std::move(builder), std::move(order), std::move(tags)};
}

std::vector<CatalogEntry> makeCatalog()
{
  const Tags simple{"simple"};
  const Tags solvable{"solvable"};
  std::vector<CatalogEntry> c;
  for (unsigned n : {6u, 12u}) c.push_back(entry("cyclic_" + str(n), [n] { return cyclic(n); }, n, solvable));
  for (unsigned n : {4u, 5u, 6u, 15u})
    c.push_back(entry("dihedral_" + str(n), [n] { return dihedral(n); }, 2 * n, solvable));
  for (auto [n, k] : std::vector<std::pair<unsigned, unsigned>>{{5, 4}, {7, 3}, {7, 6}, {13, 3}, {11, 5}, {19, 9}})
    c.push_back(entry("frobenius_" + str(n) + "_" + str(k), [n, k] { return frobenius(n, k); }, n * k, solvable));
  for (unsigned n : {3u, 4u})
    c.push_back(entry("sym_" + str(n), [n] { return symmetric(n); }, factorial(n), solvable));
  for (unsigned n : {5u, 6u}) c.push_back(entry("sym_" + str(n), [n] { return symmetric(n); }, factorial(n), {}));
  c.push_back(entry("alt_4", [] { return alternating(4); }, 12, solvable));
  for (unsigned n : {5u, 6u, 7u, 8u})
    c.push_back(entry("alt_" + str(n), [n] { return alternating(n); }, factorial(n) / 2, simple));
  for (unsigned q : {4u, 5u, 7u, 8u, 9u, 11u, 13u, 31u}) {
    BigInt order = BigInt(q) * (q * q - 1) / (q % 2 == 0 ? 1 : 2);
    c.push_back(entry("psl2_" + str(q), [q] { return psl2(q); }, order, simple));
  }
  c.push_back(entry("psl3_2", [] { return psl3_2(); }, 168, simple));
  c.push_back(entry("psl3_3", [] { return psl3_3(); }, 5616, simple));
  for (auto [q, p] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 2}, {2, 5}}) {
    BigInt qp = ipow(BigInt(q), p);
    c.push_back(entry("semiaffine_" + str(q) + "_" + str(p), [q, p] { return semiAffine(q, p); },
                      qp * (qp - 1) * p, solvable));
  }
  c.push_back(entry("c3xc5", [] { return directProduct(cyclic(3), cyclic(5)); }, 15, solvable));
  c.push_back(entry("s3xs3", [] { return directProduct(symmetric(3), symmetric(3)); }, 36, solvable));
  c.push_back(entry("a4xc5", [] { return directProduct(alternating(4), cyclic(5)); }, 60, solvable));
  c.push_back(entry("s4xc3", [] { return directProduct(symmetric(4), cyclic(3)); }, 72, solvable));
  c.push_back(entry("a5xc7", [] { return directProduct(alternating(5), cyclic(7)); }, 420, {"p-solvable"}));
  c.push_back(entry("a5xs3", [] { return directProduct(alternating(5), symmetric(3)); }, 360, {}));
  c.push_back(entry("a5xa5", [] { return directProduct(alternating(5), alternating(5)); }, 3600, {}));
  c.push_back(entry("j1", [] { return j1(); }, 175560, {"simple", "sporadic-stretch"}));
  for (auto& e : c) {
    auto build = e.builder;
    auto name = e.name;
    e.builder = [build, name] { return build().renamed(name); };
  }
  return c;
}

unsigned parseParam(const std::string& s)
{
  if (s.size() > 6) throw CapacityError("catalog parameter " + s + " is too large");
  return static_cast<unsigned>(std::stoul(s));
}

}  // namespace

const std::vector<CatalogEntry>& defaultCatalog()
{
  static const std::vector<CatalogEntry> catalog = makeCatalog();
  return catalog;
}

std::optional<CatalogEntry> findCatalogEntry(const std::string& name)
{
  for (const auto& e : defaultCatalog())
    if (e.name == name) return e;
  return std::nullopt;
}

PermutationGroup catalogGroup(const std::string& name)
{
  if (auto e = findCatalogEntry(name)) return e->builder();
  static const std::regex one(R"((sym|alt|cyclic|dihedral|psl2)_(\d+))");
  static const std::regex two(R"((semiaffine|frobenius)_(\d+)_(\d+))");
  std::smatch m;
  PermutationGroup g;
  if (std::regex_match(name, m, one)) {
    unsigned n = parseParam(m[2]);
    const std::string kind = m[1];
    if (kind == "sym")
      g = symmetric(n);
    else if (kind == "alt")
      g = alternating(n);
    else if (kind == "cyclic")
      g = cyclic(n);
    else if (kind == "dihedral")
      g = dihedral(n);
    else
      g = psl2(n);
  } else if (std::regex_match(name, m, two)) {
    unsigned a = parseParam(m[2]), b = parseParam(m[3]);
    g = m[1] == "semiaffine" ? semiAffine(a, b) : frobenius(a, b);
  } else {
    throw MalformedInput("unknown catalog group '" + name + "'");
  }
  return g.renamed(name);
}

}  // namespace hallmark
