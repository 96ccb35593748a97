#include "hallmark/lieorders.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "hallmark/embedded_data.hpp"
#include "hallmark/errors.hpp"
#include "hallmark/group_io.hpp"

namespace hallmark {

namespace {

std::string s(std::uint64_t v) { return std::to_string(v); }

BigInt pw(const BigInt& q, std::uint64_t e) { return ipow(q, static_cast<unsigned>(e)); }

BigInt glOrder(std::uint64_t n, const BigInt& q)
{
  BigInt out = pw(q, n * (n - (n > 0)) / 2);
  for (std::uint64_t j = 1; j <= n; ++j) out *= pw(q, j) - 1;
  return out;
}

BigInt guOrder(std::uint64_t n, const BigInt& q)
{
  BigInt out = pw(q, n * (n - (n > 0)) / 2);
  for (std::uint64_t j = 1; j <= n; ++j) out *= pw(q, j) - (j % 2 ? -1 : 1);
  return out;
}

BigInt spOrder(std::uint64_t n, const BigInt& q)
{
  BigInt out = pw(q, n * n);
  for (std::uint64_t j = 1; j <= n; ++j) out *= pw(q, 2 * j) - 1;
  return out;
}

BigInt soEvenOrder(std::uint64_t n, int eps, const BigInt& q)
{
  if (n == 0) {
    if (eps < 0) throw PreconditionError("SO^-_0 does not exist");
    return 1;
  }
  BigInt out = pw(q, n * (n - 1)) * (pw(q, n) - eps);
  for (std::uint64_t j = 1; j < n; ++j) out *= pw(q, 2 * j) - 1;
  return out;
}

/// |Cl^eps_dim(q)|: Sp ignores eps; odd-dimensional SO ignores eps.
BigInt clOrder(bool symplectic, int eps, std::uint64_t dim, const BigInt& q)
{
  if (symplectic) return spOrder(dim / 2, q);
  if (dim % 2) return spOrder((dim - 1) / 2, q);
  return soEvenOrder(dim / 2, eps, q);
}

BigInt prodMinusOne(std::uint64_t from, std::uint64_t to, std::uint64_t step, const BigInt& q)
{
  BigInt out = 1;
  for (std::uint64_t j = from; j <= to; ++j) out *= pw(q, step * j) - 1;
  return out;
}

BigInt prodUnitary(std::uint64_t from, std::uint64_t to, const BigInt& q)
{
  BigInt out = 1;
  for (std::uint64_t j = from; j <= to; ++j) out *= pw(q, j) - (j % 2 ? -1 : 1);
  return out;
}

void checkQ(std::uint64_t q)
{
  if (q < 2 || primePowerDecomposition(q).first == 0)
    throw MalformedInput("q = " + s(q) + " is not a prime power");
}

void checkOddPrime(std::uint64_t r, std::uint64_t q, const char* name)
{
  if (r < 3 || !isPrime(r)) throw PreconditionError(std::string(name) + " = " + s(r) + " must be an odd prime");
  if (q % r == 0) throw PreconditionError(std::string(name) + " = " + s(r) + " divides q = " + s(q));
}

/// Largest m with base * r^m <= n; returns {m, base * r^m}.
std::pair<std::uint64_t, std::uint64_t> chooseM(std::uint64_t base, std::uint64_t n, std::uint64_t r)
{
  std::uint64_t m = 0, kappa = base;
  while (kappa * r <= n) {
    kappa *= r;
    ++m;
  }
  return {m, kappa};
}

void finish(ClassSizeExpression& e, const BigInt& num, const BigInt& den)
{
  if (den == 0 || num % den != 0)
    throw Error("class size for " + e.proposition + " is not integral: " + toString(num) + " / " + toString(den));
  e.value = num / den;
  e.divisorHolds = e.divisor != 0 && e.value % e.divisor == 0;
  e.dividesAmbient = e.value > 0 && e.ambientOrder % e.value == 0;
}

ClassSizeExpression start(std::string tag, Family f, unsigned n, std::uint64_t q, std::uint64_t r)
{
  ClassSizeExpression e;
  e.proposition = std::move(tag);
  e.family = f;
  e.n = n;
  e.q = q;
  e.r = r;
  return e;
}

bool isClassical(Family f) { return f != Family::GL && f != Family::GU; }

int familySign(Family f) { return f == Family::SOminus ? -1 : 1; }

std::uint64_t dimension(Family f, unsigned n)
{
  if (f == Family::SOodd) return 2ull * n + 1;
  if (f == Family::GL || f == Family::GU) return n;
  return 2ull * n;
}

const char* groupName(Family f)
{
  switch (f) {
    case Family::GL: return "GL";
    case Family::GU: return "GU";
    case Family::Sp: return "Sp";
    default: return "SO";
  }
}

}  // namespace

const char* toString(Family f) noexcept
{
  switch (f) {
    case Family::GL: return "GL";
    case Family::GU: return "GU";
    case Family::Sp: return "Sp";
    case Family::SOodd: return "SOodd";
    case Family::SOplus: return "SOplus";
    case Family::SOminus: return "SOminus";
  }
  return "?";
}

Family parseFamily(const std::string& name)
{
  std::string lower;
  for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (Family f : {Family::GL, Family::GU, Family::Sp, Family::SOodd, Family::SOplus, Family::SOminus}) {
    std::string candidate;
    for (const char* c = toString(f); *c; ++c) candidate += static_cast<char>(std::tolower(static_cast<unsigned char>(*c)));
    if (candidate == lower) return f;
  }
  throw MalformedInput("unknown family '" + name + "' (expected GL, GU, Sp, SOodd, SOplus or SOminus)");
}

BigInt groupOrder(Family family, unsigned n, std::uint64_t q)
{
  checkQ(q);
  if (n < 1) throw MalformedInput(std::string(toString(family)) + " needs rank n >= 1");
  const BigInt Q = q;
  switch (family) {
    case Family::GL: return glOrder(n, Q);
    case Family::GU: return guOrder(n, Q);
    case Family::Sp:
    case Family::SOodd: return spOrder(n, Q);
    case Family::SOplus: return soEvenOrder(n, 1, Q);
    case Family::SOminus: return soEvenOrder(n, -1, Q);
  }
  throw MalformedInput("unknown family");
}

BigInt simpleCoverOrder(Family family, unsigned n, std::uint64_t q)
{
  BigInt out = groupOrder(family, n, q);
  if (family == Family::GL) return out / (q - 1);
  if (family == Family::GU) return out / (q + 1);
  return out;
}

std::uint64_t ordMod(std::uint64_t r, std::uint64_t q)
{
  if (!isPrime(r)) throw PreconditionError(s(r) + " is not prime");
  if (q % r == 0) throw PreconditionError(s(r) + " divides " + s(q));
  return multiplicativeOrder(q % r, r);
}

std::uint64_t ordModNeg(std::uint64_t r, std::uint64_t q)
{
  if (!isPrime(r)) throw PreconditionError(s(r) + " is not prime");
  if (q % r == 0) throw PreconditionError(s(r) + " divides " + s(q));
  return multiplicativeOrder((r - q % r) % r, r);
}

bool isPrimitivePrimeDivisor(std::uint64_t r, std::uint64_t q, std::uint64_t k)
{
  return k >= 1 && isPrime(r) && q % r != 0 && ordMod(r, q) == k;
}

std::int64_t ClassSizeExpression::parameter(const std::string& name) const
{
  for (const auto& [key, v] : parameters)
    if (key == name) return v;
  throw PreconditionError("no parameter " + name + " in " + proposition);
}

ClassSizeExpression classSizeSL(unsigned n, std::uint64_t q, std::uint64_t r, const std::string& caseTag)
{
  checkQ(q);
  checkOddPrime(r, q, "r");
  if (n < 1) throw MalformedInput("n must be >= 1");
  const BigInt Q = q;
  const std::uint64_t k = ordMod(r, q);
  auto e = start("sl(" + caseTag + ")", Family::GL, n, q, r);
  e.ambientOrder = glOrder(n, Q) / (Q - 1);
  if (caseTag == "a") {
    if (k < 2) throw PreconditionError("case a needs k = ord_r(q) >= 2, but r divides q - 1");
    if (k > n) throw PreconditionError("k = ord_r(q) = " + s(k) + " exceeds n = " + s(n));
    auto [m, kappa] = chooseM(k, n, r);
    e.parameters = {{"k", k}, {"m", m}, {"kappa", kappa}};
    e.divisor = prodMinusOne(1, kappa - 1, 1, Q);
    finish(e, glOrder(n, Q), (pw(Q, kappa) - 1) * glOrder(n - kappa, Q));
  } else if (caseTag == "b") {
    if (k != 1) throw PreconditionError("case b needs r | q - 1");
    if (n < r + 1) throw PreconditionError("case b needs n >= r + 1");
    e.parameters = {{"k", 1}};
    e.divisor = prodMinusOne(2, r - 1, 1, Q) * (pw(Q, r + 1) - 1);
    finish(e, glOrder(n, Q) / (Q - 1), (pw(Q, r) - 1) * glOrder(n - r - 1, Q));
  } else {
    throw PreconditionError("unknown case '" + caseTag + "' for SL (expected a or b)");
  }
  return e;
}

ClassSizeExpression classSizeSU(unsigned n, std::uint64_t q, std::uint64_t r, const std::string& caseTag)
{
  checkQ(q);
  checkOddPrime(r, q, "r");
  if (n < 1) throw MalformedInput("n must be >= 1");
  const BigInt Q = q;
  const std::uint64_t k = ordModNeg(r, q);
  std::string tag = caseTag;
  if (tag.empty()) tag = k == 1 ? "a2" : (k % 2 ? "a1" : "b");
  auto e = start("su(" + tag + ")", Family::GU, n, q, r);
  e.ambientOrder = guOrder(n, Q) / (Q + 1);
  if (tag == "a1") {
    if (k % 2 == 0 || k < 3) throw PreconditionError("case a1 needs k = ord_r(-q) odd and >= 3");
    if (k > n) throw PreconditionError("k = ord_r(-q) = " + s(k) + " exceeds n = " + s(n));
    auto [m, kappa] = chooseM(k, n, r);
    e.parameters = {{"k", k}, {"m", m}, {"kappa", kappa}};
    e.divisor = prodUnitary(1, kappa - 1, Q);
    finish(e, guOrder(n, Q), (pw(Q, kappa) + 1) * guOrder(n - kappa, Q));
  } else if (tag == "a2") {
    if (k != 1) throw PreconditionError("case a2 needs r | q + 1");
    if (n < r + 1) throw PreconditionError("case a2 needs n >= r + 1");
    e.parameters = {{"k", 1}};
    e.divisor = prodUnitary(2, r - 1, Q) * (pw(Q, r + 1) - 1);
    finish(e, guOrder(n, Q) / (Q + 1), (pw(Q, r) + 1) * guOrder(n - r - 1, Q));
  } else if (tag == "b") {
    if (k % 2) throw PreconditionError("case b needs k = ord_r(-q) even");
    if (k > n) throw PreconditionError("k = ord_r(-q) = " + s(k) + " exceeds n = " + s(n));
    // m is taken with k r^m <= n so that the 2 kappa block fits inside n.
    auto [m, span] = chooseM(k, n, r);
    const std::uint64_t kappa = span / 2;
    e.parameters = {{"k", k}, {"k1", k / 2}, {"m", m}, {"kappa", kappa}};
    e.divisor = prodUnitary(1, 2 * kappa - 1, Q);
    finish(e, guOrder(n, Q), (pw(Q, 2 * kappa) - 1) * guOrder(n - 2 * kappa, Q));
  } else {
    throw PreconditionError("unknown case '" + caseTag + "' for SU (expected a1, a2 or b)");
  }
  return e;
}

ClassSizeExpression classSizeClassical(Family family, unsigned n, std::uint64_t q, std::uint64_t r,
                                       const std::string& caseTag)
{
  if (!isClassical(family)) throw PreconditionError("classSizeClassical needs Sp or an SO family");
  checkQ(q);
  checkOddPrime(r, q, "r");
  if (n < 1) throw MalformedInput("n must be >= 1");
  const BigInt Q = q;
  const bool sp = family == Family::Sp;
  const int eps = familySign(family);
  const std::uint64_t d = dimension(family, n);
  const std::uint64_t k = ordMod(r, q);
  const BigInt ambient = groupOrder(family, n, q);
  if (ambient % r != 0) throw PreconditionError("r = " + s(r) + " does not divide |G|");

  std::string tag = caseTag;
  if (tag.empty()) {
    if (k % 2) {
      auto kappa = chooseM(k, n, r).second;
      tag = (family == Family::SOminus && kappa == n) ? "a3" : "a2";
    } else {
      auto kappa = chooseM(k / 2, n, r).second;
      tag = (family == Family::SOplus && kappa == n) ? "b4" : "b2";
    }
  }
  auto e = start("clas(" + tag + ")", family, n, q, r);
  e.ambientOrder = ambient;

  if (tag == "a2" || tag == "a3") {
    if (k % 2 == 0) throw PreconditionError("case " + tag + " needs k = ord_r(q) odd");
    if (k > n) throw PreconditionError("k = ord_r(q) = " + s(k) + " exceeds n = " + s(n));
    auto [m, kappa] = chooseM(k, n, r);
    if (tag == "a2") {
      if (family == Family::SOminus && kappa == n) throw PreconditionError("case a2 needs G != SO^-_{2 kappa}(q)");
      e.parameters = {{"k", k}, {"m", m}, {"kappa", kappa}};
      e.divisor = prodMinusOne(1, kappa - 1, 2, Q);
      finish(e, clOrder(sp, eps, d, Q), (pw(Q, kappa) - 1) * clOrder(sp, eps, d - 2 * kappa, Q));
    } else {
      if (family != Family::SOminus || kappa != n) throw PreconditionError("case a3 needs G = SO^-_{2 kappa}(q)");
      if (m < 1) throw PreconditionError("case a3 needs m >= 1");
      const std::uint64_t kappa1 = kappa / r;
      e.parameters = {{"k", k}, {"m", m}, {"kappa", kappa}, {"kappa1", kappa1}};
      e.divisor = prodMinusOne(1, kappa1 - 1, 2, Q);
      finish(e, soEvenOrder(n, -1, Q), (pw(Q, kappa1) - 1) * soEvenOrder(n - kappa1, -1, Q));
    }
    return e;
  }

  if (k % 2) throw PreconditionError("case " + tag + " needs k = ord_r(q) even");
  const std::uint64_t k1 = k / 2;
  if (k1 > n) throw PreconditionError("k/2 = " + s(k1) + " exceeds n = " + s(n));
  auto [m, kappa] = chooseM(k1, n, r);
  if (tag == "b2") {
    if (family == Family::SOplus && kappa == n) throw PreconditionError("case b2 needs G != SO^+_{2 kappa}(q)");
    e.parameters = {{"k", k}, {"k1", k1}, {"m", m}, {"kappa", kappa}};
    e.divisor = prodMinusOne(1, kappa - 1, 2, Q);
    finish(e, clOrder(sp, eps, d, Q), (pw(Q, kappa) + 1) * clOrder(sp, -eps, d - 2 * kappa, Q));
  } else if (tag == "b3") {
    if (m != 0) throw PreconditionError("case b3 needs n/k_1 < r");
    const std::uint64_t a = n / k1;
    const int alpha = a % 2 ? -1 : 1;
    if ((family == Family::SOplus || family == Family::SOminus) && eps == -alpha && n == a * k1)
      throw PreconditionError("case b3 needs G != SO^{-alpha}_{2 a kappa}(q)");
    const BigInt gu = guOrder(a, pw(Q, k1));
    const BigInt sub = clOrder(sp, alpha, 2 * a * k1, Q);
    if (sub % gu != 0) throw Error("GU_a(q^kappa) does not divide Cl^alpha_{2 a kappa}(q)");
    e.parameters = {{"k", k}, {"k1", k1}, {"m", 0}, {"kappa", k1}, {"a", a}, {"alpha", alpha}};
    e.divisor = sub / gu;
    finish(e, clOrder(sp, eps, d, Q), gu * clOrder(sp, alpha * eps, d - 2 * a * k1, Q));
  } else if (tag == "b4") {
    if (family != Family::SOplus || kappa != n) throw PreconditionError("case b4 needs G = SO^+_{2 kappa}(q)");
    if (m < 1) throw PreconditionError("case b4 needs m >= 1");
    const std::uint64_t kappa1 = kappa / r;
    const BigInt gu = guOrder(r - 1, pw(Q, kappa1));
    const BigInt sub = soEvenOrder(kappa1 * (r - 1), 1, Q);
    if (sub % gu != 0) throw Error("GU_{r-1}(q^kappa1) does not divide SO^+_{2 kappa1 (r-1)}(q)");
    e.parameters = {{"k", k}, {"k1", k1}, {"m", m}, {"kappa", kappa}, {"kappa1", kappa1}};
    e.divisor = sub / gu;
    finish(e, soEvenOrder(kappa1 * r, 1, Q), gu * soEvenOrder(kappa1, 1, Q));
  } else {
    throw PreconditionError("unknown case '" + caseTag + "' (expected a2, a3, b2, b3 or b4)");
  }
  return e;
}

ClassSizeExpression classSizeSp(unsigned n, std::uint64_t q, std::uint64_t r, const std::string& caseTag)
{
  return classSizeClassical(Family::Sp, n, q, r, caseTag);
}

ClassSizeExpression classSizeSO(unsigned d, int eps, std::uint64_t q, std::uint64_t r, const std::string& caseTag)
{
  if (d % 2) return classSizeClassical(Family::SOodd, (d - 1) / 2, q, r, caseTag);
  if (eps != 1 && eps != -1) throw PreconditionError("eps must be +1 or -1");
  return classSizeClassical(eps > 0 ? Family::SOplus : Family::SOminus, d / 2, q, r, caseTag);
}

DivisibilityReport verifySection2Divisibility(Family family, unsigned n, std::uint64_t q, std::uint64_t r,
                                              std::uint64_t s)
{
  checkQ(q);
  checkOddPrime(r, q, "r");
  checkOddPrime(s, q, "s");
  if (r == s) throw PreconditionError("r and s must be distinct");
  if (n < 1) throw MalformedInput("n must be >= 1");
  DivisibilityReport rep;
  rep.family = family;
  rep.n = n;
  rep.q = q;
  auto ord = [&](std::uint64_t p) { return family == Family::GU ? ordModNeg(p, q) : ordMod(p, q); };
  rep.k = ord(r);
  rep.l = ord(s);
  if (rep.k < rep.l) {
    std::swap(r, s);
    std::swap(rep.k, rep.l);
    rep.swapped = true;
  }
  rep.r = r;
  rep.s = s;
  const std::uint64_t k = rep.k, l = rep.l;

  BigInt order = simpleCoverOrder(family, n, q);
  if (order % r != 0 || order % s != 0) {
    rep.vacuous = true;
    rep.note = (order % r != 0 ? "r" : "s") + std::string(" does not divide |G|");
    return rep;
  }

  try {
    if (family == Family::GL) {
      if (k >= 2) rep.element = classSizeSL(n, q, r, "a");
      else if (n >= r + 1) rep.element = classSizeSL(n, q, r, "b");
    } else if (family == Family::GU) {
      if (k != 1 || n >= r + 1) rep.element = classSizeSU(n, q, r);
    } else {
      rep.element = classSizeClassical(family, n, q, r);
    }
  } catch (const PreconditionError& e) {
    rep.note = e.what();
  }
  if (!rep.element && rep.note.empty()) rep.note = "no r-element construction applies (k = 1 and n <= r)";

  if (rep.element) {
    const auto& el = *rep.element;
    rep.sDividesClass = el.value % s == 0;
    const auto& tag = el.proposition;
    auto m = static_cast<std::uint64_t>(el.parameter("k") == 1 ? 0 : el.parameter("m"));
    if (tag == "sl(b)" || tag == "su(a2)") {
      rep.claim = "contradiction: s divides |g^G|";
      rep.claimHolds = false;
    } else if (tag == "clas(a3)") {
      rep.claim = "k = l and m = 1";
      rep.claimHolds = k == l && m == 1;
    } else if (tag == "clas(b2)") {
      rep.claim = "m = 0 and k/2 <= l <= k";
      rep.claimHolds = m == 0 && k / 2 <= l && l <= k;
    } else if (tag == "clas(b4)") {
      rep.claim = "m = 1 and kappa_1 divides l";
      rep.claimHolds = m == 1 && l % static_cast<std::uint64_t>(el.parameter("kappa1")) == 0;
    } else {
      rep.claim = "k = l and m = 0";
      rep.claimHolds = k == l && m == 0;
    }
    rep.consistent = rep.sDividesClass || rep.claimHolds;
  }

  const std::uint64_t minrs = std::min(r, s);
  const bool evenClassical = isClassical(family) && k % 2 == 0;
  const std::uint64_t unit = evenClassical ? k / 2 : k;
  rep.torusChain = k == l && n < unit * minrs;
  if (rep.torusChain) {
    const std::uint64_t c = n / unit;
    std::ostringstream os;
    const std::string G = groupName(family);
    if (family == Family::GL) {
      os << "GL_" << n << "(q) >= GL_" << k << "(q)^" << c << " >= GL_1(q^" << k << ")^" << c;
    } else if (family == Family::GU) {
      if (k % 2)
        os << "GU_" << n << "(q) >= GU_" << k << "(q)^" << c << " >= GU_1(q^" << k << ")^" << c;
      else
        os << "GU_" << n << "(q) >= GU_" << k << "(q)^" << c << " > GL_" << k / 2 << "(q^2)^" << c << " >= GL_1(q^"
           << k << ")^" << c;
    } else if (!evenClassical) {
      std::uint64_t copies = family == Family::SOminus ? c - 1 : c;
      os << G << "_" << dimension(family, n) << "(q) >= GL_" << k * copies << "(q) >= GL_" << k << "(q)^" << copies
         << " >= GL_1(q^" << k << ")^" << copies;
    } else {
      // SO^eps_{2n} keeps c copies when eps = (-1)^c and c - 1 otherwise.
      std::uint64_t copies = c;
      if (family == Family::SOplus || family == Family::SOminus)
        if (familySign(family) != (c % 2 ? -1 : 1)) copies = c - 1;
      os << G << "_" << dimension(family, n) << "(q) >= Cl^-_" << 2 * unit << "(q)^" << copies << " >= GU_1(q^"
         << unit << ")^" << copies;
    }
    rep.chain = os.str();
  }
  return rep;
}

LieGrid parseLieGrid(const std::string& text)
{
  using Kind = ParseError::Kind;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(Kind::Syntax, "byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object()) throw ParseError(Kind::Schema, "$", "top level must be an object");
  if (doc.value("schema", std::string()) != "hallmark-lie-grid/1")
    throw ParseError(Kind::Schema, "schema", "expected \"hallmark-lie-grid/1\"");
  LieGrid grid;
  if (!doc.contains("families") || !doc["families"].is_array()) throw ParseError(Kind::Schema, "families", "missing or not an array");
  for (std::size_t i = 0; i < doc["families"].size(); ++i) {
    const auto& f = doc["families"][i];
    std::string where = "families[" + std::to_string(i) + "]";
    if (!f.is_string()) throw ParseError(Kind::Schema, where, "must be a string");
    try {
      grid.families.push_back(parseFamily(f.get<std::string>()));
    } catch (const MalformedInput& e) {
      throw ParseError(Kind::Schema, where, e.what());
    }
  }
  if (!doc.contains("q") || !doc["q"].is_array()) throw ParseError(Kind::Schema, "q", "missing or not an array");
  for (std::size_t i = 0; i < doc["q"].size(); ++i) {
    const auto& v = doc["q"][i];
    std::string where = "q[" + std::to_string(i) + "]";
    if (!v.is_number_unsigned()) throw ParseError(Kind::Schema, where, "must be a positive integer");
    auto q = v.get<std::uint64_t>();
    if (q < 2 || primePowerDecomposition(q).first == 0) throw ParseError(Kind::Schema, where, "not a prime power");
    grid.qs.push_back(q);
  }
  if (doc.contains("rank")) {
    const auto& rank = doc["rank"];
    if (!rank.is_object() || !rank.value("min", nlohmann::json()).is_number_unsigned() ||
        !rank.value("max", nlohmann::json()).is_number_unsigned())
      throw ParseError(Kind::Schema, "rank", "must be {\"min\": int, \"max\": int}");
    grid.minRank = rank["min"].get<unsigned>();
    grid.maxRank = rank["max"].get<unsigned>();
    if (grid.minRank < 1 || grid.maxRank < grid.minRank) throw ParseError(Kind::Schema, "rank", "need 1 <= min <= max");
  }
  if (doc.contains("maxPrime")) {
    if (!doc["maxPrime"].is_number_unsigned()) throw ParseError(Kind::Schema, "maxPrime", "must be a positive integer");
    grid.maxPrime = doc["maxPrime"].get<std::uint64_t>();
  }
  return grid;
}

LieGrid loadLieGrid(const std::string& path) { return parseLieGrid(readTextFile(path)); }

LieGrid shippedLieGrid() { return parseLieGrid(detail::embeddedManifestFiles().at("lie_grid")); }

LieGridResult runLieGrid(const LieGrid& grid)
{
  LieGridResult out;
  auto fail = [&](std::string what, Family f, unsigned n, std::uint64_t q, std::string extra) {
    std::ostringstream os;
    os << toString(f) << " n=" << n << " q=" << q << " " << extra;
    out.failures.push_back({std::move(what), os.str()});
  };
  for (Family f : grid.families)
    for (unsigned n = grid.minRank; n <= grid.maxRank; ++n)
      for (std::uint64_t q : grid.qs) {
        std::vector<std::uint64_t> primes;
        for (std::uint64_t r = 3; r <= grid.maxPrime; r += 2)
          if (isPrime(r) && q % r != 0) primes.push_back(r);
        std::vector<std::string> cases;
        if (f == Family::GL) cases = {"a", "b"};
        else if (f == Family::GU) cases = {"a1", "a2", "b"};
        else cases = {"a2", "a3", "b2", "b3", "b4"};
        for (auto r : primes)
          for (const auto& c : cases) {
            ClassSizeExpression e;
            try {
              if (f == Family::GL) e = classSizeSL(n, q, r, c);
              else if (f == Family::GU) e = classSizeSU(n, q, r, c);
              else e = classSizeClassical(f, n, q, r, c);
            } catch (const PreconditionError&) {
              continue;
            } catch (const Error& err) {
              fail(err.what(), f, n, q, "r=" + s(r) + " case " + c);
              continue;
            }
            ++out.expressions;
            if (!e.divisorHolds) fail(e.proposition + ": asserted divisor does not divide the class size", f, n, q, "r=" + s(r));
            if (!e.dividesAmbient) fail(e.proposition + ": class size does not divide the group order", f, n, q, "r=" + s(r));
          }
        for (std::size_t i = 0; i < primes.size(); ++i)
          for (std::size_t j = i + 1; j < primes.size(); ++j) {
            auto rep = verifySection2Divisibility(f, n, q, primes[i], primes[j]);
            ++out.divisibilityChecks;
            if (rep.vacuous) ++out.vacuous;
            if (rep.torusChain) ++out.torusChains;
            if (!rep.consistent)
              fail("s does not divide the class size but the forced conclusion '" + rep.claim + "' fails", f, n, q,
                   "r=" + s(rep.r) + " s=" + s(rep.s));
          }
      }
  return out;
}

const std::vector<ExceptionalTorusRow>& exceptionalTorusRows()
{
  static const std::vector<ExceptionalTorusRow> rows = {
      {"3D4", {1, 2}, "(q-1).A_1(q^3)"},
      {"E6", {2, 4, 6}, "(q^2-1).2D_4, (q^2+1)(q-1).2A_3(q)"},
      {"2E6", {1, 3, 4}, "(q^2-1).2D_4, (q^2+1)(q+1).A_3(q)"},
      {"E7", {3, 4, 6}, "(q^3+-1).3D_4(q)"},
  };
  return rows;
}

BigInt cyclotomicValue(unsigned d, std::uint64_t q)
{
  if (d == 0) throw PreconditionError("cyclotomicValue: d must be positive");
  BigInt num = 1, den = 1;
  const BigInt Q = q;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e) continue;
    unsigned t = d / e;
    int mu = 1;
    for (auto [p, a] : factorize(t)) {
      if (a > 1) mu = 0;
      else mu = -mu;
    }
    if (mu == 1) num *= pw(Q, e) - 1;
    if (mu == -1) den *= pw(Q, e) - 1;
  }
  return num / den;
}

BigInt exceptionalOrder(const std::string& group, std::uint64_t q)
{
  const BigInt Q = q;
  auto p = [&](std::uint64_t e, int sign) { return pw(Q, e) - sign; };
  if (group == "3D4") return pw(Q, 12) * (pw(Q, 8) + pw(Q, 4) + 1) * p(6, 1) * p(2, 1);
  if (group == "E6") return pw(Q, 36) * p(12, 1) * p(9, 1) * p(8, 1) * p(6, 1) * p(5, 1) * p(2, 1);
  if (group == "2E6") return pw(Q, 36) * p(12, 1) * p(9, -1) * p(8, 1) * p(6, 1) * p(5, -1) * p(2, 1);
  if (group == "E7") return pw(Q, 63) * p(18, 1) * p(14, 1) * p(12, 1) * p(10, 1) * p(8, 1) * p(6, 1) * p(2, 1);
  throw PreconditionError("unknown exceptional group " + group);
}

std::vector<BigInt> exceptionalCentralizerOrders(const ExceptionalTorusRow& row, std::uint64_t q)
{
  const BigInt Q = q;
  const BigInt twistedD4 = soEvenOrder(4, -1, Q);
  const BigInt su4 = guOrder(4, Q) / (Q + 1);
  const BigInt sl4 = glOrder(4, Q) / (Q - 1);
  if (row.group == "3D4") return {(Q - 1) * pw(Q, 3) * (pw(Q, 6) - 1)};
  if (row.group == "E6") return {(Q * Q - 1) * twistedD4, (Q * Q + 1) * (Q - 1) * su4};
  if (row.group == "2E6") return {(Q * Q - 1) * twistedD4, (Q * Q + 1) * (Q + 1) * sl4};
  if (row.group == "E7") return {(pw(Q, 3) + 1) * exceptionalOrder("3D4", q), (pw(Q, 3) - 1) * exceptionalOrder("3D4", q)};
  throw PreconditionError("unknown exceptional group " + row.group);
}

}  // namespace hallmark
