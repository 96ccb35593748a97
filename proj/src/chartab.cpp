#include "hallmark/chartab.hpp"

#include <algorithm>
#include <future>
#include <set>

#include <json.hpp>

#include "hallmark/embedded_data.hpp"
#include "hallmark/errors.hpp"
#include "hallmark/group_io.hpp"

namespace hallmark {

namespace {

using Json = nlohmann::json;
using Kind = ParseError::Kind;

const char* kSchema = "hallmark-ct/1";

std::string idx(std::string base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

std::string chiAt(std::size_t i, std::size_t j) { return idx(idx("characters", i), j); }

/// Integer from a JSON number or a decimal string (for values beyond 64 bits).
BigInt readInteger(const Json& v, const std::string& where)
{
  if (v.is_number_unsigned()) return BigInt(v.get<std::uint64_t>());
  if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() > start && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                        [](char c) { return c >= '0' && c <= '9'; }))
      return BigInt(s);
  }
  throw ParseError(Kind::Schema, where, "must be an integer");
}

BigInt readPositive(const Json& v, const std::string& where)
{
  BigInt out = readInteger(v, where);
  if (out <= 0) throw ParseError(Kind::Schema, where, "must be positive");
  return out;
}

std::uint64_t readSmall(const Json& v, const std::string& where)
{
  BigInt out = readPositive(v, where);
  if (out > BigInt(std::numeric_limits<std::uint32_t>::max())) throw ParseError(Kind::Schema, where, "too large");
  return static_cast<std::uint64_t>(out);
}

const Json& field(const Json& obj, const char* key, const std::string& where)
{
  if (!obj.contains(key)) throw ParseError(Kind::Schema, where.empty() ? key : where + "." + key, "missing");
  return obj[key];
}

std::string sub(const std::string& where, const char* key) { return where.empty() ? key : where + "." + key; }

Cyclotomic readValue(const Json& v, const std::string& where, std::uint64_t exponent)
{
  if (!v.is_object()) return Cyclotomic(readInteger(v, where));
  std::uint64_t n = readSmall(field(v, "n", where), sub(where, "n"));
  if (exponent % n != 0)
    throw ParseError(Kind::Schema, sub(where, "n"),
                     "modulus " + std::to_string(n) + " does not divide the exponent " + std::to_string(exponent));
  const Json& terms = field(v, "terms", where);
  if (!terms.is_array()) throw ParseError(Kind::Schema, sub(where, "terms"), "must be an array");
  std::vector<std::pair<BigInt, std::int64_t>> out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    std::string at = idx(sub(where, "terms"), k);
    const Json& t = terms[k];
    if (!t.is_array() || t.size() != 2) throw ParseError(Kind::Schema, at, "must be a [coefficient, exponent] pair");
    BigInt c = readInteger(t[0], at + "[0]");
    if (!t[1].is_number_integer()) throw ParseError(Kind::Schema, at + "[1]", "exponent must be an integer");
    out.emplace_back(std::move(c), t[1].get<std::int64_t>());
  }
  return Cyclotomic(n, out);
}

nlohmann::ordered_json integerJson(const BigInt& v)
{
  if (v >= 0 && v <= BigInt(std::numeric_limits<std::int64_t>::max())) return static_cast<std::int64_t>(v);
  if (v < 0 && v >= BigInt(std::numeric_limits<std::int64_t>::min())) return static_cast<std::int64_t>(v);
  return toString(v);
}

nlohmann::ordered_json valueJson(const Cyclotomic& x)
{
  if (auto k = x.toInteger()) return integerJson(*k);
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : x.terms()) terms.push_back({integerJson(c), e});
  nlohmann::ordered_json out;
  out["n"] = x.modulus();
  out["terms"] = terms;
  return out;
}

}  // namespace

CharacterTable::CharacterTable(std::string name, BigInt order, std::uint64_t exponent, std::vector<TableClass> classes,
                               std::vector<std::vector<Cyclotomic>> values, std::string group)
    : name_(std::move(name)),
      group_(std::move(group)),
      order_(std::move(order)),
      exponent_(exponent),
      classes_(std::move(classes)),
      values_(std::move(values))
{
  if (order_ <= 0) throw ParseError(Kind::Schema, "order", "must be positive");
  if (exponent_ == 0) throw ParseError(Kind::Schema, "exponent", "must be positive");
  if (classes_.empty()) throw ParseError(Kind::Schema, "classes", "must not be empty");
  if (classes_[0].size != 1 || classes_[0].elementOrder != 1)
    throw ParseError(Kind::Schema, "classes[0]", "the identity class (size 1, order 1) must come first");

  BigInt total = 0;
  std::set<std::string> labels;
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    const auto& c = classes_[k];
    std::string at = idx("classes", k);
    if (!labels.insert(c.label).second) throw ParseError(Kind::Schema, at + ".label", "duplicate label " + c.label);
    if (c.elementOrder == 0 || exponent_ % c.elementOrder != 0)
      throw ParseError(Kind::Schema, at + ".order", "element order does not divide the exponent");
    if (c.size <= 0 || order_ % c.size != 0)
      throw ParseError(Kind::SizeSum, at + ".size", "class size " + toString(c.size) + " does not divide the order");
    total += c.size;
  }
  if (total != order_)
    throw ParseError(Kind::SizeSum, "classes",
                     "class sizes sum to " + toString(total) + ", expected " + toString(order_));

  if (values_.size() != classes_.size())
    throw ParseError(Kind::Schema, "characters",
                     std::to_string(values_.size()) + " rows for " + std::to_string(classes_.size()) + " classes");
  std::optional<std::size_t> trivial;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].size() != classes_.size())
      throw ParseError(Kind::Schema, idx("characters", i),
                       std::to_string(values_[i].size()) + " values for " + std::to_string(classes_.size()) +
                           " classes");
    for (std::size_t j = 0; j < values_[i].size(); ++j)
      if (exponent_ % values_[i][j].modulus() != 0)
        throw ParseError(Kind::Schema, chiAt(i, j), "modulus does not divide the exponent");
    auto d = values_[i][0].toInteger();
    if (!d || *d <= 0) throw ParseError(Kind::Integrality, chiAt(i, 0), "degree must be a positive integer");
    if (order_ % *d != 0)
      throw ParseError(Kind::Integrality, chiAt(i, 0), "degree " + toString(*d) + " does not divide the order");
    degrees_.push_back(*d);
    if (!trivial && std::all_of(values_[i].begin(), values_[i].end(), [](const Cyclotomic& x) { return x == 1; }))
      trivial = i;
  }
  if (!trivial) throw ParseError(Kind::Schema, "characters", "no trivial character");
  trivial_ = *trivial;

  BigInt squares = 0;
  for (const auto& d : degrees_) squares += d * d;
  if (squares != order_)
    throw ParseError(Kind::Orthogonality, "characters",
                     "squared degrees sum to " + toString(squares) + ", expected " + toString(order_));

  std::vector<std::vector<Cyclotomic>> conj(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i)
    for (const auto& x : values_[i]) conj[i].push_back(x.conj());
  auto inner = [&](std::size_t i, std::size_t j) {
    Cyclotomic sum;
    for (std::size_t k = 0; k < classes_.size(); ++k)
      if (!values_[i][k].isZero() && !values_[j][k].isZero()) sum = sum + values_[i][k] * conj[j][k] * classes_[k].size;
    return sum;
  };
  // Norms first, so a single bad row is reported as itself.
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (auto sum = inner(i, i); !(sum == Cyclotomic(order_)))
      throw ParseError(Kind::Orthogonality, idx("characters", i),
                       "norm " + sum.toString() + ", expected " + toString(order_));
  for (std::size_t i = 0; i < values_.size(); ++i)
    for (std::size_t j = i + 1; j < values_.size(); ++j)
      if (auto sum = inner(i, j); !sum.isZero())
        throw ParseError(Kind::Orthogonality, idx("characters", i) + " vs " + idx("characters", j),
                         "inner product " + sum.toString() + ", expected 0");

  omega_.resize(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i)
    for (std::size_t k = 0; k < classes_.size(); ++k) {
      auto w = (values_[i][k] * classes_[k].size).divideExact(degrees_[i]);
      if (!w)
        throw ParseError(Kind::Integrality, chiAt(i, k),
                         "central character " + toString(classes_[k].size) + " * (" + values_[i][k].toString() +
                             ") / " + toString(degrees_[i]) + " is not integral");
      omega_[i].push_back(std::move(*w));
    }
}

ClassProfile CharacterTable::profile() const
{
  ClassProfile out;
  out.groupOrder = order_;
  for (const auto& c : classes_) out.classes.push_back({c.label, c.size, c.elementOrder});
  return out;
}

CharacterTable parseTable(std::string_view text)
{
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(Kind::Syntax, "byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object()) throw ParseError(Kind::Schema, "$", "top level must be an object");
  const Json& schema = field(doc, "schema", "");
  if (!schema.is_string() || schema.get<std::string>() != kSchema)
    throw ParseError(Kind::Schema, "schema", std::string("expected \"") + kSchema + "\"");
  const Json& name = field(doc, "name", "");
  if (!name.is_string()) throw ParseError(Kind::Schema, "name", "must be a string");
  std::string group;
  if (doc.contains("group")) {
    if (!doc["group"].is_string()) throw ParseError(Kind::Schema, "group", "must be a string");
    group = doc["group"].get<std::string>();
  }
  BigInt order = readPositive(field(doc, "order", ""), "order");
  std::uint64_t exponent = readSmall(field(doc, "exponent", ""), "exponent");

  const Json& cls = field(doc, "classes", "");
  if (!cls.is_array()) throw ParseError(Kind::Schema, "classes", "must be an array");
  std::vector<TableClass> classes;
  for (std::size_t k = 0; k < cls.size(); ++k) {
    std::string at = idx("classes", k);
    const Json& c = cls[k];
    if (!c.is_object()) throw ParseError(Kind::Schema, at, "must be an object");
    const Json& label = field(c, "label", at);
    if (!label.is_string()) throw ParseError(Kind::Schema, at + ".label", "must be a string");
    classes.push_back({label.get<std::string>(), readPositive(field(c, "size", at), at + ".size"),
                       readSmall(field(c, "order", at), at + ".order")});
  }

  const Json& chars = field(doc, "characters", "");
  if (!chars.is_array()) throw ParseError(Kind::Schema, "characters", "must be an array");
  std::vector<std::vector<Cyclotomic>> values;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (!chars[i].is_array()) throw ParseError(Kind::Schema, idx("characters", i), "must be an array");
    std::vector<Cyclotomic> row;
    for (std::size_t j = 0; j < chars[i].size(); ++j) row.push_back(readValue(chars[i][j], chiAt(i, j), exponent));
    values.push_back(std::move(row));
  }
  return CharacterTable(name.get<std::string>(), std::move(order), exponent, std::move(classes), std::move(values),
                        std::move(group));
}

CharacterTable loadTable(const std::string& path) { return parseTable(readTextFile(path)); }

std::string writeTable(const CharacterTable& table)
{
  nlohmann::ordered_json doc;
  doc["schema"] = kSchema;
  doc["name"] = table.name();
  if (!table.group().empty()) doc["group"] = table.group();
  doc["order"] = integerJson(table.groupOrder());
  doc["exponent"] = table.exponent();
  auto classes = nlohmann::ordered_json::array();
  for (const auto& c : table.classes())
    classes.push_back({{"label", c.label}, {"size", integerJson(c.size)}, {"order", c.elementOrder}});
  doc["classes"] = classes;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < table.characterCount(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& x : table.character(i)) row.push_back(valueJson(x));
    rows.push_back(row);
  }
  doc["characters"] = rows;
  return doc.dump() + "\n";
}

Cyclotomic centralCharacter(const CharacterTable& table, std::size_t chi, std::size_t k)
{
  if (chi >= table.characterCount() || k >= table.classCount()) throw PreconditionError("centralCharacter: index out of range");
  auto w = (table.value(chi, k) * table.classes()[k].size).divideExact(table.degree(chi));
  if (!w) throw ParseError(Kind::Integrality, chiAt(chi, k), "central character is not integral");
  return *w;
}

BlockPartition blockPartition(const CharacterTable& table, std::uint64_t p)
{
  if (!isPrime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  BlockPartition out;
  out.p = p;
  const std::size_t n = table.characterCount();
  if (table.groupOrder() % p != 0) {
    out.vacuous = true;
    out.blocks.emplace_back();
    for (std::size_t i = 0; i < n; ++i) out.blocks[0].push_back(i);
    return out;
  }
  const std::uint64_t N = table.exponent();
  std::vector<std::vector<Residue>> reps;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Residue> sig;
    for (std::size_t k = 0; k < table.classCount(); ++k) sig.push_back(reduceModP(table.omega(i, k).lift(N), p));
    auto it = std::find(reps.begin(), reps.end(), sig);
    if (it == reps.end()) {
      reps.push_back(std::move(sig));
      out.blocks.push_back({i});
    } else {
      out.blocks[static_cast<std::size_t>(it - reps.begin())].push_back(i);
    }
  }
  for (std::size_t b = 0; b < out.blocks.size(); ++b)
    if (std::count(out.blocks[b].begin(), out.blocks[b].end(), table.trivialIndex())) out.principalIndex = b;
  return out;
}

BlockDegreeMap principalBlockDegrees(const CharacterTable& table, const std::vector<std::uint64_t>& primes)
{
  std::vector<std::pair<std::uint64_t, std::future<BlockPartition>>> jobs;
  for (auto p : relevantPrimes(table.groupOrder(), primes))
    jobs.emplace_back(p, std::async(std::launch::async, [&table, p] { return blockPartition(table, p); }));
  BlockDegreeMap out;
  for (auto& [p, job] : jobs) {
    BlockPartition part = job.get();
    BlockDegrees& d = out[p];
    for (auto chi : part.principal()) {
      d.characters.push_back(chi);
      d.degrees.push_back(table.degree(chi));
    }
  }
  return out;
}

Verdict tableCriterionB(const CharacterTable& table, const std::vector<std::uint64_t>& pi)
{
  return nilpotentHallCriterion(table.profile(), pi, Provenance::Table);
}

Verdict tableCriterionC(const CharacterTable& table, const std::vector<std::uint64_t>& pi)
{
  ClassProfile profile = table.profile();
  Verdict v = abelianHallCriterion(profile, pi, std::nullopt, Provenance::Table);
  if (v.outcome != Outcome::Undetermined) return v;
  std::vector<std::uint64_t> needed;
  for (auto p : relevantPrimes(table.groupOrder(), pi))
    if (p == 3 || p == 5) needed.push_back(p);
  return abelianHallCriterion(profile, pi, principalBlockDegrees(table, needed), Provenance::Table);
}

CharacterTable galoisConjugate(const CharacterTable& table, std::int64_t k)
{
  auto N = static_cast<std::int64_t>(table.exponent());
  std::int64_t r = ((k % N) + N) % N;
  if (gcd64(static_cast<std::uint64_t>(r), table.exponent()) != 1)
    throw PreconditionError("galoisConjugate: " + std::to_string(k) + " is not prime to the exponent");
  std::vector<std::vector<Cyclotomic>> values;
  for (std::size_t i = 0; i < table.characterCount(); ++i) {
    std::vector<Cyclotomic> row;
    for (const auto& x : table.character(i)) row.push_back(x.galois(k));
    values.push_back(std::move(row));
  }
  return CharacterTable(table.name(), table.groupOrder(), table.exponent(), table.classes(), std::move(values),
                        table.group());
}

std::vector<std::string> shippedTableNames()
{
  std::vector<std::string> out;
  for (const auto& [stem, text] : detail::embeddedTableFiles()) out.push_back(stem);
  return out;
}

CharacterTable shippedTable(const std::string& stem)
{
  const auto& files = detail::embeddedTableFiles();
  auto it = files.find(stem);
  if (it == files.end()) throw PreconditionError("no shipped table named " + stem);
  return parseTable(it->second);
}

std::optional<std::string> shippedTableFor(const std::string& catalogName)
{
  static const std::map<std::string, std::string> aliases = {
      {"psl2_4", "a5"}, {"psl2_5", "a5"}, {"psl3_2", "psl2_7"}};
  if (auto it = aliases.find(catalogName); it != aliases.end()) return it->second;
  for (const auto& [stem, text] : detail::embeddedTableFiles()) {
    auto doc = Json::parse(text);
    if (doc.value("group", std::string()) == catalogName) return stem;
  }
  return std::nullopt;
}

}  // namespace hallmark
