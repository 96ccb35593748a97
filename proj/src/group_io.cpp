#include "hallmark/group_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hallmark/errors.hpp"

namespace hallmark {

namespace {

using Json = nlohmann::json;
using Kind = ParseError::Kind;

std::string at(std::size_t g, std::size_t i)
{
  return "generators[" + std::to_string(g) + "][" + std::to_string(i) + "]";
}

}  // namespace

std::string readTextFile(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PermutationGroup parseGroupFile(std::string_view text)
{
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(Kind::Syntax, "byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object()) throw ParseError(Kind::Schema, "$", "top level must be an object");

  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError(Kind::Schema, "name", "must be a string");
    name = doc["name"].get<std::string>();
  }
  if (!doc.contains("degree") || !doc["degree"].is_number_integer())
    throw ParseError(Kind::Schema, "degree", "missing or not an integer");
  auto degree = doc["degree"].get<std::int64_t>();
  if (degree < 0) throw ParseError(Kind::Schema, "degree", "must be nonnegative");
  if (static_cast<std::uint64_t>(degree) > kMaxDegree)
    throw CapacityError("degree " + std::to_string(degree) + " exceeds the cap of " + std::to_string(kMaxDegree));
  if (!doc.contains("generators") || !doc["generators"].is_array())
    throw ParseError(Kind::Schema, "generators", "missing or not an array");

  const auto& gens = doc["generators"];
  if (degree == 0 && !gens.empty()) throw MalformedInput("degree 0 with a nonempty generating set");
  std::vector<Permutation> perms;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto& row = gens[g];
    std::string where = "generators[" + std::to_string(g) + "]";
    if (!row.is_array()) throw ParseError(Kind::Schema, where, "must be an array");
    if (row.size() != static_cast<std::size_t>(degree))
      throw ParseError(Kind::Schema, where,
                       "has " + std::to_string(row.size()) + " entries, expected " + std::to_string(degree));
    std::vector<Point> images(static_cast<std::size_t>(degree));
    std::vector<std::int64_t> firstSeen(static_cast<std::size_t>(degree), -1);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (!row[i].is_number_integer()) throw ParseError(Kind::Schema, at(g, i), "must be an integer");
      auto v = row[i].get<std::int64_t>();
      if (v < 1 || v > degree)
        throw ParseError(Kind::NotBijection, at(g, i),
                         "image " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      auto& seen = firstSeen[static_cast<std::size_t>(v - 1)];
      if (seen >= 0)
        throw ParseError(Kind::NotBijection, at(g, i),
                         "image " + std::to_string(v) + " repeated (first at " + at(g, static_cast<std::size_t>(seen)) +
                             ")");
      seen = static_cast<std::int64_t>(i);
      images[i] = static_cast<Point>(v - 1);
    }
    perms.push_back(Permutation::fromImagesUnchecked(std::move(images)));
  }
  return PermutationGroup::build(static_cast<std::size_t>(degree), std::move(perms), std::move(name));
}

PermutationGroup loadGroupFile(const std::string& path) { return parseGroupFile(readTextFile(path)); }

std::string writeGroupFile(const PermutationGroup& group)
{
  nlohmann::ordered_json doc;
  doc["name"] = group.name();
  doc["degree"] = group.degree();
  auto gens = nlohmann::ordered_json::array();
  for (const auto& g : group.generators()) {
    auto row = nlohmann::ordered_json::array();
    for (Point p : g.images()) row.push_back(p + 1);
    gens.push_back(std::move(row));
  }
  doc["generators"] = std::move(gens);
  return doc.dump() + "\n";
}

}  // namespace hallmark
