#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hallmark/catalog.hpp"
#include "hallmark/errors.hpp"
#include "hallmark/harness.hpp"

namespace py = pybind11;
using namespace hallmark;

// Results cross the boundary as JSON text in the report layout; the Python
// package decodes them.
namespace {

std::string dump(const Json& j) { return j.dump(); }

std::string check(const std::string& theorem, const std::string& group, const std::vector<std::uint64_t>& pi,
                  const std::optional<std::string>& table, bool extended)
{
  CheckRequest req{theorem, group, pi, table, extended};
  std::sort(req.pi.begin(), req.pi.end());
  CheckTally tally;
  Json j = runCheck(req, tally);
  j["summary"] = tally.json();
  return dump(j);
}

std::string catalogJson()
{
  Json out = Json::array();
  for (const auto& e : defaultCatalog()) {
    Json tags = Json::array();
    for (const auto& t : e.tags) tags.push_back(t);
    out.push_back({{"name", e.name}, {"order", toString(e.expectedOrder)}, {"tags", tags}});
  }
  return dump(out);
}

std::string tableAnalyze(const std::string& source, const std::vector<std::uint64_t>& pi)
{
  auto t = resolveTable(source);
  return dump({{"B", toJson(tableCriterionB(t, pi))}, {"C", toJson(tableCriterionC(t, pi))}});
}

std::string lieClassSize(const std::string& family, unsigned n, std::uint64_t q, std::uint64_t r,
                         const std::string& caseTag)
{
  Family f = parseFamily(family);
  if (f == Family::GL) return dump(toJson(classSizeSL(n, q, r, caseTag.empty() ? "a" : caseTag)));
  if (f == Family::GU) return dump(toJson(classSizeSU(n, q, r, caseTag)));
  return dump(toJson(classSizeClassical(f, n, q, r, caseTag)));
}

std::string suite(const std::vector<std::string>& sections, bool extended)
{
  SuiteOptions opts;
  opts.sections = sections;
  opts.extended = extended;
  opts.timings = false;
  py::gil_scoped_release release;
  return dump(runSuite(opts).report);
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "hallmark core bindings";

  auto base = py::register_exception<Error>(m, "HallmarkError");
  py::register_exception<MalformedInput>(m, "MalformedInput", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  m.def("version", [] { return std::string(toolVersion()); });
  m.def("catalog", &catalogJson);
  m.def("group_order", [](const std::string& source, bool extended) {
    return toString(resolveGroup(source, extended).order());
  }, py::arg("group"), py::arg("extended") = false);
  m.def("classes", [](const std::string& source, bool extended) {
    return dump(toJson(classTable(resolveGroup(source, extended))));
  }, py::arg("group"), py::arg("extended") = false);
  m.def("hall", [](const std::string& source, std::vector<std::uint64_t> pi, bool extended) {
    return dump(toJson(hallSubgroup(resolveGroup(source, extended), pi)));
  }, py::arg("group"), py::arg("pi"), py::arg("extended") = false);
  m.def("check", &check, py::arg("theorem"), py::arg("group"), py::arg("pi"), py::arg("table") = py::none(),
        py::arg("extended") = false);
  m.def("table_blocks", [](const std::string& source, std::uint64_t p) {
    auto t = resolveTable(source);
    return dump(toJson(blockPartition(t, p), t));
  }, py::arg("table"), py::arg("p"));
  m.def("table_analyze", &tableAnalyze, py::arg("table"), py::arg("pi"));
  m.def("shipped_tables", &shippedTableNames);
  m.def("lie_class_size", &lieClassSize, py::arg("family"), py::arg("n"), py::arg("q"), py::arg("r"),
        py::arg("case") = "");
  m.def("lie_divisibility", [](const std::string& family, unsigned n, std::uint64_t q, std::uint64_t r,
                               std::uint64_t s) {
    return dump(toJson(verifySection2Divisibility(parseFamily(family), n, q, r, s)));
  }, py::arg("family"), py::arg("n"), py::arg("q"), py::arg("r"), py::arg("s"));
  m.def("lie_grid", [] { return dump(toJson(runLieGrid(shippedLieGrid()))); });
  m.def("suite", &suite, py::arg("sections") = std::vector<std::string>{}, py::arg("extended") = false);
}
