// Thin pybind11 layer. Structured results cross the boundary as JSON text
// (the same documents the CLI prints); the Python package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pathideal/classify.hpp"
#include "pathideal/cli.hpp"
#include "pathideal/error.hpp"
#include "pathideal/serialize.hpp"

namespace py = pybind11;
using namespace pathideal;

namespace {

Tree tree_of(const std::string& edges) { return parse_tree(edges); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Path ideals of trees: generators, Betti numbers, linear quotients";

  py::register_exception<Error>(m, "PathIdealError", PyExc_ValueError);

  m.def("family", [](const std::string& spec) {
    return format_edge_list(make_family(parse_family_spec(spec)));
  }, py::arg("spec"));

  m.def("random_tree", [](std::size_t vertices, std::uint64_t seed) {
    return format_edge_list(random_tree(vertices, seed).graph());
  }, py::arg("vertices"), py::arg("seed"));

  m.def("trim", [](const std::string& edges) {
    return format_edge_list(trim(tree_of(edges)).graph());
  }, py::arg("edges"));

  m.def("generators", [](const std::string& edges, std::size_t n) {
    return to_json(path_ideal(tree_of(edges), n)).dump();
  }, py::arg("edges"), py::arg("n"));

  m.def("betti", [](const std::string& edges, std::size_t n, std::size_t hom_cap) {
    py::gil_scoped_release release;
    return to_json(betti_table(path_ideal(tree_of(edges), n), hom_cap)).dump();
  }, py::arg("edges"), py::arg("n"), py::arg("hom_cap") = kDefaultBettiGeneratorCap);

  m.def("linear_quotients_order", [](const std::string& edges, std::size_t n, std::size_t cap) {
    const Tree t = tree_of(edges);
    std::optional<QuotientOrder> found;
    {
      py::gil_scoped_release release;
      found = find_linear_quotients_order(path_ideal(t, n), cap);
    }
    return found ? to_json(*found, t.labels()).dump() : std::string("null");
  }, py::arg("edges"), py::arg("n"), py::arg("cap") = kDefaultLinearQuotientsCap);

  m.def("classify", [](const std::string& edges, std::size_t n, bool legacy_n23) {
    const Tree t = tree_of(edges);
    const auto c = legacy_n23 && n < 4 ? classify_legacy_n23(t, n) : classify(t, n);
    return to_json(c, t.labels()).dump();
  }, py::arg("edges"), py::arg("n"), py::arg("legacy_n23") = false);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
