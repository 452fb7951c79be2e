#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "pbent/construct.hpp"
#include "pbent/error.hpp"
#include "pbent/manifest.hpp"
#include "pbent/pu.hpp"
#include "pbent/report.hpp"
#include "pbent/spectral.hpp"

namespace py = pybind11;
using namespace pbent;

namespace {

VPFunc table_function(const std::vector<Index>& values, std::uint32_t p, int n, int m) {
  const Space d = Space::vector(p, n);
  if (values.size() != d.size()) fail(Errc::InvalidArgument, "table must have p^n entries");
  return VPFunc(d, Space::vector(p, m), values);
}

PFunc scalar_function(const std::vector<Index>& values, std::uint32_t p, int n) {
  const Space d = Space::vector(p, n);
  if (values.size() != d.size()) fail(Errc::InvalidArgument, "table must have p^n entries");
  std::vector<std::uint8_t> v;
  for (Index x : values) {
    if (x >= p) fail(Errc::InvalidArgument, "values must lie in [0, p)");
    v.push_back(static_cast<std::uint8_t>(x));
  }
  return PFunc(d, std::move(v));
}

Field negative_field(const std::string& kind, std::uint32_t p, int m) {
  return FieldSpec::make(p, find_irreducible(p, kind == "kasami" ? 2 * m : m));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact analysis and construction of vectorial p-ary bent functions";
  py::register_exception<Error>(m, "PbentError");

  m.def("classify_json", [](const std::vector<Index>& values, std::uint32_t p, int n, int mdim) {
    return to_json(vectorial_classify(table_function(values, p, n, mdim))).dump();
  }, py::arg("values"), py::arg("p"), py::arg("n"), py::arg("m") = 1);

  m.def("walsh", [](const std::vector<Index>& values, std::uint32_t p, int n) {
    std::vector<std::vector<std::int64_t>> out;
    const Spectrum spectrum = gwht_fast(scalar_function(values, p, n));
    for (const CycInt& w : spectrum.values()) out.push_back(w.coords64());
    return out;
  }, py::arg("values"), py::arg("p"), py::arg("n"),
     "Walsh values as coordinates on 1, xi, ..., xi^(p-2)");

  m.def("is_bent", [](const std::vector<Index>& values, std::uint32_t p, int n) {
    return is_bent(scalar_function(values, p, n));
  }, py::arg("values"), py::arg("p"), py::arg("n"));

  m.def("dual", [](const std::vector<Index>& values, std::uint32_t p, int n) -> py::object {
    const RegularityReport r = classify_weak_regular(scalar_function(values, p, n));
    if (!r.dual) return py::none();
    return py::cast(std::vector<int>(r.dual->values().begin(), r.dual->values().end()));
  }, py::arg("values"), py::arg("p"), py::arg("n"));

  m.def("has_pu", [](const std::vector<Index>& values, std::uint32_t p, int n, const std::vector<Index>& U) {
    return check_pu_derivatives(scalar_function(values, p, n), U);
  }, py::arg("values"), py::arg("p"), py::arg("n"), py::arg("U"));

  m.def("build_json", [](const std::string& manifest, bool verify) {
    const BuildResult r = build_recipe(parse_recipe_text(manifest), verify);
    json out = json::object();
    out["values"] = std::vector<Index>(r.F.values().begin(), r.F.values().end());
    out["report"] = r.report ? to_json(*r.report) : json(nullptr);
    return out.dump();
  }, py::arg("manifest"), py::arg("verify") = true);

  m.def("search_pu_json", [](const std::string& manifest, int t, std::size_t limit) {
    return u_sets_to_json(search_u_sets(recipe_G(parse_g_recipe_text(manifest)), t, limit)).dump();
  }, py::arg("manifest"), py::arg("t"), py::arg("limit") = 10);

  m.def("negative_json", [](const std::string& kind, std::uint32_t p, int mdeg) {
    if (kind != "square" && kind != "kasami") fail(Errc::InvalidArgument, "kind must be square or kasami");
    const Field field = negative_field(kind, p, mdeg);
    if (kind == "square") return to_json(verify_no_pu_monomial(MonomialKind::Square, field)).dump();
    const Field sub = subfield_of(field, mdeg);
    return to_json(verify_no_pu_monomial(MonomialKind::Kasami, field, &sub)).dump();
  }, py::arg("kind"), py::arg("p"), py::arg("m"));

  m.def("reproduce_example_json", [](const std::string& reading) {
    if (reading != "consistent" && reading != "literal") fail(Errc::InvalidArgument, "reading must be consistent or literal");
    const BuildResult r = reproduce_example1(reading == "literal" ? Example1Reading::Literal : Example1Reading::Consistent);
    return to_json(*r.report).dump();
  }, py::arg("reading") = "consistent");

  m.attr("__version__") = PBENT_VERSION;
}
