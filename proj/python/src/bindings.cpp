#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "frobmf/cli.hpp"
#include "frobmf/frobenius.hpp"
#include "frobmf/fsig.hpp"
#include "frobmf/hypersurface.hpp"
#include "frobmf/monomial.hpp"
#include "frobmf/oracle.hpp"
#include "frobmf/serialize.hpp"

namespace py = pybind11;
using namespace frobmf;

namespace {

SparsePoly poly_of(const std::string& f, std::uint32_t p, std::optional<std::size_t> n) {
  return parse_poly(f, p, n.value_or(std::max<std::size_t>(1, max_variable_index(f))));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Frobenius pushforward matrices, matrix factorizations and F-signatures over F_p";

  py::register_exception<ResourceLimitError>(m, "ResourceLimitError");

  m.def("parse_poly", [](const std::string& f, std::uint32_t p, std::optional<std::size_t> n) {
    return poly_of(f, p, n).to_string();
  }, py::arg("f"), py::arg("p"), py::arg("n") = py::none(), "Normal form of a polynomial over F_p.");

  m.def("matrix_json", [](const std::string& f, std::uint32_t p, std::uint32_t e, std::optional<std::size_t> n,
                          std::uint64_t power, std::uint64_t max_size) {
    const auto g = poly_of(f, p, n);
    const FrobBasis basis(g.ring(), e, max_size);
    return matrix_to_json(matrix_power(g, power, basis)).dump();
  }, py::arg("f"), py::arg("p"), py::arg("e") = 1, py::arg("n") = py::none(), py::arg("power") = 1,
     py::arg("max_size") = FrobBasis::kDefaultMaxSize);

  m.def("free_rank_uv_json", [](const std::string& f, std::uint32_t p, std::uint32_t e, std::optional<std::size_t> n) {
    const auto g = poly_of(f, p, n);
    return to_json(free_rank_uv_report(g, FrobBasis(g.ring(), e))).dump();
  }, py::arg("f"), py::arg("p"), py::arg("e") = 1, py::arg("n") = py::none());

  m.def("free_rank_z2", [](const std::string& f, std::uint32_t p, std::uint32_t e, std::optional<std::size_t> n) {
    const auto g = poly_of(f, p, n);
    return free_rank_z2(g, FrobBasis(g.ring(), e));
  }, py::arg("f"), py::arg("p"), py::arg("e") = 1, py::arg("n") = py::none());

  m.def("verify_presentation", [](const std::string& f, std::uint32_t p, std::uint32_t e, std::uint32_t k,
                                  std::optional<std::size_t> n) {
    const auto g = poly_of(f, p, n);
    return presentation_fk(g, k, FrobBasis(g.ring(), e)).verify();
  }, py::arg("f"), py::arg("p"), py::arg("e") = 1, py::arg("k") = 1, py::arg("n") = py::none());

  m.def("fsignature_closed", [](const std::vector<std::uint32_t>& dvec, const std::string& target) {
    const auto t = parse_target(target);
    return to_string(t == TargetType::kUV ? fsignature_uv_closed(dvec) : fsignature_z2_closed(dvec));
  }, py::arg("dvec"), py::arg("target") = "uv");

  m.def("empirical_json", [](const std::string& f, std::uint32_t p, std::uint32_t emax, const std::string& target,
                             std::optional<std::size_t> n) {
    return to_json(empirical_sequence(poly_of(f, p, n), 1, emax, parse_target(target))).dump();
  }, py::arg("f"), py::arg("p"), py::arg("emax"), py::arg("target") = "uv", py::arg("n") = py::none());

  m.def("decomposition_json", [](const std::vector<std::uint32_t>& dvec, std::uint32_t p, std::uint32_t e) {
    return to_json(decomposition_report(MonomialData(dvec), p, e)).dump();
  }, py::arg("dvec"), py::arg("p"), py::arg("e") = 1);

  m.def("eta", [](std::uint32_t k, const Label& c, const std::vector<std::uint32_t>& dvec, std::uint32_t q) {
    return eta(k, c, MonomialData(dvec), q);
  }, py::arg("k"), py::arg("c"), py::arg("dvec"), py::arg("q"));

  m.def("w_values", [](const std::vector<std::uint32_t>& dvec) {
    std::vector<std::string> out;
    for (const auto& w : w_values(dvec).values) out.push_back(to_string(w));
    return out;
  }, py::arg("dvec"));

  m.def("sum_powers", [](std::uint64_t delta, std::uint32_t s) { return to_string(sum_powers(delta, s)); },
        py::arg("delta"), py::arg("s"));

  m.def("fedder_membership", &oracle::fedder_membership, py::arg("dvec"), py::arg("p"), py::arg("e") = 1);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
