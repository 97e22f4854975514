// Python extension. Reports cross the boundary as JSON strings; the
// package-level wrappers parse them into dicts. Scalar helpers are bound
// directly.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "supell/curve.hpp"
#include "supell/genvec.hpp"
#include "supell/report.hpp"
#include "supell/rotation.hpp"
#include "supell/signature.hpp"

namespace py = pybind11;

namespace {

std::string family_json(long long n, long long a, const std::string& lam,
                        const std::string& lam_quad) {
  return supell::family_report(n, a, supell::parse_lambda_spec(lam, lam_quad))
      .dump();
}

std::string classify_json(long long n, const std::string& signature,
                          const std::string& moves) {
  return supell::classify_report(n, supell::Signature::parse(signature),
                                 supell::parse_move_set(moves))
      .dump();
}

std::string equiv_json(long long n, const std::vector<long long>& v1,
                       const std::vector<long long>& v2,
                       const std::string& moves) {
  if (n < 2) throw std::invalid_argument("modulus must be >= 2");
  auto reduce = [n](const std::vector<long long>& v) {
    std::vector<long long> out;
    out.reserve(v.size());
    for (long long e : v) out.push_back(supell::mod_reduce(e, n));
    return out;
  };
  supell::CyclicGenVec a{n, reduce(v1), {}};
  supell::CyclicGenVec b{n, reduce(v2), {}};
  return supell::equiv_report(a, b, supell::parse_move_set(moves)).dump();
}

std::string conformal_json(long long n, long long a) {
  return supell::conformal_report(n, a).dump();
}

std::string harvey_json(long long m, long long eta) {
  return supell::harvey_report(m, eta).dump();
}

std::string area_term_str(const std::string& signature) {
  return supell::rational_str(
      supell::area_term(supell::Signature::parse(signature)));
}

long long rh_genus(long long group_order, const std::string& signature) {
  return supell::riemann_hurwitz_genus(group_order,
                                       supell::Signature::parse(signature));
}

}  // namespace

PYBIND11_MODULE(_supell, m) {
  m.doc() =
      "Exact models of a family of cyclic-cover surfaces: automorphism "
      "groups, subgroup action signatures, generating-vector classification "
      "and the conformal obstruction analysis";

  m.def("family_json", &family_json, py::arg("n"), py::arg("a"),
        py::arg("lam") = "", py::arg("lam_quad") = "",
        "Family member report as a JSON string");
  m.def("classify_json", &classify_json, py::arg("n"), py::arg("signature"),
        py::arg("moves") = "scalar",
        "Generating-vector orbit classification as a JSON string");
  m.def("equiv_json", &equiv_json, py::arg("n"), py::arg("v1"), py::arg("v2"),
        py::arg("moves") = "scalar",
        "Move-set equivalence of two vectors as a JSON string");
  m.def("conformal_json", &conformal_json, py::arg("n"), py::arg("a"),
        "Moebius obstruction report as a JSON string");
  m.def("harvey_json", &harvey_json, py::arg("m"), py::arg("eta"),
        "Rotation-exponent report as a JSON string");

  m.def("family_genus", &supell::family_genus, py::arg("n"),
        "Genus 3*(2^n - 1) of every member of the n-th family");
  m.def("harvey_xi", &supell::harvey_xi, py::arg("eta"), py::arg("m"),
        "Generating-vector entry eta^-1 mod m at a fixed point");
  m.def("riemann_hurwitz_genus", &rh_genus, py::arg("group_order"),
        py::arg("signature"),
        "Total genus of a covering with the given quotient signature");
  m.def("area_term", &area_term_str, py::arg("signature"),
        "2g - 2 + sum(1 - 1/m) as an exact rational string");
}
