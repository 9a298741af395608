#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dedekind/conjectures.hpp"
#include "dedekind/inversion.hpp"
#include "dedekind/invpoly.hpp"
#include "dedekind/kloosterman.hpp"
#include "dedekind/numroots.hpp"
#include "dedekind/serialize.hpp"

namespace py = pybind11;
using dedekind::Int;

namespace {

// Results cross the boundary as JSON text and are decoded on the Python side.
std::string dump(const dedekind::serialize::json& j) { return j.dump(); }

std::pair<std::string, std::string> fraction_parts(const dedekind::Fraction& q) {
  return {dedekind::to_string(dedekind::numerator(q)), dedekind::to_string(dedekind::denominator(q))};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dedekind sums, inversion numbers and the inversion polynomial";
  namespace inv = dedekind::inversion;
  namespace conj = dedekind::conjectures;

  m.def("dedekind_sum", [](Int a, Int b) { return fraction_parts(inv::dedekind_sum(a, b)); },
        py::arg("a"), py::arg("b"));
  m.def(
      "inv_count",
      [](Int a, Int b, const std::string& method) {
        if (method == "closed") {
          return inv::inv_closed_form(a, b);
        }
        if (method != "fast" && method != "oracle") {
          throw py::value_error("method must be 'fast', 'oracle' or 'closed'");
        }
        return inv::inv_count(a, b, method == "fast" ? inv::CountMethod::fast : inv::CountMethod::oracle);
      },
      py::arg("a"), py::arg("b"), py::arg("method") = "fast");
  m.def("reciprocity_residual", &inv::reciprocity_residual, py::arg("a"), py::arg("b"));

  m.def("invpoly_terms", [](Int b) { return dedekind::build_invpoly(b).terms(); }, py::arg("b"));
  m.def("invpoly_json", [](Int b) { return dump(dedekind::serialize::to_json(dedekind::build_invpoly(b))); },
        py::arg("b"));
  m.def("vanishes_at_root", [](Int b, Int order) { return dedekind::vanishes_at_root(dedekind::build_invpoly(b), order); },
        py::arg("b"), py::arg("m"));
  m.def("root_multiplicity",
        [](Int b, Int order, int cap) { return dedekind::root_multiplicity(dedekind::build_invpoly(b), order, cap); },
        py::arg("b"), py::arg("m"), py::arg("cap") = 4);
  m.def("root_scan_json",
        [](Int b, Int m_max) { return dump(dedekind::serialize::to_json(dedekind::cyclotomic_root_scan(dedekind::build_invpoly(b), m_max))); },
        py::arg("b"), py::arg("m_max"));

  m.def("kloosterman", [](Int a, Int b, Int mod) { return dedekind::kloosterman::kloosterman_float({a, b, mod}); },
        py::arg("a"), py::arg("b"), py::arg("m"));

  m.def(
      "table1",
      [](Int b_max, bool all_orders, unsigned jobs) {
        std::vector<std::pair<Int, std::vector<Int>>> out;
        py::gil_scoped_release release;
        for (auto& row : conj::table1_reproduce(
                 b_max, {}, all_orders ? conj::OrderFilter::all : conj::OrderFilter::even_only, jobs)) {
          out.emplace_back(row.b, std::move(row.orders));
        }
        return out;
      },
      py::arg("b_max"), py::arg("all_orders") = false, py::arg("jobs") = 1);
  m.def(
      "sweep_json",
      [](const std::string& statement, Int b_max, unsigned jobs) {
        conj::SweepOptions opts;
        opts.jobs = jobs;
        const auto s = conj::parse_statement(statement);
        py::gil_scoped_release release;
        return dump(dedekind::serialize::to_json(conj::sweep(s, b_max, opts)));
      },
      py::arg("statement"), py::arg("b_max"), py::arg("jobs") = 1);

  m.def(
      "find_roots",
      [](Int b, double tol, int max_iter) {
        const auto r = dedekind::numroots::find_roots(dedekind::build_invpoly(b), tol, max_iter);
        return py::make_tuple(r.roots, r.converged, r.residuals);
      },
      py::arg("b"), py::arg("tol") = 1e-12, py::arg("max_iter") = 1000);
}
