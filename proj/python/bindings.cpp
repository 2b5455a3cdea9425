#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ladderprod/decomposer.hpp"
#include "ladderprod/error.hpp"
#include "ladderprod/jacquet.hpp"
#include "ladderprod/verify.hpp"

namespace py = pybind11;
namespace lp = ladderprod;

namespace {

using SegmentList = std::vector<std::pair<int, int>>;

SegmentList to_list(const lp::Multisegment& m) {
  SegmentList out;
  for (const auto& s : m) out.emplace_back(s.begin, s.end);
  return out;
}

lp::Multisegment from_text(const std::string& text) { return lp::parse_multisegment(text); }

py::dict result_dict(const lp::DecompositionResult& r) {
  py::list constituents;
  for (const auto& [w, c] : r.mult) {
    const lp::Multisegment m = r.multisegment(w);
    py::dict d;
    d["multisegment"] = lp::to_string(m);
    d["segments"] = to_list(m);
    d["w"] = lp::to_string(w);
    d["multiplicity"] = c;
    d["width"] = lp::width(m);
    constituents.append(d);
  }
  py::dict out;
  out["lam"] = r.lam.values();
  out["mu"] = r.mu.values();
  out["constituents"] = constituents;
  return out;
}

py::list report_lines(const lp::VerificationReport& r) {
  py::module_ json = py::module_::import("json");
  py::list out;
  for (const auto& line : r.json_lines()) out.append(json.attr("loads")(line.dump()));
  return out;
}

}  // namespace

PYBIND11_MODULE(_ladderprod, m) {
  m.doc() = "Products of ladder representations and their decompositions";

  py::register_exception<lp::InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<lp::Unsupported>(m, "Unsupported", PyExc_NotImplementedError);
  py::register_exception<lp::TheoryViolation>(m, "TheoryViolation", PyExc_RuntimeError);

  m.def("parse", [](const std::string& text) { return to_list(from_text(text)); },
        py::arg("text"), "Segments of a multisegment given as text like \"[0,1]+[1,2]\".");
  m.def("normalize", [](const std::string& text) { return lp::to_string(from_text(text)); },
        py::arg("text"));
  m.def("is_ladder", [](const std::string& text) { return lp::is_ladder(from_text(text)); },
        py::arg("text"));
  m.def("width", [](const std::string& text) { return lp::width(from_text(text)); },
        py::arg("text"));
  m.def("ladder_cover",
        [](const std::string& text) {
          std::vector<std::string> out;
          for (const auto& l : lp::min_ladder_cover(from_text(text))) out.push_back(lp::to_string(l));
          return out;
        },
        py::arg("text"));

  m.def("decompose",
        [](const std::vector<std::string>& factors) {
          std::vector<lp::Multisegment> ms;
          for (const auto& f : factors) ms.push_back(from_text(f));
          py::gil_scoped_release release;
          auto r = lp::product_of_ladders(ms);
          py::gil_scoped_acquire acquire;
          return result_dict(r);
        },
        py::arg("factors"), "Decomposition of a product of ladders.");
  m.def("decompose_irreducibles",
        [](const std::vector<std::string>& factors) {
          std::vector<lp::Multisegment> ms;
          for (const auto& f : factors) ms.push_back(from_text(f));
          return result_dict(lp::product_irreducibles(ms));
        },
        py::arg("factors"));

  m.def("kl_poly",
        [](const std::string& x, const std::string& w) {
          const lp::Permutation pw = lp::parse_permutation(w);
          const lp::Permutation px = lp::parse_permutation(x, pw.size());
          return lp::KLEngine::shared().kl_poly(px, pw).coeffs();
        },
        py::arg("x"), py::arg("w"), "Coefficients of P_{x,w}(q), lowest degree first.");

  m.def("indicator",
        [](const std::string& sigma, const std::string& m1, const std::string& m2) {
          return lp::indicator_multiplicity(from_text(sigma), from_text(m1), from_text(m2));
        },
        py::arg("sigma"), py::arg("m1"), py::arg("m2"));

  m.def("jacquet_pairs",
        [](const std::string& text) {
          std::vector<std::pair<std::string, std::string>> out;
          for (const auto& p : lp::jacquet_pairs_ladder(from_text(text))) {
            out.emplace_back(lp::to_string(p.left), lp::to_string(p.right));
          }
          return out;
        },
        py::arg("ladder"));

  m.def("census",
        [](int n, int kl_limit) {
          const lp::CensusRow row = lp::census(n, kl_limit);
          py::dict d;
          d["n"] = row.n;
          d["avoid_321"] = row.avoid_321;
          d["avoid_321_3412"] = row.avoid_321_3412;
          d["smooth_kl"] = row.smooth_kl < 0 ? py::object(py::none()) : py::int_(row.smooth_kl);
          d["avoid_3412_4231"] = row.avoid_3412_4231;
          d["catalan"] = row.catalan;
          d["fibonacci"] = row.fibonacci;
          d["agree"] = row.agree();
          return d;
        },
        py::arg("n"), py::arg("kl_limit") = 8);

  m.def("verify_identity",
        [](int n, bool keep_all) { return report_lines(lp::verify_identity(n, 1, keep_all)); },
        py::arg("n"), py::arg("keep_all") = false);

  m.def("verify_conjecture",
        [](int max_total, int window, const std::string& mode, int samples, std::uint64_t seed,
           int workers) {
          lp::SweepOptions o;
          o.max_total = max_total;
          o.window = window;
          o.mode = mode;
          o.samples = samples;
          o.seed = seed;
          o.workers = workers;
          lp::VerificationReport r;
          {
            py::gil_scoped_release release;
            r = lp::verify_conjecture(o);
          }
          return report_lines(r);
        },
        py::arg("max_total") = 4, py::arg("window") = 6, py::arg("mode") = "exhaustive",
        py::arg("samples") = 200, py::arg("seed") = 1, py::arg("workers") = 1);

  m.def("load_cache", [](const std::string& path) { return lp::KLEngine::shared().load(path); },
        py::arg("path"));
  m.def("save_cache", [](const std::string& path) { lp::KLEngine::shared().save(path); },
        py::arg("path"));
}
