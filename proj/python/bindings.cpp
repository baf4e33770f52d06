#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tvb/abelianize.hpp"
#include "tvb/homomorphisms.hpp"
#include "tvb/presentations.hpp"
#include "tvb/rs_engine.hpp"
#include "tvb/verify.hpp"
#include "tvb/word.hpp"

namespace py = pybind11;

namespace {

tvb::Alphabet alphabet_for(const tvb::Homomorphism& h) {
  if (const auto* c = std::get_if<tvb::ConcreteHom>(&h)) return c->source_alphabet();
  return tvb::Alphabet::DecoratedPL;
}

const char* status_name(tvb::Status s) {
  switch (s) {
    case tvb::Status::Pass: return "PASS";
    case tvb::Status::Fail: return "FAIL";
    case tvb::Status::Skip: return "SKIP";
  }
  return "?";
}

}  // namespace

PYBIND11_MODULE(_tvb, m) {
  m.doc() = "Twisted virtual braid groups: words, homomorphisms, Reidemeister-Schreier rewriting";

  py::register_exception<tvb::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<tvb::NotInKernel>(m, "NotInKernel", PyExc_ValueError);

  m.def(
      "normalize", [](const std::string& word, int n) {
        return tvb::format_word(tvb::reduce(tvb::parse_word(word, n, tvb::Alphabet::Mixed)));
      },
      py::arg("word"), py::arg("n"));

  m.def(
      "image", [](const std::string& hom, int n, const std::string& word) {
        tvb::Homomorphism h = tvb::make_hom(hom, n);
        return tvb::image_string(h, tvb::parse_word(word, n, alphabet_for(h)));
      },
      py::arg("hom"), py::arg("n"), py::arg("word"));

  m.def(
      "in_kernel", [](const std::string& hom, int n, const std::string& word) {
        tvb::Homomorphism h = tvb::make_hom(hom, n);
        return tvb::in_kernel(h, tvb::parse_word(word, n, alphabet_for(h)));
      },
      py::arg("hom"), py::arg("n"), py::arg("word"));

  m.def(
      "rewrite", [](const std::string& into, int n, const std::vector<std::string>& words) {
        tvb::RSContext ctx = tvb::make_context(tvb::parse_kernel_kind(into), n);
        std::vector<std::string> out;
        for (const auto& w : words)
          out.push_back(tvb::format_word(tvb::rewrite_tau(ctx, tvb::parse_word(w, n, ctx.ambient.alphabet))));
        return out;
      },
      py::arg("into"), py::arg("n"), py::arg("words"), "tau of each word; one context is built per call");

  m.def(
      "presentation", [](const std::string& family, int n) {
        return tvb::format_presentation(tvb::build_presentation(family, n));
      },
      py::arg("family"), py::arg("n"));
  m.def(
      "presentation_json", [](const std::string& family, int n) {
        return tvb::presentation_json(tvb::build_presentation(family, n));
      },
      py::arg("family"), py::arg("n"));

  m.def(
      "abelianize", [](const std::string& family, int n) {
        tvb::AbelianInvariants inv = tvb::abelian_invariants(tvb::build_presentation(family, n));
        std::vector<long long> torsion;
        for (const auto& d : inv.torsion) torsion.push_back(static_cast<long long>(d));
        return py::make_tuple(inv.free_rank, torsion, inv.format());
      },
      py::arg("family"), py::arg("n"), "(free rank, torsion factors, text)");

  m.def("check_ids", &tvb::check_ids);
  m.def(
      "verify", [](const std::vector<std::string>& ids, int lo, int hi, std::uint64_t seed) {
        std::vector<tvb::CheckReport> reports;
        {
          py::gil_scoped_release release;
          reports = tvb::run_suite(ids, lo, hi, seed);
        }
        py::list out;
        for (const auto& r : reports) {
          py::dict d;
          d["id"] = r.id;
          d["n"] = r.n;
          d["status"] = status_name(r.status);
          d["details"] = r.details;
          d["counterexample"] = r.counterexample;
          out.append(d);
        }
        return out;
      },
      py::arg("ids"), py::arg("lo"), py::arg("hi"), py::arg("seed") = tvb::kDefaultSeed);
}
