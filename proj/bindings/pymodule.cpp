// Python bindings: thin wrappers over the C++ core.  Structured values
// (posets, series, reports) cross the boundary as plain Python dicts/lists
// mirroring the CLI's JSON wire formats.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "fishburn/ascent.hpp"
#include "fishburn/bijection.hpp"
#include "fishburn/formulas.hpp"
#include "fishburn/harness.hpp"
#include "fishburn/json_io.hpp"
#include "fishburn/poset.hpp"
#include "fishburn/series.hpp"

namespace py = pybind11;
using namespace fishburn;
using nlohmann::json;

namespace {

py::object to_py(const json& j) {
  const auto loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

json from_py(const py::object& obj) {
  const auto dumps = py::module_::import("json").attr("dumps");
  return json::parse(dumps(obj).cast<std::string>());
}

ascent::AscentSequence checked(std::vector<int> entries) {
  auto r = ascent::validate(std::move(entries));
  if (const auto* rej = std::get_if<ascent::Rejection>(&r))
    throw py::value_error("entry " + std::to_string(rej->index) + ": " +
                          rej->reason);
  return std::get<ascent::AscentSequence>(std::move(r));
}

poset::LevelPoset level_poset_from_py(const py::object& obj) {
  const auto sp = json_io::strict_poset_from_json(from_py(obj));
  const auto chain = poset::down_set_chain(sp);
  if (const auto* bad = std::get_if<poset::IncomparableDownSets>(&chain))
    throw py::value_error("poset is not (2+2)-free: elements " +
                          std::to_string(bad->x) + " and " +
                          std::to_string(bad->y) +
                          " have incomparable down-sets");
  return std::get<poset::LevelPoset>(chain);
}

std::vector<std::vector<int>> raw(const std::vector<ascent::AscentSequence>& v) {
  std::vector<std::vector<int>> out;
  out.reserve(v.size());
  for (const auto& a : v) out.push_back(a.entries);
  return out;
}

py::object report_to_py(const report::Report& r) { return to_py(r.to_json()); }

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() =
      "Ascent sequences, (2+2)-free posets, their bijection, and exact "
      "truncated generating-function checks";
  mod.attr("__version__") = "1.0.0";

  // --- ascent sequences ----------------------------------------------------
  mod.def("asc", [](const std::vector<int>& e) { return ascent::asc(e); },
          py::arg("entries"), "Number of strict rises in an integer list");
  mod.def(
      "is_ascent_sequence",
      [](std::vector<int> e) {
        return std::holds_alternative<ascent::AscentSequence>(
            ascent::validate(std::move(e)));
      },
      py::arg("entries"));
  mod.def(
      "validate",
      [](std::vector<int> e) { return checked(std::move(e)).entries; },
      py::arg("entries"),
      "Return the entries unchanged or raise ValueError at the first "
      "violating index");
  mod.def(
      "stats",
      [](std::vector<int> e) {
        return to_py(json_io::stats_to_json(ascent::stats(checked(std::move(e)))));
      },
      py::arg("entries"),
      "The five statistics (length, asc, last, zeros, run)");
  mod.def(
      "enumerate_ascent_sequences",
      [](int n) { return raw(ascent::enumerate_ascent_sequences(n)); },
      py::arg("n"));
  mod.def(
      "enumerate_restricted",
      [](int n) { return raw(ascent::enumerate_restricted(n)); }, py::arg("n"));
  mod.def(
      "is_restricted",
      [](std::vector<int> e) {
        return ascent::is_restricted(checked(std::move(e)));
      },
      py::arg("entries"));
  mod.def(
      "rightmost_maximum",
      [](std::vector<int> e) -> std::optional<std::pair<int, int>> {
        return ascent::rightmost_maximum(checked(std::move(e)));
      },
      py::arg("entries"),
      "(value, 1-based leftmost index) of the qualifying maximum, or None");
  mod.def(
      "glue",
      [](std::vector<int> d1, std::vector<int> d2) {
        return ascent::glue(checked(std::move(d1)), checked(std::move(d2)))
            .entries;
      },
      py::arg("d1"), py::arg("d2"));
  mod.def(
      "split",
      [](std::vector<int> e) {
        auto [d1, d2] = ascent::split(checked(std::move(e)));
        return std::make_pair(d1.entries, d2.entries);
      },
      py::arg("entries"));

  // --- bijection and posets ------------------------------------------------
  mod.def(
      "sequence_to_poset",
      [](std::vector<int> e) {
        return to_py(json_io::level_poset_to_json(
            bijection::sequence_to_poset(checked(std::move(e)))));
      },
      py::arg("entries"),
      "Level-poset dict with keys n, covers, chain, levels");
  mod.def(
      "poset_to_sequence",
      [](const py::object& p) {
        return bijection::poset_to_sequence(level_poset_from_py(p)).entries;
      },
      py::arg("poset"), "Accepts a dict with keys n and covers");
  mod.def(
      "construct_trace",
      [](std::vector<int> e) {
        const auto built = bijection::construct(checked(std::move(e)));
        json steps = json::array();
        for (const auto& s : built.steps)
          steps.push_back(
              {{"rule", bijection::rule_name(s.rule)}, {"level", s.level}});
        return to_py(json{{"poset", json_io::level_poset_to_json(built.poset)},
                          {"steps", steps}});
      },
      py::arg("entries"));
  mod.def(
      "decompose_trace",
      [](const py::object& p) {
        const auto d = bijection::decompose(level_poset_from_py(p));
        json steps = json::array();
        for (const auto& s : d.steps)
          steps.push_back(
              {{"rule", bijection::rule_name(s.rule)}, {"level", s.level}});
        return to_py(json{{"sequence", json_io::sequence_to_json(d.sequence)},
                          {"lds", d.lds},
                          {"steps", steps}});
      },
      py::arg("poset"));
  mod.def(
      "poset_stats",
      [](const py::object& p) {
        return to_py(
            json_io::stats_to_json(poset::poset_stats(level_poset_from_py(p))));
      },
      py::arg("poset"),
      "The five transported statistics (size, levels, minmax, min, lds) "
      "under the shared keys");
  mod.def(
      "contains_two_plus_two",
      [](const py::object& p) {
        return poset::contains_two_plus_two(
            json_io::strict_poset_from_json(from_py(p)));
      },
      py::arg("poset"));
  mod.def(
      "contains_three_plus_one",
      [](const py::object& p) {
        return poset::contains_three_plus_one(
            json_io::strict_poset_from_json(from_py(p)));
      },
      py::arg("poset"));
  mod.def(
      "are_isomorphic",
      [](const py::object& p, const py::object& q) {
        return poset::are_isomorphic(json_io::strict_poset_from_json(from_py(p)),
                                     json_io::strict_poset_from_json(from_py(q)));
      },
      py::arg("p"), py::arg("q"));

  // --- series and closed forms ----------------------------------------------
  const auto series_fn = [](series::Series (*fn)(int)) {
    return [fn](int order) { return to_py(json_io::series_to_json(fn(order))); };
  };
  mod.def("p_t", series_fn(&formulas::p_t), py::arg("order"));
  mod.def("p_tz", series_fn(&formulas::p_tz), py::arg("order"));
  mod.def("p_tz_conjecture", series_fn(&formulas::p_tz_conjecture),
          py::arg("order"));
  mod.def("h_closed", series_fn(&formulas::h_closed), py::arg("order"));
  mod.def("g_oracle", series_fn(&harness::dp_G), py::arg("order"));
  mod.def("h_oracle", series_fn(&harness::dp_H), py::arg("order"));
  mod.def(
      "g1_closed",
      [](int r, int order) {
        return to_py(json_io::series_to_json(formulas::gr_u1(r, order)));
      },
      py::arg("r"), py::arg("order"));

  // --- verification ----------------------------------------------------------
  mod.def(
      "check_lemma2",
      [](int r, int order) { return report_to_py(formulas::check_lemma2(r, order)); },
      py::arg("r"), py::arg("order"));
  mod.def(
      "check_kernel_relation",
      [](int r, int order) {
        return report_to_py(formulas::check_kernel_relation(r, order));
      },
      py::arg("r"), py::arg("order"));
  mod.def(
      "check_theorem_gr",
      [](int r, int order) {
        return report_to_py(formulas::check_theorem_gr(r, order));
      },
      py::arg("r"), py::arg("order"));
  mod.def(
      "check_theorem_main",
      [](int order) { return report_to_py(formulas::check_theorem_main(order)); },
      py::arg("order"));
  mod.def(
      "check_lemma_h",
      [](int order) { return report_to_py(formulas::check_lemma_h(order)); },
      py::arg("order"));
  mod.def(
      "check_psi",
      [](int m, int order) { return report_to_py(formulas::check_psi(m, order)); },
      py::arg("m"), py::arg("order"));
  mod.def(
      "check_pt_from_ptz",
      [](int order) { return report_to_py(formulas::check_pt_from_ptz(order)); },
      py::arg("order"));
  mod.def(
      "check_conjecture",
      [](int order) { return report_to_py(formulas::check_conjecture(order)); },
      py::arg("order"));
  mod.def(
      "verify_lemma1",
      [](int n) { return report_to_py(harness::verify_lemma1(n)); },
      py::arg("n"));
  mod.def(
      "verify_catalan",
      [](int n_max) { return report_to_py(harness::verify_catalan(n_max)); },
      py::arg("n_max"));
  mod.def(
      "verify_restricted_study",
      [](int n) { return report_to_py(harness::verify_restricted_study(n)); },
      py::arg("n"));
  mod.def(
      "verify_violation_yields_31",
      [](int bound) {
        return report_to_py(harness::verify_violation_yields_31(bound));
      },
      py::arg("bound"));
  mod.def(
      "verify_all",
      [](int order, int jobs) {
        json out = json::array();
        for (const auto& r : harness::verify_all(order, jobs))
          out.push_back(r.to_json());
        return to_py(out);
      },
      py::arg("order"), py::arg("jobs") = 0,
      "All suites at the given truncation order; jobs=0 picks the processor "
      "count (output is identical regardless)");
}
