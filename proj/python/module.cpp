// pybind11 bindings: the main analysis entry points plus a JSON-driven
// simulation interface. Structured reports cross the boundary as JSON text;
// numeric helpers are bound directly.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "thb/errors.hpp"
#include "thb/hopf.hpp"
#include "thb/normal_form.hpp"
#include "thb/report.hpp"
#include "thb/simulator.hpp"

namespace py = pybind11;
using namespace thb;
using nlohmann::json;

namespace {

CosineSeries series_from_json(const json& j) {
    CosineSeries s;
    for (const auto& t : j) s.terms.push_back({t.at("mode").get<int>(), t.at("amp").get<double>()});
    return s;
}

SimConfig config_from_json(const json& j) {
    SimConfig cfg;
    const json& p = j.at("params");
    cfg.params = {p.at("a").get<double>(), p.at("b").get<double>(), p.at("d").get<double>(),
                  p.at("eps").get<double>(), p.at("tau").get<double>()};
    cfg.grid_points = j.value("grid_points", cfg.grid_points);
    cfg.dt = j.value("dt", cfg.dt);
    cfg.t_end = j.value("t_end", cfg.t_end);
    cfg.record_every = j.value("record_every", cfg.record_every);
    const json& init = j.at("initial");
    cfg.initial_u = series_from_json(init.at("u"));
    cfg.initial_v = series_from_json(init.at("v"));
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_thb, m) {
    m.doc() = "Turing-Hopf bifurcation toolkit for the delayed Schnakenberg model";

    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);

    m.def("analyze_json",
          [](double a, double b, double d) { return analysis_report(a, b, d).dump(2); },
          py::arg("a"), py::arg("b"), py::arg("d"),
          "Full analysis report (Turing, Hopf, normal form, unfolding) as JSON text.");

    m.def("equilibrium",
          [](double a, double b) {
              const Equilibrium eq = equilibrium(a, b);
              return std::make_pair(eq.u, eq.v);
          },
          py::arg("a"), py::arg("b"));

    m.def("turing_thresholds_json",
          [](double a, double b, double d) { return turing_report(equilibrium(a, b), d).dump(2); },
          py::arg("a"), py::arg("b"), py::arg("d"));

    m.def("first_turing_curve",
          [](double a, double b, double d) {
              const TuringCurvePoint pt = first_turing_curve(equilibrium(a, b), d);
              return py::make_tuple(pt.k1, pt.eps_star, pt.d_lo, pt.d_hi);
          },
          py::arg("a"), py::arg("b"), py::arg("d"),
          "Active mode and critical eps on the first Turing curve: (k1, eps*, d_lo, d_hi).");

    m.def("eps_star",
          [](double a, double b, double d, int k) { return eps_star(equilibrium(a, b), d, k); },
          py::arg("a"), py::arg("b"), py::arg("d"), py::arg("k"));

    m.def("hopf_json",
          [](double a, double b, double d, double eps) {
              return hopf_report(params_from(equilibrium(a, b), d, eps, 0.0)).dump(2);
          },
          py::arg("a"), py::arg("b"), py::arg("d"), py::arg("eps"));

    m.def("turing_hopf_point",
          [](double a, double b, double d) {
              const TuringHopfPoint t = turing_hopf_point(equilibrium(a, b), d);
              return py::make_tuple(t.k1, t.k2, t.eps_star, t.tau_star, t.omega_star);
          },
          py::arg("a"), py::arg("b"), py::arg("d"),
          "(k1, k2, eps*, tau*, omega*) of the codimension-2 point.");

    m.def("normal_form_json",
          [](double a, double b, double d) {
              return normal_form_report(analyze_normal_form(equilibrium(a, b), d)).dump(2);
          },
          py::arg("a"), py::arg("b"), py::arg("d"));

    m.def("region_of",
          [](double a, double b, double d, double tau, double eps) {
              const NormalFormAnalysis an = analyze_normal_form(equilibrium(a, b), d);
              const RegionPrediction rp = region_of(an.pu, an.lines, an.thp, tau, eps);
              return py::make_tuple(rp.region, rp.attractors, rp.outside_validity);
          },
          py::arg("a"), py::arg("b"), py::arg("d"), py::arg("tau"), py::arg("eps"),
          "Predicted unfolding region at (tau, eps): (region, attractors, outside_validity).");

    m.def("simulate_json",
          [](const std::string& config) {
              const SimConfig cfg = config_from_json(json::parse(config));
              cfg.validate();
              const FieldState fs = integrate(cfg);
              const double window = cfg.t_end * 0.2;
              json out = pattern_json(classify(fs, window));
              out["times"] = fs.times;
              out["u_final"] = fs.u.back();
              out["v_final"] = fs.v.back();
              out["negative_warning"] = fs.negative_warning;
              return out.dump(2);
          },
          py::arg("config"),
          "Runs one simulation from a JSON config; returns the pattern label, the "
          "recorded time stamps and the final fields as JSON text.");
}
