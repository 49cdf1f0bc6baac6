#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thb/errors.hpp"
#include "thb/hopf.hpp"
#include "thb/normal_form.hpp"
#include "thb/report.hpp"
#include "thb/simulator.hpp"
#include "thb/svg.hpp"
#include "thb/turing.hpp"

using nlohmann::json;
using namespace thb;

namespace {

void emit(const json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

void require_positive(double x, const char* name) {
    if (!(x > 0.0)) throw precondition_error(std::string(name) + " must be a positive real");
}

CosineSeries parse_series(const json& arr) {
    CosineSeries cs;
    for (const json& t : arr) {
        const int mode = t.at("mode").get<int>();
        if (mode < 0) throw precondition_error("initial-data mode must be nonnegative");
        cs.terms.push_back({mode, t.at("amp").get<double>()});
    }
    return cs;
}

SimConfig parse_sim_config(const json& j) {
    SimConfig cfg;
    const json& p = j.at("params");
    cfg.params.a = p.at("a").get<double>();
    cfg.params.b = p.at("b").get<double>();
    cfg.params.d = p.at("d").get<double>();
    cfg.params.eps = p.at("eps").get<double>();
    cfg.params.tau = p.at("tau").get<double>();
    if (j.contains("grid_points")) cfg.grid_points = j["grid_points"].get<int>();
    if (j.contains("dt")) cfg.dt = j["dt"].get<double>();
    if (j.contains("t_end")) cfg.t_end = j["t_end"].get<double>();
    if (j.contains("record_every")) cfg.record_every = j["record_every"].get<int>();
    if (j.contains("initial")) {
        cfg.initial_u = parse_series(j["initial"].at("u"));
        cfg.initial_v = parse_series(j["initial"].at("v"));
    } else {
        const Equilibrium eq = cfg.params.equilibrium();
        cfg.initial_u = CosineSeries::constant(eq.u);
        cfg.initial_v = CosineSeries::constant(eq.v);
    }
    cfg.validate();
    return cfg;
}

json load_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw precondition_error("cannot read config file: " + path);
    json j;
    try {
        f >> j;
    } catch (const json::exception& e) {
        throw precondition_error(std::string("config is not valid JSON: ") + e.what());
    }
    return j;
}

std::string field_csv(const FieldState& fs, const std::vector<std::vector<double>>& field) {
    std::ostringstream out;
    out << "t";
    for (int i = 0; i < fs.grid_points; ++i)
        out << ",x" << fmt12(static_cast<double>(i) / (fs.grid_points - 1));
    out << "\n";
    for (size_t f = 0; f < fs.times.size(); ++f) {
        out << fmt12(fs.times[f]);
        for (double v : field[f]) out << ',' << fmt12(v);
        out << "\n";
    }
    return out.str();
}

int cmd_analyze(double a, double b, double d, const std::string& out) {
    require_positive(a, "--a");
    require_positive(b, "--b");
    require_positive(d, "--d");
    emit(analysis_report(a, b, d), out);
    return 0;
}

int cmd_turing_curve(double a, double b, double d_min, double d_max, int samples,
                     const std::string& out, const std::string& plot) {
    require_positive(a, "--a");
    require_positive(b, "--b");
    if (!(0.0 < d_min && d_min < d_max)) throw precondition_error("need 0 < d-min < d-max");
    if (samples < 2) throw precondition_error("samples must be at least 2");
    const Equilibrium eq = equilibrium(a, b);

    std::ostringstream csv;
    csv << "d,k1,eps_star,eps1,eps2,epsB\n";
    svg::Series curve{.color = "#d62728", .width = 2.0, .label = "eps*(d)"};
    svg::Series l1{.color = "#1f77b4", .dashed = true, .label = "eps1"};
    svg::Series l2{.color = "#2ca02c", .dashed = true, .label = "eps2(d)"};
    for (int i = 0; i < samples; ++i) {
        const double d = d_min + (d_max - d_min) * i / (samples - 1);
        const TuringCurvePoint pt = first_turing_curve(eq, d);
        const TuringThresholds t = turing_thresholds(eq, d);
        csv << fmt12(d) << ',' << pt.k1 << ',' << fmt12(pt.eps_star) << ',' << fmt12(t.eps1)
            << ',' << fmt12(t.eps2_of_d) << ',' << fmt12(t.epsB_of_d) << "\n";
        curve.pts.push_back({d, pt.eps_star});
        l1.pts.push_back({d, t.eps1});
        l2.pts.push_back({d, t.eps2_of_d});
    }
    if (!out.empty()) write_text_file(out, csv.str());
    if (!plot.empty()) {
        std::vector<svg::Marker> corners;
        for (int k = 1; k <= 64; ++k) {
            const double dc = d_corner(eq, k);
            if (dc < d_min) break;
            if (dc <= d_max)
                corners.push_back({dc, eps_star(eq, dc, k),
                                   "#9467bd", "T" + std::to_string(k) + "," + std::to_string(k + 1)});
        }
        write_text_file(plot, svg::plot({curve, l1, l2}, corners,
                                        "First Turing bifurcation curve", "d", "eps"));
    }
    if (out.empty() && plot.empty()) std::cout << csv.str();
    return 0;
}

int cmd_hopf(double a, double b, double d, double eps, const std::string& out) {
    require_positive(a, "--a");
    require_positive(b, "--b");
    require_positive(d, "--d");
    require_positive(eps, "--eps");
    ModelParams params{a, b, d, eps, 0.0};
    json j;
    j["schema"] = "thb/1";
    j["inputs"] = {{"a", round12(a)}, {"b", round12(b)}, {"d", round12(d)}, {"eps", round12(eps)}};
    j["hopf"] = hopf_report(params);
    emit(j, out);
    return 0;
}

int cmd_normal_form(double a, double b, double d, const std::string& out) {
    require_positive(a, "--a");
    require_positive(b, "--b");
    require_positive(d, "--d");
    const Equilibrium eq = equilibrium(a, b);
    if (!check_n0(eq)) throw precondition_error("N0 violated: need u*^2 > 2 u* v* - 1 > 0");
    json j;
    j["schema"] = "thb/1";
    j["inputs"] = {{"a", round12(a)}, {"b", round12(b)}, {"d", round12(d)}};
    j["normal_form"] = normal_form_report(analyze_normal_form(eq, d));
    emit(j, out);
    return 0;
}

int cmd_bifurcation_set(double a, double b, double d, double w, const std::string& out,
                        const std::string& plot) {
    require_positive(a, "--a");
    require_positive(b, "--b");
    require_positive(d, "--d");
    if (!(w > 0.0)) throw precondition_error("empty window: half-width must be positive");
    const Equilibrium eq = equilibrium(a, b);
    if (!check_n0(eq)) throw precondition_error("N0 violated: need u*^2 > 2 u* v* - 1 > 0");
    const NormalFormAnalysis an = analyze_normal_form(eq, d);
    const double ts = an.thp.tau_star, es = an.thp.eps_star;

    double s2 = 0.0, s3 = 0.0, s4 = 0.0;
    for (const BifurcationLine& l : an.lines) {
        if (l.name == "L2") s2 = l.slope;
        if (l.name == "L3") s3 = l.slope;
        if (l.name == "L4") s4 = l.slope;
    }
    const double h = 0.5 * w;
    const std::vector<std::pair<std::string, std::pair<double, double>>> samples = {
        {"D1", {ts - h, es + h}},
        {"D2", {ts + h, es + h}},
        {"D3", {ts + h, es + 0.5 * (s2 + s3) * h}},
        {"D4", {ts + h, es + 0.5 * (s3 + s4) * h}},
        {"D5", {ts + h, es + s4 * h - h}},
        {"D6", {ts - h, es - s2 * h - h}},
    };

    json j;
    j["schema"] = "thb/1";
    j["inputs"] = {{"a", round12(a)}, {"b", round12(b)}, {"d", round12(d)}};
    j["point"] = {{"tau_star", round12(ts)}, {"eps_star", round12(es)}};
    j["normal_form"] = normal_form_report(an);
    json regions = json::array();
    for (const auto& [name, pt] : samples) {
        const RegionPrediction rp = region_of(an.pu, an.lines, an.thp, pt.first, pt.second);
        regions.push_back({{"region", rp.region},
                           {"attractors", rp.attractors},
                           {"sample", {round12(pt.first), round12(pt.second)}},
                           {"outside_validity", rp.outside_validity}});
        if (rp.region != name)
            throw std::runtime_error("region sampling inconsistency at " + name);
    }
    j["regions"] = regions;
    if (an.pu.case_label != "Ia")
        j["warnings"] = {"bifurcation-line structure is only validated for case Ia"};
    emit(j, out);

    if (!plot.empty()) {
        std::vector<svg::Series> ss;
        const auto seg = [&](std::string label, double x0, double y0, double x1, double y1,
                             const char* color, bool dashed) {
            ss.push_back({{{x0, y0}, {x1, y1}}, color, 1.8, dashed, std::move(label)});
        };
        seg("L1", ts, es, ts, es + w, "#1f77b4", false);
        seg("L5", ts, es, ts, es - w, "#1f77b4", true);
        seg("L2", ts, es, ts + w, es + s2 * w, "#2ca02c", false);
        seg("L6", ts, es, ts - w, es - s2 * w, "#2ca02c", true);
        seg("L3", ts, es, ts + w, es + s3 * w, "#d62728", false);
        seg("L4", ts, es, ts + w, es + s4 * w, "#9467bd", false);
        std::vector<svg::Marker> mk = {{ts, es, "#000000", "(tau*, eps*)"}};
        for (const auto& [name, pt] : samples)
            mk.push_back({pt.first, pt.second, "#7f7f7f", name});
        write_text_file(plot, svg::plot(ss, mk, "Bifurcation set near the Turing-Hopf point",
                                        "tau", "eps"));
    }
    return 0;
}

int cmd_simulate(const std::string& config_path, const std::string& prefix, bool plot,
                 double window) {
    const json cj = load_json_file(config_path);
    const SimConfig cfg = parse_sim_config(cj);
    const FieldState fs = integrate(cfg);
    const double win = window > 0.0 ? window : 0.2 * cfg.t_end;
    const PatternLabel pl = classify(fs, win);

    json j;
    j["schema"] = "thb/1";
    j["label"] = pattern_json(pl);
    if (fs.negative_warning)
        j["warnings"] = {"negative concentration values occurred during the run"};
    std::cout << j.dump(2) << "\n";

    if (!prefix.empty()) {
        write_text_file(prefix + ".u.csv", field_csv(fs, fs.u));
        write_text_file(prefix + ".v.csv", field_csv(fs, fs.v));
        write_text_file(prefix + ".label.json", j.dump(2) + "\n");
        if (plot) {
            write_text_file(prefix + ".u.svg", svg::heatmap(fs.times, fs.u, "u(x,t)", "t", "x"));
            write_text_file(prefix + ".v.svg", svg::heatmap(fs.times, fs.v, "v(x,t)", "t", "x"));
        }
    } else if (plot) {
        throw precondition_error("--plot requires --out");
    }
    return 0;
}

int cmd_sweep(const std::string& config_path, double tau_min, double tau_max, int tau_steps,
              double eps_min, double eps_max, int eps_steps, const std::string& out,
              double window) {
    const json cj = load_json_file(config_path);
    const SimConfig base = parse_sim_config(cj);
    if (tau_steps < 1 || eps_steps < 1)
        throw precondition_error("tau-steps and eps-steps must be at least 1");
    if (!(tau_min >= 0.0) || !(eps_min > 0.0))
        throw precondition_error("need tau-min >= 0 and eps-min > 0");

    std::vector<std::pair<CosineSeries, CosineSeries>> initials;
    if (cj.contains("initials")) {
        for (const json& e : cj["initials"])
            initials.push_back({parse_series(e.at("u")), parse_series(e.at("v"))});
    } else {
        initials.push_back({base.initial_u, base.initial_v});
    }
    if (initials.empty()) throw precondition_error("empty initial-data list");

    std::vector<std::pair<double, double>> grid;
    for (int i = 0; i < tau_steps; ++i)
        for (int k = 0; k < eps_steps; ++k)
            grid.push_back({tau_steps == 1 ? tau_min
                                           : tau_min + (tau_max - tau_min) * i / (tau_steps - 1),
                            eps_steps == 1 ? eps_min
                                           : eps_min + (eps_max - eps_min) * k / (eps_steps - 1)});

    const auto results = sweep(base, grid, initials, window);
    std::ostringstream csv;
    csv << "tau,eps,init,spatial,mode,temporal,period,error\n";
    for (const SweepResult& r : results)
        for (size_t i = 0; i < initials.size(); ++i) {
            csv << fmt12(r.tau) << ',' << fmt12(r.eps) << ',' << i << ',';
            if (!r.errors[i].empty()) {
                csv << ",,,," << r.errors[i] << "\n";
                continue;
            }
            const PatternLabel& pl = r.labels[i];
            csv << (pl.inhomogeneous ? "inhomogeneous" : "homogeneous") << ','
                << (pl.inhomogeneous ? std::to_string(pl.mode) : std::string()) << ','
                << (pl.periodic ? "periodic" : "steady") << ','
                << (pl.periodic && pl.period > 0.0 ? fmt12(pl.period) : std::string()) << ",\n";
        }
    if (out.empty())
        std::cout << csv.str();
    else
        write_text_file(out, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bifurcation analysis and simulation of the delayed Schnakenberg system"};
    app.require_subcommand(1);

    double a = 0.1, b = 0.9, d = 0.5, eps = 0.1;
    double d_min = 0.02, d_max = 1.0, half_width = 0.1, window = 0.0;
    double tau_min = 0.0, tau_max = 0.0, eps_min = 0.0, eps_max = 0.0;
    int samples = 200, tau_steps = 1, eps_steps = 1;
    std::string out, plot, config;
    bool plot_flag = false;

    auto* sa = app.add_subcommand("analyze", "Full analysis report as JSON");
    sa->add_option("--a", a);
    sa->add_option("--b", b);
    sa->add_option("--d", d);
    sa->add_option("--out", out);

    auto* st = app.add_subcommand("turing-curve", "First Turing curve sampled over d");
    st->add_option("--a", a);
    st->add_option("--b", b);
    st->add_option("--d-min", d_min);
    st->add_option("--d-max", d_max);
    st->add_option("--samples", samples);
    st->add_option("--out", out);
    st->add_option("--plot", plot);

    auto* sh = app.add_subcommand("hopf", "Hopf thresholds and per-mode table");
    sh->add_option("--a", a);
    sh->add_option("--b", b);
    sh->add_option("--d", d);
    sh->add_option("--eps", eps);
    sh->add_option("--out", out);

    auto* sn = app.add_subcommand("normal-form", "Turing-Hopf normal form at (k1, 0)");
    sn->add_option("--a", a);
    sn->add_option("--b", b);
    sn->add_option("--d", d);
    sn->add_option("--out", out);

    auto* sb = app.add_subcommand("bifurcation-set", "Lines L1..L6 and regions D1..D6");
    sb->add_option("--a", a);
    sb->add_option("--b", b);
    sb->add_option("--d", d);
    sb->add_option("--half-width", half_width);
    sb->add_option("--out", out);
    sb->add_option("--plot", plot);

    auto* ss = app.add_subcommand("simulate", "Integrate one configuration");
    ss->add_option("--config", config)->required();
    ss->add_option("--out", out);
    ss->add_option("--window", window);
    ss->add_flag("--plot", plot_flag);

    auto* sw = app.add_subcommand("sweep", "Grid of simulations over (tau, eps)");
    sw->add_option("--config", config)->required();
    sw->add_option("--tau-min", tau_min)->required();
    sw->add_option("--tau-max", tau_max);
    sw->add_option("--tau-steps", tau_steps);
    sw->add_option("--eps-min", eps_min)->required();
    sw->add_option("--eps-max", eps_max);
    sw->add_option("--eps-steps", eps_steps);
    sw->add_option("--window", window);
    sw->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sa->parsed()) return cmd_analyze(a, b, d, out);
        if (st->parsed()) return cmd_turing_curve(a, b, d_min, d_max, samples, out, plot);
        if (sh->parsed()) return cmd_hopf(a, b, d, eps, out);
        if (sn->parsed()) return cmd_normal_form(a, b, d, out);
        if (sb->parsed()) return cmd_bifurcation_set(a, b, d, half_width, out, plot);
        if (ss->parsed()) return cmd_simulate(config, out, plot_flag, window);
        if (sw->parsed())
            return cmd_sweep(config, tau_min, tau_max, tau_steps, eps_min, eps_max, eps_steps,
                             out, window);
    } catch (const precondition_error& e) {
        std::cerr << error_json("precondition", e.what()).dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << error_json("internal", e.what()).dump(2) << "\n";
        return 1;
    }
    return 1;
}
