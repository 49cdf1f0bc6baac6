#include "thb/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "thb/errors.hpp"
#include "thb/hopf.hpp"
#include "thb/turing.hpp"

namespace thb {

double round12(double x) { return std::strtod(fmt12(x).c_str(), nullptr); }

std::string fmt12(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

json json_complex(cplx z) { return {{"re", round12(z.real())}, {"im", round12(z.imag())}}; }

namespace {

json j_num(double x) { return round12(x); }

json j_vec2(const Vec2c& v) { return {json_complex(v.x), json_complex(v.y)}; }

}  // namespace

json turing_report(const Equilibrium& eq, double d) {
    const TuringThresholds t = turing_thresholds(eq, d);
    const TuringCurvePoint pt = first_turing_curve(eq, d);
    json j;
    j["eps1"] = j_num(t.eps1);
    j["eps2_of_d"] = j_num(t.eps2_of_d);
    j["epsB_of_d"] = j_num(t.epsB_of_d);
    j["d0"] = j_num(t.d0);
    j["first_curve"] = {{"k1", pt.k1},
                        {"d", j_num(pt.d)},
                        {"eps_star", j_num(pt.eps_star)},
                        {"d_lo", j_num(pt.d_lo)},
                        {"d_hi", std::isfinite(pt.d_hi) ? json(j_num(pt.d_hi)) : json()}};
    return j;
}

json hopf_report(const ModelParams& params) {
    const HopfThresholds th = hopf_thresholds(params);
    json j;
    j["K0"] = j_num(th.K0);
    j["Kplus"] = th.Kplus ? json(j_num(*th.Kplus)) : json();
    j["Kstar"] = j_num(th.Kstar);
    if (th.multiple_root_warning) j["multiple_root_warning"] = true;
    json modes = json::array();
    const int kmax = static_cast<int>(std::ceil(th.Kstar)) - 1;
    for (int k = 0; k <= kmax; ++k) {
        if (!(static_cast<double>(k) < th.Kstar)) break;
        const HopfMode m = hopf_mode(params, k);
        json jm;
        jm["k"] = k;
        jm["omega_plus"] = j_num(m.omega_plus);
        jm["tau"] = j_num(m.tau_k);
        jm["tau_seq"] = {j_num(m.tau_seq(0)), j_num(m.tau_seq(1)), j_num(m.tau_seq(2))};
        jm["transversality"] = transversality(params, k, 0);
        if (m.omega_minus) {
            jm["omega_minus"] = j_num(*m.omega_minus);
            jm["tau_minus"] = j_num(*m.tau_k_minus);
        }
        modes.push_back(jm);
    }
    j["modes"] = modes;
    const MinHopfMode mh = min_hopf_mode(params);
    j["min_mode"] = {{"k2", mh.k2}, {"tau", j_num(mh.tau)}};
    return j;
}

json normal_form_report(const NormalFormAnalysis& an) {
    json j;
    j["point"] = {{"k1", an.thp.k1},
                  {"k2", an.thp.k2},
                  {"eps_star", j_num(an.thp.eps_star)},
                  {"tau_star", j_num(an.thp.tau_star)},
                  {"omega_star", j_num(an.thp.omega_star)}};
    j["eigen"] = {{"p1_0", j_num(an.ed.p1)},       {"q1_0", j_num(an.ed.q1)},
                  {"p2_0", json_complex(an.ed.p2)}, {"q2_0", json_complex(an.ed.q2)},
                  {"N1", j_num(an.ed.N1)},          {"N2", json_complex(an.ed.N2)},
                  {"omega0", j_num(an.ed.omega0)}};
    j["h_terms"] = {{"h200_0_at_0", j_vec2(an.ht.h200_0(0.0))},
                    {"h200_0_at_m1", j_vec2(an.ht.h200_0(-1.0))},
                    {"h200_2k1", j_vec2(an.ht.h200_2k1(0.0))},
                    {"h011_0_at_0", j_vec2(an.ht.h011_0(0.0))},
                    {"h011_0_at_m1", j_vec2(an.ht.h011_0(-1.0))},
                    {"h020_0_at_0", j_vec2(an.ht.h020_0(0.0))},
                    {"h020_0_at_m1", j_vec2(an.ht.h020_0(-1.0))},
                    {"h110_k1_at_0", j_vec2(an.ht.h110_k1(0.0))},
                    {"h110_k1_at_m1", j_vec2(an.ht.h110_k1(-1.0))}};
    j["coefficients"] = {{"a1_alpha", {j_num(an.nf.a1_c1), j_num(an.nf.a1_c2)}},
                         {"b2_alpha", {json_complex(an.nf.b2_c1), json_complex(an.nf.b2_c2)}},
                         {"a111", j_num(an.nf.a111)},
                         {"a123", j_num(an.nf.a123)},
                         {"b112", json_complex(an.nf.b112)},
                         {"b223", json_complex(an.nf.b223)}};
    j["planar"] = {{"eps1_alpha", {j_num(an.pu.eps1_alpha[0]), j_num(an.pu.eps1_alpha[1])}},
                   {"eps2_alpha", {j_num(an.pu.eps2_alpha[0]), j_num(an.pu.eps2_alpha[1])}},
                   {"b0", j_num(an.pu.b0)},
                   {"c0", j_num(an.pu.c0)},
                   {"d0", an.pu.d0},
                   {"d0_minus_b0c0", j_num(an.pu.d0_minus_b0c0)},
                   {"sign_re_b223", an.pu.sign_re_b223},
                   {"case", an.pu.case_label}};
    json lines = json::array();
    for (const BifurcationLine& l : an.lines) {
        json jl;
        jl["name"] = l.name;
        jl["vertical"] = l.vertical;
        if (!l.vertical) jl["slope"] = j_num(l.slope);
        jl["half"] = l.vertical ? (l.tau_above ? "eps>eps*" : "eps<eps*")
                                : (l.tau_above ? "tau>tau*" : "tau<tau*");
        lines.push_back(jl);
    }
    j["lines"] = lines;
    return j;
}

json pattern_json(const PatternLabel& pl) {
    json j;
    j["spatial"] = pl.inhomogeneous ? "inhomogeneous" : "homogeneous";
    if (pl.inhomogeneous) j["mode"] = pl.mode;
    j["temporal"] = pl.periodic ? "periodic" : "steady";
    if (pl.periodic && pl.period > 0.0) j["period"] = j_num(pl.period);
    json amps = json::array();
    for (double a : pl.amplitudes) amps.push_back(j_num(a));
    j["amplitudes"] = amps;
    return j;
}

json analysis_report(double a, double b, double d) {
    json j;
    j["schema"] = "thb/1";
    j["inputs"] = {{"a", j_num(a)}, {"b", j_num(b)}, {"d", j_num(d)}};
    json warnings = json::array();

    const Equilibrium eq = equilibrium(a, b);
    j["equilibrium"] = {{"u", j_num(eq.u)}, {"v", j_num(eq.v)}};
    j["N0"] = check_n0(eq);
    if (!check_n0(eq)) throw precondition_error("N0 violated: need u*^2 > 2 u* v* - 1 > 0");

    j["turing"] = turing_report(eq, d);

    const NormalFormAnalysis an = analyze_normal_form(eq, d);
    const ModelParams at_curve = params_from(eq, d, an.thp.eps_star, 0.0);
    j["hopf"] = hopf_report(at_curve);
    j["N3"] = true;  // min_hopf_mode inside the pipeline throws when N3 fails
    j["normal_form"] = normal_form_report(an);

    if (j["hopf"].contains("multiple_root_warning"))
        warnings.push_back("Delta(k) changed sign more than once in (K0, K+); smallest root used");
    if (an.pu.case_label != "Ia")
        warnings.push_back("bifurcation-line structure is only validated for case Ia");
    j["warnings"] = warnings;
    return j;
}

json error_json(const std::string& kind, const std::string& message) {
    return {{"schema", "thb/1"}, {"error", {{"kind", kind}, {"message", message}}}};
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace thb
