#include <doctest.h>

#include <cmath>
#include <random>

#ifdef THB_HAVE_EIGEN
#include <Eigen/Eigenvalues>
#endif

#include "thb/errors.hpp"
#include "thb/hopf.hpp"

using namespace thb;

namespace {

const Equilibrium kEq = equilibrium(0.1, 0.9);

ModelParams on_curve_params(double d) {
    const TuringCurvePoint pt = first_turing_curve(kEq, d);
    return params_from(kEq, d, pt.eps_star, 0.0);
}

/// Complex Newton iteration on D_k(lambda) = 0.
cplx newton_root(const ModeCoeffs& mc, double tau, cplx lambda) {
    for (int it = 0; it < 60; ++it) {
        const cplx e = std::exp(-lambda * tau);
        const cplx f = lambda * lambda + mc.p * lambda + mc.r + (mc.s * lambda + mc.q) * e;
        const cplx fp = 2.0 * lambda + mc.p + (mc.s - tau * (mc.s * lambda + mc.q)) * e;
        const cplx step = f / fp;
        lambda -= step;
        if (std::abs(step) < 1e-14) break;
    }
    return lambda;
}

}  // namespace

TEST_CASE("thresholds at the example A (d = 0.5) critical point") {
    const ModelParams p = on_curve_params(0.5);
    const HopfThresholds th = hopf_thresholds(p);
    CHECK(std::abs(th.K0 - 0.2721) < 1e-4);
    CHECK(th.Kstar >= th.K0);
    const HopfMode m0 = hopf_mode(p, 0);
    CHECK(std::abs(m0.omega_plus - 0.9144) < 1e-4);
    CHECK(std::abs(m0.tau_k - 0.2171) < 1e-4);
    ModelParams pc = p;
    pc.tau = m0.tau_k;
    CHECK(std::abs(char_value(pc, 0, cplx(0.0, m0.omega_plus))) < 1e-8);
}

TEST_CASE("critical delays are characteristic roots on every admissible mode") {
    for (double d : {0.05, 0.5}) {
        const ModelParams p = on_curve_params(d);
        const HopfThresholds th = hopf_thresholds(p);
        for (int k = 0; static_cast<double>(k) < th.Kstar; ++k) {
            const HopfMode m = hopf_mode(p, k);
            for (int j = 0; j < 3; ++j) {
                ModelParams pc = p;
                pc.tau = m.tau_seq(j);
                CHECK(std::abs(char_value(pc, k, cplx(0.0, m.omega_plus))) < 1e-8);
            }
            if (m.omega_minus) {
                ModelParams pc = p;
                pc.tau = *m.tau_k_minus;
                CHECK(std::abs(char_value(pc, k, cplx(0.0, *m.omega_minus))) < 1e-8);
            }
        }
    }
}

TEST_CASE("minimal delay mode and monotone principal delays") {
    const ModelParams p = on_curve_params(0.5);
    const MinHopfMode mh = min_hopf_mode(p);
    CHECK(mh.k2 == 0);
    CHECK(std::abs(mh.tau - 0.2171) < 1e-4);
    const HopfThresholds th = hopf_thresholds(p);
    for (int k = 1; static_cast<double>(k) < th.Kstar; ++k)
        CHECK(hopf_mode(p, k).tau_k > mh.tau);
}

TEST_CASE("no pure-imaginary roots beyond K*") {
    const ModelParams p = on_curve_params(0.5);
    const HopfThresholds th = hopf_thresholds(p);
    const int k_bad = static_cast<int>(std::ceil(th.Kstar));
    CHECK_THROWS_AS(hopf_mode(p, k_bad), precondition_error);
}

TEST_CASE("eps below the first Turing curve is rejected") {
    const TuringCurvePoint pt = first_turing_curve(kEq, 0.5);
    const ModelParams p = params_from(kEq, 0.5, pt.eps_star * 0.9, 0.0);
    CHECK_THROWS_AS(hopf_thresholds(p), precondition_error);
}

#ifdef THB_HAVE_EIGEN
TEST_CASE("quartic roots agree with a companion-matrix oracle") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 100; ++trial) {
        const double a = 0.05 + 0.3 * unif(rng);
        const double b = 0.5 + unif(rng);
        const Equilibrium eq = equilibrium(a, b);
        if (!check_n0(eq)) continue;
        const double d = 0.05 + unif(rng);
        TuringCurvePoint pt;
        try {
            pt = first_turing_curve(eq, d);
        } catch (const precondition_error&) {
            continue;
        }
        const ModelParams p = params_from(eq, d, pt.eps_star * (1.0 + unif(rng)), 0.0);
        HopfThresholds th;
        try {
            th = hopf_thresholds(p);
        } catch (const precondition_error&) {
            continue;
        }
        const int k = static_cast<int>(unif(rng) * th.Kstar);
        if (!(static_cast<double>(k) < th.Kstar)) continue;
        const ModeCoeffs mc = mode_coeffs(p, k);
        const double A = mc.p * mc.p - mc.s * mc.s - 2.0 * mc.r;
        const double B = mc.r * mc.r - mc.q * mc.q;

        // omega^4 + A omega^2 + B = 0 via the 4x4 companion matrix
        Eigen::Matrix4d C = Eigen::Matrix4d::Zero();
        C(1, 0) = C(2, 1) = C(3, 2) = 1.0;
        C(0, 3) = -B;
        C(2, 3) = -A;
        const Eigen::Vector4cd ev = Eigen::EigenSolver<Eigen::Matrix4d>(C).eigenvalues();

        const HopfMode m = hopf_mode(p, k);
        std::vector<double> mine = {m.omega_plus};
        if (m.omega_minus) mine.push_back(*m.omega_minus);
        for (double w : mine) {
            double best = 1e9;
            for (int i = 0; i < 4; ++i)
                if (std::abs(ev(i).imag()) < 1e-8)
                    best = std::min(best, std::abs(ev(i).real() - w));
            CHECK(best < 1e-10 * std::max(1.0, w));
        }
        ++checked;
    }
    CHECK(checked == 100);
}
#endif

TEST_CASE("transversality matches root continuation") {
    for (double d : {0.05, 0.5}) {
        const ModelParams p = on_curve_params(d);
        const HopfThresholds th = hopf_thresholds(p);
        for (int k = 0; static_cast<double>(k) < th.Kstar && k < 3; ++k) {
            const HopfMode m = hopf_mode(p, k);
            for (int j = 0; j < 2; ++j) {
                const double tau = m.tau_seq(j);
                const double delta = 1e-5;
                const ModeCoeffs mc = mode_coeffs(p, k);
                const cplx lp = newton_root(mc, tau + delta, cplx(0.0, m.omega_plus));
                const cplx lm = newton_root(mc, tau - delta, cplx(0.0, m.omega_plus));
                const int sign = lp.real() > lm.real() ? 1 : -1;
                CHECK(transversality(p, k, j) == sign);
            }
        }
    }
}
