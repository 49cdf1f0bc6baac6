#include "thb/hopf.hpp"

#include <cmath>

#include "thb/errors.hpp"

namespace thb {

namespace {

double delta_of_k(const ModelParams& params, double k) {
    const ModeCoeffs mc = mode_coeffs_real(params, k);
    const double g = mc.s * mc.s - mc.p * mc.p + 2.0 * mc.r;
    return g * g - 4.0 * (mc.r * mc.r - mc.q * mc.q);
}

/// Principal angle theta in (0, 2pi] with the prescribed (cos, sin) pair, and
/// the corresponding delay theta/omega.
double principal_delay(const ModeCoeffs& mc, double omega) {
    const double den = mc.s * mc.s * omega * omega + mc.q * mc.q;
    const double c = (mc.q * (omega * omega - mc.r) - mc.p * mc.s * omega * omega) / den;
    const double s = (mc.s * omega * (omega * omega - mc.r) + mc.p * mc.q * omega) / den;
    double theta = std::atan2(s, c);
    if (theta <= 0.0) theta += 2.0 * kPi;
    return theta / omega;
}

void require_above_turing_curve(const ModelParams& params) {
    const Equilibrium eq = params.equilibrium();
    if (!check_n0(eq)) throw precondition_error("N0 violated");
    const TuringCurvePoint pt = first_turing_curve(eq, params.d);
    if (params.eps < pt.eps_star * (1.0 - 1e-12))
        throw precondition_error("eps below the first Turing curve eps*(d)");
}

}  // namespace

double HopfMode::tau_seq_minus(int j) const {
    if (!omega_minus || !tau_k_minus)
        throw precondition_error("no omega- branch at this mode");
    return *tau_k_minus + 2.0 * kPi * j / *omega_minus;
}

ModelParams params_from(const Equilibrium& eq, double d, double eps, double tau) {
    const double b = eq.v * eq.u * eq.u;
    return {eq.u - b, b, d, eps, tau};
}

HopfThresholds hopf_thresholds(const ModelParams& params) {
    params.validate();
    require_above_turing_curve(params);
    const Equilibrium eq = params.equilibrium();
    const double u2 = eq.u * eq.u;
    const double uv2 = 2.0 * eq.u * eq.v;
    const double eps = params.eps, d = params.d;

    HopfThresholds t;
    const double g = eps * u2 - uv2 - 1.0;
    t.K0 = std::sqrt(g + std::sqrt(g * g + 4.0 * eps * u2)) / (std::sqrt(2.0 * eps * d) * kPi);

    const double s = u2 - uv2;
    const double disc = s * s * (eps * eps + 1.0) - 1.0;
    if (disc >= 0.0) {
        const double inner = -eps + std::sqrt(disc);
        if (inner > 0.0)
            t.Kplus = std::sqrt(inner) / (kPi * std::sqrt((eps * eps + 1.0) * d));
    }

    if (!t.Kplus || t.K0 >= *t.Kplus) {
        t.Kstar = t.K0;
        return t;
    }

    // Third case: smallest root of Delta(k) in (K0, K+), by scan + bisection.
    const double lo0 = t.K0, hi0 = *t.Kplus;
    const int ns = 256;
    double lo = lo0, hi = hi0;
    int sign_changes = 0;
    bool found = false;
    double prev_k = lo0, prev_v = delta_of_k(params, lo0);
    for (int i = 1; i <= ns; ++i) {
        const double k = lo0 + (hi0 - lo0) * i / ns;
        const double v = delta_of_k(params, k);
        if (prev_v > 0.0 && v <= 0.0) {
            ++sign_changes;
            if (!found) {
                lo = prev_k;
                hi = k;
                found = true;
            }
        } else if (prev_v <= 0.0 && v > 0.0) {
            ++sign_changes;
        }
        prev_k = k;
        prev_v = v;
    }
    if (!found) {
        // Delta(K0) > 0 and Delta(K+) < 0 guarantee a crossing; fall back to endpoints.
        lo = lo0;
        hi = hi0;
    }
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (delta_of_k(params, mid) > 0.0 ? lo : hi) = mid;
    }
    t.Kstar = 0.5 * (lo + hi);
    t.multiple_root_warning = sign_changes > 1;
    return t;
}

HopfMode hopf_mode(const ModelParams& params, int k) {
    if (k < 0) throw precondition_error("wave number must be nonnegative");
    const HopfThresholds th = hopf_thresholds(params);
    if (!(static_cast<double>(k) < th.Kstar))
        throw precondition_error("no pure-imaginary root at this mode");

    const ModeCoeffs mc = mode_coeffs(params, k);
    const double g = mc.s * mc.s - mc.p * mc.p + 2.0 * mc.r;
    const double disc = g * g - 4.0 * (mc.r * mc.r - mc.q * mc.q);
    HopfMode m;
    m.k = k;
    m.omega_plus = std::sqrt(0.5 * (g + std::sqrt(disc)));
    m.tau_k = principal_delay(mc, m.omega_plus);
    if (static_cast<double>(k) > th.K0 && disc > 0.0) {
        const double w2 = 0.5 * (g - std::sqrt(disc));
        if (w2 > 0.0) {
            m.omega_minus = std::sqrt(w2);
            m.tau_k_minus = principal_delay(mc, *m.omega_minus);
        }
    }
    return m;
}

MinHopfMode min_hopf_mode(const ModelParams& params) {
    const HopfThresholds th = hopf_thresholds(params);
    const int kmax = static_cast<int>(std::ceil(th.Kstar)) - 1;
    if (kmax < 0) throw precondition_error("no admissible Hopf mode below K*");
    int best = -1;
    double best_tau = 0.0;
    bool tie = false;
    for (int k = 0; k <= kmax; ++k) {
        if (!(static_cast<double>(k) < th.Kstar)) break;
        const ModeCoeffs mc = mode_coeffs(params, k);
        const double g = mc.s * mc.s - mc.p * mc.p + 2.0 * mc.r;
        const double disc = g * g - 4.0 * (mc.r * mc.r - mc.q * mc.q);
        const double omega = std::sqrt(0.5 * (g + std::sqrt(disc)));
        const double tau = principal_delay(mc, omega);
        if (best < 0 || tau < best_tau - 1e-10) {
            best = k;
            best_tau = tau;
            tie = false;
        } else if (std::abs(tau - best_tau) <= 1e-10) {
            tie = true;
        }
    }
    if (tie) throw precondition_error("assumption N3 fails: minimal delay is not unique");
    return {best, best_tau};
}

int transversality(const ModelParams& params, int k, int j, bool minus_branch) {
    const HopfMode m = hopf_mode(params, k);
    double omega, tau;
    if (minus_branch) {
        if (!m.omega_minus) throw precondition_error("no omega- branch at this mode");
        omega = *m.omega_minus;
        tau = m.tau_seq_minus(j);
    } else {
        omega = m.omega_plus;
        tau = m.tau_seq(j);
    }
    const ModeCoeffs mc = mode_coeffs(params, k);
    const cplx lambda{0.0, omega};
    const cplx e = std::exp(-lambda * tau);
    const cplx num = lambda * (mc.s * lambda + mc.q) * e;
    const cplx den = 2.0 * lambda + mc.p + (mc.s - tau * (mc.s * lambda + mc.q)) * e;
    if (std::abs(den) < 1e-12) throw precondition_error("non-transversal crossing");
    const double re = (num / den).real();
    return re > 0.0 ? 1 : (re < 0.0 ? -1 : 0);
}

TuringHopfPoint turing_hopf_point(const Equilibrium& eq, double d) {
    if (!check_n0(eq)) throw precondition_error("N0 violated");
    const TuringCurvePoint pt = first_turing_curve(eq, d);
    const ModelParams at_curve = params_from(eq, d, pt.eps_star, 0.0);
    const MinHopfMode mh = min_hopf_mode(at_curve);
    const HopfMode m = hopf_mode(at_curve, mh.k2);
    return {pt.k1, mh.k2, pt.eps_star, mh.tau, m.omega_plus};
}

}  // namespace thb
