#include "thb/turing.hpp"

#include <cmath>

#include "thb/errors.hpp"

namespace thb {

namespace {
constexpr int kMaxWaveNumber = 10000;

void require_n0(const Equilibrium& eq) {
    if (!check_n0(eq)) throw precondition_error("N0 violated: need u*^2 > 2 u* v* - 1 > 0");
}
}  // namespace

TuringThresholds turing_thresholds(const Equilibrium& eq, double d) {
    require_n0(eq);
    if (!(d > 0.0)) throw precondition_error("d must be positive");
    const double u2 = eq.u * eq.u;
    const double uv2 = 2.0 * eq.u * eq.v;
    const double root = std::sqrt(uv2) - 1.0;
    TuringThresholds t;
    t.eps1 = root * root / u2;
    t.eps2_of_d = (uv2 - 1.0) / (kPi * kPi * d + u2);
    t.epsB_of_d = std::min(t.eps1, t.eps2_of_d);
    t.d0 = 2.0 * u2 / (kPi * kPi * root);
    return t;
}

double d_corner(const Equilibrium& eq, int k) {
    require_n0(eq);
    if (k < 0) throw precondition_error("k must be nonnegative");
    if (k == 0) return std::numeric_limits<double>::infinity();
    const double u2 = eq.u * eq.u;
    const double w = 2.0 * eq.u * eq.v - 1.0;
    const double kk = static_cast<double>(k) * k;
    const double kk1 = static_cast<double>(k + 1) * (k + 1);
    // First bracket term read as 1/k^2 (the printed k^2 does not reproduce the
    // curve intersections for k >= 2; 1/k^2 does, and coincides for k = 1).
    const double sum = 1.0 / kk + 1.0 / kk1;
    return u2 / (2.0 * kPi * kPi * w) * (sum + std::sqrt(sum * sum + 4.0 * w / (kk * kk1)));
}

double eps_star(const Equilibrium& eq, double d, int k) {
    require_n0(eq);
    if (k < 1) throw precondition_error("k must be >= 1");
    const double u2 = eq.u * eq.u;
    const double w = 2.0 * eq.u * eq.v - 1.0;
    const double m = d * k * k * kPi * kPi;
    const double d_min = u2 / (w * static_cast<double>(k) * k * kPi * kPi);
    if (!(d > d_min)) throw precondition_error("eps*(k,d) undefined: d <= d_k");
    return (w * m - u2) / (m * (m + u2));
}

TuringCurvePoint first_turing_curve(const Equilibrium& eq, double d) {
    require_n0(eq);
    if (!(d > 0.0)) throw precondition_error("d must be positive");
    double d_hi = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= kMaxWaveNumber; ++k) {
        const double d_lo = d_corner(eq, k);
        if (d >= d_lo && d < d_hi) {
            return {k, d, eps_star(eq, d, k), d_lo, d_hi};
        }
        d_hi = d_lo;
    }
    throw precondition_error("wave number out of range: d below every corner interval");
}

TuringClass classify_turing(const ModelParams& params) {
    params.validate();
    const Equilibrium eq = params.equilibrium();
    require_n0(eq);
    const TuringCurvePoint pt = first_turing_curve(eq, params.d);
    const double rel = (params.eps - pt.eps_star) / pt.eps_star;
    if (std::abs(rel) <= 1e-9) return {TuringVerdict::OnTuringCurve, pt.k1};
    if (rel > 0.0) return {TuringVerdict::StableNoTuring, 0};
    return {TuringVerdict::TuringUnstable, 0};
}

}  // namespace thb
