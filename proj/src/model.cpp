#include "thb/model.hpp"

#include "thb/errors.hpp"

namespace thb {

void ModelParams::validate() const {
    if (!(a > 0.0) || !(b > 0.0)) throw precondition_error("a and b must be positive");
    if (!(d > 0.0)) throw precondition_error("d must be positive");
    if (!(eps > 0.0)) throw precondition_error("eps must be positive");
    if (!(tau >= 0.0)) throw precondition_error("tau must be nonnegative");
}

Equilibrium ModelParams::equilibrium() const { return thb::equilibrium(a, b); }

Equilibrium equilibrium(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw precondition_error("a and b must be positive");
    const double u = a + b;
    return {u, b / (u * u)};
}

bool check_n0(const Equilibrium& eq) {
    const double uv2 = 2.0 * eq.u * eq.v;
    return eq.u * eq.u > uv2 - 1.0 && uv2 - 1.0 > 0.0;
}

ModeCoeffs mode_coeffs_real(const ModelParams& params, double k) {
    const Equilibrium eq = params.equilibrium();
    const double u2 = eq.u * eq.u;
    const double uv2 = 2.0 * eq.u * eq.v;
    const double mu = k * k * kPi * kPi;  // Laplacian eigenvalue on (0,1)
    ModeCoeffs mc;
    mc.k = k;
    mc.p = (params.eps + 1.0) * params.d * mu + 1.0;
    mc.r = params.eps * params.d * params.d * mu * mu + params.d * mu;
    mc.s = u2 - uv2;
    mc.q = (params.eps * u2 - uv2) * params.d * mu + u2;
    return mc;
}

ModeCoeffs mode_coeffs(const ModelParams& params, int k) {
    if (k < 0) throw precondition_error("wave number must be nonnegative");
    return mode_coeffs_real(params, static_cast<double>(k));
}

cplx char_value(const ModeCoeffs& mc, double tau, cplx lambda) {
    return lambda * lambda + mc.p * lambda + mc.r +
           (mc.s * lambda + mc.q) * std::exp(-lambda * tau);
}

cplx char_value(const ModelParams& params, int k, cplx lambda) {
    return char_value(mode_coeffs(params, k), params.tau, lambda);
}

Mat2c char_matrix(const ModelParams& params, int k, cplx lambda) {
    if (k < 0) throw precondition_error("wave number must be nonnegative");
    const Equilibrium eq = params.equilibrium();
    const double u2 = eq.u * eq.u;
    const double uv2 = 2.0 * eq.u * eq.v;
    const double mu = static_cast<double>(k) * k * kPi * kPi;
    const cplx e = std::exp(-lambda * params.tau);
    return {-params.eps * params.d * mu - 1.0 + uv2 * e - lambda, u2 * e,
            -uv2 * e, -params.d * mu - u2 * e - lambda};
}

}  // namespace thb
