#pragma once

#include <complex>

#include "thb/linalg.hpp"

namespace thb {

inline constexpr double kPi = 3.14159265358979323846;

/// Absolute residual below which a complex number counts as a characteristic root.
inline constexpr double kRootTol = 1e-8;

struct Equilibrium {
    double u = 0.0;  ///< u* = a + b
    double v = 0.0;  ///< v* = b/(a+b)^2
};

/// The five system parameters of the delayed Schnakenberg model on (0,1).
struct ModelParams {
    double a = 0.1;
    double b = 0.9;
    double d = 0.5;    ///< inhibitor diffusion coefficient
    double eps = 0.1;  ///< diffusion ratio
    double tau = 0.0;  ///< gene-expression delay

    void validate() const;  ///< throws precondition_error unless a,b,d,eps > 0 and tau >= 0
    Equilibrium equilibrium() const;
};

Equilibrium equilibrium(double a, double b);

/// N0: u*^2 > 2 u* v* - 1 > 0.
bool check_n0(const Equilibrium& eq);

/// Per-mode coefficients of the characteristic quasi-polynomial
/// D_k(lambda) = lambda^2 + p lambda + r + (s lambda + q) e^{-lambda tau}.
struct ModeCoeffs {
    double k = 0.0;  // wave number (real-valued extension used by threshold solves)
    double p = 0.0;
    double r = 0.0;
    double s = 0.0;
    double q = 0.0;

    double det() const { return r + q; }
    double tr() const { return -(p + s); }
};

ModeCoeffs mode_coeffs(const ModelParams& params, int k);

/// Same formulas with the wave number treated as a real variable.
ModeCoeffs mode_coeffs_real(const ModelParams& params, double k);

/// D_k(lambda, tau, eps) for the unscaled system.
cplx char_value(const ModeCoeffs& mc, double tau, cplx lambda);
cplx char_value(const ModelParams& params, int k, cplx lambda);

/// 2x2 characteristic matrix Delta_k(lambda) of the unscaled linearization;
/// det Delta_k(lambda) = D_k(lambda, tau, eps).
Mat2c char_matrix(const ModelParams& params, int k, cplx lambda);

}  // namespace thb
