#pragma once

#include <limits>

#include "thb/model.hpp"

namespace thb {

/// Diffusion-independent and diffusion-dependent Turing bounds.
struct TuringThresholds {
    double eps1 = 0.0;       ///< (sqrt(2 u* v*) - 1)^2 / u*^2
    double eps2_of_d = 0.0;  ///< (2 u* v* - 1) / (pi^2 d + u*^2)
    double epsB_of_d = 0.0;  ///< min(eps1, eps2(d))
    double d0 = 0.0;         ///< abscissa where eps2(d) crosses eps1
};

/// Point on the first Turing curve eps*(d) together with its corner interval.
struct TuringCurvePoint {
    int k1 = 0;
    double d = 0.0;
    double eps_star = 0.0;
    double d_lo = 0.0;  ///< d_{k1,k1+1}
    double d_hi = 0.0;  ///< d_{k1-1,k1}, +inf for k1 = 1
};

enum class TuringVerdict { StableNoTuring, OnTuringCurve, TuringUnstable };

struct TuringClass {
    TuringVerdict verdict = TuringVerdict::StableNoTuring;
    int k1 = 0;  // active mode, meaningful for OnTuringCurve
};

TuringThresholds turing_thresholds(const Equilibrium& eq, double d);

/// Turing-Turing corner d_{k,k+1}; returns +inf for k = 0 (convention d_{0,1} = +inf).
double d_corner(const Equilibrium& eq, int k);

/// eps*(k, d); requires d > d_k = u*^2 / ((2 u* v* - 1) k^2 pi^2).
double eps_star(const Equilibrium& eq, double d, int k);

/// First Turing curve: active mode k1 with d in [d_{k1,k1+1}, d_{k1-1,k1}).
TuringCurvePoint first_turing_curve(const Equilibrium& eq, double d);

TuringClass classify_turing(const ModelParams& params);

}  // namespace thb
