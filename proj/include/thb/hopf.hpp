#pragma once

#include <optional>

#include "thb/model.hpp"
#include "thb/turing.hpp"

namespace thb {

/// Mode-count thresholds for pure-imaginary characteristic roots.
struct HopfThresholds {
    double K0 = 0.0;
    std::optional<double> Kplus;  ///< defined only when (s_k)^2 (eps^2+1) >= 1
    double Kstar = 0.0;
    bool multiple_root_warning = false;  ///< Delta(k) changed sign more than once in (K0, K+)
};

/// Hopf data of a single wave number.
struct HopfMode {
    int k = 0;
    double omega_plus = 0.0;
    std::optional<double> omega_minus;
    double tau_k = 0.0;                  ///< principal critical delay on the omega+ branch
    std::optional<double> tau_k_minus;   ///< principal delay on the omega- branch, if any

    double tau_seq(int j) const { return tau_k + 2.0 * kPi * j / omega_plus; }
    double tau_seq_minus(int j) const;   ///< throws if omega- absent
};

/// (k1,k2)-mode Turing-Hopf codimension-2 point.
struct TuringHopfPoint {
    int k1 = 0;
    int k2 = 0;
    double eps_star = 0.0;
    double tau_star = 0.0;
    double omega_star = 0.0;  ///< omega_{k2}^+ of the unscaled system
};

HopfThresholds hopf_thresholds(const ModelParams& params);

HopfMode hopf_mode(const ModelParams& params, int k);

/// Minimal-delay mode per assumption N3; throws on ties within 1e-10.
struct MinHopfMode {
    int k2 = 0;
    double tau = 0.0;
};
MinHopfMode min_hopf_mode(const ModelParams& params);

/// Sign of d Re(lambda)/d tau at tau_k^{(j)} (or tau_k^{(j-)} on the omega- branch).
int transversality(const ModelParams& params, int k, int j, bool minus_branch = false);

TuringHopfPoint turing_hopf_point(const Equilibrium& eq, double d);

/// Recover (a, b) from an equilibrium: a = u* - v* u*^2, b = v* u*^2.
ModelParams params_from(const Equilibrium& eq, double d, double eps, double tau);

}  // namespace thb
