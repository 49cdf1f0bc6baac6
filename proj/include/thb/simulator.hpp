#pragma once

#include <string>
#include <utility>
#include <vector>

#include "thb/model.hpp"

namespace thb {

/// Finite cosine series sum c_m cos(m pi x); the initial data of every run.
struct CosineSeries {
    struct Term {
        int mode = 0;
        double amp = 0.0;
    };
    std::vector<Term> terms;

    double eval(double x) const;
    static CosineSeries constant(double c) { return {{{0, c}}}; }
};

struct SimConfig {
    ModelParams params;
    int grid_points = 100;
    double dt = 0.0;  ///< 0 selects the default rule (tau/m or 1e-3)
    double t_end = 3000.0;
    int record_every = 0;  ///< 0 selects roughly one frame per 0.05 time units
    CosineSeries initial_u, initial_v;

    double dx() const { return 1.0 / (grid_points - 1); }
    /// Explicit-diffusion stability bound 0.4 dx^2 / (d max(eps, 1)).
    double stability_bound() const;
    /// The dt actually used: validates divisibility and the stability bound.
    double resolve_dt() const;
    void validate() const;
};

struct FieldState {
    std::vector<double> times;
    std::vector<std::vector<double>> u, v;  // frame-major, one row per recorded time
    int grid_points = 0;
    bool negative_warning = false;  ///< some recorded value went negative
};

struct PatternLabel {
    bool inhomogeneous = false;
    int mode = 0;  ///< dominant spatial mode, meaningful when inhomogeneous
    bool periodic = false;
    double period = 0.0;  ///< mean up-crossing spacing, 0 if indeterminate
    std::vector<double> amplitudes;  ///< time-averaged |a_m| of u, m = 0..retained
};

FieldState integrate(const SimConfig& cfg);

/// Classifies the final `analysis_window` time units of a run (u field).
PatternLabel classify(const FieldState& fs, double analysis_window);

struct SweepResult {
    double tau = 0.0, eps = 0.0;
    std::vector<PatternLabel> labels;   // one per initial-data pair
    std::vector<std::string> errors;    // per-pair divergence message, empty if ok
};

/// Independent integrations over a (tau, eps) list, each with every initial
/// pair; concurrency capped by THB_THREADS (default: hardware threads).
std::vector<SweepResult> sweep(
    const SimConfig& base, const std::vector<std::pair<double, double>>& tau_eps,
    const std::vector<std::pair<CosineSeries, CosineSeries>>& initials,
    double analysis_window = 0.0);  // 0 -> final 20% of the run

}  // namespace thb
