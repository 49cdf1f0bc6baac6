#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "thb/errors.hpp"
#include "thb/hopf.hpp"
#include "thb/simulator.hpp"

using namespace thb;

namespace {
SimConfig base_config() {
    SimConfig cfg;
    cfg.params = {0.1, 0.9, 0.5, 0.15, 0.2};
    cfg.grid_points = 32;
    cfg.t_end = 2.0;
    cfg.initial_u = CosineSeries::constant(1.0);
    cfg.initial_v = CosineSeries::constant(0.9);
    return cfg;
}
}  // namespace

TEST_CASE("equilibrium initial data stay put to machine precision") {
    const FieldState fs = integrate(base_config());
    double dev = 0.0;
    for (size_t f = 0; f < fs.times.size(); ++f)
        for (int i = 0; i < fs.grid_points; ++i) {
            dev = std::max(dev, std::abs(fs.u[f][i] - 1.0));
            dev = std::max(dev, std::abs(fs.v[f][i] - 0.9));
        }
    CHECK(dev < 1e-10);
    CHECK_FALSE(fs.negative_warning);
}

TEST_CASE("constant-in-space data remain constant in space") {
    SimConfig cfg = base_config();
    cfg.initial_u = CosineSeries::constant(1.3);  // off equilibrium
    cfg.initial_v = CosineSeries::constant(0.7);
    const FieldState fs = integrate(cfg);
    for (size_t f = 0; f < fs.times.size(); ++f)
        for (int i = 1; i < fs.grid_points; ++i) {
            CHECK(fs.u[f][i] == fs.u[f][0]);
            CHECK(fs.v[f][i] == fs.v[f][0]);
        }
}

TEST_CASE("mirror symmetry x -> 1-x") {
    SimConfig cfg = base_config();
    cfg.t_end = 5.0;
    cfg.initial_u = {{{0, 1.0}, {1, 0.05}, {2, 0.03}}};
    cfg.initial_v = {{{0, 0.9}, {1, -0.04}}};
    const FieldState fs = integrate(cfg);

    SimConfig mcfg = cfg;  // mirrored data flip the sign of odd modes
    mcfg.initial_u = {{{0, 1.0}, {1, -0.05}, {2, 0.03}}};
    mcfg.initial_v = {{{0, 0.9}, {1, 0.04}}};
    const FieldState mfs = integrate(mcfg);

    const int n = cfg.grid_points;
    double dev = 0.0;
    for (size_t f = 0; f < fs.times.size(); ++f)
        for (int i = 0; i < n; ++i) {
            dev = std::max(dev, std::abs(fs.u[f][i] - mfs.u[f][n - 1 - i]));
            dev = std::max(dev, std::abs(fs.v[f][i] - mfs.v[f][n - 1 - i]));
        }
    CHECK(dev < 1e-10);
}

TEST_CASE("time step validation") {
    SimConfig cfg = base_config();
    cfg.dt = cfg.params.tau / 3.0000001;  // does not divide tau
    CHECK_THROWS_AS(cfg.validate(), precondition_error);
    cfg.dt = 1.0;  // above the stability bound
    CHECK_THROWS_AS(cfg.validate(), precondition_error);
    cfg.dt = 0.0;
    const double h = cfg.resolve_dt();
    CHECK(h <= cfg.stability_bound() * (1.0 + 1e-12));
    CHECK(std::abs(std::round(cfg.params.tau / h) * h - cfg.params.tau) < 1e-12);
    cfg.grid_points = 8;
    CHECK_THROWS_AS(cfg.validate(), precondition_error);
}

TEST_CASE("blow-up raises a divergence error with a time stamp") {
    SimConfig cfg = base_config();
    cfg.initial_u = CosineSeries::constant(5e4);
    cfg.initial_v = CosineSeries::constant(5e4);
    try {
        integrate(cfg);
        FAIL("expected divergence");
    } catch (const divergence_error& e) {
        CHECK(e.time > 0.0);
        CHECK(e.time <= cfg.t_end);
    }
}

TEST_CASE("negative values warn instead of failing") {
    SimConfig cfg = base_config();
    cfg.initial_u = {{{0, 0.05}, {1, 0.1}}};  // dips below zero at x = 1
    cfg.initial_v = CosineSeries::constant(0.9);
    cfg.t_end = 0.5;
    const FieldState fs = integrate(cfg);
    CHECK(fs.negative_warning);
}

TEST_CASE("classification of synthetic fields") {
    const int n = 41;
    const double period = 7.0;
    FieldState fs;
    fs.grid_points = n;
    for (int f = 0; f <= 4000; ++f) {
        const double t = f * 0.05;
        fs.times.push_back(t);
        std::vector<double> u(n), v(n, 1.0);
        for (int i = 0; i < n; ++i) {
            const double x = static_cast<double>(i) / (n - 1);
            u[i] = 1.0 + 0.3 * std::cos(2.0 * kPi * x) * std::cos(2.0 * kPi * t / period);
        }
        fs.u.push_back(u);
        fs.v.push_back(v);
    }
    const PatternLabel pl = classify(fs, 60.0);
    CHECK(pl.inhomogeneous);
    CHECK(pl.mode == 2);
    CHECK(pl.periodic);
    CHECK(std::abs(pl.period - period) < 0.02 * period);

    // a frozen copy of the last frame is steady and inhomogeneous
    FieldState steady;
    steady.grid_points = n;
    for (int f = 0; f <= 1200; ++f) {
        steady.times.push_back(f * 0.05);
        steady.u.push_back(fs.u.front());
        steady.v.push_back(fs.v.front());
    }
    const PatternLabel ps = classify(steady, 50.0);
    CHECK(ps.inhomogeneous);
    CHECK(ps.mode == 2);
    CHECK_FALSE(ps.periodic);

    CHECK_THROWS_AS(classify(fs, 1e6), precondition_error);
}

TEST_CASE("sweep runs the grid and respects THB_THREADS") {
    setenv("THB_THREADS", "2", 1);
    SimConfig base = base_config();
    base.t_end = 1.0;
    const std::vector<std::pair<double, double>> grid = {
        {0.1, 0.15}, {0.2, 0.15}, {0.1, 0.2}, {0.2, 0.2}};
    std::vector<std::pair<CosineSeries, CosineSeries>> inits = {
        {CosineSeries::constant(1.0), CosineSeries::constant(0.9)},
        {CosineSeries::constant(5e4), CosineSeries::constant(5e4)},  // diverges
    };
    const auto res = sweep(base, grid, inits, 0.5);
    REQUIRE(res.size() == 4);
    for (const SweepResult& r : res) {
        CHECK(r.errors[0].empty());
        CHECK_FALSE(r.labels[0].inhomogeneous);
        CHECK_FALSE(r.errors[1].empty());  // divergence recorded, not fatal
    }
    unsetenv("THB_THREADS");
}
