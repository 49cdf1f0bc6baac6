#include "thb/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "thb/errors.hpp"

namespace thb {

namespace {

constexpr double kBlowUp = 1e6;
constexpr int kMaxRetainedMode = 10;

/// Second-difference Laplacian with ghost-point Neumann closure; annihilates
/// constants exactly.
void laplacian(const std::vector<double>& w, std::vector<double>& out, double inv_dx2) {
    const size_t n = w.size();
    out[0] = 2.0 * (w[1] - w[0]) * inv_dx2;
    for (size_t i = 1; i + 1 < n; ++i) out[i] = (w[i - 1] - 2.0 * w[i] + w[i + 1]) * inv_dx2;
    out[n - 1] = 2.0 * (w[n - 2] - w[n - 1]) * inv_dx2;
}

struct Rhs {
    const ModelParams& p;
    double inv_dx2;
    mutable std::vector<double> lu, lv;

    void operator()(const std::vector<double>& u, const std::vector<double>& v,
                    const std::vector<double>& ud, const std::vector<double>& vd,
                    std::vector<double>& fu, std::vector<double>& fv) const {
        laplacian(u, lu, inv_dx2);
        laplacian(v, lv, inv_dx2);
        const size_t n = u.size();
        for (size_t i = 0; i < n; ++i) {
            const double react = ud[i] * ud[i] * vd[i];
            fu[i] = p.eps * p.d * lu[i] + p.a - u[i] + react;
            fv[i] = p.d * lv[i] + p.b - react;
        }
    }
};

}  // namespace

double CosineSeries::eval(double x) const {
    double s = 0.0;
    for (const Term& t : terms) s += t.amp * std::cos(t.mode * kPi * x);
    return s;
}

double SimConfig::stability_bound() const {
    return 0.4 * dx() * dx() / (params.d * std::max(params.eps, 1.0));
}

double SimConfig::resolve_dt() const {
    const double bound = stability_bound();
    if (dt > 0.0) {
        if (dt > bound * (1.0 + 1e-12))
            throw precondition_error("dt exceeds the diffusion stability bound");
        if (params.tau > 0.0) {
            const double m = std::round(params.tau / dt);
            if (m < 1.0 || std::abs(m * dt - params.tau) > 1e-9 * params.tau)
                throw precondition_error("dt must evenly divide tau");
            return params.tau / m;  // snap away the last-bit remainder
        }
        return dt;
    }
    if (params.tau > 0.0) {
        const double m = std::max(1024.0, std::ceil(params.tau / bound));
        return params.tau / m;
    }
    return std::min(1e-3, bound);
}

void SimConfig::validate() const {
    params.validate();
    if (grid_points < 16) throw precondition_error("grid_points must be at least 16");
    if (!(t_end > 0.0)) throw precondition_error("t_end must be positive");
    if (record_every < 0) throw precondition_error("record_every must be nonnegative");
    resolve_dt();
}

FieldState integrate(const SimConfig& cfg) {
    cfg.validate();
    const int n = cfg.grid_points;
    const double h = cfg.resolve_dt();
    const int m = cfg.params.tau > 0.0
                      ? static_cast<int>(std::round(cfg.params.tau / h))
                      : 0;
    const int rec = cfg.record_every > 0
                        ? cfg.record_every
                        : std::max(1, static_cast<int>(std::round(0.05 / h)));
    const long steps = std::lround(std::ceil(cfg.t_end / h - 1e-9));

    std::vector<double> u(n), v(n);
    for (int i = 0; i < n; ++i) {
        const double x = i * cfg.dx();
        u[i] = cfg.initial_u.eval(x);
        v[i] = cfg.initial_v.eval(x);
    }

    // History ring: states at the last m steps; the initial functions are
    // constant in time on [-tau, 0], so the ring starts filled with t = 0 data.
    std::vector<std::vector<double>> hist_u(std::max(m, 1), u);
    std::vector<std::vector<double>> hist_v(std::max(m, 1), v);

    FieldState fs;
    fs.grid_points = n;
    const auto record = [&](double t) {
        fs.times.push_back(t);
        fs.u.push_back(u);
        fs.v.push_back(v);
        if (!fs.negative_warning)
            for (int i = 0; i < n; ++i)
                if (u[i] < 0.0 || v[i] < 0.0) {
                    fs.negative_warning = true;
                    break;
                }
    };
    record(0.0);

    const Rhs rhs{cfg.params, 1.0 / (cfg.dx() * cfg.dx()),
                  std::vector<double>(n), std::vector<double>(n)};
    std::vector<double> k1u(n), k1v(n), k2u(n), k2v(n), k3u(n), k3v(n), k4u(n), k4v(n);
    std::vector<double> su(n), sv(n);

    for (long step = 0; step < steps; ++step) {
        const int slot = m > 0 ? static_cast<int>(step % m) : 0;
        // All four stages reuse the single sample at t - tau (step-aligned).
        const std::vector<double>& ud = m > 0 ? hist_u[slot] : u;
        const std::vector<double>& vd = m > 0 ? hist_v[slot] : v;

        if (m > 0) {
            rhs(u, v, ud, vd, k1u, k1v);
            for (int i = 0; i < n; ++i) su[i] = u[i] + 0.5 * h * k1u[i], sv[i] = v[i] + 0.5 * h * k1v[i];
            rhs(su, sv, ud, vd, k2u, k2v);
            for (int i = 0; i < n; ++i) su[i] = u[i] + 0.5 * h * k2u[i], sv[i] = v[i] + 0.5 * h * k2v[i];
            rhs(su, sv, ud, vd, k3u, k3v);
            for (int i = 0; i < n; ++i) su[i] = u[i] + h * k3u[i], sv[i] = v[i] + h * k3v[i];
            rhs(su, sv, ud, vd, k4u, k4v);
        } else {
            rhs(u, v, u, v, k1u, k1v);
            for (int i = 0; i < n; ++i) su[i] = u[i] + 0.5 * h * k1u[i], sv[i] = v[i] + 0.5 * h * k1v[i];
            rhs(su, sv, su, sv, k2u, k2v);
            for (int i = 0; i < n; ++i) su[i] = u[i] + 0.5 * h * k2u[i], sv[i] = v[i] + 0.5 * h * k2v[i];
            rhs(su, sv, su, sv, k3u, k3v);
            for (int i = 0; i < n; ++i) su[i] = u[i] + h * k3u[i], sv[i] = v[i] + h * k3v[i];
            rhs(su, sv, su, sv, k4u, k4v);
        }

        if (m > 0) {
            hist_u[slot] = u;  // the slot just consumed becomes the newest entry
            hist_v[slot] = v;
        }
        double amax = 0.0;
        for (int i = 0; i < n; ++i) {
            u[i] += h / 6.0 * (k1u[i] + 2.0 * k2u[i] + 2.0 * k3u[i] + k4u[i]);
            v[i] += h / 6.0 * (k1v[i] + 2.0 * k2v[i] + 2.0 * k3v[i] + k4v[i]);
            amax = std::max(amax, std::max(std::abs(u[i]), std::abs(v[i])));
        }
        const double t = (step + 1) * h;
        if (amax > kBlowUp) throw divergence_error(t, "solution blew up past 1e6");
        if ((step + 1) % rec == 0 || step + 1 == steps) record(t);
    }
    return fs;
}

PatternLabel classify(const FieldState& fs, double analysis_window) {
    if (fs.times.size() < 2) throw precondition_error("not enough recorded frames");
    const double t_last = fs.times.back();
    if (analysis_window > t_last - fs.times.front() + 1e-12)
        throw precondition_error("analysis window exceeds recorded data");
    const double t0 = t_last - analysis_window;
    size_t first = 0;
    while (first < fs.times.size() && fs.times[first] < t0 - 1e-12) ++first;
    const size_t nf = fs.times.size() - first;
    if (nf < 4) throw precondition_error("analysis window holds too few frames");

    const int n = fs.grid_points;
    const int mmax = std::min(kMaxRetainedMode, n / 2);
    // Trapezoid cosine amplitudes a_m(t) of u over the window.
    std::vector<std::vector<double>> amp(mmax + 1, std::vector<double>(nf));
    const double dx = 1.0 / (n - 1);
    for (size_t f = 0; f < nf; ++f) {
        const std::vector<double>& row = fs.u[first + f];
        for (int m = 0; m <= mmax; ++m) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) {
                const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
                s += w * row[i] * std::cos(m * kPi * i * dx);
            }
            amp[m][f] = (m == 0 ? 1.0 : 2.0) * s * dx;
        }
    }

    PatternLabel pl;
    std::vector<double> mean_abs(mmax + 1), ptp(mmax + 1);
    for (int m = 0; m <= mmax; ++m) {
        double sa = 0.0, lo = amp[m][0], hi = amp[m][0];
        for (double a : amp[m]) {
            sa += std::abs(a);
            lo = std::min(lo, a);
            hi = std::max(hi, a);
        }
        mean_abs[m] = sa / nf;
        ptp[m] = hi - lo;
    }
    pl.amplitudes = mean_abs;

    int dominant = 0;
    for (int m = 1; m <= mmax; ++m)
        if (dominant == 0 || mean_abs[m] > mean_abs[dominant]) dominant = m;
    if (dominant > 0 && mean_abs[dominant] > 1e-4) {
        bool dominates = true;
        for (int m = 1; m <= mmax; ++m)
            if (m != dominant && mean_abs[m] * 10.0 > mean_abs[dominant]) dominates = false;
        if (dominates) {
            pl.inhomogeneous = true;
            pl.mode = dominant;
        }
    }

    // Temporal verdict: steady iff every appreciable mode has small relative
    // peak-to-peak variation over the window.
    int osc_mode = -1;
    for (int m = 0; m <= mmax; ++m) {
        if (mean_abs[m] <= 1e-6) continue;
        if (ptp[m] / mean_abs[m] >= 1e-4)
            if (osc_mode < 0 || ptp[m] > ptp[osc_mode]) osc_mode = m;
    }
    if (osc_mode >= 0) {
        pl.periodic = true;
        // Mean spacing of up-crossings of the signal mean, with linear
        // interpolation of the crossing times.
        const std::vector<double>& s = amp[osc_mode];
        double mean = 0.0;
        for (double a : s) mean += a;
        mean /= nf;
        double first_cross = 0.0, last_cross = 0.0;
        int crossings = 0;
        for (size_t f = 1; f < nf; ++f) {
            if (s[f - 1] < mean && s[f] >= mean) {
                const double frac = (mean - s[f - 1]) / (s[f] - s[f - 1]);
                const double tc = fs.times[first + f - 1] +
                                  frac * (fs.times[first + f] - fs.times[first + f - 1]);
                if (crossings == 0) first_cross = tc;
                last_cross = tc;
                ++crossings;
            }
        }
        if (crossings >= 2) pl.period = (last_cross - first_cross) / (crossings - 1);
    }
    return pl;
}

std::vector<SweepResult> sweep(
    const SimConfig& base, const std::vector<std::pair<double, double>>& tau_eps,
    const std::vector<std::pair<CosineSeries, CosineSeries>>& initials,
    double analysis_window) {
    struct Job {
        size_t point, init;
    };
    std::vector<Job> jobs;
    for (size_t p = 0; p < tau_eps.size(); ++p)
        for (size_t i = 0; i < initials.size(); ++i) jobs.push_back({p, i});

    std::vector<SweepResult> results(tau_eps.size());
    for (size_t p = 0; p < tau_eps.size(); ++p) {
        results[p].tau = tau_eps[p].first;
        results[p].eps = tau_eps[p].second;
        results[p].labels.resize(initials.size());
        results[p].errors.resize(initials.size());
    }

    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("THB_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) threads = std::min<unsigned>(threads, static_cast<unsigned>(cap));
    }
    threads = std::min<unsigned>(threads, jobs.size() > 0 ? jobs.size() : 1);

    std::atomic<size_t> next{0};
    const auto worker = [&]() {
        for (size_t j = next.fetch_add(1); j < jobs.size(); j = next.fetch_add(1)) {
            const Job job = jobs[j];
            SimConfig cfg = base;
            cfg.params.tau = tau_eps[job.point].first;
            cfg.params.eps = tau_eps[job.point].second;
            cfg.initial_u = initials[job.init].first;
            cfg.initial_v = initials[job.init].second;
            try {
                const FieldState fs = integrate(cfg);
                const double win =
                    analysis_window > 0.0 ? analysis_window : 0.2 * cfg.t_end;
                results[job.point].labels[job.init] = classify(fs, win);
            } catch (const divergence_error& e) {
                results[job.point].errors[job.init] =
                    "diverged at t = " + std::to_string(e.time);
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();
    return results;
}

}  // namespace thb
