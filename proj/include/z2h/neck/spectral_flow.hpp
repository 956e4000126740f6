#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "z2h/neck/numerics.hpp"

namespace z2h {

// Slice potential of the twisted dbar operator on the scale-invariant neck
// R x S^1: A_d(R) = (d/2) * R / sqrt(R^2 + 1).
inline double slice_potential(int d, double R) {
    return 0.5 * d * R / std::sqrt(R * R + 1.0);
}

// The slice operator i d/dtheta + A_d has eigenvalue curves k + A_d(R),
// k integer, running from k - d/2 at R -> -infty to k + d/2 at R -> +infty.
// Weighted Fredholm theory breaks exactly when the weight line meets a
// limiting eigenvalue; for twist d those sit at +-(m + d/2), m = 0, 1, ....
inline bool is_forbidden_weight(int d, double mu, double eps = 1e-9) {
    const double x = std::abs(mu) - 0.5 * std::abs(d);
    if (x < -eps) return false;                       // inside the central window
    return std::abs(x - std::round(x)) <= eps;        // lands on a limiting eigenvalue
}

struct WeightWindow {
    double lo = 0.0;
    double hi = 0.0;
    int kernel_dim = 0;
    int cokernel_dim = 0;
};

namespace detail {

// Forbidden weights adjacent to an admissible mu.
inline WeightWindow window_around(int d, double mu) {
    if (is_forbidden_weight(d, mu))
        throw std::invalid_argument("non-Fredholm weight mu = " + std::to_string(mu) +
                                    " for twist d = " + std::to_string(d));
    WeightWindow w;
    const double half = 0.5 * std::abs(d);
    if (std::abs(mu) < half) {
        w.lo = -half;
        w.hi = half;
    } else if (mu >= half) {
        w.lo = half + std::floor(mu - half);
        w.hi = w.lo + 1.0;
    } else {
        w.hi = -half - std::floor(-mu - half);
        w.lo = w.hi - 1.0;
    }
    return w;
}

// Kernel elements are the modes u_k = e^{ks} cosh(s)^{-d/2} that stay
// integrable across the whole window.  u_k grows like R^{k - d/2} at +infty
// and |R|^{-(k + d/2)} at -infty, so it is mu-integrable iff
// mu > |k| - d/2; demanding this for every mu in the window gives
// |k| <= w.lo + d/2.  Dimensions are constant on each window by construction.
inline int count_kernel(int d, const WeightWindow& w) {
    const double bound = w.lo + 0.5 * std::abs(d);
    const std::int64_t kmax = static_cast<std::int64_t>(std::floor(bound + 1e-9));
    return kmax >= 0 ? static_cast<int>(2 * kmax + 1) : 0;
}

// The formal adjoint reverses the spectral flow (its modes carry cosh^{+d/2})
// and acts at the reflected weight, so its decaying modes satisfy
// |k| <= -w.hi - d/2.
inline int count_cokernel(int d, const WeightWindow& w) {
    const double bound = -w.hi - 0.5 * std::abs(d);
    const std::int64_t kmax = static_cast<std::int64_t>(std::floor(bound + 1e-9));
    return kmax >= 0 ? static_cast<int>(2 * kmax + 1) : 0;
}

}  // namespace detail

// Kernel/cokernel of dbar on sections of K_N^{d/2} in the weighted spaces of
// the window containing mu.  Throws on forbidden (non-Fredholm) weights.
inline std::pair<int, int> mode_kernel_dimension(int d, double mu) {
    const WeightWindow w = detail::window_around(d, mu);
    return {detail::count_kernel(d, w), detail::count_cokernel(d, w)};
}

struct SpectralFlowReport {
    int d = 0;
    // Limiting spectra are the lattices Z + offset.
    double start_offset = 0.0;  // at R -> -infty: Z - d/2
    double end_offset = 0.0;    // at R -> +infty: Z + d/2
    std::string start_descriptor;
    std::string end_descriptor;
    std::string forbidden_descriptor;
    std::vector<double> forbidden_weights;  // within |mu| <= 3
    std::vector<WeightWindow> windows;      // windows meeting [-3, 3]
};

inline SpectralFlowReport spectral_flow(int d) {
    SpectralFlowReport rep;
    rep.d = d;
    rep.start_offset = -0.5 * d;
    rep.end_offset = 0.5 * d;
    rep.start_descriptor = "Z - " + std::to_string(d) + "/2";
    rep.end_descriptor = "Z + " + std::to_string(d) + "/2";
    rep.forbidden_descriptor =
        "{ +-(m + " + std::to_string(std::abs(d)) + "/2) : m = 0, 1, 2, ... }";

    const double half = 0.5 * std::abs(d);
    for (double m = 0;; m += 1.0) {
        const double f = half + m;
        if (f > 3.0 + 1e-12) break;
        if (f > 0) {
            rep.forbidden_weights.push_back(-f);
            rep.forbidden_weights.push_back(f);
        } else {
            rep.forbidden_weights.push_back(0.0);
        }
    }
    std::sort(rep.forbidden_weights.begin(), rep.forbidden_weights.end());

    auto push_window = [&](double lo, double hi) {
        WeightWindow w;
        w.lo = lo;
        w.hi = hi;
        w.kernel_dim = detail::count_kernel(d, w);
        w.cokernel_dim = detail::count_cokernel(d, w);
        rep.windows.push_back(w);
    };
    if (half > 0) push_window(-half, half);
    for (double lo = half; lo < 3.0 - 1e-12; lo += 1.0) {
        push_window(lo, lo + 1.0);
        push_window(-lo - 1.0, -lo);
    }
    std::sort(rep.windows.begin(), rep.windows.end(),
              [](const WeightWindow& a, const WeightWindow& b) { return a.lo < b.lo; });
    return rep;
}

struct OdeSolveConfig {
    double s_max = 20.0;
    double rel_tol = 1e-10;
    double abs_tol = 1e-300;
    // Exponent fit uses the outer fraction of the domain on each side.
    double fit_fraction = 0.25;
    double record_step = 0.05;
    double min_r_squared = 0.999;
};

struct ModeOdeResult {
    int d = 0;
    int k = 0;
    // Fitted slope a of log|u| vs s near each end: u ~ e^{a s}.  At -infty a
    // positive slope means decay e^{-a |s|}.
    double exponent_plus = 0.0;
    double exponent_minus = 0.0;
    double r2_plus = 0.0;
    double r2_minus = 0.0;
    std::vector<num::OdeSample> samples;  // ordered by s over [-s_max, s_max]
};

// Integrates the radial mode equation (d/ds - k + (d/2) tanh s) u = 0 from
// u(0) = 1 outward in both directions and least-squares fits the asymptotic
// slopes of log|u|.
inline ModeOdeResult integrate_mode_ode(int d, int k, const OdeSolveConfig& cfg = {}) {
    if (!(cfg.rel_tol > 0) || !(cfg.abs_tol > 0))
        throw std::invalid_argument("integrate_mode_ode: tolerances must be positive");
    if (!(cfg.fit_fraction > 0.0 && cfg.fit_fraction < 1.0))
        throw std::invalid_argument("integrate_mode_ode: fit window must lie inside the domain");
    if (1.0 - std::tanh(cfg.s_max) > std::max(cfg.rel_tol, 1e-16))
        throw std::invalid_argument("integrate_mode_ode: s_max too small for the asymptotic regime");
    auto f = [d, k](double s) { return k - 0.5 * d * std::tanh(s); };

    ModeOdeResult res;
    res.d = d;
    res.k = k;
    auto right = num::integrate_linear_scalar(f, 0.0, cfg.s_max, 1.0, cfg.rel_tol, cfg.abs_tol,
                                              cfg.record_step);
    auto left = num::integrate_linear_scalar(f, 0.0, -cfg.s_max, 1.0, cfg.rel_tol, cfg.abs_tol,
                                             cfg.record_step);
    res.samples.assign(left.rbegin(), left.rend());
    res.samples.insert(res.samples.end(), right.begin() + 1, right.end());

    auto fit_side = [&](bool positive) {
        std::vector<double> xs, ys;
        const double cut = cfg.s_max * (1.0 - cfg.fit_fraction);
        for (const auto& sm : res.samples) {
            if ((positive && sm.s >= cut) || (!positive && sm.s <= -cut)) {
                if (sm.u == 0.0) continue;
                xs.push_back(sm.s);
                ys.push_back(std::log(std::abs(sm.u)));
            }
        }
        return num::fit_line(xs, ys);
    };
    auto fp = fit_side(true);
    auto fm = fit_side(false);
    res.exponent_plus = fp.slope;
    res.exponent_minus = fm.slope;
    res.r2_plus = fp.r_squared;
    res.r2_minus = fm.r_squared;
    if ((fp.r_squared < cfg.min_r_squared && std::abs(fp.slope) > 1e-6) ||
        (fm.r_squared < cfg.min_r_squared && std::abs(fm.slope) > 1e-6))
        throw numerical_error("integrate_mode_ode: exponent fit quality below threshold (d=" +
                              std::to_string(d) + ", k=" + std::to_string(k) + ")");
    return res;
}

// Closed-form solution of the mode equation, u(0) = 1.
inline double mode_ode_closed_form(int d, int k, double s) {
    return std::exp(k * s) * std::pow(std::cosh(s), -0.5 * d);
}

}  // namespace z2h
