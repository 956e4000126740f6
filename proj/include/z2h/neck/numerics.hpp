#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace z2h {

// Raised when an iterative scheme fails to reach its tolerance; mapped to
// exit code 3 by the CLI.
class numerical_error : public std::runtime_error {
  public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

namespace num {

// Nodes/weights for 8-point Gauss-Legendre on [-1, 1].
inline constexpr std::array<double, 8> kGaussX = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
    0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
inline constexpr std::array<double, 8> kGaussW = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

inline double gauss8(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 8; ++i) s += kGaussW[i] * f(mid + half * kGaussX[i]);
    return s * half;
}

// Adaptive composite Gauss: bisect until the two-panel refinement agrees.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-12, double abs_tol = 1e-300, int max_depth = 40) {
    struct Rec {
        double a, b, whole;
        int depth;
    };
    double total = 0.0;
    std::vector<Rec> stack{{a, b, gauss8(f, a, b), 0}};
    while (!stack.empty()) {
        Rec r = stack.back();
        stack.pop_back();
        const double m = 0.5 * (r.a + r.b);
        const double left = gauss8(f, r.a, m);
        const double right = gauss8(f, m, r.b);
        const double refined = left + right;
        if (std::abs(refined - r.whole) <=
                std::max(abs_tol, rel_tol * std::max(1.0, std::abs(refined))) ||
            r.depth >= max_depth) {
            if (r.depth >= max_depth)
                throw numerical_error("integrate: max refinement depth reached");
            total += refined;
        } else {
            stack.push_back({r.a, m, left, r.depth + 1});
            stack.push_back({m, r.b, right, r.depth + 1});
        }
    }
    return total;
}

// Dormand-Prince 5(4) with PI step control for scalar linear problems
// u' = f(s) * u.  Returns samples (s, u) including both endpoints.
struct OdeSample {
    double s;
    double u;
};

inline std::vector<OdeSample> integrate_linear_scalar(const std::function<double(double)>& f,
                                                      double s0, double s1, double u0,
                                                      double rel_tol, double abs_tol,
                                                      double record_step) {
    // Butcher tableau (Dormand-Prince).
    static const double c[7] = {0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
    static const double A[7][6] = {
        {},
        {1.0 / 5},
        {3.0 / 40, 9.0 / 40},
        {44.0 / 45, -56.0 / 15, 32.0 / 9},
        {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
        {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
        {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
    static const double b5[7] = {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84, 0};
    static const double b4[7] = {5179.0 / 57600,    0,           7571.0 / 16695, 393.0 / 640,
                                 -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

    const double dir = s1 >= s0 ? 1.0 : -1.0;
    const double span = std::abs(s1 - s0);
    // The step cap doubles as the sample density for the exponent fits.
    const double h_max = std::min(record_step, span);
    double h = dir * h_max;
    double s = s0, u = u0;
    std::vector<OdeSample> out{{s, u}};
    std::size_t steps = 0;

    auto rhs = [&](double ss, double uu) { return f(ss) * uu; };

    while (dir * (s1 - s) > 1e-14 * span) {
        if (++steps > 2000000) throw numerical_error("integrate_linear_scalar: step limit exceeded");
        if (dir * (s + h - s1) > 0) h = s1 - s;
        double k[7];
        k[0] = rhs(s, u);
        for (int i = 1; i < 7; ++i) {
            double acc = 0;
            for (int j = 0; j < i; ++j) acc += A[i][j] * k[j];
            k[i] = rhs(s + c[i] * h, u + h * acc);
        }
        double u5 = u, u4 = u;
        for (int i = 0; i < 7; ++i) {
            u5 += h * b5[i] * k[i];
            u4 += h * b4[i] * k[i];
        }
        const double sc = abs_tol + rel_tol * std::max(std::abs(u), std::abs(u5));
        const double err = std::abs(u5 - u4) / sc;
        if (err <= 1.0) {
            s += h;
            u = u5;
            out.push_back({s, u});
        }
        const double grow = err > 0 ? 0.9 * std::pow(err, -0.2) : 5.0;
        h *= std::min(5.0, std::max(0.2, grow));
        if (std::abs(h) > h_max) h = dir * h_max;
        if (std::abs(h) < 1e-15 * span)
            throw numerical_error("integrate_linear_scalar: step size underflow");
    }
    return out;
}

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

inline LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 3)
        throw std::invalid_argument("fit_line: need at least 3 points");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
        syy += y[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0) throw std::invalid_argument("fit_line: degenerate abscissae");
    LineFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss_res = 0, ss_tot = 0;
    const double mean_y = sy / n;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double pred = fit.slope * x[i] + fit.intercept;
        ss_res += (y[i] - pred) * (y[i] - pred);
        ss_tot += (y[i] - mean_y) * (y[i] - mean_y);
    }
    fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

}  // namespace num
}  // namespace z2h
