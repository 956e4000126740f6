#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace z2h {

// Spectral data of the Hodge-de Rham operator on the model neck R x S^2.
// Separation of variables reduces it to the 2x2 systems
//   d/dR + (1/<R>) [[0, lambda], [lambda, H]],  H = R / sqrt(R^2 + 1),
// one per Laplace eigenvalue lambda^2, with matrix eigenvalues
// H/2 +- sqrt(lambda^2 + H^2/4).
struct S2FlowCurve {
    double lambda_sq = 0.0;
    // Eigenvalues of the limiting slice operator at R -> -infty / +infty.
    double start_minus = 0.0, start_plus = 0.0;
    double end_minus = 0.0, end_plus = 0.0;
};

struct S2SpectraReport {
    std::vector<double> functions_spectrum;  // 0, 2, 6, 12, ...
    std::vector<double> oneform_spectrum;    // 1, 5, 11, ...
    std::vector<S2FlowCurve> flows;          // sorted by lambda^2, zero mode first
};

inline double s2_flow_eigenvalue(double lambda_sq, double H, int sign) {
    return 0.5 * H + sign * std::sqrt(lambda_sq + 0.25 * H * H);
}

inline S2SpectraReport s2_neck_spectra(int max_level) {
    if (max_level < 1) throw std::invalid_argument("s2_neck_spectra: max_level must be >= 1");
    S2SpectraReport rep;
    for (int l = 0; l <= max_level; ++l)
        rep.functions_spectrum.push_back(static_cast<double>(l * (l + 1)));
    for (int l = 1; l <= max_level; ++l)
        rep.oneform_spectrum.push_back(static_cast<double>(l * (l + 1) - 1));

    std::vector<double> lambdas;
    for (double v : rep.functions_spectrum)
        if (v > 0) lambdas.push_back(v);
    for (double v : rep.oneform_spectrum) lambdas.push_back(v);
    std::sort(lambdas.begin(), lambdas.end());
    lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());

    S2FlowCurve zero;  // the harmonic mode does not flow
    rep.flows.push_back(zero);
    for (double lsq : lambdas) {
        S2FlowCurve c;
        c.lambda_sq = lsq;
        c.start_minus = s2_flow_eigenvalue(lsq, -1.0, -1);
        c.start_plus = s2_flow_eigenvalue(lsq, -1.0, +1);
        c.end_minus = s2_flow_eigenvalue(lsq, +1.0, -1);
        c.end_plus = s2_flow_eigenvalue(lsq, +1.0, +1);
        rep.flows.push_back(c);
    }
    return rep;
}

struct S2FredholmWindow {
    double mu0 = 0.0;
    double nearest_forbidden = 0.0;
    std::vector<double> forbidden_weights;  // endpoint spectrum + 1/2, |w| <= 3
};

// Fredholm weights avoid (endpoint spectrum + 1/2); the largest symmetric
// admissible window around 0 is (-mu0, mu0) with mu0 the distance to the
// nearest forbidden weight.
inline S2FredholmWindow s2_fredholm_window(int max_level = 12) {
    const S2SpectraReport spec = s2_neck_spectra(max_level);
    std::vector<double> endpoint;
    endpoint.push_back(0.0);
    for (const auto& c : spec.flows) {
        if (c.lambda_sq == 0.0) continue;
        endpoint.push_back(c.start_minus);
        endpoint.push_back(c.start_plus);
        endpoint.push_back(c.end_minus);
        endpoint.push_back(c.end_plus);
    }
    S2FredholmWindow w;
    double best = 1e300;
    for (double e : endpoint) {
        const double f = e + 0.5;
        if (std::abs(f) <= 3.0) w.forbidden_weights.push_back(f);
        if (std::abs(f) < std::abs(best)) best = f;
    }
    std::sort(w.forbidden_weights.begin(), w.forbidden_weights.end());
    w.forbidden_weights.erase(
        std::unique(w.forbidden_weights.begin(), w.forbidden_weights.end(),
                    [](double a, double b) { return std::abs(a - b) < 1e-12; }),
        w.forbidden_weights.end());
    w.nearest_forbidden = best;
    w.mu0 = std::abs(best);
    return w;
}

}  // namespace z2h
