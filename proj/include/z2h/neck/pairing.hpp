#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "z2h/neck/numerics.hpp"

namespace z2h {

struct ObstructionPairing {
    std::complex<double> with_psi;      // pairing against Psi_ell
    std::complex<double> with_psi_bar;  // pairing against the conjugate element
    double magnitude_scale = 0.0;       // the common radial factor, ~ 1/sqrt(|ell|)
};

// Pairing of the boundary perturbation B(xi) Phi_o with the Bessel cokernel
// elements.  After substituting p = |ell| delta |R|, the normalization
// prefactors collapse to sqrt(2) and the pairing is
//   sqrt(2) e^{-p0} int_{p0/2}^{p0} chi(p) e^{p} / sqrt(p) dp,  p0 = |ell| delta R0,
// evaluated with the exponential scaled into the quadrature.  Endpoint
// dominance gives the value 1/sqrt(p0) (1 + O(1/p0)), i.e. the pairing
// scales like 1/sqrt(|ell|) at fixed delta R0.  The 2x2 structure in
// (xi_1, xi_2) is ((xi1 + i xi2) conj(c), (xi1 - i xi2) conj(d)).
inline ObstructionPairing obstruction_pairing(std::int64_t ell, double delta, double R0,
                                              std::complex<double> c, std::complex<double> d,
                                              std::complex<double> xi1, std::complex<double> xi2) {
    if (ell == 0) throw std::invalid_argument("obstruction_pairing: ell must be nonzero");
    if (std::norm(c) + std::norm(d) <= 0.0)
        throw std::invalid_argument("obstruction_pairing: spinor constants must not both vanish");
    const double p0 = std::abs(static_cast<double>(ell)) * delta * R0;
    if (p0 <= 2.0) throw std::invalid_argument("obstruction_pairing: |ell| delta R0 too small");

    // chi: 1 on the outer quarter [3/4 p0, p0], smooth cosine taper down to
    // p0/2 (the support window of the cutoff in the perturbation).
    auto chi = [p0](double p) {
        if (p >= 0.75 * p0) return 1.0;
        if (p <= 0.5 * p0) return 0.0;
        const double t = (p - 0.5 * p0) / (0.25 * p0);
        return 0.5 * (1.0 - std::cos(t * std::acos(-1.0)));
    };
    auto integrand = [&](double p) { return chi(p) * std::exp(p - p0) / std::sqrt(p); };
    const double scale = std::sqrt(2.0) * num::integrate(integrand, 0.5 * p0, p0, 1e-12);

    ObstructionPairing out;
    const std::complex<double> i(0.0, 1.0);
    out.with_psi = (xi1 + i * xi2) * std::conj(c) * scale;
    out.with_psi_bar = (xi1 - i * xi2) * std::conj(d) * scale;
    out.magnitude_scale = scale;
    return out;
}

inline std::int64_t index_3d_cutoff(double delta) {
    if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("index_3d: need 0 < delta <= 1");
    return static_cast<std::int64_t>(std::floor(1.0 / delta));
}

// Ind_C of the torus-neck Dirac operator under the mixed boundary condition:
// -(4L + 2) with L = floor(1/delta); equivalently minus the 2(2L+1)
// orthogonality constraints, two per fiber mode |ell| <= L.
inline std::int64_t index_3d(double delta) {
    const std::int64_t L = index_3d_cutoff(delta);
    return -(4 * L + 2);
}

inline std::int64_t index_3d_constraint_count(double delta) {
    return 2 * (2 * index_3d_cutoff(delta) + 1);
}

enum class ErrorRegime { SpinorNeckStretch, OneFormPinch, TorusPinch };

struct ErrorRatePrediction {
    ErrorRegime regime = ErrorRegime::SpinorNeckStretch;
    double parameter = 0.0;  // T for the stretch regime, delta otherwise
    double mu = 0.0;
    double predicted_norm_bound = 0.0;
    bool error_vanishes = true;
    std::string note;
};

// Approximate-solution error rates (unit constants):
//   spinor neck stretch:  C / T
//   1-form pinch:         C delta^{1 - mu}
//   torus pinch:          C delta^{-mu/2} / log(1/delta), valid for mu <= 0
inline ErrorRatePrediction error_rate(ErrorRegime regime, double parameter, double mu) {
    ErrorRatePrediction p;
    p.regime = regime;
    p.parameter = parameter;
    p.mu = mu;
    switch (regime) {
        case ErrorRegime::SpinorNeckStretch:
            if (!(parameter > 0)) throw std::invalid_argument("error_rate: T must be positive");
            p.predicted_norm_bound = 1.0 / parameter;
            p.note = "bound C/T";
            break;
        case ErrorRegime::OneFormPinch:
            if (!(parameter > 0 && parameter < 1))
                throw std::invalid_argument("error_rate: delta must lie in (0,1)");
            if (mu >= 1.0) {
                p.error_vanishes = false;
                p.note = "error does not vanish: mu >= 1";
                p.predicted_norm_bound = std::pow(parameter, 1.0 - mu);
                break;
            }
            p.predicted_norm_bound = std::pow(parameter, 1.0 - mu);
            p.note = "bound C delta^{1-mu}";
            break;
        case ErrorRegime::TorusPinch:
            if (!(parameter > 0 && parameter < 1))
                throw std::invalid_argument("error_rate: delta must lie in (0,1)");
            p.predicted_norm_bound =
                std::pow(parameter, -0.5 * mu) / std::log(1.0 / parameter);
            if (mu > 0) {
                p.error_vanishes = false;
                p.note = "error does not vanish: positive weight in the torus regime";
            } else {
                p.note = "bound C delta^{-mu/2} / log(1/delta)";
            }
            break;
    }
    return p;
}

// Model quadratures for the two pinch regimes, used to cross-check the
// predicted exponents numerically.
//
// 1-form pinch: squared error mass int_{c delta}^{2 c delta} (delta^{-2} + 1)
// rho^{-mu} rho^2 drho ~ delta^{1 - mu}.
inline double oneform_pinch_error_quadrature(double delta, double mu, double c0 = 1.0) {
    auto f = [&](double rho) {
        return (1.0 / (delta * delta) + 1.0) * std::pow(rho, 2.0 - mu);
    };
    return num::integrate(f, c0 * delta, 2.0 * c0 * delta, 1e-12);
}

// Torus pinch: squared error of the log cutoff,
// (1/log^2(1/delta)) int_{delta^{3/4}}^{delta^{1/2}} rho^{-1 - 2 mu} drho;
// its square root carries the delta^{-mu/2} / log(1/delta) rate.
inline double torus_pinch_error_quadrature(double delta, double mu) {
    const double lg = std::log(1.0 / delta);
    auto f = [&](double rho) { return std::pow(rho, -1.0 - 2.0 * mu); };
    return num::integrate(f, std::pow(delta, 0.75), std::sqrt(delta), 1e-12) / (lg * lg);
}

}  // namespace z2h
