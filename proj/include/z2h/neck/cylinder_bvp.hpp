#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "z2h/neck/numerics.hpp"
#include "z2h/neck/spectral_flow.hpp"

namespace z2h {

// Finite-cylinder model data for the twisted Dirac operator on
// N_{R0} = [-R0, R0] x S^1.
struct NeckModel2D {
    int d = 1;
    double mu = 0.0;
    double R0 = 50.0;
};

enum class BoundaryCondition {
    SelfAdjointBlack,  // (i): only the displayed black modes are free
    MatchedBlue        // (ii): the four blue modes carry end-matching constraints
};

struct CylinderBvpResult {
    int kernel_dim = 0;
    int cokernel_dim = 0;
    double sigma_max = 0.0;
    double largest_zero_sigma = 0.0;    // largest singular value counted as zero
    double smallest_nonzero_sigma = 0.0;
    double gap = 0.0;                   // smallest_nonzero / largest_zero
    std::vector<double> zero_sigmas;
};

namespace detail {

// Boundary role of a single scalar mode at one cylinder end.
enum class ModeRole { Free, Zero, Matched };

// Fourier display for d = 1 in the gamma(dt) trivialization: the alpha
// component allows modes k <= 0 at +R0 and k >= -1 at -R0; beta allows
// k >= 0 at +R0 and k <= 1 at -R0.  Blue (threshold) modes are alpha_0,
// alpha_{-1}, beta_0, beta_1.
inline ModeRole alpha_role_plus(std::int64_t k, BoundaryCondition bc) {
    if (k >= 1) return ModeRole::Zero;
    if (k == 0) return bc == BoundaryCondition::MatchedBlue ? ModeRole::Matched : ModeRole::Zero;
    return ModeRole::Free;
}
inline ModeRole alpha_role_minus(std::int64_t k, BoundaryCondition bc) {
    if (k <= -2) return ModeRole::Zero;
    if (k == -1) return bc == BoundaryCondition::MatchedBlue ? ModeRole::Matched : ModeRole::Zero;
    return ModeRole::Free;
}
inline ModeRole beta_role_plus(std::int64_t k, BoundaryCondition bc) {
    if (k <= -1) return ModeRole::Zero;
    if (k == 0) return bc == BoundaryCondition::MatchedBlue ? ModeRole::Matched : ModeRole::Zero;
    return ModeRole::Free;
}
inline ModeRole beta_role_minus(std::int64_t k, BoundaryCondition bc) {
    if (k >= 2) return ModeRole::Zero;
    if (k == 1) return bc == BoundaryCondition::MatchedBlue ? ModeRole::Matched : ModeRole::Zero;
    return ModeRole::Free;
}

// One scalar first-order mode problem u' = f(s) u on the s-grid with a single
// boundary row.  Rows are one-cell transfer relations
// u_{j+1} - exp(int f) u_j = 0 with the integral done by Gauss quadrature, so
// the only discretization error is quadrature roundoff and true kernel
// vectors sit at machine-zero singular values.
inline Eigen::MatrixXd scalar_mode_matrix(const std::function<double(double)>& f, double s0,
                                          int cells, ModeRole at_plus, ModeRole at_minus) {
    const int n = cells + 1;
    const double h = 2.0 * s0 / cells;
    int rows = cells;
    const bool matched = at_plus == ModeRole::Matched || at_minus == ModeRole::Matched;
    rows += (at_plus == ModeRole::Zero) + (at_minus == ModeRole::Zero) + (matched ? 1 : 0);
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(rows, n);
    for (int j = 0; j < cells; ++j) {
        const double a = -s0 + j * h;
        const double b = a + h;
        const double expo = num::gauss8(f, a, b);
        A(j, j + 1) = 1.0;
        A(j, j) = -std::exp(expo);
    }
    int r = cells;
    if (at_minus == ModeRole::Zero) A(r++, 0) = 1.0;
    if (at_plus == ModeRole::Zero) A(r++, n - 1) = 1.0;
    if (matched) {
        A(r, n - 1) = 1.0;
        A(r, 0) = -1.0;
    }
    return A;
}

}  // namespace detail

// Kernel/cokernel count for the d = 1 Dirac operator on the finite cylinder
// under APS-type boundary conditions.  The operator is off-diagonal, so each
// Fourier mode contributes two decoupled scalar problems:
//   alpha_k:  d/ds alpha = (k + 1 - tanh(s)/2) alpha
//   beta_k:   d/ds beta  = (1 - k - tanh(s)/2) beta
// over s in [-arcsinh(R0), arcsinh(R0)].  Numerically-zero singular values
// (threshold 1e-8 x leading) count kernel dimensions; the transpose count
// gives the cokernel.
inline CylinderBvpResult finite_cylinder_bvp(const NeckModel2D& model, BoundaryCondition bc,
                                             std::int64_t mode_range = 6, int cells = 48) {
    if (model.d != 1)
        throw std::invalid_argument("finite_cylinder_bvp: boundary data is specified for d = 1");
    if (model.R0 <= 1.0) throw std::invalid_argument("finite_cylinder_bvp: need R0 > 1");
    if (is_forbidden_weight(model.d, model.mu))
        throw std::invalid_argument("finite_cylinder_bvp: non-Fredholm weight");

    const double s0 = std::asinh(model.R0);

    std::vector<double> all_sigmas;
    double sigma_max = 0.0;
    std::vector<Eigen::MatrixXd> blocks;
    for (std::int64_t k = -mode_range; k <= mode_range; ++k) {
        auto f_alpha = [k](double s) { return static_cast<double>(k) + 1.0 - 0.5 * std::tanh(s); };
        auto f_beta = [k](double s) { return 1.0 - static_cast<double>(k) - 0.5 * std::tanh(s); };
        blocks.push_back(detail::scalar_mode_matrix(f_alpha, s0, cells,
                                                    detail::alpha_role_plus(k, bc),
                                                    detail::alpha_role_minus(k, bc)));
        blocks.push_back(detail::scalar_mode_matrix(f_beta, s0, cells,
                                                    detail::beta_role_plus(k, bc),
                                                    detail::beta_role_minus(k, bc)));
    }
    std::vector<Eigen::VectorXd> svs;
    for (const auto& A : blocks) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
        svs.push_back(svd.singularValues());
        if (svs.back().size() > 0) sigma_max = std::max(sigma_max, svs.back()(0));
    }
    CylinderBvpResult res;
    res.sigma_max = sigma_max;
    const double threshold = 1e-8 * sigma_max;
    double largest_zero = 0.0;
    double smallest_nonzero = sigma_max;
    int zeros = 0;
    for (const auto& sv : svs) {
        for (Eigen::Index i = 0; i < sv.size(); ++i) {
            const double s = sv(i);
            if (s < threshold) {
                ++zeros;
                largest_zero = std::max(largest_zero, s);
                res.zero_sigmas.push_back(s);
            } else {
                smallest_nonzero = std::min(smallest_nonzero, s);
            }
        }
    }
    res.kernel_dim = zeros;
    // Every block matrix is square, so left and right null spaces agree in
    // dimension; with the self-adjoint boundary conditions this is the
    // cokernel count.
    res.cokernel_dim = zeros;
    res.largest_zero_sigma = largest_zero;
    res.smallest_nonzero_sigma = smallest_nonzero;
    res.gap = largest_zero > 0 ? smallest_nonzero / largest_zero
                               : smallest_nonzero / (1e-300 + largest_zero);
    if (zeros > 0 && res.gap < 1e3)
        throw numerical_error(
            "finite_cylinder_bvp: singular values do not separate into clusters; "
            "increase the cell count");
    return res;
}

struct CokernelNormProfile {
    double weighted_norm = 0.0;        // R^mu L^2 norm of kappa_dagger, O(1) in R0
    double boundary_fraction = 0.0;    // share of the squared norm with |R| > R0/2
    double outside_fixed_fraction = 0.0;  // share with |R| > R1_fixed
    double R1_fixed = 10.0;
};

// kappa_dagger = R^{2 mu} kappa_o / R0^{1/2 + mu} with kappa_o ~ <R>^{-1/2};
// its weighted squared density is <R>^{2 mu} dR / R0^{1 + 2 mu}.  The total is
// bounded independent of R0 while any fixed center window carries a vanishing
// share, which is the boundary-concentration statement.
inline CokernelNormProfile cokernel_norm_profile(double mu, double R0, double R1_fixed = 10.0) {
    if (!(mu > -0.5 && mu <= 0.0))
        throw std::invalid_argument("cokernel_norm_profile: need -1/2 < mu <= 0");
    if (R0 <= 2 * R1_fixed) R1_fixed = R0 / 4.0;
    auto density = [mu](double R) { return std::pow(1.0 + R * R, mu); };
    const double two_pi = 2.0 * std::acos(-1.0);
    const double scale = two_pi / std::pow(R0, 1.0 + 2.0 * mu);
    const double total = 2.0 * num::integrate(density, 0.0, R0) * scale;
    const double outer_half = 2.0 * num::integrate(density, R0 / 2.0, R0) * scale;
    const double outer_fixed = 2.0 * num::integrate(density, R1_fixed, R0) * scale;
    CokernelNormProfile p;
    p.weighted_norm = std::sqrt(total);
    p.boundary_fraction = outer_half / total;
    p.outside_fixed_fraction = outer_fixed / total;
    p.R1_fixed = R1_fixed;
    return p;
}

}  // namespace z2h
