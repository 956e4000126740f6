#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <vector>

#include "z2h/neck/numerics.hpp"
#include "z2h/neck/pairing.hpp"
#include "z2h/neck/s2_neck.hpp"

using namespace z2h;

TEST_CASE("spherical-neck spectra lists") {
    S2SpectraReport rep = s2_neck_spectra(5);
    CHECK(rep.functions_spectrum ==
          std::vector<double>{0, 2, 6, 12, 20, 30});
    CHECK(rep.oneform_spectrum == std::vector<double>{1, 5, 11, 19, 29});
}

TEST_CASE("flow curves match the closed form") {
    S2SpectraReport rep = s2_neck_spectra(4);
    // zero mode does not flow
    CHECK(rep.flows[0].lambda_sq == 0.0);
    CHECK(rep.flows[0].start_minus == 0.0);
    CHECK(rep.flows[0].end_plus == 0.0);

    // first nonzero eigenvalue is lambda^2 = 1; endpoint eigenvalues
    // (H +- sqrt(4 lambda^2 + H^2))/2 at H = +-1 give (+-1 +- sqrt5)/2
    const S2FlowCurve& c1 = rep.flows[1];
    CHECK(c1.lambda_sq == 1.0);
    CHECK(c1.end_plus == Catch::Approx((1.0 + std::sqrt(5.0)) / 2));
    CHECK(c1.end_minus == Catch::Approx((1.0 - std::sqrt(5.0)) / 2));
    CHECK(c1.start_plus == Catch::Approx((-1.0 + std::sqrt(5.0)) / 2));
    CHECK(c1.start_minus == Catch::Approx((-1.0 - std::sqrt(5.0)) / 2));

    // at the waist H = 0 the flow passes through +-lambda
    for (const auto& c : rep.flows) {
        CHECK(s2_flow_eigenvalue(c.lambda_sq, 0.0, +1) == Catch::Approx(std::sqrt(c.lambda_sq)));
        CHECK(s2_flow_eigenvalue(c.lambda_sq, 0.0, -1) == Catch::Approx(-std::sqrt(c.lambda_sq)));
    }

    // endpoints at H = +-1 follow (+-1 +- sqrt(4 lambda^2 + 1))/2
    for (const auto& c : rep.flows) {
        if (c.lambda_sq == 0) continue;
        const double s = std::sqrt(4.0 * c.lambda_sq + 1.0);
        CHECK(c.end_plus == Catch::Approx((1.0 + s) / 2));
        CHECK(c.start_minus == Catch::Approx((-1.0 - s) / 2));
    }
}

TEST_CASE("Fredholm window from the endpoint spectrum") {
    S2FredholmWindow w = s2_fredholm_window();
    CHECK(w.mu0 == Catch::Approx((std::sqrt(5.0) - 2.0) / 2.0).epsilon(1e-12));
    CHECK(w.mu0 > 0.0);
    CHECK(w.mu0 < 0.5);
    CHECK(w.nearest_forbidden == Catch::Approx(-(std::sqrt(5.0) - 2.0) / 2.0));
    // 0 is strictly inside the window
    for (double f : w.forbidden_weights) CHECK(std::abs(f) > 1e-6);
}

TEST_CASE("obstruction pairing structure") {
    // linearity: xi = 0 pairs to zero
    auto zero = obstruction_pairing(64, 0.05, 20.0, {1, 0}, {1, 0}, {0, 0}, {0, 0});
    CHECK(std::abs(zero.with_psi) == 0.0);
    CHECK(std::abs(zero.with_psi_bar) == 0.0);

    // c = 0, d = 1, xi = (1,0): only the psi-bar pairing is nonzero
    auto p = obstruction_pairing(64, 0.05, 20.0, {0, 0}, {1, 0}, {1, 0}, {0, 0});
    CHECK(std::abs(p.with_psi) == 0.0);
    CHECK(std::abs(p.with_psi_bar) > 0.0);

    CHECK_THROWS_AS(obstruction_pairing(64, 0.05, 20.0, {0, 0}, {0, 0}, {1, 0}, {0, 0}),
                    std::invalid_argument);
}

TEST_CASE("pairing magnitude scales like 1/sqrt(ell)") {
    const double delta = 1.0 / 64.0, R0 = 64.0;  // rho_0 = delta R0 = 1
    std::vector<double> logl, logm;
    for (std::int64_t ell = 64; ell <= 1024; ell *= 2) {
        auto p = obstruction_pairing(ell, delta, R0, {0, 0}, {1, 0}, {1, 0}, {0, 0});
        logl.push_back(std::log(static_cast<double>(ell)));
        logm.push_back(std::log(std::abs(p.with_psi_bar)));
    }
    num::LineFit fit = num::fit_line(logl, logm);
    CHECK(std::abs(fit.slope + 0.5) < 0.05);
}

TEST_CASE("pairing 2x2 map is invertible when c and d are both nonzero") {
    const std::complex<double> c{0.8, 0.1}, d{-0.3, 0.7};
    auto col1 = obstruction_pairing(128, 0.05, 30.0, c, d, {1, 0}, {0, 0});
    auto col2 = obstruction_pairing(128, 0.05, 30.0, c, d, {0, 0}, {1, 0});
    const std::complex<double> det =
        col1.with_psi * col2.with_psi_bar - col2.with_psi * col1.with_psi_bar;
    CHECK(std::abs(det) > 1e-6);
}

TEST_CASE("index formula and constraint count") {
    CHECK(index_3d(1.0) == -6);
    CHECK(index_3d(0.1) == -42);
    for (double delta = 1.0; delta > 1e-3; delta *= 0.5) {
        const std::int64_t L = index_3d_cutoff(delta);
        CHECK(index_3d(delta) == -(4 * L + 2));
        CHECK(index_3d_constraint_count(delta) == std::llabs(index_3d(delta)));
    }
    CHECK_THROWS_AS(index_3d(0.0), std::invalid_argument);
    CHECK_THROWS_AS(index_3d(1.5), std::invalid_argument);
}

TEST_CASE("error-rate predictions") {
    ErrorRatePrediction s = error_rate(ErrorRegime::SpinorNeckStretch, 100.0, 0.0);
    CHECK(s.predicted_norm_bound == Catch::Approx(0.01));
    CHECK(s.error_vanishes);

    ErrorRatePrediction o = error_rate(ErrorRegime::OneFormPinch, 1e-3, 0.0);
    CHECK(o.predicted_norm_bound == Catch::Approx(1e-3));

    ErrorRatePrediction t = error_rate(ErrorRegime::TorusPinch, 1e-3, -0.125);
    CHECK(t.error_vanishes);
    CHECK(t.predicted_norm_bound ==
          Catch::Approx(std::pow(1e-3, 0.0625) / std::log(1e3)).epsilon(1e-12));

    ErrorRatePrediction bad = error_rate(ErrorRegime::TorusPinch, 1e-3, 0.1);
    CHECK_FALSE(bad.error_vanishes);

    // monotone decay in the parameter within each regime
    double prev = 1e300;
    for (double T : {10.0, 100.0, 1000.0}) {
        const double b = error_rate(ErrorRegime::SpinorNeckStretch, T, 0.0).predicted_norm_bound;
        CHECK(b < prev);
        prev = b;
    }
    prev = 1e300;
    for (double delta : {1e-2, 1e-3, 1e-4}) {
        const double b = error_rate(ErrorRegime::TorusPinch, delta, -0.125).predicted_norm_bound;
        CHECK(b < prev);
        prev = b;
    }
}

TEST_CASE("one-form pinch quadrature fits the exponent 1 - mu") {
    for (double mu : {0.0, -0.5, 0.25}) {
        std::vector<double> xs, ys;
        for (double delta = 1e-2; delta > 1e-5; delta /= 2) {
            xs.push_back(std::log(delta));
            ys.push_back(std::log(oneform_pinch_error_quadrature(delta, mu)));
        }
        num::LineFit fit = num::fit_line(xs, ys);
        INFO("mu=" << mu);
        CHECK(std::abs(fit.slope - (1.0 - mu)) < 0.1);
    }
}

TEST_CASE("torus pinch quadrature carries the delta^{-mu/2}/log rate") {
    const double mu = -0.125;
    double prev_ratio = 0.0;
    int steps = 0;
    for (double delta = 1e-2; delta > 1e-6; delta /= 2) {
        const double q = std::sqrt(torus_pinch_error_quadrature(delta, mu));
        const double rate = std::pow(delta, -0.5 * mu) / std::log(1.0 / delta);
        const double ratio = q / rate;
        if (prev_ratio > 0) {
            CHECK(std::abs(ratio - prev_ratio) / prev_ratio < 0.10);
            ++steps;
        }
        prev_ratio = ratio;
    }
    CHECK(steps > 8);
    // for positive weights the quadrature does not vanish as delta -> 0
    CHECK(torus_pinch_error_quadrature(1e-6, 0.2) > torus_pinch_error_quadrature(1e-4, 0.2));
}
