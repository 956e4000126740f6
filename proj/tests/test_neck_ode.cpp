#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "z2h/neck/spectral_flow.hpp"

using namespace z2h;

TEST_CASE("slice potential values and limits") {
    CHECK(slice_potential(1, 0.0) == 0.0);
    CHECK(slice_potential(2, 1.0) == Catch::Approx(1.0 / std::sqrt(2.0)));
    CHECK(slice_potential(1, 1e9) == Catch::Approx(0.5).epsilon(1e-12));
    CHECK(slice_potential(1, -1e9) == Catch::Approx(-0.5).epsilon(1e-12));
    // monotone toward the limits
    double prev = -1e9;
    for (double R = -50; R <= 50; R += 0.5) {
        const double v = slice_potential(3, R);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("spectral flow report") {
    SpectralFlowReport d0 = spectral_flow(0);
    CHECK(d0.start_offset == 0.0);
    CHECK(d0.end_offset == 0.0);
    // kernel 0 on the decay-side window
    bool found = false;
    for (const auto& w : d0.windows)
        if (w.lo == -1.0 && w.hi == 0.0) {
            CHECK(w.kernel_dim == 0);
            found = true;
        }
    CHECK(found);

    SpectralFlowReport d1 = spectral_flow(1);
    CHECK(d1.start_offset == -0.5);
    CHECK(d1.end_offset == 0.5);
    REQUIRE_FALSE(d1.windows.empty());
    for (const auto& w : d1.windows) {
        if (w.lo == -0.5 && w.hi == 0.5) {
            CHECK(w.kernel_dim == 1);
            CHECK(w.cokernel_dim == 0);
        }
    }
    // forbidden set is the half-integers
    for (double f : d1.forbidden_weights)
        CHECK(std::abs(f - (std::round(f - 0.5) + 0.5)) < 1e-12);

    SpectralFlowReport d2 = spectral_flow(2);
    CHECK(d2.start_offset == -1.0);
    CHECK(d2.end_offset == 1.0);
    for (const auto& w : d2.windows) {
        if (w.lo == -1.0 && w.hi == 1.0) {
            CHECK(w.kernel_dim == 1);
            CHECK(w.cokernel_dim == 0);
        }
    }
}

TEST_CASE("mode kernel dimensions on the pinned weight grids") {
    for (double mu : {-0.4, -0.2, 0.0, 0.2, 0.4}) {
        auto [ker, coker] = mode_kernel_dimension(1, mu);
        CHECK(ker == 1);
        CHECK(coker == 0);
    }
    for (double mu : {-0.9, 0.0, 0.9}) {
        auto [ker, coker] = mode_kernel_dimension(2, mu);
        CHECK(ker == 1);
        CHECK(coker == 0);
    }
    CHECK_THROWS_AS(mode_kernel_dimension(1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(mode_kernel_dimension(1, -1.5), std::invalid_argument);
    CHECK_THROWS_AS(mode_kernel_dimension(2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(mode_kernel_dimension(0, 0.0), std::invalid_argument);
}

TEST_CASE("forbidden weights of the flow report are exactly the kernel-query failures") {
    for (int d : {0, 1, 2, 3}) {
        SpectralFlowReport rep = spectral_flow(d);
        for (double f : rep.forbidden_weights)
            CHECK_THROWS_AS(mode_kernel_dimension(d, f), std::invalid_argument);
        // midpoints of windows are admissible
        for (const auto& w : rep.windows)
            CHECK_NOTHROW(mode_kernel_dimension(d, 0.5 * (w.lo + w.hi)));
    }
}

TEST_CASE("mode ODE matches the closed form pointwise") {
    OdeSolveConfig cfg;
    for (int d : {0, 1, 2}) {
        for (int k = -5; k <= 5; ++k) {
            ModeOdeResult r = integrate_mode_ode(d, k, cfg);
            double max_rel = 0.0;
            for (const auto& s : r.samples) {
                const double exact = mode_ode_closed_form(d, k, s.s);
                max_rel = std::max(max_rel, std::abs(s.u - exact) / std::abs(exact));
            }
            INFO("d=" << d << " k=" << k);
            CHECK(max_rel < 1e-8);
        }
    }
}

TEST_CASE("fitted exponents match k -/+ d/2 and the printed decay pattern") {
    OdeSolveConfig cfg;
    for (int k = -5; k <= 5; ++k) {
        ModeOdeResult r = integrate_mode_ode(1, k, cfg);
        // slope of log|u| near +infty is k - 1/2, near -infty is k + 1/2
        CHECK(std::abs(r.exponent_plus - (k - 0.5)) < 0.02);
        CHECK(std::abs(r.exponent_minus - (k + 0.5)) < 0.02);
        CHECK(r.r2_plus > 0.999);
        CHECK(r.r2_minus > 0.999);
        // reflected reading: the mode -k decays like e^{-(k+1/2)|s|} as
        // s -> +infty and grows like e^{(k-1/2)|s|} as s -> -infty
        ModeOdeResult refl = integrate_mode_ode(1, -k, cfg);
        CHECK(std::abs(refl.exponent_plus - (-k - 0.5)) < 0.02);
        CHECK(std::abs(-refl.exponent_minus - (k - 0.5)) < 0.02);
    }
    ModeOdeResult d0 = integrate_mode_ode(0, 0, cfg);
    CHECK(std::abs(d0.exponent_plus) < 1e-10);
    CHECK(std::abs(d0.exponent_minus) < 1e-10);
}

TEST_CASE("kernel count equals the integrable-mode count from fitted exponents") {
    OdeSolveConfig cfg;
    for (int d : {1, 2}) {
        for (double mu : {-0.3, -0.1, 0.0, 0.15, 0.35}) {
            if (is_forbidden_weight(d, mu)) continue;
            auto [ker, coker] = mode_kernel_dimension(d, mu);
            // oracle: a mode is admissible on the window around mu when its
            // fitted growth exponents clear the window at both ends
            SpectralFlowReport rep = spectral_flow(d);
            double lo = 0, hi = 0;
            for (const auto& w : rep.windows)
                if (w.lo < mu && mu < w.hi) {
                    lo = w.lo;
                    hi = w.hi;
                }
            int count = 0;
            for (int k = -6; k <= 6; ++k) {
                ModeOdeResult r = integrate_mode_ode(d, k, cfg);
                if (r.exponent_plus <= lo + 1e-6 && r.exponent_minus >= hi - 1e-6) ++count;
            }
            INFO("d=" << d << " mu=" << mu);
            CHECK(count == ker);
            CHECK(coker == 0);
        }
    }
}

TEST_CASE("s_max precondition") {
    OdeSolveConfig cfg;
    cfg.s_max = 5.0;
    cfg.rel_tol = 1e-10;
    CHECK_THROWS_AS(integrate_mode_ode(1, 0, cfg), std::invalid_argument);
}
