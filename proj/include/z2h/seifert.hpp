#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "z2h/orbifold.hpp"
#include "z2h/rational.hpp"

namespace z2h {

// Seifert-fibered 3-manifold over an orbifold base, encoded as
// (genus, b, (alpha_1, beta_1), ..., (alpha_n, beta_n)) with
// gcd(alpha_i, beta_i) = 1 and 0 < beta_i < alpha_i.
class SeifertManifold {
  public:
    SeifertManifold() : genus_(0), b_(0) {}  // S^1 x S^2
    SeifertManifold(std::int64_t genus, std::int64_t b,
                    std::vector<std::pair<std::int64_t, std::int64_t>> pairs)
        : genus_(genus), b_(b) {
        if (genus < 0) throw std::invalid_argument("SeifertManifold: negative genus");
        for (auto [alpha, beta] : pairs) {
            if (alpha < 1) throw std::invalid_argument("SeifertManifold: alpha < 1");
            if (alpha == 1) {  // smooth point, its twist lands in b
                b_ += beta;
                continue;
            }
            std::int64_t r = beta % alpha;
            if (r < 0) r += alpha;
            b_ += (beta - r) / alpha;
            if (std::gcd(alpha, r) != 1)
                throw std::invalid_argument("SeifertManifold: gcd(alpha, beta) != 1, non-smooth total space");
            pairs_.emplace_back(alpha, r);
        }
    }

    std::int64_t genus() const { return genus_; }
    std::int64_t b() const { return b_; }
    const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs() const { return pairs_; }

    friend bool operator==(const SeifertManifold& x, const SeifertManifold& y) {
        return x.genus_ == y.genus_ && x.b_ == y.b_ && x.pairs_ == y.pairs_;
    }
    friend bool operator!=(const SeifertManifold& x, const SeifertManifold& y) { return !(x == y); }

    std::string str() const {
        std::string s = "(" + std::to_string(genus_) + ", " + std::to_string(b_);
        for (auto [a, b] : pairs_) s += ", (" + std::to_string(a) + "," + std::to_string(b) + ")";
        return s + ")";
    }

  private:
    std::int64_t genus_;
    std::int64_t b_;
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs_;
};

inline SeifertManifold validate_seifert(std::int64_t genus, std::int64_t b,
                                        std::vector<std::pair<std::int64_t, std::int64_t>> pairs) {
    return SeifertManifold(genus, b, std::move(pairs));
}

inline OrbifoldSurface base_orbifold(const SeifertManifold& y) {
    std::vector<std::int64_t> orders;
    orders.reserve(y.pairs().size());
    for (auto [a, b] : y.pairs()) orders.push_back(a);
    return OrbifoldSurface(y.genus(), std::move(orders));
}

// Orientation convention for the defining bundle of the fibration.  Positive
// reads the Seifert data literally, deg(L) = b + sum beta_i/alpha_i; Negative
// takes the inverse bundle.  Positive reproduces the S^3 Hopf entry (degree
// +1) and is the default; the catalog verifier sweeps both.
enum class BundleSign { Positive, Negative };

inline OrbifoldLineBundle euler_bundle(const SeifertManifold& y,
                                       BundleSign sign = BundleSign::Positive) {
    std::vector<std::int64_t> betas;
    betas.reserve(y.pairs().size());
    for (auto [a, b] : y.pairs()) betas.push_back(b);
    OrbifoldLineBundle L(base_orbifold(y), y.b(), std::move(betas));
    return sign == BundleSign::Positive ? L : power(L, -1);
}

// e(Y) = -(b + sum beta_i/alpha_i), exact.
inline Rational euler_number(const SeifertManifold& y) {
    return -degree(euler_bundle(y, BundleSign::Positive));
}

// An orbifold carries a spin structure iff every cone order is odd.
inline bool is_spin_base(const OrbifoldSurface& sigma) {
    for (std::int64_t a : sigma.cone_orders())
        if (a % 2 == 0) return false;
    return true;
}

struct SingularSetDescription {
    std::int64_t fiber_count = 0;
    std::string descriptor;
};

// Volume is stored as an exact rational coefficient of pi.
struct MetricParams {
    Rational volume_pi_coefficient = Rational(1);
    Rational fiber_scale = Rational(1);
};

struct ExistenceReport {
    bool exists = false;
    std::int64_t N = 0;                // desingularized degree of the section bundle
    SectionCount dim_sections = SectionCount::exact(0);
    std::int64_t twist_k = 0;
    std::int64_t aux_degree = 0;
    SingularSetDescription singular_set;
    MetricParams metric;
    std::vector<std::string> advisories;
    std::string failure_reason;  // empty when exists
};

struct SpinorOptions {
    // When set, require dim >= 1 instead of the printed dim >= 0 gate.  The
    // two only differ on inputs that the N >= 2*genus gate already rejects.
    bool strict_dim = false;
    BundleSign sign = BundleSign::Positive;
};

namespace detail {

// N = 2kb + 2 genus - 2 + sum_i floor((2k beta_i + alpha_i - 1)/alpha_i) + 2 aux,
// the desingularized degree of K (x) Laux^2 (x) L^{2k}.
inline std::int64_t spinor_section_degree(const SeifertManifold& y, const OrbifoldLineBundle& L,
                                          std::int64_t k, std::int64_t aux_degree) {
    std::int64_t n = 2 * k * L.b() + 2 * y.genus() - 2 + 2 * aux_degree;
    const auto& alphas = L.surface().cone_orders();
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        std::int64_t a = alphas[i];
        n += Rational(2 * k * L.betas()[i] + a - 1, a).floor();
    }
    return n;
}

// Desingularized degree of Laux^2 (x) L^{2k} (no canonical factor).
inline std::int64_t spinc_section_degree(const OrbifoldLineBundle& L, std::int64_t k,
                                         std::int64_t aux_degree) {
    std::int64_t n = 2 * k * L.b() + 2 * aux_degree;
    const auto& alphas = L.surface().cone_orders();
    for (std::size_t i = 0; i < alphas.size(); ++i)
        n += Rational(2 * k * L.betas()[i], alphas[i]).floor();
    return n;
}

inline ExistenceReport existence_from_section_count(
    const SeifertManifold& y, const OrbifoldLineBundle& L, std::int64_t N, std::int64_t k,
    std::int64_t aux_degree, bool gate_positivity_ok, const std::string& gate_note,
    const SpinorOptions& opt) {
    ExistenceReport rep;
    rep.N = N;
    rep.twist_k = k;
    rep.aux_degree = aux_degree;
    const std::int64_t genus = y.genus();
    const std::int64_t dim = N + 1 - genus;

    if (!gate_positivity_ok) {
        rep.failure_reason = gate_note;
        return rep;
    }
    if (dim < (opt.strict_dim ? 1 : 0)) {
        rep.failure_reason = "dimension gate failed: N + 1 - genus = " + std::to_string(dim);
        return rep;
    }
    if (N < 2 * genus) {
        rep.failure_reason = "simple-zero gate failed: N = " + std::to_string(N) + " < 2*genus = " +
                             std::to_string(2 * genus);
        return rep;
    }

    rep.exists = true;
    rep.dim_sections = SectionCount::exact(dim);
    rep.singular_set.fiber_count = N;
    rep.singular_set.descriptor = N == 0 ? "empty" : (N == 1 ? "single fiber" : "union of fibers");
    if (k != 0 && !is_trivial(L)) {
        rep.metric.volume_pi_coefficient = degree(L) / Rational(k);
        if (rep.metric.volume_pi_coefficient <= Rational(0))
            rep.advisories.push_back("volume coefficient deg(L)/k is not positive for this twist");
    } else {
        rep.metric.volume_pi_coefficient = Rational(1);
        rep.advisories.push_back("c1(L) = 0: volume is a free parameter, reported as 1");
    }
    return rep;
}

}  // namespace detail

// Desingularized degree N of the spinor section bundle K (x) Laux^2 (x) L^{2k},
// by the closed floor formula (the tensor chain through the bundle algebra is
// the independent route).
inline std::int64_t spinor_section_desing_degree(const SeifertManifold& y, std::int64_t k,
                                                 std::int64_t aux_degree,
                                                 BundleSign sign = BundleSign::Positive) {
    return detail::spinor_section_degree(y, euler_bundle(y, sign), k, aux_degree);
}

inline std::int64_t spinc_section_desing_degree(const SeifertManifold& y, std::int64_t k,
                                                std::int64_t aux_degree,
                                                BundleSign sign = BundleSign::Positive) {
    return detail::spinc_section_degree(euler_bundle(y, sign), k, aux_degree);
}

// Existence of Z2-harmonic spinors for the spin Dirac operator, built from a
// holomorphic section of K (x) Laux^2 (x) L^{2k} with N simple zeros.  Laux
// is the auxiliary twist (deg aux_degree; 0, ..., 0).  When L is trivial
// (a product S^1 x Sigma) the construction runs with Laux in place of L, so
// the section bundle becomes K (x) Laux^{2k+2}.
inline ExistenceReport spinor_existence(const SeifertManifold& y, std::int64_t k,
                                        std::int64_t aux_degree, SpinorOptions opt = {}) {
    OrbifoldLineBundle L = euler_bundle(y, opt.sign);
    OrbifoldSurface sigma = L.surface();

    std::vector<std::string> advisories;
    if (!is_spin_base(sigma))
        advisories.push_back(
            "base orbifold is not spin (even cone order present); the spin structure lives on the "
            "total space and twist compatibility is not checked");

    ExistenceReport rep;
    if (is_trivial(L)) {
        // c1(L) = 0 branch: twist by Laux alone.
        const std::int64_t t = 2 * k + 2;
        const std::int64_t N = 2 * y.genus() - 2 + t * aux_degree;
        const bool gate = t * aux_degree > 0;
        rep = detail::existence_from_section_count(
            y, L, N, k, aux_degree, gate,
            "positivity gate failed: deg(Laux^{2k+2}) = " + std::to_string(t * aux_degree) +
                " <= 0 with trivial defining bundle",
            opt);
    } else if (k == 0) {
        rep.twist_k = 0;
        rep.aux_degree = aux_degree;
        rep.failure_reason = "degenerate twist: k = 0 requires a trivial defining bundle";
        rep.N = detail::spinor_section_degree(y, L, 0, aux_degree);
    } else {
        const std::int64_t N = detail::spinor_section_degree(y, L, k, aux_degree);
        const std::int64_t gate_value = 2 * aux_degree + 2 * k * L.b();
        bool gate = gate_value > 0;
        if (gate_value == 0) {
            OrbifoldLineBundle twist =
                tensor(power(OrbifoldLineBundle(sigma, aux_degree,
                                                std::vector<std::int64_t>(sigma.cone_point_count(), 0)),
                             2),
                       power(L, 2 * k));
            gate = !is_trivial(twist);
        }
        rep = detail::existence_from_section_count(
            y, L, N, k, aux_degree, gate,
            "positivity gate failed: 2*aux + 2*k*b = " + std::to_string(gate_value), opt);
    }
    rep.advisories.insert(rep.advisories.begin(), advisories.begin(), advisories.end());
    return rep;
}

// Spin-c version: there is no spin obstruction; the canonical factor is
// absorbed (Laux^2 ~ K^{-1}) so the section bundle is Laux^2 (x) L^{2k}.
inline ExistenceReport spinc_existence(const SeifertManifold& y, std::int64_t k,
                                       std::int64_t aux_degree, SpinorOptions opt = {}) {
    OrbifoldLineBundle L = euler_bundle(y, opt.sign);
    OrbifoldSurface sigma = L.surface();

    ExistenceReport rep;
    if (is_trivial(L)) {
        const std::int64_t t = 2 * k + 2;
        const std::int64_t N = t * aux_degree;  // no canonical factor here
        rep = detail::existence_from_section_count(
            y, L, N, k, aux_degree, t * aux_degree > 0,
            "positivity gate failed: deg(Laux^{2k+2}) = " + std::to_string(t * aux_degree) +
                " <= 0 with trivial defining bundle",
            opt);
        return rep;
    }
    if (k == 0) {
        rep.twist_k = 0;
        rep.aux_degree = aux_degree;
        rep.failure_reason = "degenerate twist: k = 0 requires a trivial defining bundle";
        rep.N = detail::spinc_section_degree(L, 0, aux_degree);
        return rep;
    }
    const std::int64_t N = detail::spinc_section_degree(L, k, aux_degree);
    const std::int64_t gate_value = 2 * aux_degree + 2 * k * L.b();
    bool gate = gate_value > 0;
    if (gate_value == 0) {
        OrbifoldLineBundle twist =
            tensor(power(OrbifoldLineBundle(sigma, aux_degree,
                                            std::vector<std::int64_t>(sigma.cone_point_count(), 0)),
                         2),
                   power(L, 2 * k));
        gate = !is_trivial(twist);
    }
    return detail::existence_from_section_count(
        y, L, N, k, aux_degree, gate,
        "positivity gate failed: 2*aux + 2*k*b = " + std::to_string(gate_value), opt);
}

// Z2-harmonic 1-forms from orbifold quadratic differentials: exist iff
// 3*genus - 3 + n > 0 and 2*genus - 4 + n >= 0; the singular set projects to
// 4*genus - 4 + n points on the base.
inline ExistenceReport oneform_existence(const SeifertManifold& y) {
    const std::int64_t genus = y.genus();
    const std::int64_t n = static_cast<std::int64_t>(y.pairs().size());
    ExistenceReport rep;
    rep.twist_k = 0;
    rep.aux_degree = 0;
    rep.N = 4 * genus - 4 + n;
    const std::int64_t dim = 3 * genus - 3 + n;
    if (dim <= 0) {
        rep.failure_reason = "3*genus - 3 + n = " + std::to_string(dim) + " is not positive";
        return rep;
    }
    if (2 * genus - 4 + n < 0) {
        rep.failure_reason = "2*genus - 4 + n = " + std::to_string(2 * genus - 4 + n) + " is negative";
        return rep;
    }
    rep.exists = true;
    rep.dim_sections = SectionCount::exact(dim);
    rep.singular_set.fiber_count = rep.N;
    rep.singular_set.descriptor =
        rep.N == 0 ? "empty" : (rep.N == 1 ? "single fiber" : "union of fibers");
    rep.metric.volume_pi_coefficient = Rational(1);
    rep.advisories.push_back("1-form construction works for g_{1,V} with any volume V");
    return rep;
}

// Three-case classification: genus 0 with n >= 4, genus 1 with n >= 2, or
// genus >= 2.  Equivalent to the inequality pair in oneform_existence.
inline bool oneform_case_classification(std::int64_t genus, std::int64_t n) {
    return (genus == 0 && n >= 4) || (genus == 1 && n >= 2) || genus >= 2;
}

// Brieskorn homology sphere Sigma(a_1, ..., a_n): base of genus 0, cone
// orders a_i, and (b, beta_i) solving (A/a_i) * beta_i = 1 mod a_i with
// A = prod a_i, so that the euler number is exactly -1/A.
inline SeifertManifold brieskorn_to_seifert(const std::vector<std::int64_t>& a) {
    if (a.size() < 3) throw std::invalid_argument("brieskorn_to_seifert: need n >= 3 exponents");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 2) throw std::invalid_argument("brieskorn_to_seifert: exponents must be >= 2");
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (std::gcd(a[i], a[j]) != 1)
                throw std::invalid_argument("brieskorn_to_seifert: exponents not pairwise coprime");
    }
    std::int64_t A = 1;
    for (std::int64_t ai : a) {
        if (__builtin_mul_overflow(A, ai, &A))
            throw std::overflow_error("brieskorn_to_seifert: product overflow");
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    std::int64_t weighted_sum = 0;
    for (std::int64_t ai : a) {
        const std::int64_t q = A / ai;
        std::int64_t beta = 0;
        for (std::int64_t candidate = 1; candidate < ai; ++candidate) {
            if ((q % ai) * candidate % ai == 1 % ai) {
                beta = candidate;
                break;
            }
        }
        if (beta == 0 && ai > 1)
            throw std::logic_error("brieskorn_to_seifert: no inverse found (non-coprime input?)");
        pairs.emplace_back(ai, beta);
        weighted_sum += q * beta;
    }
    if ((1 - weighted_sum) % A != 0)
        throw std::logic_error("brieskorn_to_seifert: congruence solution is inconsistent");
    const std::int64_t b = (1 - weighted_sum) / A;
    return SeifertManifold(0, b, std::move(pairs));
}

}  // namespace z2h
