#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "z2h/rational.hpp"

namespace z2h {

// Closed orbifold Riemann surface: genus of the underlying curve plus the
// cone-point orders alpha_i >= 2.  Orders equal to 1 are smooth points and
// are dropped on construction.
class OrbifoldSurface {
  public:
    OrbifoldSurface(std::int64_t genus, std::vector<std::int64_t> cone_orders)
        : genus_(genus) {
        if (genus < 0) throw std::invalid_argument("OrbifoldSurface: negative genus");
        for (std::int64_t a : cone_orders) {
            if (a < 1) throw std::invalid_argument("OrbifoldSurface: cone order < 1");
            if (a >= 2) cone_orders_.push_back(a);
        }
    }

    std::int64_t genus() const { return genus_; }
    const std::vector<std::int64_t>& cone_orders() const { return cone_orders_; }
    std::size_t cone_point_count() const { return cone_orders_.size(); }
    bool smooth() const { return cone_orders_.empty(); }

    friend bool operator==(const OrbifoldSurface& a, const OrbifoldSurface& b) {
        return a.genus_ == b.genus_ && a.cone_orders_ == b.cone_orders_;
    }
    friend bool operator!=(const OrbifoldSurface& a, const OrbifoldSurface& b) { return !(a == b); }

    std::string str() const {
        std::string s = "(genus " + std::to_string(genus_) + "; orders";
        if (cone_orders_.empty()) s += " none";
        for (auto a : cone_orders_) s += " " + std::to_string(a);
        return s + ")";
    }

  private:
    std::int64_t genus_;
    std::vector<std::int64_t> cone_orders_;
};

// chi_orb = 2 - 2*genus + sum_i (1/alpha_i - 1), exact.
inline Rational orb_euler_characteristic(const OrbifoldSurface& sigma) {
    Rational chi(2 - 2 * sigma.genus());
    for (std::int64_t a : sigma.cone_orders()) chi += Rational(1, a) - Rational(1);
    return chi;
}

// Orbifold line bundle in Seifert-invariant form (b; beta_1..beta_n) over a
// fixed surface.  Canonically normalized: 0 <= beta_i < alpha_i always holds,
// b is the degree of the desingularization |L|, and
// deg(L) = b + sum_i beta_i/alpha_i.
class OrbifoldLineBundle {
  public:
    OrbifoldLineBundle(OrbifoldSurface surface, std::int64_t b, std::vector<std::int64_t> betas)
        : surface_(std::move(surface)), b_(b), betas_(std::move(betas)) {
        const auto& alphas = surface_.cone_orders();
        if (betas_.size() != alphas.size())
            throw std::invalid_argument("OrbifoldLineBundle: one beta per cone point required");
        for (std::size_t i = 0; i < betas_.size(); ++i) {
            std::int64_t a = alphas[i];
            std::int64_t r = betas_[i] % a;
            if (r < 0) r += a;
            b_ += (betas_[i] - r) / a;
            betas_[i] = r;
        }
    }

    const OrbifoldSurface& surface() const { return surface_; }
    std::int64_t b() const { return b_; }
    const std::vector<std::int64_t>& betas() const { return betas_; }

    friend bool operator==(const OrbifoldLineBundle& x, const OrbifoldLineBundle& y) {
        return x.surface_ == y.surface_ && x.b_ == y.b_ && x.betas_ == y.betas_;
    }
    friend bool operator!=(const OrbifoldLineBundle& x, const OrbifoldLineBundle& y) { return !(x == y); }

    std::string str() const {
        std::string s = "(" + std::to_string(b_) + ";";
        for (std::size_t i = 0; i < betas_.size(); ++i)
            s += (i ? "," : " ") + std::to_string(betas_[i]);
        return s + ")";
    }

  private:
    OrbifoldSurface surface_;
    std::int64_t b_;
    std::vector<std::int64_t> betas_;
};

inline OrbifoldLineBundle trivial_bundle(const OrbifoldSurface& sigma) {
    return OrbifoldLineBundle(sigma, 0, std::vector<std::int64_t>(sigma.cone_point_count(), 0));
}

// K has Seifert invariant (2*genus - 2; alpha_1 - 1, ..., alpha_n - 1).
inline OrbifoldLineBundle canonical_bundle(const OrbifoldSurface& sigma) {
    std::vector<std::int64_t> betas;
    betas.reserve(sigma.cone_point_count());
    for (std::int64_t a : sigma.cone_orders()) betas.push_back(a - 1);
    return OrbifoldLineBundle(sigma, 2 * sigma.genus() - 2, std::move(betas));
}

inline Rational degree(const OrbifoldLineBundle& L) {
    Rational d(L.b());
    const auto& alphas = L.surface().cone_orders();
    for (std::size_t i = 0; i < alphas.size(); ++i) d += Rational(L.betas()[i], alphas[i]);
    return d;
}

inline std::int64_t desingularized_degree(const OrbifoldLineBundle& L) { return L.b(); }

inline bool is_trivial(const OrbifoldLineBundle& L) {
    if (L.b() != 0) return false;
    for (auto beta : L.betas())
        if (beta != 0) return false;
    return true;
}

// Tensor with component-wise carry: delta_i = (beta_i + beta_i') mod alpha_i,
// the integer carries are absorbed into the b-part.  This is the unique
// reading under which degree is additive.
inline OrbifoldLineBundle tensor(const OrbifoldLineBundle& L1, const OrbifoldLineBundle& L2) {
    if (L1.surface() != L2.surface())
        throw std::invalid_argument("tensor: bundles live over different surfaces");
    const auto& alphas = L1.surface().cone_orders();
    std::vector<std::int64_t> deltas(alphas.size());
    std::int64_t carry = 0;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        std::int64_t s = L1.betas()[i] + L2.betas()[i];
        carry += s / alphas[i];
        deltas[i] = s % alphas[i];
    }
    return OrbifoldLineBundle(L1.surface(), L1.b() + L2.b() + carry, std::move(deltas));
}

// m-fold tensor power, negative m giving the inverse.  Local parts are
// (m * beta_i) mod alpha_i; the b-part is pinned by deg(L^m) = m * deg(L).
inline OrbifoldLineBundle power(const OrbifoldLineBundle& L, std::int64_t m) {
    const auto& alphas = L.surface().cone_orders();
    std::vector<std::int64_t> deltas(alphas.size());
    std::int64_t b = m * L.b();
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        std::int64_t prod = m * L.betas()[i];
        std::int64_t r = prod % alphas[i];
        if (r < 0) r += alphas[i];
        deltas[i] = r;
        b += (prod - r) / alphas[i];
    }
    return OrbifoldLineBundle(L.surface(), b, std::move(deltas));
}

// Holomorphic section count.  Exact values are returned only when a sharp
// criterion forces them; otherwise the Riemann-Roch lower bound is reported
// as indeterminate.
class SectionCount {
  public:
    static SectionCount exact(std::int64_t d) {
        if (d < 0) throw std::invalid_argument("SectionCount: negative exact dimension");
        return SectionCount(true, d);
    }
    static SectionCount indeterminate(std::int64_t lower_bound) {
        return SectionCount(false, lower_bound);
    }

    bool is_exact() const { return exact_; }
    std::int64_t value() const {
        if (!exact_) throw std::domain_error("SectionCount: indeterminate has no exact value");
        return bound_;
    }
    std::int64_t lower_bound() const { return bound_; }

    friend bool operator==(const SectionCount& a, const SectionCount& b) {
        return a.exact_ == b.exact_ && a.bound_ == b.bound_;
    }

    std::string str() const {
        return exact_ ? std::to_string(bound_) : (">=" + std::to_string(bound_));
    }

  private:
    SectionCount(bool e, std::int64_t v) : exact_(e), bound_(v) {}
    bool exact_;
    std::int64_t bound_;
};

// dim H^0(L):
//   trivial L                 -> 1 (constants)
//   deg(L) <= 0, L nontrivial -> 0
//   otherwise Riemann-Roch h0(L) - h0(L^-1 (x) K) = 1 - genus + b gives an
//   exact answer whenever the dual term is itself pinned by one of the two
//   base cases; if both L and its Serre dual have positive degree the count
//   stays indeterminate with the RR lower bound.
inline SectionCount h0_dim(const OrbifoldLineBundle& L) {
    if (is_trivial(L)) return SectionCount::exact(1);
    Rational d = degree(L);
    if (d <= Rational(0)) return SectionCount::exact(0);

    const std::int64_t rr = 1 - L.surface().genus() + desingularized_degree(L);
    OrbifoldLineBundle dual = tensor(power(L, -1), canonical_bundle(L.surface()));
    if (is_trivial(dual)) return SectionCount::exact(rr + 1);
    if (degree(dual) <= Rational(0)) return SectionCount::exact(rr);
    return SectionCount::indeterminate(std::max<std::int64_t>(0, rr));
}

}  // namespace z2h
