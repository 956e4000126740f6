#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace z2h {

// Anti-invariant first cohomology data of a branched double cover.  When the
// branch locus is empty the cover is two disjoint copies and h1_minus is read
// as b1 of one copy.
struct CoverProfile {
    std::int64_t h1_minus = 0;
    bool z_nonempty = true;
    std::int64_t b1 = 0;  // used only when z_nonempty is false
};

// dim H^1_-(Y_Z) of a connected sum:
//   both branch loci nonempty -> d1 + d2 + 1   (extra R summand)
//   exactly one empty         -> d_nonempty + b1(other)
//   both empty                -> no formula available, error
inline std::int64_t h1_minus_connected_sum(const CoverProfile& p1, const CoverProfile& p2) {
    if (p1.z_nonempty && p2.z_nonempty) return p1.h1_minus + p2.h1_minus + 1;
    if (p1.z_nonempty) return p1.h1_minus + p2.b1;
    if (p2.z_nonempty) return p2.h1_minus + p1.b1;
    throw std::invalid_argument(
        "h1_minus_connected_sum: both branch loci empty, formula not provided");
}

// Riemann-Hurwitz for a double cover: chi(cover) = 2*chi(base) - branch_points,
// i.e. genus' = 2*genus - 1 + branch_points/2.
inline std::int64_t branched_cover_genus(std::int64_t genus, std::int64_t branch_points) {
    if (branch_points < 0) throw std::invalid_argument("branched_cover_genus: negative branch count");
    if (branch_points % 2 != 0)
        throw std::invalid_argument("branched_cover_genus: odd branch count admits no double cover");
    return 2 * genus - 1 + branch_points / 2;
}

// Genus of the double cover of a glued surface branched over the union of
// the 4*genus_i - 4 simple zeros: 4*(genus1 + genus2) - 5.
inline std::int64_t glued_cover_genus(std::int64_t genus1, std::int64_t genus2) {
    if (genus1 < 1 || genus2 < 1)
        throw std::invalid_argument("glued_cover_genus: summand genus must be >= 1");
    return 4 * (genus1 + genus2) - 5;
}

struct ZeroProfile {
    std::int64_t simple_zeros = 0;
    std::int64_t even_zero_multiplicity = 0;
    std::int64_t total_with_multiplicity = 0;
};

// Zeros of the glued quadratic differential: the summands contribute
// 4*(g1+g2) - 8 simple zeros, the neck contributes multiplicity 4 of even
// vanishing order; total matches deg K^2 = 4*(g1+g2) - 4 of the glued surface.
inline ZeroProfile glued_zero_profile(std::int64_t genus1, std::int64_t genus2) {
    if (genus1 < 2 || genus2 < 2)
        throw std::invalid_argument("glued_zero_profile: summand genus must be >= 2 for simple zeros");
    ZeroProfile z;
    z.simple_zeros = 4 * (genus1 + genus2) - 8;
    z.even_zero_multiplicity = 4;
    z.total_with_multiplicity = z.simple_zeros + z.even_zero_multiplicity;
    return z;
}

// dim R(Y1 # Y2) = dim R(Y1) + dim R(Y2) + 6, the extra 6 coming from the
// SL(2,C)-conjugation family.
inline std::int64_t representation_dim_sum(std::int64_t d1, std::int64_t d2) {
    if (d1 < 0 || d2 < 0) throw std::invalid_argument("representation_dim_sum: negative dimension");
    return d1 + d2 + 6;
}

struct StratumGap {
    std::int64_t glued = 0;         // k1 + k2 + 1, what gluing produces
    std::int64_t expected_top = 0;  // k1 + k2 + 3, the expected top stratum
    std::int64_t gap = 2;
    // The identification dim R(Y) = 2*k is suggested by the Riemann-surface
    // picture but not established in dimension 3; consumers should treat the
    // expected_top column accordingly.
    bool hypothesis = true;
};

inline StratumGap stratum_gap(std::int64_t k1, std::int64_t k2) {
    if (k1 < 0 || k2 < 0) throw std::invalid_argument("stratum_gap: negative moduli dimension");
    StratumGap g;
    g.glued = k1 + k2 + 1;
    g.expected_top = k1 + k2 + 3;
    g.gap = g.expected_top - g.glued;
    return g;
}

struct CableDescriptor {
    std::string text;
    std::int64_t components = 0;
};

// Singular sets produced by torus-summing k pairs along a knot K: the
// (2k,0)-cable link of K, always with an even component count.
inline CableDescriptor cable_descriptor(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("cable_descriptor: k must be >= 1");
    CableDescriptor c;
    c.components = 2 * k;
    c.text = "(" + std::to_string(2 * k) + ",0)-cable of K";
    return c;
}

}  // namespace z2h
