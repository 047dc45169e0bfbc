#pragma once

#include <complex>
#include <vector>

#include "holo/uni_poly.hpp"

namespace holo {

/// A disc certified to contain exactly `multiplicity` roots (counted with
/// multiplicity) of its source polynomial.
struct RootEnclosure {
    std::complex<double> center;
    double radius = 0.0;  // rounded up from radius_bound
    int multiplicity = 1;
    Scalar center_exact;
    Rational radius_bound;

    /// True if the disc meets the real axis.
    bool meets_real_axis() const;
    /// Real projection [re(c) - r, re(c) + r].
    Rational real_lo() const { return center_exact.re() - radius_bound; }
    Rational real_hi() const { return center_exact.re() + radius_bound; }
};

/// Certified enclosures of all complex roots of a nonzero polynomial.
/// Square-free parts are isolated separately; each part's discs are
/// certified with Smith's bound (radius n|W_i| from the Weierstrass
/// corrections, evaluated exactly). Discs are pairwise disjoint and have
/// radius <= tolerance. Throws certification_error after the refinement
/// budget (64 rounds) is spent.
std::vector<RootEnclosure> root_enclosures(const UniPoly& q, double tolerance = 1e-9);

/// Number of distinct real roots of a real polynomial in the closed interval
/// [lo, hi], by Sturm sequences in exact arithmetic.
int real_root_count(const UniPoly& real_poly, const Rational& lo, const Rational& hi);

/// Pellet/Rouche exclusion: true only if q provably has no root in the
/// closed disc |z - center| <= radius. Up to `graeffe_steps` root-squaring
/// steps sharpen the test. A false result is inconclusive.
bool disc_root_free(const UniPoly& q, const Scalar& center, const Rational& radius,
                    int graeffe_steps = 3);

}  // namespace holo
