#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace holo {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Exact conversion of a finite double to a dyadic rational.
Rational rational_from_double(double x);

/// Parses "a", "-a", "a/b".
Rational parse_rational(const std::string& text);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

/// Round to the nearest multiple of 2^-bits (ties toward +inf).
Rational round_dyadic(const Rational& q, unsigned bits);

/// Closed enclosure [lo, hi] of sqrt(q) with hi - lo <= 2^-bits relative to
/// the integer scaling; q >= 0.
struct RationalInterval {
    Rational lo;
    Rational hi;
};
RationalInterval sqrt_enclosure(const Rational& q, unsigned bits = 64);
Rational sqrt_upper(const Rational& q, unsigned bits = 64);
Rational sqrt_lower(const Rational& q, unsigned bits = 64);

/// Enclosure of e^k (k >= 0) with width below 2^-bits.
RationalInterval exp_enclosure(unsigned k, unsigned bits = 96);

double to_double(const Rational& q);

/// Gaussian rational re + i*im; exact field arithmetic.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(std::int64_t re) : re_(make_rational(re)) {}  // NOLINT
    GaussianRational(Rational re) : re_(std::move(re)) {}          // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2
    Rational norm() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::string to_string() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

using Scalar = GaussianRational;

}  // namespace holo
