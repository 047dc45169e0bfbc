#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "holo/rational.hpp"

namespace holo {

/// Dense univariate polynomial over Q(i), lowest degree first. The zero
/// polynomial has no stored coefficients and degree -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Scalar> coeffs);
    UniPoly(std::initializer_list<Scalar> coeffs);
    static UniPoly constant(const Scalar& c) { return UniPoly(std::vector<Scalar>{c}); }
    static UniPoly monomial(const Scalar& c, std::size_t k);
    /// X - r
    static UniPoly linear_root(const Scalar& r) { return UniPoly({-r, Scalar(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_real() const;
    std::size_t size() const { return c_.size(); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    /// Coefficient of X^k (zero beyond the degree).
    Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(); }
    const Scalar& leading() const { return c_.back(); }

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Scalar& s);
    UniPoly operator-() const;

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Scalar& s) { return a *= s; }
    friend UniPoly operator*(const Scalar& s, UniPoly a) { return a *= s; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    UniPoly derivative() const;
    Scalar operator()(const Scalar& x) const;
    /// Q(x + shift) as a polynomial in x.
    UniPoly taylor_shift(const Scalar& shift) const;
    /// Q(scale * x).
    UniPoly scale_argument(const Scalar& scale) const;
    /// Polynomial with conjugated coefficients.
    UniPoly conj() const;

    std::string to_string(const std::string& var = "X") const;

private:
    void trim();
    std::vector<Scalar> c_;
};

struct DivMod {
    UniPoly quotient;
    UniPoly remainder;
};

/// Euclidean division over Q(i); divisor nonzero.
DivMod divmod(const UniPoly& a, const UniPoly& b);
/// Exact division; throws if the remainder is nonzero.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero if both are zero).
UniPoly gcd(UniPoly a, UniPoly b);
UniPoly make_monic(const UniPoly& a);

/// Q = A + iB with A, B real.
std::pair<UniPoly, UniPoly> real_imag_split(const UniPoly& q);

/// Scales q by a nonzero rational so its coefficients are Gaussian integers
/// with content 1 and the lowest nonzero coefficient has positive real part
/// (or, if real part is zero, positive imaginary part). Returns the factor.
Rational primitive_normalize(UniPoly& q);

/// Normalizes a family of polynomials jointly: optionally divides out their
/// common gcd, then scales all members by one rational so the coefficients
/// are primitive Gaussian integers and the lowest nonzero coefficient of
/// fam[sign_index] is positive.
void normalize_family(std::vector<UniPoly>& fam, std::size_t sign_index, bool strip_gcd);

/// Yun square-free decomposition: q = c * prod_k parts[k]^(k+1), parts monic.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& q);

/// Sign of a real rational polynomial at a rational point.
int sign_at(const UniPoly& real_poly, const Rational& x);

}  // namespace holo
