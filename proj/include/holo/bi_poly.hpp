#pragma once

#include <string>
#include <vector>

#include "holo/errors.hpp"
#include "holo/uni_poly.hpp"

namespace holo {

/// Bivariate polynomial h(X, Y) over Q(i), stored as polynomials in X indexed
/// by Y-degree. Trailing zero Y-rows are trimmed, so the stored shape is
/// always tight.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<UniPoly> rows);
    /// grid[j][i] is the coefficient of X^i Y^j.
    static BiPoly from_grid(const std::vector<std::vector<Scalar>>& grid);
    /// A polynomial in X only, as a BiPoly.
    static BiPoly from_x(const UniPoly& p) { return BiPoly(std::vector<UniPoly>{p}); }
    static BiPoly y_power(std::size_t k);

    bool is_zero() const { return rows_.empty(); }
    bool is_real() const {
        for (const auto& r : rows_)
            if (!r.is_real()) return false;
        return true;
    }
    int deg_y() const { return static_cast<int>(rows_.size()) - 1; }
    int deg_x() const;
    int total_degree() const;
    Scalar coeff(std::size_t x_deg, std::size_t y_deg) const;
    /// Coefficient of Y^k as a polynomial in X.
    const UniPoly& row(std::size_t k) const;
    const std::vector<UniPoly>& rows() const { return rows_; }
    const UniPoly& leading_y() const { return rows_.back(); }

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const UniPoly& x_poly);
    friend BiPoly operator*(const BiPoly& a, const Scalar& s);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.rows_ == b.rows_; }
    BiPoly operator-() const;

    BiPoly derivative_x() const;
    BiPoly derivative_y() const;
    Scalar operator()(const Scalar& x, const Scalar& y) const;
    /// h(x0, Y) as a polynomial in Y.
    UniPoly at_x(const Scalar& x0) const;
    /// gcd of all X-coefficient polynomials (monic).
    UniPoly content_x() const;
    /// Divides every row by a polynomial in X that divides it exactly.
    BiPoly divide_x(const UniPoly& d) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<UniPoly> rows_;
};

struct PseudoRemainder {
    BiPoly remainder;
    /// remainder == lc_Y(h)^power * p  (mod h)
    unsigned power = 0;
};

/// Pseudo-division in Y: lc_Y(h)^k p = q h + r with deg_Y r < deg_Y h.
PseudoRemainder pseudo_remainder(const BiPoly& p, const BiPoly& h);

/// Thrown when u has no inverse modulo h, i.e. gcd(u, h) has positive Y-degree.
/// Carries the common factor (cleared of X-denominators).
class not_invertible_error : public precondition_error {
public:
    not_invertible_error(const std::string& what, BiPoly factor)
        : precondition_error(what), factor_(std::move(factor)) {}
    const BiPoly& factor() const { return factor_; }

private:
    BiPoly factor_;
};

/// v = numerator / denominator with u * v == 1 in Q(i)(X)[Y] / (h).
struct ModularInverse {
    BiPoly numerator;
    UniPoly denominator;
};

/// Extended Euclid in Y over the rational-function field Q(i)(X).
/// The denominator is primitive-normalized (Gaussian-integer coefficients,
/// content 1, positive lowest coefficient).
ModularInverse ext_gcd_mod_h(const BiPoly& u, const BiPoly& h);

}  // namespace holo
