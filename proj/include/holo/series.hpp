#pragma once

#include <vector>

#include "holo/bi_poly.hpp"

namespace holo {

/// Truncated power series: coefficients of X^0..X^{n-1}.
using Series = std::vector<Scalar>;

Series series_mul(const Series& a, const Series& b, std::size_t n);
/// 1/a mod X^n; requires a[0] != 0.
Series series_inverse(const Series& a, std::size_t n);
/// h(X, g(X)) mod X^n.
Series compose_bipoly(const BiPoly& h, const Series& g, std::size_t n);
/// k-th derivative of a truncated series (length shrinks by k).
Series series_derivative(const Series& g, unsigned k);

}  // namespace holo
