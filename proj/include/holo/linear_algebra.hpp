#pragma once

#include <optional>
#include <vector>

#include "holo/uni_poly.hpp"

namespace holo {

using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

/// Reduced row echelon form over Q; returns the pivot column of each
/// nonzero row.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols);

/// Basis of the right kernel, one vector per free column in increasing
/// column order (1 at the free column, 0 at the other free columns).
std::vector<RationalVector> rational_kernel(RationalMatrix m, std::size_t cols);

/// The kernel vector rational_kernel would list first, or nullopt for a
/// trivial kernel. Pivots are located modulo 2^61 - 1 and the result is
/// confirmed over Q, falling back to full elimination when the prime is
/// unlucky.
std::optional<RationalVector> first_kernel_vector(const RationalMatrix& m, std::size_t cols);

/// Scales a nonzero rational vector to a primitive integer vector.
/// The sign is left unchanged.
RationalVector primitive_integer(const RationalVector& v);

/// Determinant of a square matrix over Q(i)[X] (Bareiss fraction-free).
UniPoly poly_determinant(std::vector<std::vector<UniPoly>> m);

}  // namespace holo
