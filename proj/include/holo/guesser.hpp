#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "holo/bi_poly.hpp"
#include "holo/holonomy.hpp"
#include "holo/number_theory.hpp"

namespace holo {

using SeriesPrefix = std::vector<Rational>;

struct AlgebraicGuess {
    BiPoly h;
    int per_variable_degree = 0;
    std::size_t residual_order = 0;  // h(X, G) = 0 mod X^residual_order was checked
};

class insufficient_data_error : public precondition_error {
public:
    using precondition_error::precondition_error;
};

/// Nonzero h with deg_X h, deg_Y h <= d and h(X, G) = 0 mod X^N, where G is
/// the prefix of length N. Among kernel basis vectors the one with the
/// smallest total degree wins (ties: lexicographically smallest normalized
/// coefficient list). Normalization: primitive integers, first nonzero entry
/// positive when read by Y-degree descending, then X-degree ascending.
std::optional<AlgebraicGuess> guess_algebraic(const SeriesPrefix& prefix, int d);

struct MinDegreeResult {
    int d = 0;
    AlgebraicGuess witness;
};

/// Smallest d for which guess_algebraic succeeds.
MinDegreeResult min_algebraic_degree(const SeriesPrefix& prefix);

/// Smallest d with (d+1)^2 > n.
int counting_cap(std::size_t n);

struct DpnResult {
    std::int64_t p = 0;
    std::size_t n = 0;
    int d = 0;
    AlgebraicGuess witness;
    int witness_total_degree = 0;
    double theorem_reference = 0;
    bool outside_regime = false;  // N >= p
};

DpnResult compute_dpn(const PrimeModulus& p, std::size_t n);

/// Polynomial recurrence of order <= max_order with coefficient degrees
/// <= max_degree holding on every window of the terms. Prefers the lowest
/// order. Throws insufficient_data_error if
/// terms.size() < (L+1)(D+1) + L + 10.
std::optional<PRecurrence> guess_recurrence(const std::vector<Rational>& terms, int max_order,
                                            int max_degree);

}  // namespace holo
