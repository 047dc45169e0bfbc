#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "holo/bi_poly.hpp"
#include "holo/series.hpp"

namespace holo {

/// sum_{i=0}^{N} Q_i(X) G^{(i)}(X) = 0, with Q_N nonzero.
struct LinearODE {
    std::vector<UniPoly> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    int max_coeff_degree() const;
};

/// sum_{j=0}^{L} P_j(n) A_{n+j} = 0 for all n >= 0 (A_k = 0 for k < 0),
/// with P_L nonzero.
struct PRecurrence {
    std::vector<UniPoly> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    int max_coeff_degree() const;
};

struct BoundReport {
    std::string quantity;
    std::int64_t measured = 0;
    std::int64_t bound = 0;
    bool satisfied = false;
    std::string formula;
};

/// Minimal-order linear ODE for the roots of h: derivatives of Y are
/// computed in Q(i)(X)[Y]/(h) using G' = -h_X/h_Y, and the first linear
/// dependence among G, G', ..., G^(N) over Q(i)(X) gives the ODE. If that
/// ODE's coefficient degree exceeds 3 deg_X h deg_Y h, higher orders (up
/// to 6 deg_Y h) are searched for a relation of lower degree.
/// Throws not_invertible_error when h_Y has a common factor with h.
LinearODE algebraic_to_ode(const BiPoly& h);

/// Coefficient extraction of X^m in sum Q_i G^(i); offsets are normalized
/// so that the relation holds for every n >= 0.
PRecurrence ode_to_recurrence(const LinearODE& ode);

/// Power-series root of h(X, G) = 0 through the simple root A_0 = initial[0]
/// of h(0, Y), by Newton lifting. Extra initial terms are checked for
/// consistency.
Series series_root(const BiPoly& h, const std::vector<Scalar>& initial, std::size_t count);

/// Raised when P_L(n) = 0 blocks computing A_{n+L}.
class singular_index_error : public precondition_error {
public:
    singular_index_error(std::int64_t index)
        : precondition_error("recurrence leading coefficient vanishes at n = " +
                             std::to_string(index)),
          index_(index) {}
    std::int64_t index() const { return index_; }

private:
    std::int64_t index_;
};

/// Extends `initial` (at least L terms) to `count` terms.
Series extend(const PRecurrence& rec, const Series& initial, std::size_t count);

/// True iff sum_j P_j(n) terms[n+j] = 0 for all n with n + L < terms.size().
bool verify_annihilates(const PRecurrence& rec, const Series& terms);

/// sum_i Q_i(X) g^(i)(X), truncated to the exactly known part
/// (g.size() - order terms).
Series apply_ode(const LinearODE& ode, const Series& g);

/// The four degree/order bound reports: ODE order vs 6 deg_Y h, ODE
/// coefficient degree vs 3 deg_X h deg_Y h, recurrence order vs 4d^2 and
/// recurrence coefficient degree vs 3(d+1)^2, with d = max(2, total degree).
std::vector<BoundReport> check_bounds(const BiPoly& h, const LinearODE& ode, const PRecurrence& rec);

/// Extended recurrence audit: L against 4d^2, 3d^2+6d and 3(d+1)^2, and
/// max deg P_j against 3(d+1)^2, 3d^2 and the measured ODE coefficient degree.
std::vector<BoundReport> recurrence_bound_audit(const BiPoly& h, const LinearODE& ode,
                                                const PRecurrence& rec);

/// Rational roots of a real polynomial (rational root theorem; divisor
/// enumeration is skipped when the extreme coefficients exceed 10^12).
std::vector<Rational> rational_roots(const UniPoly& real_poly);

}  // namespace holo
