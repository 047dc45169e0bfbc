#include "holo/guesser.hpp"

#include <algorithm>
#include <tuple>

#include "holo/errors.hpp"
#include "holo/linear_algebra.hpp"
#include "holo/oscillation.hpp"
#include "holo/series.hpp"

namespace holo {

namespace {

struct Monomial {
    int a;  // X-degree
    int b;  // Y-degree
};

// Elimination order: total degree ascending, then Y-degree descending.
std::vector<Monomial> elimination_order(int d) {
    std::vector<Monomial> out;
    for (int a = 0; a <= d; ++a)
        for (int b = 0; b <= d; ++b) out.push_back({a, b});
    std::sort(out.begin(), out.end(), [](const Monomial& l, const Monomial& r) {
        return std::make_tuple(l.a + l.b, -l.b, l.a) < std::make_tuple(r.a + r.b, -r.b, r.a);
    });
    return out;
}

// Normalization order: Y-degree descending, then X-degree ascending.
std::vector<Rational> normalization_view(const BiPoly& h, int d) {
    std::vector<Rational> out;
    for (int b = d; b >= 0; --b)
        for (int a = 0; a <= d; ++a) out.push_back(h.coeff(a, b).re());
    return out;
}

BiPoly to_bipoly(const RationalVector& v, const std::vector<Monomial>& mons, int d) {
    std::vector<std::vector<Rational>> grid(static_cast<std::size_t>(d + 1),
                                            std::vector<Rational>(static_cast<std::size_t>(d + 1)));
    for (std::size_t c = 0; c < mons.size(); ++c) grid[mons[c].b][mons[c].a] = v[c];
    std::vector<UniPoly> rows;
    for (auto& row : grid) {
        std::vector<Scalar> cs;
        for (auto& x : row) cs.emplace_back(x);
        rows.emplace_back(cs);
    }
    return BiPoly(rows);
}

BiPoly normalize_guess(const BiPoly& h, int d) {
    auto view = normalization_view(h, d);
    RationalVector scaled = primitive_integer(view);
    std::size_t idx = 0;
    while (sgn(view[idx]) == 0) ++idx;
    Rational factor = scaled[idx] / view[idx];
    if (sgn(scaled[idx]) < 0) factor = -factor;
    return h * Scalar(factor);
}

}  // namespace

std::optional<AlgebraicGuess> guess_algebraic(const SeriesPrefix& prefix, int d) {
    if (d < 1) throw precondition_error("guess_algebraic needs d >= 1");
    if (prefix.size() < 2) throw precondition_error("series prefix needs at least 2 terms");
    const std::size_t n = prefix.size();
    const auto mons = elimination_order(d);

    // powers[b][k] = [X^k] G^b mod X^n
    Series g;
    for (const auto& x : prefix) g.emplace_back(x);
    std::vector<Series> powers{Series(n)};
    powers[0][0] = Scalar(1);
    for (int b = 1; b <= d; ++b) powers.push_back(series_mul(powers.back(), g, n));

    RationalMatrix m(n, RationalVector(mons.size()));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t c = 0; c < mons.size(); ++c) {
            const std::size_t a = static_cast<std::size_t>(mons[c].a);
            if (a <= k) m[k][c] = powers[mons[c].b][k - a].re();
        }
    auto basis = rational_kernel(std::move(m), mons.size());
    if (basis.empty()) return std::nullopt;

    std::optional<BiPoly> best;
    int best_degree = 0;
    std::vector<Rational> best_view;
    for (const auto& v : basis) {
        BiPoly h = normalize_guess(to_bipoly(v, mons, d), d);
        int td = h.total_degree();
        auto view = normalization_view(h, d);
        if (!best || td < best_degree || (td == best_degree && view < best_view)) {
            best = h;
            best_degree = td;
            best_view = view;
        }
    }

    // Independent recheck by Horner evaluation of h(X, G) mod X^n.
    for (const auto& c : compose_bipoly(*best, g, n))
        if (!c.is_zero()) throw std::logic_error("guessed annihilator fails the recheck");
    return AlgebraicGuess{*best, d, n};
}

int counting_cap(std::size_t n) {
    int d = 1;
    while (static_cast<std::size_t>((d + 1) * (d + 1)) <= n) ++d;
    return d;
}

MinDegreeResult min_algebraic_degree(const SeriesPrefix& prefix) {
    const int cap = counting_cap(prefix.size());
    for (int d = 1; d <= cap; ++d)
        if (auto g = guess_algebraic(prefix, d)) return {d, *g};
    throw std::logic_error("counting cap reached without a nontrivial kernel");
}

DpnResult compute_dpn(const PrimeModulus& p, std::size_t n) {
    if (n < 2) throw precondition_error("d_p(N) needs N >= 2");
    SeriesPrefix prefix;
    for (int v : fekete_coefficients(p, n)) prefix.emplace_back(v);
    auto r = min_algebraic_degree(prefix);
    DpnResult out;
    out.p = p.value();
    out.n = n;
    out.d = r.d;
    out.witness_total_degree = r.witness.h.total_degree();
    out.witness = std::move(r.witness);
    out.theorem_reference = theorem_reference(p, n);
    out.outside_regime = static_cast<std::int64_t>(n) >= p.value();
    return out;
}

std::optional<PRecurrence> guess_recurrence(const std::vector<Rational>& terms, int max_order,
                                            int max_degree) {
    if (max_order < 0 || max_degree < 0) throw precondition_error("order and degree caps must be >= 0");
    const std::size_t L = static_cast<std::size_t>(max_order), D = static_cast<std::size_t>(max_degree);
    const std::size_t needed = (L + 1) * (D + 1) + L + 10;
    if (terms.size() < needed)
        throw insufficient_data_error("guess_recurrence needs at least " + std::to_string(needed) +
                                      " terms, got " + std::to_string(terms.size()));
    const std::size_t cols = (L + 1) * (D + 1);
    RationalMatrix m;
    for (std::size_t n = 0; n + L < terms.size(); ++n) {
        RationalVector row(cols);
        for (std::size_t j = 0; j <= L; ++j) {
            Rational pw(1);
            for (std::size_t k = 0; k <= D; ++k, pw *= static_cast<long>(n)) row[j * (D + 1) + k] = pw * terms[n + j];
        }
        m.push_back(std::move(row));
    }
    auto v = first_kernel_vector(m, cols);
    if (!v) return std::nullopt;
    PRecurrence rec;
    for (std::size_t j = 0; j <= L; ++j) {
        std::vector<Scalar> c;
        for (std::size_t k = 0; k <= D; ++k) c.emplace_back((*v)[j * (D + 1) + k]);
        rec.coeffs.emplace_back(c);
    }
    while (rec.coeffs.back().is_zero()) rec.coeffs.pop_back();
    normalize_family(rec.coeffs, rec.coeffs.size() - 1, false);
    return rec;
}

}  // namespace holo
