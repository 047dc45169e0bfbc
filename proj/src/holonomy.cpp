#include "holo/holonomy.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <optional>

#include "holo/errors.hpp"
#include "holo/linear_algebra.hpp"

namespace holo {

int LinearODE::max_coeff_degree() const {
    int d = -1;
    for (const auto& q : coeffs) d = std::max(d, q.degree());
    return d;
}

int PRecurrence::max_coeff_degree() const {
    int d = -1;
    for (const auto& p : coeffs) d = std::max(d, p.degree());
    return d;
}

namespace {

// num/den in Q(i)(X)[Y]/(h), deg_Y num < deg_Y h.
struct QElem {
    BiPoly num;
    UniPoly den;
};

void normalize(QElem& e) {
    if (e.num.is_zero()) {
        e.den = UniPoly::constant(Scalar(1));
        return;
    }
    if (e.den.degree() > 0) {
        UniPoly g = gcd(e.num.content_x(), e.den);
        if (g.degree() > 0) {
            e.num = e.num.divide_x(g);
            e.den = exact_div(e.den, g);
        }
    }
    Scalar inv = Scalar(1) / e.den.leading();
    e.num = e.num * inv;
    e.den *= inv;
}

UniPoly power_of(const UniPoly& p, unsigned k) {
    UniPoly r = UniPoly::constant(Scalar(1));
    for (unsigned i = 0; i < k; ++i) r *= p;
    return r;
}

QElem reduce(const BiPoly& p, UniPoly den, const BiPoly& h) {
    QElem e{p, std::move(den)};
    if (e.num.deg_y() >= h.deg_y()) {
        auto pr = pseudo_remainder(e.num, h);
        e.num = pr.remainder;
        e.den *= power_of(h.leading_y(), pr.power);
    }
    normalize(e);
    return e;
}

// D(N/E) = (N_X E - N E')/E^2 + N_Y G'/E with G' = N1/delta.
QElem derive(const QElem& e, const QElem& g1, const BiPoly& h) {
    BiPoly a = (e.num.derivative_x() * e.den - e.num * e.den.derivative()) * g1.den;
    BiPoly b = e.num.derivative_y() * g1.num;
    unsigned k = 0;
    if (b.deg_y() >= h.deg_y()) {
        auto pr = pseudo_remainder(b, h);
        b = pr.remainder;
        k = pr.power;
    }
    UniPoly lcpow = power_of(h.leading_y(), k);
    QElem out{a * lcpow + b * e.den, e.den * e.den * g1.den * lcpow};
    normalize(out);
    return out;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

using PolyMatrix = std::vector<std::vector<UniPoly>>;

UniPoly minor(const PolyMatrix& m, const std::vector<std::size_t>& rows, std::size_t cols, std::size_t skip) {
    PolyMatrix sub;
    for (auto r : rows) {
        std::vector<UniPoly> row;
        for (std::size_t c = 0; c < cols; ++c)
            if (c != skip) row.push_back(m[r][c]);
        sub.push_back(std::move(row));
    }
    return poly_determinant(std::move(sub));
}

// Kernel vector of the d x (N+1) matrix if its columns are dependent, given
// that the first N columns are independent.
std::optional<std::vector<UniPoly>> dependence(const PolyMatrix& m, std::size_t rows, std::size_t n) {
    if (n > rows) return std::nullopt;
    std::vector<std::size_t> chosen;
    bool found = false;
    for (auto& rs : combinations(rows, n)) {
        if (!minor(m, rs, n, n).is_zero()) {
            chosen = rs;
            found = true;
            break;
        }
    }
    if (!found) return std::nullopt;
    std::vector<UniPoly> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        c[i] = minor(m, chosen, n + 1, i);
        if (i % 2 == 1) c[i] = -c[i];
    }
    for (std::size_t r = 0; r < rows; ++r) {
        UniPoly acc;
        for (std::size_t i = 0; i <= n; ++i) acc += c[i] * m[r][i];
        if (!acc.is_zero()) return std::nullopt;
    }
    return c;
}

UniPoly lcm(const UniPoly& a, const UniPoly& b) { return exact_div(a * b, gcd(a, b)); }

// Lowest-order ODE with all coefficient degrees <= max_degree among orders
// in [min_order, max_order], by an exact linear solve over Q in the quotient
// ring. Requires a real h.
std::optional<LinearODE> degree_bounded_ode(std::vector<QElem>& derivs, const QElem& g1, const BiPoly& h,
                                            std::size_t min_order, std::size_t max_order,
                                            std::size_t max_degree) {
    const std::size_t rows = static_cast<std::size_t>(h.deg_y());
    for (std::size_t n = min_order; n <= max_order; ++n) {
        while (derivs.size() <= n) derivs.push_back(derive(derivs.back(), g1, h));
        UniPoly common = UniPoly::constant(Scalar(1));
        for (std::size_t i = 0; i <= n; ++i) common = lcm(common, derivs[i].den);
        // blocks[i][r] = row r of G^(i) over the common denominator
        std::vector<std::vector<UniPoly>> blocks(n + 1);
        std::size_t width = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            UniPoly scale = exact_div(common, derivs[i].den);
            for (std::size_t r = 0; r < rows; ++r) {
                blocks[i].push_back(derivs[i].num.row(r) * scale);
                width = std::max(width, blocks[i].back().size());
            }
        }
        const std::size_t cols = (n + 1) * (max_degree + 1);
        RationalMatrix m;
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t a = 0; a < width + max_degree; ++a) {
                RationalVector eq(cols);
                bool any = false;
                for (std::size_t i = 0; i <= n; ++i)
                    for (std::size_t k = 0; k <= max_degree && k <= a; ++k) {
                        Scalar c = blocks[i][r].coeff(a - k);
                        if (c.is_zero()) continue;
                        if (!c.is_real()) throw std::logic_error("degree-bounded ODE search needs real h");
                        eq[i * (max_degree + 1) + k] = c.re();
                        any = true;
                    }
                if (any) m.push_back(std::move(eq));
            }
        auto kernel = first_kernel_vector(m, cols);
        if (!kernel) continue;
        const RationalVector& v = *kernel;
        LinearODE ode;
        for (std::size_t i = 0; i <= n; ++i) {
            std::vector<Scalar> c;
            for (std::size_t k = 0; k <= max_degree; ++k) c.emplace_back(v[i * (max_degree + 1) + k]);
            ode.coeffs.emplace_back(c);
        }
        while (!ode.coeffs.empty() && ode.coeffs.back().is_zero()) ode.coeffs.pop_back();
        normalize_family(ode.coeffs, ode.coeffs.size() - 1, true);
        return ode;
    }
    return std::nullopt;
}

void check_ode_on_branch(const BiPoly& h, const LinearODE& ode) {
    UniPoly h0 = h.at_x(Scalar(0));
    if (h0.degree() < 1 || !h0.is_real()) return;
    UniPoly hy0 = h.derivative_y().at_x(Scalar(0));
    for (const Rational& a0 : rational_roots(h0)) {
        if (hy0(Scalar(a0)).is_zero()) continue;
        std::size_t count = 2 * static_cast<std::size_t>(ode.order() + std::max(0, ode.max_coeff_degree()) + 8);
        Series g = series_root(h, {Scalar(a0)}, count);
        for (const auto& r : apply_ode(ode, g))
            if (!r.is_zero()) throw std::logic_error("derived ODE does not annihilate the series root");
        return;
    }
}

}  // namespace

LinearODE algebraic_to_ode(const BiPoly& h) {
    const int dy = h.deg_y();
    if (dy < 1) throw precondition_error("annihilating polynomial needs deg_Y h >= 1");
    const std::size_t rows = static_cast<std::size_t>(dy);

    ModularInverse inv = ext_gcd_mod_h(h.derivative_y(), h);
    QElem g1 = reduce(-(h.derivative_x() * inv.numerator), inv.denominator, h);
    std::vector<QElem> derivs{reduce(BiPoly::y_power(1), UniPoly::constant(Scalar(1)), h), g1};

    PolyMatrix m(rows);
    auto push_column = [&](const QElem& e) {
        for (std::size_t r = 0; r < rows; ++r) m[r].push_back(e.num.row(r));
    };
    push_column(derivs[0]);
    for (std::size_t n = 0;; ++n) {
        if (n > 0) {
            if (derivs.size() <= n) derivs.push_back(derive(derivs.back(), g1, h));
            push_column(derivs[n]);
        }
        auto c = dependence(m, rows, n);
        if (!c) continue;
        LinearODE ode;
        for (std::size_t i = 0; i <= n; ++i) ode.coeffs.push_back((*c)[i] * derivs[i].den);
        while (!ode.coeffs.empty() && ode.coeffs.back().is_zero()) ode.coeffs.pop_back();
        normalize_family(ode.coeffs, ode.coeffs.size() - 1, true);
        const std::size_t degree_cap = static_cast<std::size_t>(3 * h.deg_x() * dy);
        if (ode.max_coeff_degree() > static_cast<int>(degree_cap) && h.is_real()) {
            if (auto alt = degree_bounded_ode(derivs, g1, h, n + 1, 6 * rows, degree_cap)) ode = *alt;
        }
        check_ode_on_branch(h, ode);
        return ode;
    }
}

namespace {

// (n + offset)(n + offset + 1)...(n + offset + len - 1)
UniPoly rising(const Integer& offset, unsigned len) {
    UniPoly r = UniPoly::constant(Scalar(1));
    for (unsigned t = 0; t < len; ++t)
        r *= UniPoly({Scalar(Rational(offset + t)), Scalar(1)});
    return r;
}

}  // namespace

PRecurrence ode_to_recurrence(const LinearODE& ode) {
    int s_min = INT_MAX, s_max = INT_MIN;
    for (std::size_t i = 0; i < ode.coeffs.size(); ++i)
        for (std::size_t k = 0; k < ode.coeffs[i].size(); ++k)
            if (!ode.coeffs[i].coeffs()[k].is_zero()) {
                int s = static_cast<int>(i) - static_cast<int>(k);
                s_min = std::min(s_min, s);
                s_max = std::max(s_max, s);
            }
    if (s_min == INT_MAX) throw precondition_error("zero differential operator");
    PRecurrence rec;
    rec.coeffs.resize(static_cast<std::size_t>(s_max - s_min + 1));
    // Coefficient of X^m with m = n - s_min:
    //   sum q_{i,k} (m-k+1)...(m-k+i) A_{m-k+i}.
    for (std::size_t i = 0; i < ode.coeffs.size(); ++i)
        for (std::size_t k = 0; k < ode.coeffs[i].size(); ++k) {
            const Scalar& q = ode.coeffs[i].coeffs()[k];
            if (q.is_zero()) continue;
            int j = static_cast<int>(i) - static_cast<int>(k) - s_min;
            Integer offset(1 - s_min - static_cast<int>(k));
            rec.coeffs[static_cast<std::size_t>(j)] += rising(offset, static_cast<unsigned>(i)) * q;
        }
    while (!rec.coeffs.empty() && rec.coeffs.back().is_zero()) rec.coeffs.pop_back();
    // The relation holds for every integer n, so a vanishing P_0 can be
    // dropped by re-indexing n -> n - 1.
    while (!rec.coeffs.empty() && rec.coeffs.front().is_zero()) {
        rec.coeffs.erase(rec.coeffs.begin());
        for (auto& p : rec.coeffs) p = p.taylor_shift(Scalar(-1));
    }
    if (rec.coeffs.empty()) throw std::logic_error("recurrence collapsed to zero");
    normalize_family(rec.coeffs, rec.coeffs.size() - 1, false);
    return rec;
}

Series series_root(const BiPoly& h, const std::vector<Scalar>& initial, std::size_t count) {
    if (initial.empty()) throw precondition_error("series_root needs A_0");
    if (count == 0) return {};
    const Scalar& a0 = initial[0];
    if (!h(Scalar(0), a0).is_zero()) throw precondition_error("A_0 is not a root of h(0, Y)");
    const BiPoly hy = h.derivative_y();
    if (hy(Scalar(0), a0).is_zero())
        throw precondition_error("singular branch: h_Y(0, A_0) = 0; supply more initial terms "
                                 "(not supported)");
    Series g{a0};
    std::size_t prec = 1;
    while (prec < count) {
        std::size_t np = std::min(2 * prec, count);
        g.resize(np);
        Series hv = compose_bipoly(h, g, np);
        Series hyv = compose_bipoly(hy, g, np - prec);
        Series inv = series_inverse(hyv, np - prec);
        Series upper(hv.begin() + static_cast<std::ptrdiff_t>(prec), hv.end());
        Series corr = series_mul(upper, inv, np - prec);
        for (std::size_t k = 0; k < corr.size(); ++k) g[prec + k] -= corr[k];
        prec = np;
    }
    for (std::size_t k = 1; k < initial.size() && k < count; ++k)
        if (!(initial[k] == g[k]))
            throw precondition_error("initial terms are inconsistent with the branch of h");
    return g;
}

Series extend(const PRecurrence& rec, const Series& initial, std::size_t count) {
    const std::size_t L = static_cast<std::size_t>(rec.order());
    if (initial.size() < L) throw precondition_error("extend needs at least L initial terms");
    Series a = initial;
    if (a.size() >= count) {
        a.resize(count);
        return a;
    }
    a.reserve(count);
    const UniPoly& lead = rec.coeffs.back();
    for (std::size_t n = a.size() - L; n + L < count; ++n) {
        Scalar nn(static_cast<std::int64_t>(n));
        Scalar l = lead(nn);
        if (l.is_zero()) throw singular_index_error(static_cast<std::int64_t>(n));
        Scalar acc;
        for (std::size_t j = 0; j < L; ++j)
            if (!a[n + j].is_zero()) acc += rec.coeffs[j](nn) * a[n + j];
        a.push_back(-acc / l);
    }
    return a;
}

bool verify_annihilates(const PRecurrence& rec, const Series& terms) {
    const std::size_t L = static_cast<std::size_t>(rec.order());
    if (terms.size() <= L) throw precondition_error("need more than L terms to verify");
    for (std::size_t n = 0; n + L < terms.size(); ++n) {
        Scalar nn(static_cast<std::int64_t>(n));
        Scalar acc;
        for (std::size_t j = 0; j <= L; ++j)
            if (!terms[n + j].is_zero()) acc += rec.coeffs[j](nn) * terms[n + j];
        if (!acc.is_zero()) return false;
    }
    return true;
}

Series apply_ode(const LinearODE& ode, const Series& g) {
    const std::size_t N = static_cast<std::size_t>(ode.order());
    if (g.size() <= N) return {};
    const std::size_t valid = g.size() - N;
    Series out(valid);
    for (std::size_t i = 0; i <= N; ++i) {
        Series d = series_derivative(g, static_cast<unsigned>(i));
        const UniPoly& q = ode.coeffs[i];
        for (std::size_t k = 0; k < q.size(); ++k) {
            if (q.coeffs()[k].is_zero()) continue;
            for (std::size_t m = k; m < valid && m - k < d.size(); ++m) out[m] += q.coeffs()[k] * d[m - k];
        }
    }
    return out;
}

namespace {

BoundReport report(std::string name, std::int64_t measured, std::int64_t bound, std::string formula) {
    return {std::move(name), measured, bound, measured <= bound, std::move(formula)};
}

std::int64_t prop_degree(const BiPoly& h) { return std::max<std::int64_t>(2, h.total_degree()); }

}  // namespace

std::vector<BoundReport> check_bounds(const BiPoly& h, const LinearODE& ode, const PRecurrence& rec) {
    const std::int64_t dx = h.deg_x(), dy = h.deg_y(), d = prop_degree(h);
    return {
        report("ode_order", ode.order(), 6 * dy, "N <= 6 deg_Y h"),
        report("ode_coeff_degree", std::max(0, ode.max_coeff_degree()), 3 * dx * dy,
               "max deg Q_i <= 3 deg_X h deg_Y h"),
        report("recurrence_order", rec.order(), 4 * d * d, "L <= 4 d^2, d = max(2, total degree)"),
        report("recurrence_coeff_degree", std::max(0, rec.max_coeff_degree()), 3 * (d + 1) * (d + 1),
               "max deg P_j <= 3 (d+1)^2"),
    };
}

std::vector<BoundReport> recurrence_bound_audit(const BiPoly& h, const LinearODE& ode,
                                                const PRecurrence& rec) {
    const std::int64_t d = prop_degree(h);
    const std::int64_t L = rec.order(), degp = std::max(0, rec.max_coeff_degree());
    return {
        report("L_vs_4d2", L, 4 * d * d, "L <= 4 d^2"),
        report("L_vs_3d2_plus_6d", L, 3 * d * d + 6 * d, "L <= N + D with N <= 6d, D <= 3d^2"),
        report("L_vs_3(d+1)2", L, 3 * (d + 1) * (d + 1), "L <= 3 (d+1)^2"),
        report("degP_vs_3(d+1)2", degp, 3 * (d + 1) * (d + 1), "max deg P_j <= 3 (d+1)^2"),
        report("degP_vs_3d2", degp, 3 * d * d, "max deg P_j <= 3 d^2"),
        report("degP_vs_ode_degree", degp, std::max(0, ode.max_coeff_degree()),
               "max deg P_j <= max deg Q_i"),
    };
}

std::vector<Rational> rational_roots(const UniPoly& real_poly) {
    if (!real_poly.is_real() || real_poly.degree() < 1) return {};
    UniPoly p = real_poly;
    primitive_normalize(p);
    std::vector<Rational> roots;
    std::size_t low = 0;
    while (p.coeffs()[low].is_zero()) ++low;
    if (low > 0) roots.emplace_back(0);
    const Integer a0 = abs(p.coeffs()[low].re().get_num());
    const Integer an = abs(p.leading().re().get_num());
    const Integer limit("1000000000000");
    if (p.degree() == static_cast<int>(low) || a0 > limit || an > limit) return roots;
    auto divisors = [](Integer n) {
        std::vector<Integer> small, large;
        for (Integer d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                small.push_back(d);
                if (d * d != n) large.push_back(n / d);
            }
        small.insert(small.end(), large.rbegin(), large.rend());
        return small;
    };
    for (const auto& num : divisors(a0))
        for (const auto& den : divisors(an))
            for (int s : {1, -1}) {
                Rational cand = make_rational(num * s, den);
                if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
                if (p(Scalar(cand)).is_zero()) roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace holo
