#include "holo/bi_poly.hpp"

#include <algorithm>
#include <sstream>

#include "holo/rat_func.hpp"

namespace holo {

BiPoly::BiPoly(std::vector<UniPoly> rows) : rows_(std::move(rows)) { trim(); }

BiPoly BiPoly::from_grid(const std::vector<std::vector<Scalar>>& grid) {
    std::vector<UniPoly> rows;
    rows.reserve(grid.size());
    for (const auto& r : grid) rows.emplace_back(r);
    return BiPoly(std::move(rows));
}

BiPoly BiPoly::y_power(std::size_t k) {
    std::vector<UniPoly> rows(k + 1);
    rows[k] = UniPoly::constant(Scalar(1));
    return BiPoly(std::move(rows));
}

void BiPoly::trim() {
    while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

int BiPoly::deg_x() const {
    int d = -1;
    for (const auto& r : rows_) d = std::max(d, r.degree());
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (std::size_t j = 0; j < rows_.size(); ++j)
        if (!rows_[j].is_zero()) d = std::max(d, rows_[j].degree() + static_cast<int>(j));
    return d;
}

Scalar BiPoly::coeff(std::size_t x_deg, std::size_t y_deg) const {
    return y_deg < rows_.size() ? rows_[y_deg].coeff(x_deg) : Scalar();
}

const UniPoly& BiPoly::row(std::size_t k) const {
    static const UniPoly zero;
    return k < rows_.size() ? rows_[k] : zero;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
    for (std::size_t j = 0; j < o.rows_.size(); ++j) rows_[j] += o.rows_[j];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
    for (std::size_t j = 0; j < o.rows_.size(); ++j) rows_[j] -= o.rows_[j];
    trim();
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<UniPoly> out(a.rows_.size() + b.rows_.size() - 1);
    for (std::size_t i = 0; i < a.rows_.size(); ++i) {
        if (a.rows_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.rows_.size(); ++j) out[i + j] += a.rows_[i] * b.rows_[j];
    }
    return BiPoly(std::move(out));
}

BiPoly operator*(const BiPoly& a, const UniPoly& x_poly) {
    std::vector<UniPoly> out;
    out.reserve(a.rows_.size());
    for (const auto& r : a.rows_) out.push_back(r * x_poly);
    return BiPoly(std::move(out));
}

BiPoly operator*(const BiPoly& a, const Scalar& s) {
    std::vector<UniPoly> out;
    out.reserve(a.rows_.size());
    for (const auto& r : a.rows_) out.push_back(r * s);
    return BiPoly(std::move(out));
}

BiPoly BiPoly::operator-() const {
    std::vector<UniPoly> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(-r);
    return BiPoly(std::move(out));
}

BiPoly BiPoly::derivative_x() const {
    std::vector<UniPoly> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.derivative());
    return BiPoly(std::move(out));
}

BiPoly BiPoly::derivative_y() const {
    if (rows_.size() <= 1) return {};
    std::vector<UniPoly> out(rows_.size() - 1);
    for (std::size_t j = 1; j < rows_.size(); ++j)
        out[j - 1] = rows_[j] * Scalar(static_cast<std::int64_t>(j));
    return BiPoly(std::move(out));
}

Scalar BiPoly::operator()(const Scalar& x, const Scalar& y) const {
    Scalar acc;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        acc *= y;
        acc += (*it)(x);
    }
    return acc;
}

UniPoly BiPoly::at_x(const Scalar& x0) const {
    std::vector<Scalar> c;
    c.reserve(rows_.size());
    for (const auto& r : rows_) c.push_back(r(x0));
    return UniPoly(std::move(c));
}

UniPoly BiPoly::content_x() const {
    UniPoly g;
    for (const auto& r : rows_) {
        g = gcd(g, r);
        if (g.degree() == 0) break;
    }
    return g;
}

BiPoly BiPoly::divide_x(const UniPoly& d) const {
    std::vector<UniPoly> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(exact_div(r, d));
    return BiPoly(std::move(out));
}

std::string BiPoly::to_string() const {
    if (rows_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        if (rows_[j].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << rows_[j].to_string() << ")";
        if (j >= 1) os << "*Y";
        if (j >= 2) os << "^" << j;
    }
    return os.str();
}

PseudoRemainder pseudo_remainder(const BiPoly& p, const BiPoly& h) {
    if (h.deg_y() < 1) throw precondition_error("pseudo-division needs deg_Y h >= 1");
    const int dh = h.deg_y();
    const UniPoly& lc = h.leading_y();
    std::vector<UniPoly> r = p.rows();
    unsigned power = 0;
    while (static_cast<int>(r.size()) - 1 >= dh) {
        const int dr = static_cast<int>(r.size()) - 1;
        UniPoly top = r.back();
        for (auto& row : r) row *= lc;
        for (int i = 0; i <= dh; ++i)
            r[static_cast<std::size_t>(dr - dh + i)] -= top * h.row(static_cast<std::size_t>(i));
        ++power;
        while (!r.empty() && r.back().is_zero()) r.pop_back();
    }
    return {BiPoly(std::move(r)), power};
}

namespace {

// Polynomials in Y with coefficients in Q(i)(X).
using RfPoly = std::vector<RatFunc>;

void rf_trim(RfPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

RfPoly rf_from(const BiPoly& b) {
    RfPoly out;
    for (const auto& r : b.rows()) out.emplace_back(r);
    rf_trim(out);
    return out;
}

RfPoly rf_sub(const RfPoly& a, const RfPoly& b) {
    RfPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] - b[i];
    rf_trim(out);
    return out;
}

RfPoly rf_mul(const RfPoly& a, const RfPoly& b) {
    if (a.empty() || b.empty()) return {};
    RfPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    rf_trim(out);
    return out;
}

std::pair<RfPoly, RfPoly> rf_divmod(const RfPoly& a, const RfPoly& b) {
    RfPoly r = a;
    if (r.size() < b.size()) return {{}, r};
    RfPoly q(r.size() - b.size() + 1);
    const std::size_t db = b.size() - 1;
    while (r.size() >= b.size()) {
        const std::size_t k = r.size() - 1 - db;
        RatFunc coef = r.back() / b.back();
        q[k] = coef;
        for (std::size_t i = 0; i <= db; ++i) r[k + i] = r[k + i] - coef * b[i];
        r.pop_back();
        rf_trim(r);
    }
    rf_trim(q);
    return {q, r};
}

// Clears X-denominators: returns (numerator rows, common denominator).
std::pair<std::vector<UniPoly>, UniPoly> rf_clear(const RfPoly& p) {
    UniPoly lcm = UniPoly::constant(Scalar(1));
    for (const auto& c : p) {
        if (c.is_zero() || c.den().degree() == 0) continue;
        UniPoly g = gcd(lcm, c.den());
        lcm = exact_div(lcm, g) * c.den();
    }
    std::vector<UniPoly> rows;
    for (const auto& c : p) rows.push_back(c.num() * exact_div(lcm, c.den()));
    return {rows, lcm};
}

}  // namespace

ModularInverse ext_gcd_mod_h(const BiPoly& u, const BiPoly& h) {
    if (h.deg_y() < 1) throw precondition_error("modulus h must have positive Y-degree");
    RfPoly r0 = rf_from(h);
    RfPoly r1 = rf_divmod(rf_from(u), r0).second;
    RfPoly t0, t1{RatFunc(UniPoly::constant(Scalar(1)))};
    while (!r1.empty()) {
        auto [q, r] = rf_divmod(r0, r1);
        RfPoly t = rf_sub(t0, rf_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.size() != 1) {
        auto [rows, den] = rf_clear(r0);
        BiPoly factor(rows);
        if (!factor.is_zero()) {
            UniPoly c = factor.content_x();
            if (c.degree() > 0) factor = factor.divide_x(c);
        }
        throw not_invertible_error("polynomial is not invertible modulo h; common factor " +
                                       factor.to_string(),
                                   factor);
    }
    RatFunc g_inv = RatFunc(UniPoly::constant(Scalar(1))) / r0[0];
    for (auto& c : t0) c = c * g_inv;
    auto [rows, den] = rf_clear(t0);
    Rational factor = primitive_normalize(den);
    for (auto& r : rows) r *= Scalar(factor);
    return {BiPoly(std::move(rows)), den};
}

}  // namespace holo
