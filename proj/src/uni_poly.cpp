#include "holo/uni_poly.hpp"

#include <algorithm>
#include <sstream>

#include "holo/errors.hpp"

namespace holo {

UniPoly::UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

UniPoly UniPoly::monomial(const Scalar& c, std::size_t k) {
    std::vector<Scalar> v(k + 1);
    v[k] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool UniPoly::is_real() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_real(); });
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    *this = *this * o;
    return *this;
}

UniPoly& UniPoly::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Scalar> out(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        out[k - 1] = c_[k] * Scalar(static_cast<std::int64_t>(k));
    return UniPoly(std::move(out));
}

Scalar UniPoly::operator()(const Scalar& x) const {
    Scalar acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

UniPoly UniPoly::taylor_shift(const Scalar& shift) const {
    std::vector<Scalar> c = c_;
    const std::size_t n = c.size();
    // Repeated synthetic division by (x - shift).
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t k = n - 1; k > i; --k) c[k - 1] += shift * c[k];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scale_argument(const Scalar& scale) const {
    std::vector<Scalar> c = c_;
    Scalar pw(1);
    for (auto& x : c) {
        x *= pw;
        pw *= scale;
    }
    return UniPoly(std::move(c));
}

UniPoly UniPoly::conj() const {
    std::vector<Scalar> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(x.conj());
    return UniPoly(std::move(c));
}

std::string UniPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[k];
        if (k >= 1) os << "*" << var;
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw precondition_error("polynomial division by zero");
    std::vector<Scalar> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UniPoly(), a};
    std::vector<Scalar> q(static_cast<std::size_t>(a.degree() - db + 1));
    const Scalar inv_lc = Scalar(1) / b.leading();
    for (int k = a.degree(); k >= db; --k) {
        Scalar coef = r[static_cast<std::size_t>(k)] * inv_lc;
        if (coef.is_zero()) continue;
        q[static_cast<std::size_t>(k - db)] = coef;
        for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= coef * b.coeffs()[static_cast<std::size_t>(i)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw precondition_error("inexact polynomial division");
    return q;
}

UniPoly make_monic(const UniPoly& a) {
    if (a.is_zero()) return a;
    return a * (Scalar(1) / a.leading());
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).remainder;
        a = std::move(b);
        b = make_monic(r);
    }
    return make_monic(a);
}

std::pair<UniPoly, UniPoly> real_imag_split(const UniPoly& q) {
    std::vector<Scalar> re, im;
    for (const auto& c : q.coeffs()) {
        re.emplace_back(c.re());
        im.emplace_back(c.im());
    }
    return {UniPoly(std::move(re)), UniPoly(std::move(im))};
}

Rational primitive_normalize(UniPoly& q) {
    if (q.is_zero()) return Rational(1);
    Integer den_lcm(1), num_gcd(0);
    for (const auto& c : q.coeffs()) {
        for (const Rational* part : {&c.re(), &c.im()}) {
            if (sgn(*part) == 0) continue;
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), part->get_den_mpz_t());
        }
    }
    for (const auto& c : q.coeffs()) {
        for (const Rational* part : {&c.re(), &c.im()}) {
            if (sgn(*part) == 0) continue;
            Integer scaled = part->get_num() * (den_lcm / part->get_den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
        }
    }
    Rational factor = make_rational(den_lcm, num_gcd);
    const Scalar* low = nullptr;
    for (const auto& c : q.coeffs())
        if (!c.is_zero()) {
            low = &c;
            break;
        }
    if (sgn(low->re()) < 0 || (sgn(low->re()) == 0 && sgn(low->im()) < 0)) factor = -factor;
    q *= Scalar(factor);
    return factor;
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& q) {
    if (q.degree() < 1) return {};
    UniPoly f = make_monic(q);
    UniPoly fp = f.derivative();
    UniPoly b = gcd(f, fp);
    UniPoly c = exact_div(f, b);
    UniPoly d = exact_div(fp, b) - c.derivative();
    std::vector<UniPoly> parts;
    while (c.degree() >= 1) {
        UniPoly a = gcd(c, d);
        parts.push_back(a);
        c = exact_div(c, a);
        d = exact_div(d, a) - c.derivative();
    }
    return parts;
}

int sign_at(const UniPoly& real_poly, const Rational& x) {
    return sgn(real_poly(Scalar(x)).re());
}

void normalize_family(std::vector<UniPoly>& fam, std::size_t sign_index, bool strip_gcd) {
    if (strip_gcd) {
        UniPoly g;
        for (const auto& p : fam) g = gcd(g, p);
        if (g.degree() > 0)
            for (auto& p : fam) p = exact_div(p, g);
    }
    std::vector<Scalar> all = fam[sign_index].coeffs();
    for (std::size_t i = 0; i < fam.size(); ++i)
        if (i != sign_index) all.insert(all.end(), fam[i].coeffs().begin(), fam[i].coeffs().end());
    // Lowest coefficient of fam[sign_index] stays first among nonzeros.
    UniPoly joined(all);
    Rational factor = primitive_normalize(joined);
    for (auto& p : fam) p *= Scalar(factor);
}

}  // namespace holo
