#include "holo/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "holo/errors.hpp"

namespace holo {

bool RootEnclosure::meets_real_axis() const {
    return center_exact.im() * center_exact.im() <= radius_bound * radius_bound;
}

namespace {

using cd = std::complex<double>;

std::vector<cd> to_complex(const UniPoly& p) {
    std::vector<cd> out;
    for (const auto& c : p.coeffs()) out.emplace_back(to_double(c.re()), to_double(c.im()));
    return out;
}

cd horner(const std::vector<cd>& c, cd z) {
    cd acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

// Aberth-Ehrlich iteration in double precision; only seeds the exact phase.
std::vector<cd> aberth(const UniPoly& p) {
    const auto c = to_complex(p);
    const int n = p.degree();
    std::vector<cd> dc(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) dc[static_cast<std::size_t>(k - 1)] = c[static_cast<std::size_t>(k)] * static_cast<double>(k);
    double bound = 0;
    for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(c[static_cast<std::size_t>(k)] / c.back()));
    bound = 1.0 + bound;
    std::vector<cd> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double ang = 2.0 * M_PI * k / n + 0.4;
        z[static_cast<std::size_t>(k)] = std::polar(0.5 * bound, ang);
    }
    for (int it = 0; it < 500; ++it) {
        double change = 0;
        for (int i = 0; i < n; ++i) {
            auto& zi = z[static_cast<std::size_t>(i)];
            cd pv = horner(c, zi), dv = horner(dc, zi);
            if (pv == cd(0)) continue;
            cd ratio = pv / dv;
            cd sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) sum += 1.0 / (zi - z[static_cast<std::size_t>(j)]);
            cd w = ratio / (1.0 - ratio * sum);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
            zi -= w;
            change = std::max(change, std::abs(w) / (1.0 + std::abs(zi)));
        }
        if (change < 1e-15) break;
    }
    return z;
}

Scalar exact_point(cd z) { return Scalar(rational_from_double(z.real()), rational_from_double(z.imag())); }

Scalar round_point(const Scalar& z, unsigned bits) {
    return Scalar(round_dyadic(z.re(), bits), round_dyadic(z.im(), bits));
}

double round_up_double(const Rational& r) {
    double d = to_double(r);
    if (rational_from_double(d) < r) d = std::nextafter(d, std::numeric_limits<double>::infinity());
    return d;
}

struct PartState {
    UniPoly poly;
    int multiplicity;
    std::vector<Scalar> z;
    std::vector<Rational> radius;
    unsigned bits = 60;
};

// One certification attempt: computes Weierstrass corrections and radii.
// Returns the corrections so the caller can take a Durand-Kerner step.
std::vector<Scalar> weierstrass(PartState& s) {
    const std::size_t n = s.z.size();
    const Scalar& lc = s.poly.leading();
    std::vector<Scalar> w(n);
    s.radius.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        Scalar denom = lc;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) denom *= s.z[i] - s.z[j];
        if (denom.is_zero()) throw certification_error("coincident root approximations");
        w[i] = s.poly(s.z[i]) / denom;
        Rational nn(static_cast<long>(n));
        s.radius[i] = sqrt_upper(w[i].norm() * nn * nn, 8 + s.bits);
    }
    return w;
}

bool discs_disjoint(const Scalar& za, const Rational& ra, const Scalar& zb, const Rational& rb) {
    Rational sum = ra + rb;
    return (za - zb).norm() > sum * sum;
}

bool part_certified(const PartState& s, const Rational& tol) {
    const std::size_t n = s.z.size();
    for (std::size_t i = 0; i < n; ++i)
        if (s.radius[i] > tol) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!discs_disjoint(s.z[i], s.radius[i], s.z[j], s.radius[j])) return false;
    return true;
}

void certify_part(PartState& s, const Rational& tol) {
    if (s.poly.degree() == 1) {
        s.z = {-s.poly.coeff(0) / s.poly.coeff(1)};
        s.radius = {Rational(0)};
        return;
    }
    for (int round = 0; round < 64; ++round) {
        auto w = weierstrass(s);
        if (part_certified(s, tol)) return;
        for (std::size_t i = 0; i < s.z.size(); ++i) s.z[i] = round_point(s.z[i] - w[i], s.bits);
        s.bits = std::min(2 * s.bits, 1u << 14);
    }
    throw certification_error("root certification failed for " + s.poly.to_string());
}

}  // namespace

std::vector<RootEnclosure> root_enclosures(const UniPoly& q, double tolerance) {
    if (q.is_zero()) throw precondition_error("root enclosures of the zero polynomial");
    if (!(tolerance > 0)) throw precondition_error("tolerance must be positive");
    std::vector<PartState> parts;
    auto sqf = squarefree_decomposition(q);
    for (std::size_t k = 0; k < sqf.size(); ++k) {
        if (sqf[k].degree() < 1) continue;
        PartState s{sqf[k], static_cast<int>(k + 1), {}, {}, 60};
        if (sqf[k].degree() > 1)
            for (cd z : aberth(sqf[k])) s.z.push_back(round_point(exact_point(z), s.bits));
        parts.push_back(std::move(s));
    }
    Rational tol = rational_from_double(tolerance);
    for (int round = 0; round < 8; ++round) {
        for (auto& s : parts) certify_part(s, tol);
        bool overlap = false;
        for (std::size_t a = 0; a < parts.size() && !overlap; ++a)
            for (std::size_t b = a + 1; b < parts.size() && !overlap; ++b)
                for (std::size_t i = 0; i < parts[a].z.size() && !overlap; ++i)
                    for (std::size_t j = 0; j < parts[b].z.size() && !overlap; ++j)
                        overlap = !discs_disjoint(parts[a].z[i], parts[a].radius[i], parts[b].z[j],
                                                  parts[b].radius[j]);
        if (!overlap) {
            std::vector<RootEnclosure> out;
            for (const auto& s : parts)
                for (std::size_t i = 0; i < s.z.size(); ++i) {
                    RootEnclosure e;
                    e.center_exact = s.z[i];
                    e.radius_bound = s.radius[i];
                    e.center = {to_double(s.z[i].re()), to_double(s.z[i].im())};
                    e.radius = round_up_double(s.radius[i]);
                    e.multiplicity = s.multiplicity;
                    out.push_back(std::move(e));
                }
            return out;
        }
        tol /= Rational(1 << 16);
    }
    throw certification_error("could not separate roots of distinct square-free parts");
}

namespace {

UniPoly real_part_only(const UniPoly& p) { return real_imag_split(p).first; }

int sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
    int count = 0, last = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

int real_root_count(const UniPoly& real_poly, const Rational& lo, const Rational& hi) {
    if (!real_poly.is_real()) throw precondition_error("Sturm counting needs a real polynomial");
    if (real_poly.is_zero()) throw precondition_error("Sturm counting of the zero polynomial");
    if (lo > hi) return 0;
    if (real_poly.degree() == 0) return 0;
    UniPoly p = real_poly;
    UniPoly g = gcd(p, p.derivative());
    if (g.degree() > 0) p = exact_div(p, g);
    int endpoint_roots = 0;
    for (const Rational* x : {&lo, &hi}) {
        UniPoly lin = UniPoly::linear_root(Scalar(*x));
        if (divmod(p, lin).remainder.is_zero()) {
            p = exact_div(p, lin);
            ++endpoint_roots;
            if (lo == hi) return 1;
        }
    }
    std::vector<UniPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        UniPoly r = -divmod(chain[chain.size() - 2], chain.back()).remainder;
        if (r.is_zero()) break;
        chain.push_back(real_part_only(r));
    }
    return endpoint_roots + sign_variations(chain, lo) - sign_variations(chain, hi);
}

namespace {

bool pellet_unit_disc(const UniPoly& g) {
    if (g.is_zero()) return false;
    Rational n0 = g.coeff(0).norm();
    if (sgn(n0) == 0) return false;
    Rational rest(0);
    for (std::size_t k = 1; k < g.size(); ++k)
        if (!g.coeffs()[k].is_zero()) rest += sqrt_upper(g.coeffs()[k].norm(), 40);
    return sqrt_lower(n0, 40) > rest;
}

// G(w) with G(z^2) = +-g(z) g(-z): roots are squared.
UniPoly graeffe(const UniPoly& g) {
    std::vector<Scalar> even, odd;
    for (std::size_t k = 0; k < g.size(); ++k) (k % 2 == 0 ? even : odd).push_back(g.coeffs()[k]);
    UniPoly e(even), o(odd);
    UniPoly shifted_o2 = o * o * UniPoly({Scalar(0), Scalar(1)});
    return e * e - shifted_o2;
}

}  // namespace

bool disc_root_free(const UniPoly& q, const Scalar& center, const Rational& radius, int graeffe_steps) {
    if (q.is_zero()) return false;
    if (q.degree() == 0) return true;
    UniPoly g = q.taylor_shift(center).scale_argument(Scalar(radius));
    primitive_normalize(g);
    for (int s = 0;; ++s) {
        if (pellet_unit_disc(g)) return true;
        if (s >= graeffe_steps) return false;
        g = graeffe(g);
        primitive_normalize(g);
    }
}

}  // namespace holo
