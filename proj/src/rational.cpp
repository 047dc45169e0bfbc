#include "holo/rational.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "holo/errors.hpp"

namespace holo {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw precondition_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw precondition_error("non-finite double");
    Rational q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw parse_error("not a rational number: '" + text + "'");
    } catch (const precondition_error&) {
        throw parse_error("zero denominator in '" + text + "'");
    }
}

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational round_dyadic(const Rational& q, unsigned bits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    Rational scaled = q * Rational(scale) + Rational(1, 2);
    return make_rational(floor_of(scaled), scale);
}

RationalInterval sqrt_enclosure(const Rational& q, unsigned bits) {
    if (sgn(q) < 0) throw precondition_error("sqrt of negative rational");
    if (sgn(q) == 0) return {Rational(0), Rational(0)};
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 4, bits);
    Integer radicand = q.get_num() * q.get_den() * scale;
    Integer s;
    mpz_sqrt(s.get_mpz_t(), radicand.get_mpz_t());
    Integer denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 2, bits);
    denom *= q.get_den();
    Rational lo = make_rational(s, denom);
    if (s * s == radicand) return {lo, lo};
    return {lo, make_rational(s + 1, denom)};
}

Rational sqrt_upper(const Rational& q, unsigned bits) { return sqrt_enclosure(q, bits).hi; }
Rational sqrt_lower(const Rational& q, unsigned bits) { return sqrt_enclosure(q, bits).lo; }

RationalInterval exp_enclosure(unsigned k, unsigned bits) {
    // Partial sums of 1/j!; the tail after M terms is below 2/(M+1)!.
    Integer threshold;
    mpz_ui_pow_ui(threshold.get_mpz_t(), 2, bits + 5 * k + 4);
    Rational sum(0);
    Integer fact(1);
    unsigned j = 0;
    for (;; ++j) {
        if (j > 0) fact *= j;
        sum += Rational(Integer(1), fact);
        if (fact * (j + 1) > threshold) break;
    }
    Rational tail(Integer(2), fact * (j + 1));
    tail.canonicalize();
    Rational lo(1), hi(1);
    Rational e_lo = sum, e_hi = sum + tail;
    for (unsigned i = 0; i < k; ++i) {
        lo *= e_lo;
        hi *= e_hi;
    }
    return {lo, hi};
}

double to_double(const Rational& q) { return mpq_get_d(q.get_mpq_t()); }

Rational GaussianRational::norm() const {
    if (sgn(im_) == 0) return re_ * re_;
    return re_ * re_ + im_ * im_;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw precondition_error("division by zero");
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ /= o.re_;
        return *this;
    }
    Rational n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string GaussianRational::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    if (z.is_real()) return os << z.re();
    if (sgn(z.re()) == 0) return os << z.im() << "i";
    os << "(" << z.re() << (sgn(z.im()) < 0 ? "" : "+") << z.im() << "i)";
    return os;
}

}  // namespace holo
