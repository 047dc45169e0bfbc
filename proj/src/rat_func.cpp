#include "holo/rat_func.hpp"

#include "holo/errors.hpp"

namespace holo {

RatFunc::RatFunc(UniPoly num) : num_(std::move(num)), den_(UniPoly::constant(Scalar(1))) {}

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw precondition_error("rational function with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = UniPoly::constant(Scalar(1));
        return;
    }
    if (den_.degree() > 0) {
        UniPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    Scalar inv = Scalar(1) / den_.leading();
    if (!(inv == Scalar(1))) {
        num_ *= inv;
        den_ *= inv;
    }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw precondition_error("rational function division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace holo
