#pragma once

#include "holo/uni_poly.hpp"

namespace holo {

/// Element of Q(i)(X): num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
public:
    RatFunc() : den_(UniPoly::constant(Scalar(1))) {}
    RatFunc(UniPoly num);  // NOLINT
    RatFunc(UniPoly num, UniPoly den);

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const { return RatFunc(-num_, den_); }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void reduce();
    UniPoly num_;
    UniPoly den_;
};

}  // namespace holo
