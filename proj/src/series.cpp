#include "holo/series.hpp"

#include <algorithm>

#include "holo/errors.hpp"

namespace holo {

Series series_mul(const Series& a, const Series& b, std::size_t n) {
    Series out(std::min(n, a.empty() || b.empty() ? 0 : a.size() + b.size() - 1));
    for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    out.resize(n);
    return out;
}

Series series_inverse(const Series& a, std::size_t n) {
    if (a.empty() || a[0].is_zero()) throw precondition_error("series not invertible");
    Series inv(n);
    const Scalar a0_inv = Scalar(1) / a[0];
    if (n == 0) return inv;
    inv[0] = a0_inv;
    for (std::size_t k = 1; k < n; ++k) {
        Scalar acc;
        for (std::size_t j = 1; j <= k && j < a.size(); ++j)
            if (!a[j].is_zero()) acc += a[j] * inv[k - j];
        inv[k] = -acc * a0_inv;
    }
    return inv;
}

namespace {

Series times_poly(const UniPoly& p, const Series& s, std::size_t n) {
    Series out(n);
    for (std::size_t i = 0; i < p.size() && i < n; ++i) {
        const Scalar& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < s.size() && i + j < n; ++j) out[i + j] += c * s[j];
    }
    return out;
}

}  // namespace

Series compose_bipoly(const BiPoly& h, const Series& g, std::size_t n) {
    Series acc(n);
    Series gt(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(std::min(n, g.size())));
    for (int j = h.deg_y(); j >= 0; --j) {
        acc = series_mul(acc, gt, n);
        Series term = times_poly(h.row(static_cast<std::size_t>(j)), Series{Scalar(1)}, n);
        for (std::size_t k = 0; k < n; ++k) acc[k] += term[k];
    }
    return acc;
}

Series series_derivative(const Series& g, unsigned k) {
    if (g.size() <= k) return {};
    Series out(g.size() - k);
    for (std::size_t m = 0; m < out.size(); ++m) {
        Integer f(1);
        for (unsigned t = 1; t <= k; ++t) f *= static_cast<unsigned long>(m + t);
        out[m] = g[m + k] * Scalar(Rational(f));
    }
    return out;
}

}  // namespace holo
