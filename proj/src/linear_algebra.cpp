#include "holo/linear_algebra.hpp"

#include <cstdint>
#include <optional>
#include <utility>

#include "holo/errors.hpp"

namespace holo {

std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && sgn(m[sel][col]) == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        const Rational inv = 1 / m[row][col];
        for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || sgn(m[r][col]) == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                if (sgn(m[row][c]) != 0) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<RationalVector> rational_kernel(RationalMatrix m, std::size_t cols) {
    auto pivots = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

constexpr std::uint64_t kModulus = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kModulus);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul_mod(a, a))
        if (e & 1) r = mul_mod(r, a);
    return r;
}

std::uint64_t reduce_mod(const Integer& z) {
    Integer r = z % Integer(static_cast<unsigned long>(kModulus));
    if (r < 0) r += static_cast<unsigned long>(kModulus);
    return r.get_ui();
}

std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m, std::size_t cols) {
    std::vector<std::vector<Integer>> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        Integer den(1);
        for (std::size_t c = 0; c < cols; ++c)
            if (sgn(row[c]) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), row[c].get_den_mpz_t());
        std::vector<Integer> r(cols);
        for (std::size_t c = 0; c < cols; ++c)
            if (sgn(row[c]) != 0) r[c] = row[c].get_num() * (den / row[c].get_den());
        out.push_back(std::move(r));
    }
    return out;
}

// Solves A x = b for square nonsingular integer A (fraction-free forward
// elimination, rational back substitution). Returns nullopt if singular.
std::optional<RationalVector> solve_square(std::vector<std::vector<Integer>> a) {
    const std::size_t n = a.size();
    Integer prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t sel = k;
        while (sel < n && a[sel][k] == 0) ++sel;
        if (sel == n) return std::nullopt;
        std::swap(a[sel], a[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    RationalVector x(n);
    for (std::size_t k = n; k-- > 0;) {
        Rational acc(a[k][n]);
        for (std::size_t j = k + 1; j < n; ++j)
            if (sgn(x[j]) != 0) acc -= a[k][j] * x[j];
        x[k] = acc / a[k][k];
    }
    return x;
}

}  // namespace

std::optional<RationalVector> first_kernel_vector(const RationalMatrix& m, std::size_t cols) {
    auto z = integer_rows(m, cols);
    // Pivot structure modulo a prime: its prefix ranks never exceed the
    // rational ones, so a full-rank result is conclusive.
    std::vector<std::vector<std::uint64_t>> red(z.size(), std::vector<std::uint64_t>(cols));
    for (std::size_t r = 0; r < z.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) red[r][c] = z[r][c] == 0 ? 0 : reduce_mod(z[r][c]);
    std::vector<std::size_t> order(z.size());
    for (std::size_t r = 0; r < order.size(); ++r) order[r] = r;
    std::vector<std::size_t> pivot_rows;
    std::size_t row = 0, free_col = cols;
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t sel = row;
        while (sel < red.size() && red[sel][col] == 0) ++sel;
        if (sel == red.size()) {
            free_col = col;
            break;
        }
        std::swap(red[row], red[sel]);
        std::swap(order[row], order[sel]);
        const std::uint64_t inv = pow_mod(red[row][col], kModulus - 2);
        for (std::size_t r = row + 1; r < red.size(); ++r) {
            if (red[r][col] == 0) continue;
            const std::uint64_t f = mul_mod(red[r][col], inv);
            for (std::size_t c = col; c < cols; ++c)
                if (red[row][c] != 0) red[r][c] = (red[r][c] + kModulus - mul_mod(f, red[row][c])) % kModulus;
        }
        pivot_rows.push_back(order[row]);
        ++row;
    }
    if (free_col == cols) return std::nullopt;

    const std::size_t k = pivot_rows.size();
    std::vector<std::vector<Integer>> a(k, std::vector<Integer>(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = z[pivot_rows[i]][j];
        a[i][k] = -z[pivot_rows[i]][free_col];
    }
    if (auto x = solve_square(std::move(a))) {
        RationalVector v(cols, Rational(0));
        for (std::size_t j = 0; j < k; ++j) v[j] = (*x)[j];
        v[free_col] = 1;
        bool ok = true;
        for (std::size_t r = 0; r < z.size() && ok; ++r) {
            Rational acc(0);
            for (std::size_t c = 0; c <= free_col; ++c)
                if (z[r][c] != 0 && sgn(v[c]) != 0) acc += z[r][c] * v[c];
            ok = sgn(acc) == 0;
        }
        if (ok) return v;
    }
    auto basis = rational_kernel(m, cols);
    if (basis.empty()) return std::nullopt;
    return basis.front();
}

RationalVector primitive_integer(const RationalVector& v) {
    Integer den(1), num(0);
    for (const auto& x : v)
        if (sgn(x) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    for (const auto& x : v)
        if (sgn(x) != 0) {
            Integer s = x.get_num() * (den / x.get_den());
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), s.get_mpz_t());
        }
    if (num == 0) throw precondition_error("primitive_integer of the zero vector");
    Rational f = make_rational(den, num);
    RationalVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x * f);
    return out;
}

UniPoly poly_determinant(std::vector<std::vector<UniPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return UniPoly::constant(Scalar(1));
    UniPoly prev = UniPoly::constant(Scalar(1));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t sel = k;
        while (sel < n && m[sel][k].is_zero()) ++sel;
        if (sel == n) return {};
        if (sel != k) {
            std::swap(m[sel], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    UniPoly det = m[n - 1][n - 1];
    return negate ? -det : det;
}

}  // namespace holo
