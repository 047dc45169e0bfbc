#include "holo/number_theory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "holo/errors.hpp"

namespace holo {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeModulus::PrimeModulus(std::int64_t p) : p_(p) {
    if (p < 3 || p >= (std::int64_t{1} << 31))
        throw precondition_error("modulus must be an odd prime in [3, 2^31): " + std::to_string(p));
    if (p % 2 == 0 || !is_prime(p))
        throw precondition_error("modulus is not an odd prime: " + std::to_string(p));
}

int legendre_symbol(std::int64_t n, PrimeModulus p) {
    std::int64_t a = n % p.value();
    if (a < 0) a += p.value();
    std::int64_t m = p.value();
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t r = m % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, m);
        if (a % 4 == 3 && m % 4 == 3) result = -result;
        a %= m;
    }
    return m == 1 ? result : 0;
}

FeketeSeries::FeketeSeries(PrimeModulus p) : p_(p), table_(static_cast<std::size_t>(p.value())) {
    for (std::int64_t n = 0; n < p.value(); ++n)
        table_[static_cast<std::size_t>(n)] = legendre_symbol(n, p);
}

std::vector<int> FeketeSeries::coefficients(std::size_t count) const {
    std::vector<int> out(count);
    for (std::size_t n = 0; n < count; ++n) out[n] = (*this)(static_cast<std::int64_t>(n));
    return out;
}

std::vector<int> fekete_coefficients(PrimeModulus p, std::size_t count) {
    if (count == 0) throw precondition_error("count must be positive");
    return FeketeSeries(p).coefficients(count);
}

std::int64_t smallest_nonresidue(PrimeModulus p) {
    for (std::int64_t n = 2;; ++n)
        if (legendre_symbol(n, p) == -1) return n;
}

std::int64_t incomplete_pair_sum(PrimeModulus p, std::int64_t j, std::int64_t h,
                                 std::int64_t start, std::int64_t length) {
    if (!(0 <= j && j < h && h < p.value()))
        throw precondition_error("shift pair must satisfy 0 <= j < h < p");
    if (length < 1) throw precondition_error("length must be positive");
    FeketeSeries f(p);
    std::int64_t sum = 0;
    for (std::int64_t k = 1; k <= length; ++k) sum += f(start + k + j) * f(start + k + h);
    return sum;
}

std::int64_t incomplete_plain_sum(PrimeModulus p, std::int64_t start, std::int64_t length) {
    if (length < 1) throw precondition_error("length must be positive");
    FeketeSeries f(p);
    std::int64_t sum = 0;
    for (std::int64_t k = 1; k <= length; ++k) sum += f(start + k);
    return sum;
}

double polya_vinogradov_scale(std::int64_t p) {
    double pd = static_cast<double>(p);
    return std::sqrt(pd) * std::log(pd);
}

namespace {

struct ScanBest {
    std::int64_t start = 0;
    std::int64_t length = 0;
    std::int64_t value = 0;
    bool valid = false;
};

bool better(const ScanBest& a, const ScanBest& b) {
    if (!b.valid) return a.valid;
    if (!a.valid) return false;
    auto ma = std::llabs(a.value), mb = std::llabs(b.value);
    if (ma != mb) return ma > mb;
    return std::pair(a.start, a.length) < std::pair(b.start, b.length);
}

}  // namespace

CharSumReport max_incomplete_sum(PrimeModulus p, std::int64_t max_length,
                                 std::optional<std::pair<std::int64_t, std::int64_t>> shifts,
                                 unsigned workers) {
    const std::int64_t P = p.value();
    if (max_length < 1 || max_length > P)
        throw precondition_error("max_length must lie in [1, p]");
    if (shifts && !(0 <= shifts->first && shifts->first < shifts->second && shifts->second < P))
        throw precondition_error("shift pair must satisfy 0 <= j < h < p");

    FeketeSeries f(p);
    // prefix[i] = sum_{n=1}^{i} g(n), where g is f or f(.+j)f(.+h).
    std::vector<std::int64_t> prefix(static_cast<std::size_t>(2 * P + 1), 0);
    for (std::int64_t n = 1; n <= 2 * P; ++n) {
        std::int64_t g = shifts ? f(n + shifts->first) * f(n + shifts->second) : f(n);
        prefix[static_cast<std::size_t>(n)] = prefix[static_cast<std::size_t>(n - 1)] + g;
    }

    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(P)));
    std::vector<ScanBest> partial(workers);
    auto scan = [&](unsigned w) {
        ScanBest best;
        for (std::int64_t s = w; s < P; s += workers) {
            const std::int64_t base = prefix[static_cast<std::size_t>(s)];
            for (std::int64_t len = 1; len <= max_length; ++len) {
                ScanBest cand{s, len, prefix[static_cast<std::size_t>(s + len)] - base, true};
                if (better(cand, best)) best = cand;
            }
        }
        partial[w] = best;
    };
    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    }
    ScanBest best;
    for (const auto& b : partial)
        if (better(b, best)) best = b;

    CharSumReport report;
    report.p = P;
    report.shift_pair = shifts;
    report.start = best.start;
    report.length = best.length;
    report.value = best.value;
    report.normalized = static_cast<double>(std::llabs(best.value)) / polya_vinogradov_scale(P);
    return report;
}

}  // namespace holo
