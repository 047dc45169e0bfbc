#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace holo {

/// Deterministic trial division; intended for n < 2^31.
bool is_prime(std::int64_t n);

/// An odd prime p with 3 <= p < 2^31. Construction validates.
class PrimeModulus {
public:
    explicit PrimeModulus(std::int64_t p);
    std::int64_t value() const { return p_; }
    operator std::int64_t() const { return p_; }  // NOLINT

private:
    std::int64_t p_;
};

/// (n|p) via quadratic reciprocity (Jacobi-style reduction).
int legendre_symbol(std::int64_t n, PrimeModulus p);

/// The Legendre sequence n -> (n|p), extended periodically to all of Z.
/// Index p (and every multiple of p) maps to 0 even though F_p itself stops
/// at degree p-1.
class FeketeSeries {
public:
    explicit FeketeSeries(PrimeModulus p);

    PrimeModulus modulus() const { return p_; }
    int operator()(std::int64_t n) const {
        std::int64_t r = n % p_.value();
        if (r < 0) r += p_.value();
        return table_[static_cast<std::size_t>(r)];
    }
    std::vector<int> coefficients(std::size_t count) const;

private:
    PrimeModulus p_;
    std::vector<int> table_;
};

std::vector<int> fekete_coefficients(PrimeModulus p, std::size_t count);

/// Least n >= 1 with (n|p) = -1.
std::int64_t smallest_nonresidue(PrimeModulus p);

/// sum_{k=1}^{length} f(start+k+j) f(start+k+h), f = (.|p). Requires 0 <= j < h < p.
std::int64_t incomplete_pair_sum(PrimeModulus p, std::int64_t j, std::int64_t h,
                                 std::int64_t start, std::int64_t length);

/// sum_{k=1}^{length} f(start+k).
std::int64_t incomplete_plain_sum(PrimeModulus p, std::int64_t start, std::int64_t length);

struct CharSumReport {
    std::int64_t p = 0;
    std::optional<std::pair<std::int64_t, std::int64_t>> shift_pair;
    std::int64_t start = 0;
    std::int64_t length = 0;
    std::int64_t value = 0;
    /// |value| / (sqrt(p) log p); approximate, reporting only.
    double normalized = 0.0;
};

/// Exhaustive scan over start in [0,p) and length in [1,max_length] of the
/// plain sum (no shifts) or the pair sum; returns the maximiser of |value|,
/// ties broken by smallest (start, length). The start range is split across
/// `workers` threads.
CharSumReport max_incomplete_sum(PrimeModulus p, std::int64_t max_length,
                                 std::optional<std::pair<std::int64_t, std::int64_t>> shifts,
                                 unsigned workers = 1);

/// sqrt(p) * ln(p).
double polya_vinogradov_scale(std::int64_t p);

}  // namespace holo
