#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "holo/json_io.hpp"
#include "holo/parallel.hpp"

namespace holo {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct AcceptanceOptions {
    std::uint64_t seed = kDefaultSeed;
    unsigned workers = default_workers();
    std::vector<int> criteria;  // empty: all nine
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool correct = false;
    double seconds = 0;
    double target_seconds = 0;
    bool passed = false;  // correct and within the time target
    std::string summary;
    Json details;
};

CriterionResult run_criterion(int id, const AcceptanceOptions& opts);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

/// "[PASS] 3 holonomy round-trip (12.3 s / 60 s): ..."
std::string format_line(const CriterionResult& r);

// Independent oracles used by the acceptance checks and the tests.
namespace oracle {

/// n^((p-1)/2) mod p mapped to {-1, 0, 1}.
int euler_criterion(std::int64_t n, std::int64_t p);
/// C(2n, n)/(n + 1) for n < count.
std::vector<Integer> catalan_numbers(std::size_t count);
/// Determinant by the Leibniz permutation expansion (n <= 8).
Integer leibniz_determinant(const std::vector<std::vector<Integer>>& m);
/// Coefficient matrix of the d = 1 annihilator system for an integer prefix:
/// rows k < N, columns c00, c10, c01, c11.
std::vector<std::vector<Integer>> degree_one_system(const std::vector<std::int64_t>& prefix);
/// h(X, G) mod X^N by schoolbook expansion, integer prefix and integer h.
bool annihilates_prefix(const BiPoly& h, const std::vector<std::int64_t>& prefix);

}  // namespace oracle

}  // namespace holo
