#pragma once

#include <cstdint>
#include <string>

#include "holo/json_io.hpp"

namespace holo {

struct SuiteResult {
    std::string name;
    bool ok = true;              // no unexpected violation
    std::string summary;
    Json details = Json::object();
};

/// f = (.|101), m = 3, D = 2, random nonzero Q_j, kappa = 1, tau from an
/// exhaustive scan of the shifted pair sums; each trial must find a witness
/// below 168 tau e^3 D^3 m^4.
SuiteResult legendre_delta_suite(std::uint64_t seed, unsigned workers, std::size_t trials);

/// f = 1, Q = [1], kappa = tau = 1.
SuiteResult constant_delta_smoke();

/// A in {1,10,100}, D in {1,2,3}, m in {1,2,3}: plan, recertify, b-cap.
SuiteResult interval_grid_suite(std::uint64_t seed, unsigned workers);

/// Random Q of degree <= 3 against f = (.|101) on windows from
/// interval_plan(Q, 1): single-polynomial oscillation lemmas.
SuiteResult lemma_suite(std::uint64_t seed, unsigned workers, std::size_t trials);

/// Legendre chain runs (mod 101, m = 3, D = 2).
SuiteResult chain_suite(std::uint64_t seed, unsigned workers, std::size_t trials);

/// tau used by the Legendre delta suite: max |pair sum| over shift
/// differences 1 and 2, windows of length <= p.
std::int64_t legendre_pair_tau(const PrimeModulus& p, unsigned workers);

}  // namespace holo
