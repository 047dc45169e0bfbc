#pragma once

#include <string>
#include <vector>

#include "holo/bi_poly.hpp"
#include "holo/random.hpp"

namespace holo {

struct CorpusEntry {
    std::string name;
    BiPoly h;
    Scalar a0;  // simple root of h(0, Y) selecting the branch
};

/// Geometric, central binomial and Catalan annihilators.
std::vector<CorpusEntry> named_corpus();

/// Irreducible h with deg_Y h in {2, 3}, deg_X h <= 3 and the branch A_0 = 0
/// smooth (h_Y(0, 0) = +-1): Eisenstein at the prime X - 1 with content 1.
BiPoly random_irreducible_h(Rng& rng);

/// named_corpus() followed by `count` random entries drawn from `seed`.
std::vector<CorpusEntry> holonomy_corpus(std::uint64_t seed, std::size_t count);

/// Polynomial of degree <= max_degree with Gaussian-integer coefficients in
/// [-bound, bound] + i[-bound, bound]; nonzero when `nonzero` is set.
UniPoly random_gaussian_poly(Rng& rng, int max_degree, int bound, bool nonzero);

}  // namespace holo
