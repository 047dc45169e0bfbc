#include "holo/corpus.hpp"

namespace holo {

namespace {

UniPoly random_int_poly(Rng& rng, int max_degree, int bound) {
    std::vector<Scalar> c;
    for (int k = 0; k <= max_degree; ++k) c.emplace_back(rng.uniform(-bound, bound));
    return UniPoly(c);
}

UniPoly lin(std::int64_t c0, std::int64_t c1) { return UniPoly({Scalar(c0), Scalar(c1)}); }

}  // namespace

std::vector<CorpusEntry> named_corpus() {
    return {
        {"geometric", BiPoly::from_grid({{-1}, {1, -1}}), Scalar(1)},
        {"central_binomial", BiPoly::from_grid({{-1}, {0}, {1, -4}}), Scalar(1)},
        {"catalan", BiPoly::from_grid({{1}, {-1}, {0, 1}}), Scalar(1)},
    };
}

BiPoly random_irreducible_h(Rng& rng) {
    const UniPoly pi = lin(-1, 1);  // X - 1
    for (;;) {
        const int dy = static_cast<int>(rng.uniform(2, 3));
        std::vector<UniPoly> rows(static_cast<std::size_t>(dy + 1));
        std::int64_t alpha = 0, beta = 0;
        while (alpha + beta == 0) {
            alpha = rng.uniform(-3, 3);
            beta = rng.uniform(-3, 3);
        }
        rows[0] = lin(0, 1) * pi * lin(alpha, beta);
        UniPoly v = random_int_poly(rng, 2, 3);
        v = v + UniPoly::constant(Scalar(rng.uniform(0, 1) == 0 ? 1 : -1) - v.coeff(0));
        rows[1] = pi * v;
        for (int j = 2; j < dy; ++j) rows[static_cast<std::size_t>(j)] = pi * random_int_poly(rng, 2, 3);
        UniPoly top;
        while (top.is_zero() || top(Scalar(1)).is_zero()) top = random_int_poly(rng, 3, 3);
        rows[static_cast<std::size_t>(dy)] = top;
        BiPoly h(rows);
        if (h.content_x().degree() > 0) continue;
        return h;
    }
}

std::vector<CorpusEntry> holonomy_corpus(std::uint64_t seed, std::size_t count) {
    auto out = named_corpus();
    for (std::size_t i = 0; i < count; ++i) {
        Rng rng = Rng::for_item(seed, 3, i);
        out.push_back({"random_" + std::to_string(i), random_irreducible_h(rng), Scalar(0)});
    }
    return out;
}

UniPoly random_gaussian_poly(Rng& rng, int max_degree, int bound, bool nonzero) {
    for (;;) {
        std::vector<Scalar> c;
        for (int k = 0; k <= max_degree; ++k) {
            std::int64_t re = rng.uniform(-bound, bound), im = rng.uniform(-bound, bound);
            c.emplace_back(Rational(Integer(static_cast<long>(re))), Rational(Integer(static_cast<long>(im))));
        }
        UniPoly q(c);
        if (!nonzero || !q.is_zero()) return q;
    }
}

}  // namespace holo
