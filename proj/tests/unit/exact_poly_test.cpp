#include <doctest.h>

#include "holo/bi_poly.hpp"
#include "holo/errors.hpp"
#include "holo/linear_algebra.hpp"
#include "holo/rat_func.hpp"
#include "holo/roots.hpp"
#include "holo/series.hpp"
#include "holo/uni_poly.hpp"

using namespace holo;

namespace {
Scalar q(std::int64_t n, std::int64_t d = 1) { return Scalar(make_rational(n, d)); }
Scalar gi(std::int64_t re, std::int64_t im) { return Scalar(make_rational(re), make_rational(im)); }
}  // namespace

TEST_SUITE("exact_poly") {
    TEST_CASE("rational helpers") {
        CHECK(parse_rational("-6/4") == make_rational(-3, 2));
        CHECK(parse_rational("7") == make_rational(7));
        CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
        CHECK_THROWS_AS(parse_rational("abc"), parse_error);
        CHECK(floor_of(make_rational(-3, 2)) == -2);
        CHECK(ceil_of(make_rational(-3, 2)) == -1);
        auto s = sqrt_enclosure(make_rational(2));
        CHECK(s.lo * s.lo <= 2);
        CHECK(s.hi * s.hi >= 2);
        auto e = exp_enclosure(1);
        CHECK(e.lo < make_rational(2718281829, 1000000000));
        CHECK(e.hi > make_rational(2718281828, 1000000000));
    }

    TEST_CASE("Gaussian rational arithmetic") {
        Scalar z = gi(3, 4);
        CHECK(z.norm() == 25);
        CHECK(z * z.conj() == Scalar(25));
        CHECK(z / z == Scalar(1));
        CHECK((gi(0, 1) * gi(0, 1)) == Scalar(-1));
    }

    TEST_CASE("univariate division and gcd") {
        UniPoly a{q(-1), q(0), q(1)};  // X^2 - 1
        UniPoly b{q(-1), q(1)};        // X - 1
        auto dm = divmod(a, b);
        CHECK(dm.quotient == UniPoly{q(1), q(1)});
        CHECK(dm.remainder.is_zero());
        CHECK(gcd(a, UniPoly{q(1), q(1)} * UniPoly{q(2), q(1)}) == UniPoly{q(1), q(1)});
        CHECK_THROWS(exact_div(a, UniPoly{q(2), q(1)}));
        CHECK(a.derivative() == UniPoly{q(0), q(2)});
        CHECK(a.taylor_shift(q(1)) == UniPoly{q(0), q(2), q(1)});
        CHECK(a(q(3)) == q(8));
    }

    TEST_CASE("normalization") {
        UniPoly p{q(-2, 3), q(4, 3)};
        primitive_normalize(p);
        CHECK(p == UniPoly{q(1), q(-2)});
        std::vector<UniPoly> fam{UniPoly{q(2), q(2)}, UniPoly{q(-4), q(-4)}};
        auto kept = fam;
        normalize_family(kept, 1, false);
        CHECK(kept[0] == UniPoly{q(-1), q(-1)});
        CHECK(kept[1] == UniPoly{q(2), q(2)});
        normalize_family(fam, 1, true);
        CHECK(fam[0] == UniPoly{q(-1)});
        CHECK(fam[1] == UniPoly{q(2)});
    }

    TEST_CASE("square-free decomposition") {
        UniPoly x1{q(-1), q(1)}, x2{q(-2), q(1)};
        auto parts = squarefree_decomposition(x1 * x2 * x2);
        REQUIRE(parts.size() == 2);
        CHECK(parts[0] == x1);
        CHECK(parts[1] == x2);
    }

    TEST_CASE("bivariate polynomials") {
        // Catalan: 1 - Y + X Y^2
        BiPoly h = BiPoly::from_grid({{q(1)}, {q(-1)}, {q(0), q(1)}});
        CHECK(h.deg_y() == 2);
        CHECK(h.deg_x() == 1);
        CHECK(h.total_degree() == 3);
        CHECK(h(q(2), q(1)) == q(2));
        CHECK(h.derivative_y() == BiPoly::from_grid({{q(-1)}, {q(0), q(2)}}));
        CHECK(h.derivative_x() == BiPoly::from_grid({{q(0)}, {q(0)}, {q(1)}}));
        CHECK(h.at_x(q(0)) == UniPoly{q(1), q(-1)});
    }

    TEST_CASE("inverse modulo h") {
        BiPoly h = BiPoly::from_grid({{q(1)}, {q(-1)}, {q(0), q(1)}});
        auto inv = ext_gcd_mod_h(h.derivative_y(), h);
        auto prod = h.derivative_y() * inv.numerator;
        auto r = pseudo_remainder(prod, h);
        // remainder is lc^k * denominator, a polynomial in X only
        CHECK(r.remainder.deg_y() == 0);
        BiPoly reducible = BiPoly::from_grid({{q(1)}, {q(-2)}, {q(1)}});
        CHECK_THROWS_AS(ext_gcd_mod_h(reducible.derivative_y(), reducible), not_invertible_error);
    }

    TEST_CASE("rational functions reduce") {
        RatFunc a(UniPoly{q(-1), q(0), q(1)}, UniPoly{q(-1), q(1)});
        CHECK(a.den() == UniPoly{q(1)});
        CHECK(a.num() == UniPoly{q(1), q(1)});
        RatFunc b(UniPoly{q(1)}, UniPoly{q(0), q(1)});
        CHECK((b - b).is_zero());
        CHECK(b * RatFunc(UniPoly{q(0), q(1)}) == RatFunc(UniPoly{q(1)}));
        CHECK(b / b == RatFunc(UniPoly{q(1)}));
    }

    TEST_CASE("root enclosures") {
        // (X - 1)(X^2 + 1)
        UniPoly p = UniPoly{q(-1), q(1)} * UniPoly{q(1), q(0), q(1)};
        auto roots = root_enclosures(p, 1e-12);
        REQUIRE(roots.size() == 3);
        int real = 0;
        for (const auto& r : roots) {
            CHECK(r.radius <= 1e-12);
            if (r.meets_real_axis()) ++real;
        }
        CHECK(real == 1);
        CHECK(real_root_count(UniPoly{q(-2), q(0), q(1)}, make_rational(-2), make_rational(2)) == 2);
        CHECK(real_root_count(UniPoly{q(-2), q(0), q(1)}, make_rational(0), make_rational(1)) == 0);
        CHECK(disc_root_free(p, Scalar(q(3)), make_rational(1)));
        CHECK_FALSE(disc_root_free(p, Scalar(q(1)), make_rational(1, 10)));
        auto dbl = root_enclosures(UniPoly{q(-1), q(1)} * UniPoly{q(-1), q(1)});
        REQUIRE(dbl.size() == 1);
        CHECK(dbl[0].multiplicity == 2);
    }

    TEST_CASE("power series") {
        Series one_minus_x{q(1), q(-1)};
        auto inv = series_inverse(one_minus_x, 6);
        for (const auto& c : inv) CHECK(c == q(1));
        auto sq = series_mul(inv, inv, 6);
        for (std::size_t n = 0; n < 6; ++n) CHECK(sq[n] == q(static_cast<std::int64_t>(n + 1)));
        CHECK(series_derivative(sq, 1)[0] == q(2));
        CHECK_THROWS(series_inverse(Series{q(0), q(1)}, 3));
    }

    TEST_CASE("linear algebra") {
        RationalMatrix m{{make_rational(1), make_rational(2), make_rational(3)},
                         {make_rational(2), make_rational(4), make_rational(6)}};
        auto basis = rational_kernel(m, 3);
        CHECK(basis.size() == 2);
        auto v = first_kernel_vector(m, 3);
        REQUIRE(v.has_value());
        CHECK((*v)[0] + 2 * (*v)[1] + 3 * (*v)[2] == 0);
        RationalMatrix full{{make_rational(1), make_rational(0)}, {make_rational(0), make_rational(1)}};
        CHECK_FALSE(first_kernel_vector(full, 2).has_value());
        std::vector<std::vector<UniPoly>> pm{{UniPoly{q(0), q(1)}, UniPoly{q(1)}}, {UniPoly{q(1)}, UniPoly{q(0), q(1)}}};
        CHECK(poly_determinant(pm) == UniPoly{q(-1), q(0), q(1)});
    }
}
