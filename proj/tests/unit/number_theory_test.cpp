#include <doctest.h>

#include <cmath>

#include "holo/errors.hpp"
#include "holo/number_theory.hpp"

using namespace holo;

TEST_SUITE("number_theory") {
    TEST_CASE("primality by trial division") {
        CHECK_FALSE(is_prime(1));
        CHECK(is_prime(2));
        CHECK(is_prime(97));
        CHECK_FALSE(is_prime(91));
        CHECK(is_prime(2147483647));
    }

    TEST_CASE("prime modulus rejects composites, 2 and negatives") {
        CHECK_THROWS_AS(PrimeModulus(15), precondition_error);
        CHECK_THROWS_AS(PrimeModulus(2), precondition_error);
        CHECK_THROWS_AS(PrimeModulus(-7), precondition_error);
        CHECK(PrimeModulus(101).value() == 101);
    }

    TEST_CASE("Legendre symbols for small primes") {
        const PrimeModulus p7(7);
        // squares mod 7 are 1, 2, 4
        const int expect[] = {0, 1, 1, -1, 1, -1, -1};
        for (int n = 0; n < 7; ++n) CHECK(legendre_symbol(n, p7) == expect[n]);
        CHECK(legendre_symbol(-1, PrimeModulus(13)) == 1);
        CHECK(legendre_symbol(-1, PrimeModulus(11)) == -1);
        CHECK(legendre_symbol(2, PrimeModulus(17)) == 1);
        CHECK(legendre_symbol(2, PrimeModulus(11)) == -1);
    }

    TEST_CASE("Fekete coefficients are periodic and multiplicative") {
        const PrimeModulus p(31);
        FeketeSeries f(p);
        auto c = fekete_coefficients(p, 3 * 31);
        for (std::int64_t n = 0; n < 31; ++n) {
            CHECK(c[n] == c[n + 31]);
            CHECK(f(n) == f(n - 62));
            for (std::int64_t m = 0; m < 31; ++m) CHECK(f(n * m) == f(n) * f(m));
        }
        CHECK(c[0] == 0);
        CHECK(c[31] == 0);
    }

    TEST_CASE("smallest quadratic nonresidue") {
        CHECK(smallest_nonresidue(PrimeModulus(7)) == 3);
        CHECK(smallest_nonresidue(PrimeModulus(23)) == 5);
        CHECK(smallest_nonresidue(PrimeModulus(71)) == 7);
    }

    TEST_CASE("complete sums vanish") {
        const PrimeModulus p(59);
        for (std::int64_t start : {0, 5, 58}) CHECK(incomplete_plain_sum(p, start, 59) == 0);
        // sum_n f(n) f(n+h) = -1 for h not divisible by p
        CHECK(incomplete_pair_sum(p, 0, 3, 0, 59) == -1);
    }

    TEST_CASE("max incomplete sum is worker-independent and bounded") {
        const PrimeModulus p(103);
        auto a = max_incomplete_sum(p, 103, std::nullopt, 1);
        auto b = max_incomplete_sum(p, 103, std::nullopt, 3);
        CHECK(a.start == b.start);
        CHECK(a.length == b.length);
        CHECK(a.value == b.value);
        CHECK(std::abs(a.value) == std::abs(incomplete_plain_sum(p, a.start, a.length)));
        CHECK(a.normalized < 1.0);
        auto s = max_incomplete_sum(p, 50, std::make_pair<std::int64_t, std::int64_t>(1, 4), 2);
        CHECK(s.shift_pair.has_value());
        CHECK(s.value == incomplete_pair_sum(p, 1, 4, s.start, s.length));
    }

    TEST_CASE("Polya-Vinogradov scale") {
        CHECK(polya_vinogradov_scale(101) == doctest::Approx(std::sqrt(101.0) * std::log(101.0)));
    }
}
