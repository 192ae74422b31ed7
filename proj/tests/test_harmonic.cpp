#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <repint/harmonic.hpp>
#include <repint/logprimitive.hpp>

#include "oracles.hpp"

#include <stdexcept>

using namespace repint;

TEST_CASE("power sums by direct summation") {
    CHECK(power_sum(1, 4, 1) == Rat(25) / 12);
    CHECK(power_sum(3, 2, 1) == 0);  // empty range
    CHECK(power_sum(2, 3, 2) == Rat(13) / 36);  // 1/4 + 1/9
    CHECK_THROWS_AS(power_sum(0, 3, 1), std::domain_error);
    for (long q = 1; q <= 5; ++q)
        for (long n = q - 1; n <= q + 6; ++n)
            for (long i = 1; i <= 3; ++i)
                CHECK(power_sum(q, n, i) == oracle::power_sum(q, n, i));
}

TEST_CASE("nested star sum: fixed values and spec validation") {
    CHECK(mhss({1, 3, {1}}) == Rat(11) / 6);
    CHECK(mhss({4, 9, {}}) == 1);       // empty exponent list
    CHECK(mhss({3, 2, {}}) == 1);       // empty range but k = 0
    CHECK(mhss({3, 2, {2}}) == 0);      // empty range, k >= 1
    CHECK(mhss({1, 2, {1, 1}}) == Rat(7) / 4);  // 1 + 1/2 + 1/4

    CHECK_THROWS_AS(mhss({0, 3, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(mhss({3, 1, {1}}), std::invalid_argument);   // n < q-1
    CHECK_THROWS_AS(mhss({1, 3, {0}}), std::invalid_argument);   // exponent < 1
}

TEST_CASE("nested star sum equals the literal nested-loop oracle") {
    for (long q = 1; q <= 4; ++q)
        for (long n = q - 1; n <= q + 6; ++n)
            for (long k = 0; k <= 3; ++k) {
                std::vector<long> ones(k, 1);
                CHECK(mhss({q, n, ones}) == oracle::mhss_literal(q, n, ones));
                CHECK(mhss_ones(q, n, k) == oracle::mhss_literal(q, n, ones));
            }
    // mixed exponents
    CHECK(mhss({2, 6, {1, 2}}) == oracle::mhss_literal(2, 6, {1, 2}));
    CHECK(mhss({1, 5, {2, 1, 3}}) == oracle::mhss_literal(1, 5, {2, 1, 3}));
    CHECK(mhss({3, 8, {1, 1, 2}}) == oracle::mhss_literal(3, 8, {1, 1, 2}));
}

TEST_CASE("all-ones star sum fixed values") {
    CHECK(mhss_ones(1, 1, 1) == 1);
    CHECK(mhss_ones(5, 9, 0) == 1);
    // 1/4 + 1/6 + 1/8 + 1/9 + 1/12 + 1/16
    CHECK(mhss_ones(2, 4, 2) == Rat(115) / 144);
}

TEST_CASE("variation identity for the shifted star sum") {
    CHECK(mhss_variation_rhs(0, 1, 1, 1) == 1);
    CHECK(mhss_variation_rhs(0, 1, 1, 0) == Rat(3) / 2);
    CHECK(mhss_variation_rhs(1, 2, 2, 0) == Rat(115) / 144);
    for (long m = 0; m <= 3; ++m)
        for (long n = 0; n <= 6; ++n)
            for (long mp = 0; mp <= 3; ++mp)
                for (long i = 0; i <= mp; ++i)
                    CHECK(mhss_variation_rhs(m, n, mp, i) ==
                          mhss_ones(1 + m, n + m + 1, mp - i));
}

TEST_CASE("partition reduction of the all-ones star sum") {
    CHECK(mhss_ones_by_partitions(1, 7, 0) == 1);
    CHECK(mhss_ones_by_partitions(1, 2, 2) == Rat(7) / 4);
    CHECK(mhss_ones_by_partitions(2, 4, 2) == Rat(115) / 144);
    for (long q = 1; q <= 4; ++q)
        for (long n = q - 1; n <= q + 6; ++n)
            for (long k = 0; k <= 4; ++k)
                CHECK(mhss_ones_by_partitions(q, n, k) == mhss_ones(q, n, k));
}

TEST_CASE("alternating binomial-harmonic sum and its closed form") {
    CHECK(alternating_harmonic(3, 0) == Rat(11) / 6);
    for (long m = 0; m <= 5; ++m) CHECK(alternating_harmonic(1, m) == 1);
    CHECK(alternating_harmonic(2, 1) == Rat(5) / 2);  // 3 - 3/2 + ... vs 3*(1/2+1/3)
    for (long n = 1; n <= 12; ++n)
        for (long m = 0; m <= 4; ++m)
            CHECK(alternating_harmonic(n, m) ==
                  static_cast<Rat>(binomial(m + n, m)) * power_sum(1 + m, n + m, 1));
}

TEST_CASE("repeated harmonic sum equals both the alternating form and literal nesting") {
    CHECK(repeated_harmonic_bruteforce(4, 0) == Rat(25) / 12);
    for (long m = 0; m <= 4; ++m) CHECK(repeated_harmonic_bruteforce(1, m) == 1);
    CHECK(repeated_harmonic_bruteforce(3, 1) == Rat(13) / 3);  // 1 + 3/2 + 11/6
    for (long n = 1; n <= 8; ++n)
        for (long m = 0; m <= 2; ++m)
            CHECK(repeated_harmonic_bruteforce(n, m) == oracle::nested_harmonic_literal(n, m));
    for (long n = 1; n <= 12; ++n)
        for (long m = 0; m <= 3; ++m)
            CHECK(repeated_harmonic_bruteforce(n, m) == alternating_harmonic(n, m));
}

TEST_CASE("repeated binomial-harmonic sum: three independent expressions agree") {
    CHECK(binomial_harmonic_repeated_bruteforce(1, 1, 0) == 1);  // C(2,1) * 1/2
    // n=1: single inner term C(1+m, m) * sum_{i=m+1}^{m+1} 1/i
    for (long m = 0; m <= 3; ++m)
        for (long k = 1; k <= 3; ++k)
            CHECK(binomial_harmonic_repeated_bruteforce(1, k, m) ==
                  static_cast<Rat>(binomial(1 + m, m)) / Rat(1 + m));
    // H_1 + H_2 = 5/2, matching the closed form C(3,1)*(1/2+1/3)
    CHECK(binomial_harmonic_repeated_bruteforce(2, 1, 0) == Rat(5) / 2);
    CHECK(static_cast<Rat>(binomial(3, 1)) * power_sum(2, 3, 1) == Rat(5) / 2);

    for (long n = 1; n <= 8; ++n)
        for (long k = 1; k <= 3; ++k)
            for (long m = 0; m <= 3; ++m) {
                const Rat nested = binomial_harmonic_repeated_bruteforce(n, k, m);
                CHECK(nested == oracle::nested_binomial_harmonic_literal(n, k, m));
                CHECK(nested == static_cast<Rat>(binomial(n + m + k, m + k)) *
                                    power_sum(1 + m + k, n + m + k, 1));
                CHECK(nested == alternating_harmonic(n, m + k));
            }
}

TEST_CASE("n-th derivative of x^(n+m) ln x: symbolic vs closed form") {
    {
        auto [sym, closed] = leibniz_derivative_check(1, 0);  // ln x + 1
        LogPoly want;
        want.add_term(Rat(0), 1, Rat(1));
        want.add_term(Rat(0), 0, Rat(1));
        want.canonicalize();
        CHECK(sym == want);
        CHECK(closed == want);
    }
    {
        auto [sym, closed] = leibniz_derivative_check(2, 0);  // 2 ln x + 3
        LogPoly want;
        want.add_term(Rat(0), 1, Rat(2));
        want.add_term(Rat(0), 0, Rat(3));
        want.canonicalize();
        CHECK(sym == want);
        CHECK(closed == want);
    }
    {
        auto [sym, closed] = leibniz_derivative_check(1, 1);  // 2x ln x + x
        LogPoly want;
        want.add_term(Rat(1), 1, Rat(2));
        want.add_term(Rat(1), 0, Rat(1));
        want.canonicalize();
        CHECK(sym == want);
        CHECK(closed == want);
    }
    for (long n = 1; n <= 5; ++n)
        for (long m = 0; m <= 4; ++m) {
            auto [sym, closed] = leibniz_derivative_check(n, m);
            CHECK(sym == closed);
        }
}
