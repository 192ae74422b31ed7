#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <repint/recurrent.hpp>
#include <repint/verify.hpp>

#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

using namespace repint;

namespace {
const double kE = std::exp(1.0);
}

TEST_CASE("recurrent primitive is F^n/n!") {
    const Fn expF = [](double x) { return std::exp(x); };
    const Fn cosF = [](double x) { return -std::cos(x); };

    const Fn r0 = recurrent_primitive(0, expF);
    for (double x : {0.0, 1.0, 2.0}) CHECK(r0(x) == doctest::Approx(1.0));

    const Fn e3 = recurrent_primitive(3, expF);
    for (double x : {0.0, 0.5, 1.0})
        CHECK(e3(x) == doctest::Approx(std::exp(3 * x) / 6.0).epsilon(1e-13));

    const Fn s3 = recurrent_primitive(3, cosF);
    for (double x : {0.3, 1.0, 2.0})
        CHECK(s3(x) ==
              doctest::Approx(-std::pow(std::cos(x), 3) / 6.0).epsilon(1e-13));
}

TEST_CASE("endpoint weight: composition sum, collapsed value, and enumeration oracle") {
    for (long j = 0; j <= 12; ++j) {
        const Rat w = partition_weight<Rat>(j);
        // collapsed closed value
        CHECK(w == rat_pow(Rat(-1), j) / Rat(factorial(j)));
        // literal enumeration over ordered compositions
        if (j <= 10) CHECK(w == oracle::composition_weight_literal(j));
    }
    CHECK_THROWS_AS(partition_weight<Rat>(-1), std::invalid_argument);
}

TEST_CASE("definite recurrent integral: closed form") {
    CHECK(definite_recurrent_closed(1, Rat(2), Rat(5)) == 3);
    CHECK(definite_recurrent_closed(4, Rat(3), Rat(3)) == 0);
    CHECK(definite_recurrent_closed<double>(3, 1.0, kE) ==
          doctest::Approx(std::pow(kE - 1, 3) / 6.0).epsilon(1e-14));
}

TEST_CASE("definite recurrent integral: endpoint-power form") {
    CHECK(definite_recurrent_partition(1, Rat(2), Rat(5)) == 3);
    CHECK(definite_recurrent_partition(3, Rat(1), Rat(0)) == Rat(-1) / 6);
    CHECK(definite_recurrent_partition(2, Rat(2), Rat(3)) == Rat(1) / 2);
    CHECK_THROWS_AS(definite_recurrent_partition(0, Rat(1), Rat(2)),
                    std::invalid_argument);
}

TEST_CASE("definite recurrent integral: generalized FTC over rho vectors") {
    CHECK(definite_recurrent_ftc(1, rho_vector(1, Rat(1)), rho_vector(1, Rat(4))) == 3);
    CHECK(definite_recurrent_ftc(2, rho_vector(2, Rat(1)), rho_vector(2, Rat(2))) ==
          Rat(1) / 2);
    CHECK_THROWS_AS(definite_recurrent_ftc(3, rho_vector(2, Rat(1)),
                                           rho_vector(3, Rat(2))),
                    std::invalid_argument);
}

TEST_CASE("the three exact forms coincide for seeded rational endpoints") {
    const auto pts = random_rat_pairs(20);
    for (long n = 1; n <= 12; ++n)
        for (const auto& [Fa, Fb] : pts) {
            const Rat closed = definite_recurrent_closed(n, Fa, Fb);
            CHECK(definite_recurrent_partition(n, Fa, Fb) == closed);
            CHECK(definite_recurrent_ftc(n, rho_vector(n, Fa), rho_vector(n, Fb)) ==
                  closed);
        }
}

TEST_CASE("unordered-partition weighting breaks the identity from n=4 on") {
    // what the weight would be if compositions were collapsed to partitions:
    // every multi-part-size partition is counted once instead of once per
    // ordering, so W(3) becomes -1/6 + 1/2 - 1 = -2/3 instead of -1/6
    auto unordered_weight = [](long j) {
        Rat total(0);
        for (const auto& p : enumerate_multiplicity(j)) {
            Rat prod(1);
            for (long i = 1; i <= j; ++i) {
                if (p.mult[i - 1] == 0) continue;
                prod *= rat_pow(Rat(-1), p.mult[i - 1]) /
                        rat_pow(Rat(factorial(i)), p.mult[i - 1]);
            }
            total += prod;
        }
        return total;
    };
    for (long j = 0; j <= 2; ++j)
        CHECK(unordered_weight(j) == partition_weight<Rat>(j));
    CHECK(unordered_weight(3) == Rat(-2) / 3);
    CHECK(partition_weight<Rat>(3) == Rat(-1) / 6);

    // f = 1 on [1,2]: the unordered weighting yields -11/24 instead of 1/24
    Rat wrong(0);
    for (long k = 1; k <= 4; ++k)
        wrong += (rat_pow(Rat(2), k) - rat_pow(Rat(1), k)) / Rat(factorial(k)) *
                 unordered_weight(4 - k);
    CHECK(wrong == Rat(-11) / 24);
    CHECK(definite_recurrent_closed(4, Rat(1), Rat(2)) == Rat(1) / 24);
    CHECK(definite_recurrent_partition(4, Rat(1), Rat(2)) == Rat(1) / 24);
}

TEST_CASE("identity witness and special endpoint families") {
    for (long n = 1; n <= 20; ++n) {
        // Fa=1, Fb=0: value collapses to (0-1)^n/n!, and stripping the
        // (0^k - 1^k) = -1 factor gives sum_k W(n-k)/k! = (-1)^{n+1}/n!
        const auto w = partition_identity_check(n, Rat(1), Rat(0));
        CHECK(w.pass);
        CHECK(w.lhs == rat_pow(Rat(-1), n) / Rat(factorial(n)));
        Rat weight_sum(0);
        for (long k = 1; k <= n; ++k)
            weight_sum += partition_weight<Rat>(n - k) / Rat(factorial(k));
        CHECK(weight_sum == rat_pow(Rat(-1), n + 1) / Rat(factorial(n)));

        // generic endpoints (a,b): ((b-a)^n - (-a)^n)/n! after removing a^n
        const Rat a = Rat(3) / 7, b = Rat(-5) / 2;
        const auto g = partition_identity_check(n, a, b);
        CHECK(g.pass);
        Rat lhs_shifted(0);
        for (long k = 1; k <= n; ++k)
            lhs_shifted += rat_pow(b, k) * rat_pow(a, n - k) / Rat(factorial(k)) *
                           partition_weight<Rat>(n - k);
        CHECK(lhs_shifted == (rat_pow(b - a, n) - rat_pow(-a, n)) / Rat(factorial(n)));

        // a = 1 specialization
        Rat lhs_one(0);
        for (long k = 1; k <= n; ++k)
            lhs_one += rat_pow(b, k) / Rat(factorial(k)) * partition_weight<Rat>(n - k);
        CHECK(lhs_one ==
              (rat_pow(b - 1, n) - rat_pow(Rat(-1), n)) / Rat(factorial(n)));
    }
}

TEST_CASE("nested quadrature oracle for recurrent integrals") {
    CHECK(nested_recurrent_quadrature(2, {0, 1}, [](double) { return 1.0; }) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(nested_recurrent_quadrature(2, {0, 1}, [](double x) { return std::exp(x); }) ==
          doctest::Approx(std::pow(kE - 1, 2) / 2.0).epsilon(1e-10));
    const double sin3 =
        nested_recurrent_quadrature(3, {0, M_PI}, [](double x) { return std::sin(x); });
    CHECK(sin3 == doctest::Approx(4.0 / 3.0).epsilon(1e-8));
    CHECK_THROWS_AS(nested_recurrent_quadrature(4, {0, 1}, [](double) { return 1.0; }),
                    std::invalid_argument);
}

TEST_CASE("symmetrized nested integrals of distinct integrands") {
    // ordered list integral: innermost x, then x^2 on [0,1] is
    // int_0^1 x2^2 * (x2^2/2) dx2 = 1/10
    const std::vector<Fn> xs = {[](double x) { return x; },
                                [](double x) { return x * x; }};
    CHECK(nested_recurrent_list(xs, {0, 1}) == doctest::Approx(0.1).epsilon(1e-10));

    const auto rep = conjecture_symmetrized_check(
        {builtin("x"), builtin("x2")}, {0, 1});
    CHECK(rep.product == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(rep.rel_dev <= 1e-7);

    const auto es = conjecture_symmetrized_check(
        {builtin("exp"), builtin("sin")}, {0, 1});
    CHECK(es.rel_dev <= 1e-7);

    // identical integrands: the n! copies of J_n must sum to (int f)^n
    const auto same = conjecture_symmetrized_check(
        {builtin("exp"), builtin("exp")}, {0, 1});
    CHECK(same.symmetrized_sum == doctest::Approx(std::pow(kE - 1, 2)).epsilon(1e-9));
    CHECK(same.rel_dev <= 1e-7);

    const auto triple = conjecture_symmetrized_check(
        {builtin("x"), builtin("exp"), builtin("sin")}, {0, 1});
    CHECK(triple.rel_dev <= 1e-7);
}
