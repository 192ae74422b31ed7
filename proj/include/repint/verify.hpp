#pragma once

#include <repint/rational.hpp>

#include <string>
#include <vector>

namespace repint {

// One named comparison; expected/actual are rendered values (exact rationals
// or fixed-precision reals) so reports are self-describing.
struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct Suite {
    std::string name;
    std::vector<Check> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    size_t failed() const {
        size_t n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }
};

// Deterministic rational sample points; numerators and denominators drawn
// from [-9, 9] \ {0} with a fixed seed.
std::vector<std::pair<Rat, Rat>> random_rat_pairs(size_t count, unsigned seed = 20240811);

// Exact identity suites.
Suite check_mhss_variation(long max_m, long max_n, long max_mp);
Suite check_mhss_partition_reduction(long max_q, long extra_n, long max_k);
Suite check_harmonic_alternating(long max_n, long max_m);   // alternating vs closed form
Suite check_harmonic_repeated(long max_n, long max_m);      // nested DP vs alternating
Suite check_harmonic_binomial(long max_n, long max_k, long max_m);
Suite check_leibniz(long max_n, long max_m);
Suite check_primitive_roundtrip(long max_n, long max_m, long max_mp);
Suite check_primitive_forms(long max_n, long max_m, long max_mp);
Suite check_recurrent_exact(long max_n, size_t pairs);
Suite check_partition_identity_suite(long max_n, size_t pairs);  // theorem + corollaries
Suite check_divergence_growth(long max_n, long max_m, double bound);

// Numeric suites (quadrature-backed).
Suite check_repeated_numeric(double tol);
Suite check_recurrent_numeric(double tol);
Suite check_conjecture_suite(double tol);

// quick = desk-scale grids; full = extended ranges.
std::vector<Suite> verify_all(bool full);

}  // namespace repint
