#pragma once

#include <repint/logpoly.hpp>
#include <repint/rational.hpp>

#include <utility>
#include <vector>

namespace repint {

// Nested non-strict sum over q <= N_1 <= ... <= N_k <= n of prod 1/N_i^{s_i}.
struct MhssSpec {
    long q = 1;              // lower bound, >= 1
    long n = 0;              // upper bound, >= q-1 (n = q-1 means empty range)
    std::vector<long> s;     // exponents s_1..s_k, each >= 1

    void validate() const;
};

// sum_{N=q}^{n} 1/N^i ; empty range gives 0.
Rat power_sum(long q, long n, long i);

Rat mhss(const MhssSpec& spec);

// mhss with s = (1,...,1) k times; fast path used by the primitive formulas.
Rat mhss_ones(long q, long n, long k);

// sum_{k=i}^{mp} mhss_ones(1+m, n+m, mp-k) / (n+m+1)^{k-i}; equals
// mhss_ones(1+m, n+m+1, mp-i) by the telescoping variation identity.
Rat mhss_variation_rhs(long m, long n, long mp, long i);

// Same value as mhss_ones via the partition reduction:
// sum over partitions (sum i*y_i = k) of prod 1/(y_i! i^{y_i}) * power_sum(q,n,i)^{y_i}.
Rat mhss_ones_by_partitions(long q, long n, long k);

// sum_{k=1}^{n} (-1)^{k+1}/k * C(m+n, m+k); equals C(m+n,m) * power_sum(1+m, n+m, 1).
Rat alternating_harmonic(long n, long m);

// (m+1)-fold nested harmonic sum sum_{k_{m+1}<=n} ... sum_{k_1<=k_2} 1/k_1,
// computed by repeated prefix summation.
Rat repeated_harmonic_bruteforce(long n, long m);

// k-fold prefix summation applied to N -> C(N+m,m) * sum_{i=1+m}^{N+m} 1/i.
Rat binomial_harmonic_repeated_bruteforce(long n, long k, long m);

// d^n/dx^n of x^{n+m} ln x computed (1) by repeated symbolic differentiation
// and (2) by the closed form ((n+m)!/m!) x^m ln x + n! A(n,m) x^m, where
// A(n,m) = sum (-1)^{k+1}/k C(m+n, m+k).  Both returned for comparison.
std::pair<LogPoly, LogPoly> leibniz_derivative_check(long n, long m);

}  // namespace repint
