#pragma once

// Test-side oracles, written as literal nested loops / exhaustive searches so
// they share no code path with the library implementations they check.

#include <repint/rational.hpp>

#include <algorithm>
#include <set>
#include <vector>

namespace oracle {

using repint::Int;
using repint::Rat;

// sum_{N=q}^{n} 1/N^i by a literal loop.
inline Rat power_sum(long q, long n, long i) {
    Rat s(0);
    for (long N = q; N <= n; ++N) {
        Rat term(1);
        for (long j = 0; j < i; ++j) term /= Rat(N);
        s += term;
    }
    return s;
}

// Literal nested sum over q <= N_1 <= ... <= N_k <= n of prod 1/N_j^{s_j},
// exponential-cost recursion on purpose.
inline Rat mhss_literal(long q, long n, const std::vector<long>& s, size_t depth = 0,
                        long lo = -1) {
    if (depth == 0) lo = q;
    if (depth == s.size()) return Rat(1);
    Rat total(0);
    for (long N = lo; N <= n; ++N) {
        Rat term(1);
        for (long j = 0; j < s[depth]; ++j) term /= Rat(N);
        total += term * mhss_literal(q, n, s, depth + 1, N);
    }
    return total;
}

// Every multiplicity vector y of length m with sum i*y_i = m, found by an
// exhaustive odometer over all vectors with entries in [0, m].
inline std::set<std::vector<long>> partitions_bruteforce(long m) {
    std::set<std::vector<long>> found;
    std::vector<long> y(m, 0);
    while (true) {
        long weighted = 0;
        for (long i = 1; i <= m; ++i) weighted += i * y[i - 1];
        if (weighted == m) found.insert(y);
        long pos = 0;
        while (pos < m && y[pos] == m) y[pos++] = 0;
        if (pos == m) break;
        ++y[pos];
    }
    if (m == 0) found.insert({});
    return found;
}

// H-style nested harmonic sum: (m+1)-fold nesting, innermost 1/k_1, by
// literal recursion.
inline Rat nested_harmonic_literal(long n, long m) {
    if (m == 0) {
        Rat s(0);
        for (long k = 1; k <= n; ++k) s += Rat(1) / Rat(k);
        return s;
    }
    Rat s(0);
    for (long k = 1; k <= n; ++k) s += nested_harmonic_literal(k, m - 1);
    return s;
}

// k-fold nested sum whose innermost term is binom(N+m, m) * sum_{i=m+1}^{N+m} 1/i.
inline Rat nested_binomial_harmonic_literal(long n, long k, long m) {
    if (k == 0) {
        Rat h(0);
        for (long i = m + 1; i <= n + m; ++i) h += Rat(1) / Rat(i);
        return static_cast<Rat>(repint::binomial(n + m, m)) * h;
    }
    Rat s(0);
    for (long N = 1; N <= n; ++N) s += nested_binomial_harmonic_literal(N, k - 1, m);
    return s;
}

// sum over ordered compositions of j of (-1)^len / prod(part!), by explicit
// enumeration (independent of the library's conditioning recurrence).
inline Rat composition_weight_literal(long j) {
    Rat total(0);
    // recurse on the first part
    auto rec = [&](auto&& self, long rem, long len, const Rat& prod) -> void {
        if (rem == 0) {
            total += ((len % 2 == 0) ? prod : -prod);
            return;
        }
        for (long p = 1; p <= rem; ++p)
            self(self, rem - p, len + 1, prod / static_cast<Rat>(repint::factorial(p)));
    };
    rec(rec, j, 0, Rat(1));
    return total;
}

}  // namespace oracle
