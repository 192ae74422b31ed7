#include <repint/harmonic.hpp>
#include <repint/partitions.hpp>

#include <stdexcept>

namespace repint {

void MhssSpec::validate() const {
    if (q < 1) throw std::invalid_argument("MhssSpec: q must be >= 1");
    if (n < q - 1) throw std::invalid_argument("MhssSpec: n must be >= q-1");
    for (long e : s)
        if (e < 1) throw std::invalid_argument("MhssSpec: exponents must be >= 1");
}

Rat power_sum(long q, long n, long i) {
    if (q < 1) throw std::domain_error("power_sum: q must be >= 1");
    if (i < 1) throw std::invalid_argument("power_sum: exponent must be >= 1");
    Rat r = 0;
    for (long N = q; N <= n; ++N) r += rat_pow(Rat(1, N), i);
    return r;
}

Rat mhss(const MhssSpec& spec) {
    spec.validate();
    const long k = (long)spec.s.size();
    if (k == 0) return 1;
    if (spec.n < spec.q) return 0;
    // DP over (upper summation index N, depth j): after processing N, T[j]
    // holds the sum over q <= N_1 <= ... <= N_j <= N.  Updating j ascending
    // for each N lets N_j = N reuse N_{j-1} <= N from the same column.
    std::vector<Rat> T(k + 1, Rat(0));
    T[0] = 1;
    for (long N = spec.q; N <= spec.n; ++N) {
        for (long j = 1; j <= k; ++j) {
            T[j] += T[j - 1] * rat_pow(Rat(1, N), spec.s[j - 1]);
        }
    }
    return T[k];
}

Rat mhss_ones(long q, long n, long k) {
    if (k < 0) throw std::invalid_argument("mhss_ones: k must be >= 0");
    MhssSpec spec;
    spec.q = q;
    spec.n = n;
    spec.s.assign(k, 1);
    return mhss(spec);
}

Rat mhss_variation_rhs(long m, long n, long mp, long i) {
    if (m < 0 || n < 0) throw std::invalid_argument("mhss_variation_rhs: m, n must be >= 0");
    if (i < 0 || i > mp) throw std::invalid_argument("mhss_variation_rhs: need 0 <= i <= mp");
    Rat r = 0;
    for (long k = i; k <= mp; ++k)
        r += mhss_ones(1 + m, n + m, mp - k) * rat_pow(Rat(1, n + m + 1), k - i);
    return r;
}

Rat mhss_ones_by_partitions(long q, long n, long k) {
    if (k < 0) throw std::invalid_argument("mhss_ones_by_partitions: k must be >= 0");
    if (q < 1) throw std::domain_error("mhss_ones_by_partitions: q must be >= 1");
    Rat total = 0;
    for (const auto& p : enumerate_multiplicity(k)) {
        Rat prod = 1;
        for (long i = 1; i <= k; ++i) {
            long y = p.mult[i - 1];
            if (y == 0) continue;
            prod /= factorial(y) * rat_pow(Rat(i), y);
            prod *= rat_pow(power_sum(q, n, i), y);
        }
        total += prod;
    }
    return total;
}

Rat alternating_harmonic(long n, long m) {
    if (n < 1 || m < 0) throw std::invalid_argument("alternating_harmonic: need n >= 1, m >= 0");
    Rat r = 0;
    for (long k = 1; k <= n; ++k) {
        Rat term = Rat(binomial(m + n, m + k), k);
        r += (k % 2 == 1) ? term : -term;
    }
    return r;
}

Rat repeated_harmonic_bruteforce(long n, long m) {
    if (n < 1 || m < 0) throw std::invalid_argument("repeated_harmonic_bruteforce: need n >= 1, m >= 0");
    std::vector<Rat> S(n + 1, Rat(0));
    for (long j = 1; j <= n; ++j) S[j] = Rat(1, j);
    // Each pass replaces S by its prefix sums; after m+1 passes S[n] is the
    // (m+1)-fold nested sum.
    for (long pass = 0; pass <= m; ++pass)
        for (long j = 2; j <= n; ++j) S[j] += S[j - 1];
    return S[n];
}

Rat binomial_harmonic_repeated_bruteforce(long n, long k, long m) {
    if (n < 1 || k < 1 || m < 0)
        throw std::invalid_argument("binomial_harmonic_repeated_bruteforce: need n, k >= 1, m >= 0");
    std::vector<Rat> S(n + 1, Rat(0));
    for (long N = 1; N <= n; ++N)
        S[N] = Rat(binomial(N + m, m)) * power_sum(1 + m, N + m, 1);
    for (long pass = 0; pass < k; ++pass)
        for (long j = 2; j <= n; ++j) S[j] += S[j - 1];
    return S[n];
}

std::pair<LogPoly, LogPoly> leibniz_derivative_check(long n, long m) {
    if (n < 1 || m < 0) throw std::invalid_argument("leibniz_derivative_check: need n >= 1, m >= 0");
    LogPoly start;
    start.add_term(Rat(n + m), 1, Rat(1));  // x^{n+m} ln x
    LogPoly by_diff = differentiate(start, n);

    LogPoly closed;
    closed.add_term(Rat(m), 1, Rat(factorial(n + m), factorial(m)));
    closed.add_term(Rat(m), 0, Rat(factorial(n)) * alternating_harmonic(n, m));
    closed.canonicalize();
    return {by_diff, closed};
}

}  // namespace repint
