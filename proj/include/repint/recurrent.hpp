#pragma once

#include <repint/builtins.hpp>
#include <repint/partitions.hpp>
#include <repint/quadrature.hpp>
#include <repint/rational.hpp>
#include <repint/repeated.hpp>

#include <stdexcept>
#include <vector>

namespace repint {

// rho_n(x) = F(x)^n / n!, the n-th recurrent primitive (zero constants).
Fn recurrent_primitive(long n, const Fn& F);

namespace detail {

template <class S>
S s_pow(const S& base, long e) {
    if (e < 0) throw std::invalid_argument("s_pow: negative exponent");
    S r(1), b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

template <class S>
S s_int(const Int& v) {
    return static_cast<S>(v);
}

}  // namespace detail

// W(j) = sum over compositions (l_1 + ... + l_len = j, ordered) of
// (-1)^len / (l_1! * ... * l_len!); the lower-endpoint weight of the
// recurrent FTC with rho_i = F^i/i!.  The family must be ordered: the sum
// telescopes to (-1)^j/j! (generating function 1/(1 + (e^t - 1)) = e^{-t}),
// whereas collapsing to unordered partitions undercounts every term with
// two or more distinct part sizes and breaks the identity from j=3 on.
// Evaluated by conditioning on the first part, W(j) = -sum_p W(j-p)/p!,
// instead of walking all 2^(j-1) compositions.
template <class S>
S partition_weight(long j) {
    if (j < 0) throw std::invalid_argument("partition_weight: j must be >= 0");
    std::vector<S> W;
    W.push_back(S(1));
    for (long m = 1; m <= j; ++m) {
        S w(0);
        for (long p = 1; p <= m; ++p)
            w -= W[m - p] / detail::s_int<S>(factorial(p));
        W.push_back(w);
    }
    return W[j];
}

// (Fb - Fa)^n / n!
template <class S>
S definite_recurrent_closed(long n, const S& Fa, const S& Fb) {
    if (n < 0) throw std::invalid_argument("definite_recurrent_closed: n must be >= 0");
    const S diff = Fb - Fa;  // materialize (expression templates) before pow
    return detail::s_pow(diff, n) / detail::s_int<S>(factorial(n));
}

// sum_{k=1}^{n} (Fb^k - Fa^k)/k! * Fa^{n-k} * W(n-k)
template <class S>
S definite_recurrent_partition(long n, const S& Fa, const S& Fb) {
    if (n < 1) throw std::invalid_argument("definite_recurrent_partition: n must be >= 1");
    S total(0);
    for (long k = 1; k <= n; ++k) {
        S term = (detail::s_pow(Fb, k) - detail::s_pow(Fa, k)) /
                 detail::s_int<S>(factorial(k));
        term *= detail::s_pow(Fa, n - k);
        term *= partition_weight<S>(n - k);
        total += term;
    }
    return total;
}

// sum_{k=1}^{n} (rho_k(b) - rho_k(a)) * sum over compositions of n-k of
// (-1)^len * prod_i rho_{l_i}(a); rho vectors carry rho_1..rho_n.  As with
// partition_weight, the inner sum must range over ordered compositions for
// the endpoint expansion to telescope.
template <class S>
S definite_recurrent_ftc(long n, const std::vector<S>& rho_a, const std::vector<S>& rho_b) {
    if (n < 1) throw std::invalid_argument("definite_recurrent_ftc: n must be >= 1");
    if ((long)rho_a.size() != n || (long)rho_b.size() != n)
        throw std::invalid_argument("definite_recurrent_ftc: rho vectors must have length n");
    S total(0);
    for (long k = 1; k <= n; ++k) {
        S inner(0);
        for (const auto& comp : enumerate_compositions(n - k)) {
            S prod((comp.size() % 2 == 0) ? 1 : -1);
            for (long part : comp) prod *= rho_a[part - 1];
            inner += prod;
        }
        total += (rho_b[k - 1] - rho_a[k - 1]) * inner;
    }
    return total;
}

// rho_k = F^k/k! for k = 1..n at a point value Fx.
template <class S>
std::vector<S> rho_vector(long n, const S& Fx) {
    std::vector<S> rho;
    for (long k = 1; k <= n; ++k)
        rho.push_back(detail::s_pow(Fx, k) / detail::s_int<S>(factorial(k)));
    return rho;
}

struct PartitionIdentityWitness {
    Rat lhs;  // partition-weighted sum
    Rat rhs;  // (Fb - Fa)^n / n!
    bool pass = false;
};

PartitionIdentityWitness partition_identity_check(long n, const Rat& Fa, const Rat& Fb);

// Literal nested quadrature of the definite recurrent integral
// int_a^b f(x_n) int_a^{x_n} f(x_{n-1}) ... int_a^{x_2} f(x_1) dx...; n <= 3.
double nested_recurrent_quadrature(long n, const Interval& iv, const Fn& f,
                                   const QuadCfg& cfg = {});

// Nested integral with distinct integrands, gs[0] innermost.
double nested_recurrent_list(const std::vector<Fn>& gs, const Interval& iv,
                             const QuadCfg& cfg = {});

struct ConjectureReport {
    double symmetrized_sum = 0.0;  // sum over permutations of the nested integral
    double product = 0.0;          // prod_i int_a^b f_i
    double abs_dev = 0.0;
    double rel_dev = 0.0;
};

// Numeric check that the symmetrized sum of permuted nested integrals equals
// the product of the single integrals (2 <= n <= 3).
ConjectureReport conjecture_symmetrized_check(const std::vector<Builtin>& fs,
                                              const Interval& iv, const QuadCfg& cfg = {});

}  // namespace repint
