#pragma once

#include <repint/harmonic.hpp>
#include <repint/logpoly.hpp>
#include <repint/rational.hpp>

namespace repint {

// Parameters of the integral  x^m (ln x)^mp  d x^n.
struct IntegralSpec {
    long n = 1;   // integration order, >= 1
    long m = 0;   // power of x (exact mode: integer >= 0)
    long mp = 0;  // power of ln x, >= 0

    void validate() const;
};

// Gamma(m+1)/Gamma(n+m+1) with the integer cases kept exact.
struct GammaRatio {
    bool exact = false;
    Rat value_exact;       // set when exact
    double value = 0.0;    // always set
};

// Exact ratio for integer m: m >= 0 gives m!/(n+m)!; m < 0 with n+m < 0
// gives the limit form 1/((m+1)(m+2)...(n+m)).  The pole case (m negative
// integer, n+m >= 0) is rejected.
GammaRatio gamma_ratio(long m, long n);

// Float-mode ratio for real m, computed as the product form
// 1/((m+1)(m+2)...(m+n)).
double gamma_ratio_real(double m, long n);

// Single antiderivative of x^m (ln x)^mp for rational m != -1:
// mp! x^{m+1}/(m+1) sum_{k=0}^{mp} (-1)^{mp-k} (ln x)^k / (k! (m+1)^{mp-k}).
LogPoly single_primitive(const Rat& m, long mp);

// n-th antiderivative of x^m (ln x)^mp, zero constants, three routes that
// must agree exactly:
//   mhss:        nested-harmonic-sum coefficients
//   partitions:  partition-reduction coefficients
//   alternating: mp = 1 only, alternating binomial-harmonic coefficient
LogPoly nth_primitive_mhss(const IntegralSpec& spec);
LogPoly nth_primitive_partitions(const IntegralSpec& spec);
LogPoly nth_primitive_ln_alternating(long n, long m);

// Float mode for real (non-integer) m: the shifted sums become products over
// (m+j) and the result carries double exponents/coefficients.
LogPolyF nth_primitive_mhss_real(long n, double m, long mp);

}  // namespace repint
