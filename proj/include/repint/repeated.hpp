#pragma once

#include <repint/builtins.hpp>
#include <repint/logpoly.hpp>
#include <repint/quadrature.hpp>

#include <functional>
#include <map>

namespace repint {

struct Interval {
    double a = 0.0;
    double b = 1.0;
};

// a < b; log-family integrands additionally need a > 0.
void validate(const Interval& iv, bool needs_positive_a = false);

// Reduction formula for the n-th repeated primitive:
//   F_n(x) = sum_{k=1}^{n} (-1)^{n-k} x^{k-1}/(k-1)! * Phi_{n-k}(x)/(n-k)!
// where Phi_k is a primitive of x^k f(x).

// Exact form: phi maps k -> Phi_k as LogPoly; needs keys 0..n-1.
LogPoly nth_primitive_via_reduction(long n, const std::map<long, LogPoly>& phi);

// Numeric form: phi(k, x) evaluates Phi_k(x); returns F_n(x).
double nth_primitive_via_reduction(long n,
                                   const std::function<double(long, double)>& phi,
                                   double x);

// Generalized FTC over any consistent antiderivative chain:
//   integral = F_n(b) - sum_{k=1}^{n} (b-a)^{n-k}/(n-k)! * F_k(a)
// F(k, x) evaluates F_k(x) for k in 1..n.
double definite_repeated_ftc(long n, const Interval& iv,
                             const std::function<double(long, double)>& F);

// Same identity in exact arithmetic (polynomial chains only).
Rat definite_repeated_ftc_exact(long n, const Rat& a, const Rat& b,
                                const std::function<Rat(long, const Rat&)>& F);

// Binomial-expansion restatement of the same theorem; agrees exactly with
// definite_repeated_ftc_exact for polynomial chains.
Rat definite_repeated_ftc_exact_binomial(long n, const Rat& a, const Rat& b,
                                         const std::function<Rat(long, const Rat&)>& F);

// Single-level moment reduction:
//   b^{n-1}/(n-1)! * sum_{k=0}^{n-1} C(n-1,k) (-1)^k b^{-k} * moment(k)
// where moment(k) = integral_a^b x^k f(x) dx.
double definite_repeated_moments(long n, const Interval& iv,
                                 const std::function<double(long)>& moment);

// Single-integral reduction with kernel (b-t)^{n-1}/(n-1)!.
double cauchy_formula(long n, const Interval& iv, const Fn& f, const QuadCfg& cfg = {});

// Literal nested quadrature oracle; n <= 3.
double nested_quadrature(long n, const Interval& iv, const Fn& f, const QuadCfg& cfg = {});

// Definite n-fold repeated integral of a builtin integrand by the reduction
// routes; exact symbolic primitives are used when available on the interval,
// otherwise numeric primitives Phi_k(x) = integral_a^x t^k f(t) dt.
double definite_repeated_builtin_ftc(long n, const Interval& iv, const Builtin& f,
                                     const QuadCfg& cfg = {});
double definite_repeated_builtin_moments(long n, const Interval& iv, const Builtin& f,
                                         const QuadCfg& cfg = {});

// Definite n-fold repeated integral of x^m (ln x)^mp by three closed-form
// routes (no quadrature).  `paper_literal` reproduces an uncorrected variant
// of the endpoint-expansion formula that drops the 1/(n-k)! divisor on the
// lower-endpoint terms; it is wrong for n >= 3 and kept only as a witness.
enum class XmForm { ftc, moments, explicit_form };
double definite_xm_lnx(long n, const Interval& iv, long m, long mp, XmForm form,
                       bool paper_literal = false);

}  // namespace repint
