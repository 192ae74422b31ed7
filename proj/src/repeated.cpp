#include <repint/logprimitive.hpp>
#include <repint/repeated.hpp>

#include <cmath>
#include <stdexcept>

namespace repint {

void validate(const Interval& iv, bool needs_positive_a) {
    if (!(iv.a < iv.b)) throw std::invalid_argument("Interval: requires a < b");
    if (needs_positive_a && !(iv.a > 0.0))
        throw std::domain_error("Interval: integrand requires a > 0");
}

LogPoly nth_primitive_via_reduction(long n, const std::map<long, LogPoly>& phi) {
    if (n < 1) throw std::invalid_argument("nth_primitive_via_reduction: n must be >= 1");
    LogPoly acc;
    for (long k = 1; k <= n; ++k) {
        const LogPoly& p = phi.at(n - k);  // out_of_range if the oracle lacks a level
        Rat scale = Rat(1, factorial(k - 1) * factorial(n - k));
        if ((n - k) % 2 == 1) scale = -scale;
        for (const auto& t : p.terms)
            acc.add_term(t.a + Rat(k - 1), t.k, t.c * scale);
    }
    acc.canonicalize();
    return acc;
}

double nth_primitive_via_reduction(long n, const std::function<double(long, double)>& phi,
                                   double x) {
    if (n < 1) throw std::invalid_argument("nth_primitive_via_reduction: n must be >= 1");
    double acc = 0.0;
    for (long k = 1; k <= n; ++k) {
        double term = std::pow(x, (double)(k - 1)) /
                      static_cast<double>(factorial(k - 1) * factorial(n - k)) * phi(n - k, x);
        acc += ((n - k) % 2 == 1) ? -term : term;
    }
    return acc;
}

double definite_repeated_ftc(long n, const Interval& iv,
                             const std::function<double(long, double)>& F) {
    if (n < 1) throw std::invalid_argument("definite_repeated_ftc: n must be >= 1");
    validate(iv);
    double r = F(n, iv.b);
    for (long k = 1; k <= n; ++k)
        r -= std::pow(iv.b - iv.a, (double)(n - k)) /
             static_cast<double>(factorial(n - k)) * F(k, iv.a);
    return r;
}

Rat definite_repeated_ftc_exact(long n, const Rat& a, const Rat& b,
                                const std::function<Rat(long, const Rat&)>& F) {
    if (n < 1) throw std::invalid_argument("definite_repeated_ftc_exact: n must be >= 1");
    Rat r = F(n, b);
    for (long k = 1; k <= n; ++k)
        r -= rat_pow(b - a, n - k) / Rat(factorial(n - k)) * F(k, a);
    return r;
}

Rat definite_repeated_ftc_exact_binomial(long n, const Rat& a, const Rat& b,
                                         const std::function<Rat(long, const Rat&)>& F) {
    if (n < 1) throw std::invalid_argument("definite_repeated_ftc_exact_binomial: n must be >= 1");
    // (b-a)^{n-k} expanded binomially: sum_{k=1}^{n} sum_{j=0}^{n-k}
    // C(n-k,j) b^j (-a)^{n-k-j} / (n-k)! * F_k(a), subtracted from F_n(b).
    Rat r = F(n, b);
    for (long k = 1; k <= n; ++k) {
        Rat inner = 0;
        for (long j = 0; j <= n - k; ++j) {
            Rat t = Rat(binomial(n - k, j)) * rat_pow(b, j) * rat_pow(-a, n - k - j);
            inner += t;
        }
        r -= inner / Rat(factorial(n - k)) * F(k, a);
    }
    return r;
}

double definite_repeated_moments(long n, const Interval& iv,
                                 const std::function<double(long)>& moment) {
    if (n < 1) throw std::invalid_argument("definite_repeated_moments: n must be >= 1");
    validate(iv);
    double sum = 0.0;
    for (long k = 0; k <= n - 1; ++k) {
        double term = static_cast<double>(binomial(n - 1, k)) *
                      std::pow(iv.b, (double)-k) * moment(k);
        sum += (k % 2 == 1) ? -term : term;
    }
    return std::pow(iv.b, (double)(n - 1)) / static_cast<double>(factorial(n - 1)) * sum;
}

double cauchy_formula(long n, const Interval& iv, const Fn& f, const QuadCfg& cfg) {
    if (n < 1) throw std::invalid_argument("cauchy_formula: n must be >= 1");
    validate(iv);
    const double b = iv.b;
    const double scale = 1.0 / static_cast<double>(factorial(n - 1));
    return scale * integrate([&](double t) { return std::pow(b - t, (double)(n - 1)) * f(t); },
                             iv.a, b, cfg)
                       .value;
}

double nested_quadrature(long n, const Interval& iv, const Fn& f, const QuadCfg& cfg) {
    validate(iv);
    if (n < 1 || n > 3)
        throw std::invalid_argument("nested_quadrature: supported for 1 <= n <= 3 only");
    if (n == 1) return integrate(f, iv.a, iv.b, cfg).value;
    const QuadCfg inner_cfg = cfg.tightened();
    if (n == 2) {
        Fn inner = [&](double x2) { return integrate(f, iv.a, x2, inner_cfg).value; };
        return integrate(inner, iv.a, iv.b, cfg).value;
    }
    const QuadCfg inner2_cfg = inner_cfg.tightened();
    Fn level1 = [&](double x2) { return integrate(f, iv.a, x2, inner2_cfg).value; };
    Fn level2 = [&](double x3) { return integrate(level1, iv.a, x3, inner_cfg).value; };
    return integrate(level2, iv.a, iv.b, cfg).value;
}

namespace {

// F_k chain for a builtin, as LogPolys from exact Phi_j = single_primitive
// of x^{m+j} (ln x)^mp.  Valid whenever endpoint evaluation stays in x > 0.
std::vector<LogPoly> exact_chain(long n, const Builtin& f) {
    std::map<long, LogPoly> phi;
    for (long j = 0; j < n; ++j) phi[j] = single_primitive(Rat(f.m + j), f.mp);
    std::vector<LogPoly> F;
    for (long k = 1; k <= n; ++k) F.push_back(nth_primitive_via_reduction(k, phi));
    return F;
}

// Numeric Phi_k with base point a: Phi_k(x) = integral_a^x t^k f(t) dt.
// Every F_k(a) then vanishes, so the FTC collapses to F_n(b); the exact
// chain above is what exercises the lower-endpoint terms.
double numeric_ftc(long n, const Interval& iv, const Builtin& f, const QuadCfg& cfg) {
    const QuadCfg inner = cfg.tightened();
    auto phi = [&](long k, double x) -> double {
        if (x == iv.a) return 0.0;
        return integrate([&](double t) { return std::pow(t, (double)k) * f.f(t); }, iv.a, x,
                         inner)
            .value;
    };
    return nth_primitive_via_reduction(n, phi, iv.b);
}

}  // namespace

double definite_repeated_builtin_ftc(long n, const Interval& iv, const Builtin& f,
                                     const QuadCfg& cfg) {
    if (n < 1) throw std::invalid_argument("definite_repeated_builtin_ftc: n must be >= 1");
    validate(iv, f.needs_positive_a);
    if (f.has_power_log && iv.a > 0.0) {
        const auto F = exact_chain(n, f);
        auto Fk = [&](long k, double x) { return evaluate(F[k - 1], x); };
        return definite_repeated_ftc(n, iv, Fk);
    }
    return numeric_ftc(n, iv, f, cfg);
}

double definite_repeated_builtin_moments(long n, const Interval& iv, const Builtin& f,
                                         const QuadCfg& cfg) {
    if (n < 1) throw std::invalid_argument("definite_repeated_builtin_moments: n must be >= 1");
    validate(iv, f.needs_positive_a);
    const QuadCfg inner = cfg.tightened();
    auto moment = [&](long k) {
        return integrate([&](double t) { return std::pow(t, (double)k) * f.f(t); }, iv.a, iv.b,
                         inner)
            .value;
    };
    return definite_repeated_moments(n, iv, moment);
}

double definite_xm_lnx(long n, const Interval& iv, long m, long mp, XmForm form,
                       bool paper_literal) {
    if (n < 1 || m < 0 || mp < 0)
        throw std::invalid_argument("definite_xm_lnx: need n >= 1, m >= 0, mp >= 0");
    if (!(iv.a > 0.0)) throw std::domain_error("definite_xm_lnx: requires a > 0");
    validate(iv, true);

    switch (form) {
        case XmForm::ftc: {
            const auto F = exact_chain(n, make_xmlnx(m, mp));
            double r = evaluate(F[n - 1], iv.b);
            for (long k = 1; k <= n; ++k) {
                double w = std::pow(iv.b - iv.a, (double)(n - k));
                if (!paper_literal) w /= static_cast<double>(factorial(n - k));
                r -= w * evaluate(F[k - 1], iv.a);
            }
            return r;
        }
        case XmForm::moments: {
            // Moments in closed form: primitive of x^{m+k} (ln x)^mp at the
            // endpoints, no quadrature.
            auto moment = [&](long k) {
                const LogPoly P = single_primitive(Rat(m + k), mp);
                return evaluate(P, iv.b) - evaluate(P, iv.a);
            };
            return definite_repeated_moments(n, iv, moment);
        }
        case XmForm::explicit_form: {
            // Fully expanded double sum over (k, j).
            const double la = std::log(iv.a), lb = std::log(iv.b);
            double outer = 0.0;
            for (long k = 0; k <= n - 1; ++k) {
                double inner = 0.0;
                for (long j = 0; j <= mp; ++j) {
                    double t = static_cast<double>(Rat(factorial(mp), factorial(j))) /
                               std::pow((double)(m + k + 1), (double)(mp - j + 1));
                    t *= std::pow(iv.b, (double)(m + k + 1)) * std::pow(lb, (double)j) -
                         std::pow(iv.a, (double)(m + k + 1)) * std::pow(la, (double)j);
                    inner += ((mp - j) % 2 == 1) ? -t : t;
                }
                double w = static_cast<double>(binomial(n - 1, k)) * std::pow(iv.b, (double)-k);
                outer += ((k % 2 == 1) ? -w : w) * inner;
            }
            return std::pow(iv.b, (double)(n - 1)) / static_cast<double>(factorial(n - 1)) *
                   outer;
        }
    }
    throw std::logic_error("definite_xm_lnx: unreachable");
}

}  // namespace repint
