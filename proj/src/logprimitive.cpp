#include <repint/logprimitive.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace repint {

void IntegralSpec::validate() const {
    if (n < 1) throw std::invalid_argument("IntegralSpec: n must be >= 1");
    if (mp < 0) throw std::invalid_argument("IntegralSpec: mp must be >= 0");
    if (m < 0)
        throw std::domain_error(
            "IntegralSpec: exact mode requires integer m >= 0 (gamma pole at "
            "negative integers)");
}

GammaRatio gamma_ratio(long m, long n) {
    if (n < 1) throw std::invalid_argument("gamma_ratio: n must be >= 1");
    GammaRatio g;
    if (m >= 0) {
        g.exact = true;
        g.value_exact = Rat(factorial(m), factorial(n + m));
    } else if (n + m < 0) {
        // Limit form: the poles of Gamma(m+1) and Gamma(n+m+1) cancel,
        // leaving 1/((m+1)(m+2)...(m+n)).
        g.exact = true;
        Rat prod = 1;
        for (long j = 1; j <= n; ++j) prod *= (m + j);
        g.value_exact = 1 / prod;
    } else {
        throw std::domain_error("gamma_ratio: pole at negative integer m with n+m >= 0");
    }
    g.value = static_cast<double>(g.value_exact);
    return g;
}

double gamma_ratio_real(double m, long n) {
    if (n < 1) throw std::invalid_argument("gamma_ratio_real: n must be >= 1");
    double prod = 1.0;
    for (long j = 1; j <= n; ++j) prod *= (m + j);
    if (prod == 0.0) throw std::domain_error("gamma_ratio_real: pole (m is a negative integer)");
    return 1.0 / prod;
}

LogPoly single_primitive(const Rat& m, long mp) {
    if (mp < 0) throw std::invalid_argument("single_primitive: mp must be >= 0");
    if (m == -1)
        throw std::domain_error("single_primitive: m = -1 (logarithmic case) unsupported");
    const Rat mp1 = m + 1;
    LogPoly p;
    for (long k = 0; k <= mp; ++k) {
        Rat c = Rat(factorial(mp), factorial(k)) / mp1;
        c /= rat_pow(mp1, mp - k);
        if ((mp - k) % 2 == 1) c = -c;
        p.add_term(mp1, k, c);
    }
    p.canonicalize();
    return p;
}

namespace {

// Shared outer shell of the two exact n-th primitive forms; `inner(j)` is the
// depth-j nested harmonic sum over [1+m, n+m].
template <class Inner>
LogPoly nth_primitive_shell(const IntegralSpec& spec, Inner inner) {
    spec.validate();
    const long n = spec.n, m = spec.m, mp = spec.mp;
    const Rat pref = gamma_ratio(m, n).value_exact;
    LogPoly p;
    for (long k = 0; k <= mp; ++k) {
        Rat c = pref * Rat(factorial(mp), factorial(k)) * inner(mp - k);
        if ((mp - k) % 2 == 1) c = -c;
        p.add_term(Rat(n + m), k, c);
    }
    p.canonicalize();
    return p;
}

}  // namespace

LogPoly nth_primitive_mhss(const IntegralSpec& spec) {
    return nth_primitive_shell(spec, [&](long j) {
        return mhss_ones(1 + spec.m, spec.n + spec.m, j);
    });
}

LogPoly nth_primitive_partitions(const IntegralSpec& spec) {
    return nth_primitive_shell(spec, [&](long j) {
        return mhss_ones_by_partitions(1 + spec.m, spec.n + spec.m, j);
    });
}

LogPoly nth_primitive_ln_alternating(long n, long m) {
    if (n < 1) throw std::invalid_argument("nth_primitive_ln_alternating: n must be >= 1");
    if (m < 0) throw std::domain_error("nth_primitive_ln_alternating: m must be >= 0");
    const Rat B = Rat(binomial(n + m, m));
    const Rat nf = Rat(factorial(n));
    LogPoly p;
    p.add_term(Rat(n + m), 1, 1 / (nf * B));
    p.add_term(Rat(n + m), 0, -alternating_harmonic(n, m) / (nf * B * B));
    p.canonicalize();
    return p;
}

LogPolyF nth_primitive_mhss_real(long n, double m, long mp) {
    if (n < 1 || mp < 0)
        throw std::invalid_argument("nth_primitive_mhss_real: need n >= 1, mp >= 0");
    if (m == std::floor(m) && m < 0.0)
        throw std::domain_error("nth_primitive_mhss_real: m at a negative integer (gamma pole)");
    // Depth-j analogue of the shifted ones-sum: sum over 1 <= j_1 <= ... <=
    // j_d <= n of prod 1/(m + j_i), by the same (index, depth) DP.
    std::vector<double> T(mp + 1, 0.0);
    T[0] = 1.0;
    for (long j = 1; j <= n; ++j)
        for (long d = 1; d <= mp; ++d) T[d] += T[d - 1] / (m + j);

    const double pref = gamma_ratio_real(m, n);
    LogPolyF p;
    for (long k = 0; k <= mp; ++k) {
        double c = pref * static_cast<double>(Rat(factorial(mp), factorial(k))) * T[mp - k];
        if ((mp - k) % 2 == 1) c = -c;
        p.add_term(static_cast<double>(n) + m, k, c);
    }
    p.canonicalize();
    return p;
}

namespace {

void append_power(std::ostringstream& os, const Rat& a, long k, bool latex) {
    if (a != 0) {
        os << "x";
        if (a != 1) {
            if (latex)
                os << "^{" << rat_str(a) << "}";
            else
                os << "^(" << rat_str(a) << ")";
        }
    }
    if (k > 0) {
        if (a != 0) os << (latex ? " " : "*");
        if (latex) {
            if (k == 1)
                os << "\\ln x";
            else
                os << "\\ln^{" << k << "} x";
        } else {
            os << "ln(x)";
            if (k != 1) os << "^" << k;
        }
    }
}

std::string render(const LogPoly& p, bool latex) {
    if (p.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms) {
        Rat c = t.c;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (t.c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        const bool bare = (t.a == 0 && t.k == 0);
        if (c != 1 || bare) {
            if (latex && denominator(c) != 1)
                os << "\\frac{" << numerator(c).str() << "}{" << denominator(c).str() << "}";
            else
                os << rat_str(c);
            if (!bare) os << (latex ? " " : "*");
        }
        append_power(os, t.a, t.k, latex);
    }
    return os.str();
}

}  // namespace

std::string to_latex(const LogPoly& p) { return render(p, true); }
std::string to_plain(const LogPoly& p) { return render(p, false); }

}  // namespace repint
