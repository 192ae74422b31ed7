#pragma once

#include <repint/rational.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace repint {

// Finite linear combination sum c * x^a * (ln x)^k, closed under d/dx.
// Scalar S is Rat (exact mode) or double (float mode, for real exponents).
template <class S>
struct BasicLogPoly {
    struct Term {
        S a{};       // power of x
        long k = 0;  // power of ln x, >= 0
        S c{};       // coefficient
    };
    std::vector<Term> terms;

    // Canonical form: sorted by (a, k), duplicates merged, zeros dropped.
    void canonicalize() {
        std::sort(terms.begin(), terms.end(), [](const Term& s, const Term& t) {
            if (s.a != t.a) return s.a < t.a;
            return s.k < t.k;
        });
        std::vector<Term> merged;
        for (const auto& t : terms) {
            if (!merged.empty() && merged.back().a == t.a && merged.back().k == t.k)
                merged.back().c += t.c;
            else
                merged.push_back(t);
        }
        terms.clear();
        for (auto& t : merged)
            if (t.c != S(0)) terms.push_back(t);
    }

    void add_term(S a, long k, S c) {
        if (k < 0) throw std::invalid_argument("LogPoly: negative log power");
        terms.push_back(Term{std::move(a), k, std::move(c)});
    }

    bool operator==(const BasicLogPoly& o) const {
        if (terms.size() != o.terms.size()) return false;
        for (size_t i = 0; i < terms.size(); ++i)
            if (terms[i].a != o.terms[i].a || terms[i].k != o.terms[i].k ||
                terms[i].c != o.terms[i].c)
                return false;
        return true;
    }
};

using LogPoly = BasicLogPoly<Rat>;
using LogPolyF = BasicLogPoly<double>;

// d/dx [c x^a (ln x)^k] = c a x^{a-1} (ln x)^k + c k x^{a-1} (ln x)^{k-1}
template <class S>
BasicLogPoly<S> differentiate(const BasicLogPoly<S>& p) {
    BasicLogPoly<S> d;
    for (const auto& t : p.terms) {
        if (t.a != S(0)) d.add_term(t.a - S(1), t.k, t.c * t.a);
        if (t.k > 0) d.add_term(t.a - S(1), t.k - 1, t.c * S(t.k));
    }
    d.canonicalize();
    return d;
}

template <class S>
BasicLogPoly<S> differentiate(BasicLogPoly<S> p, long times) {
    for (long i = 0; i < times; ++i) p = differentiate(p);
    return p;
}

namespace detail {
inline double to_double(const Rat& q) { return static_cast<double>(q); }
inline double to_double(double x) { return x; }
}  // namespace detail

// Numeric value at x > 0.  Terms are grouped by exponent and the (ln x)^k
// polynomial for each group is evaluated by Horner.
template <class S>
double evaluate(const BasicLogPoly<S>& p, double x) {
    if (x <= 0.0) throw std::domain_error("LogPoly evaluate: requires x > 0");
    const double lx = std::log(x);
    double total = 0.0;
    size_t i = 0;
    while (i < p.terms.size()) {
        size_t j = i;
        while (j < p.terms.size() && p.terms[j].a == p.terms[i].a) ++j;
        // Terms [i, j) share an exponent, k ascending (gaps allowed); walk
        // from the highest log power down, multiplying by lx across gaps.
        double horner = 0.0;
        long kprev = -1;
        for (size_t t = j; t-- > i;) {
            long gap = (kprev < 0) ? 0 : kprev - p.terms[t].k;
            for (long g = 0; g < gap; ++g) horner *= lx;
            horner += detail::to_double(p.terms[t].c);
            kprev = p.terms[t].k;
        }
        for (long g = 0; g < kprev; ++g) horner *= lx;
        total += horner * std::pow(x, detail::to_double(p.terms[i].a));
        i = j;
    }
    return total;
}

// Exact evaluation at a rational point; defined only when every log power is
// zero (pure polynomial) and exponents are non-negative integers.
inline Rat evaluate_exact(const LogPoly& p, const Rat& x) {
    Rat total = 0;
    for (const auto& t : p.terms) {
        if (t.k != 0)
            throw std::domain_error("evaluate_exact: logarithmic term present");
        if (denominator(t.a) != 1 || t.a < 0)
            throw std::domain_error("evaluate_exact: exponent not a non-negative integer");
        total += t.c * rat_pow(x, static_cast<long>(numerator(t.a)));
    }
    return total;
}

std::string to_latex(const LogPoly& p);
std::string to_plain(const LogPoly& p);

}  // namespace repint
