#include <repint/builtins.hpp>
#include <repint/harmonic.hpp>
#include <repint/logprimitive.hpp>
#include <repint/recurrent.hpp>
#include <repint/repeated.hpp>
#include <repint/verify.hpp>

#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

namespace repint {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(15) << v;
    return os.str();
}

void push_exact(Suite& s, std::string name, const Rat& expected, const Rat& actual) {
    s.checks.push_back({std::move(name), rat_str(expected), rat_str(actual),
                        expected == actual});
}

void push_approx(Suite& s, std::string name, double expected, double actual, double tol) {
    const bool ok = std::abs(expected - actual) <= tol * (1.0 + std::abs(expected));
    s.checks.push_back({std::move(name), fmt(expected), fmt(actual), ok});
}

std::string poly_str(const LogPoly& p) { return to_plain(p); }

}  // namespace

std::vector<std::pair<Rat, Rat>> random_rat_pairs(size_t count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-9, 9);
    auto draw_nonzero = [&] {
        int v = 0;
        while (v == 0) v = d(rng);
        return v;
    };
    std::vector<std::pair<Rat, Rat>> out;
    while (out.size() < count) {
        // Divide rather than use the two-argument constructor: the backend
        // rejects negative denominators there.
        Rat x = Rat(draw_nonzero()) / Rat(draw_nonzero());
        Rat y = Rat(draw_nonzero()) / Rat(draw_nonzero());
        out.emplace_back(x, y);
    }
    return out;
}

Suite check_mhss_variation(long max_m, long max_n, long max_mp) {
    Suite s{"mhss-variation"};
    for (long m = 0; m <= max_m; ++m)
        for (long n = 0; n <= max_n; ++n)
            for (long mp = 0; mp <= max_mp; ++mp)
                for (long i = 0; i <= mp; ++i) {
                    std::ostringstream name;
                    name << "variation m=" << m << " n=" << n << " mp=" << mp << " i=" << i;
                    push_exact(s, name.str(), mhss_ones(1 + m, n + m + 1, mp - i),
                               mhss_variation_rhs(m, n, mp, i));
                }
    return s;
}

Suite check_mhss_partition_reduction(long max_q, long extra_n, long max_k) {
    Suite s{"mhss-partition-reduction"};
    for (long q = 1; q <= max_q; ++q)
        for (long n = q - 1; n <= q + extra_n; ++n)
            for (long k = 0; k <= max_k; ++k) {
                std::ostringstream name;
                name << "partition-form q=" << q << " n=" << n << " k=" << k;
                push_exact(s, name.str(), mhss_ones(q, n, k),
                           mhss_ones_by_partitions(q, n, k));
            }
    return s;
}

Suite check_harmonic_alternating(long max_n, long max_m) {
    Suite s{"harmonic-alternating"};
    for (long n = 1; n <= max_n; ++n)
        for (long m = 0; m <= max_m; ++m) {
            std::ostringstream name;
            name << "alternating n=" << n << " m=" << m;
            const Rat closed = Rat(binomial(m + n, m)) * power_sum(1 + m, n + m, 1);
            push_exact(s, name.str(), closed, alternating_harmonic(n, m));
        }
    return s;
}

Suite check_harmonic_repeated(long max_n, long max_m) {
    Suite s{"harmonic-repeated"};
    for (long n = 1; n <= max_n; ++n)
        for (long m = 0; m <= max_m; ++m) {
            std::ostringstream name;
            name << "repeated n=" << n << " m=" << m;
            push_exact(s, name.str(), alternating_harmonic(n, m),
                       repeated_harmonic_bruteforce(n, m));
        }
    return s;
}

Suite check_harmonic_binomial(long max_n, long max_k, long max_m) {
    Suite s{"harmonic-binomial"};
    for (long n = 1; n <= max_n; ++n)
        for (long k = 1; k <= max_k; ++k)
            for (long m = 0; m <= max_m; ++m) {
                std::ostringstream name;
                name << "binomial n=" << n << " k=" << k << " m=" << m;
                const Rat nested = binomial_harmonic_repeated_bruteforce(n, k, m);
                const Rat closed =
                    Rat(binomial(n + m + k, m + k)) * power_sum(1 + m + k, n + m + k, 1);
                const Rat alt = alternating_harmonic(n, m + k);
                push_exact(s, name.str(), closed, nested);
                push_exact(s, name.str() + " (alternating)", closed, alt);
            }
    return s;
}

Suite check_leibniz(long max_n, long max_m) {
    Suite s{"leibniz-derivative"};
    for (long n = 1; n <= max_n; ++n)
        for (long m = 0; m <= max_m; ++m) {
            auto [by_diff, closed] = leibniz_derivative_check(n, m);
            std::ostringstream name;
            name << "leibniz n=" << n << " m=" << m;
            s.checks.push_back({name.str(), poly_str(closed), poly_str(by_diff),
                                by_diff == closed});
        }
    return s;
}

Suite check_primitive_roundtrip(long max_n, long max_m, long max_mp) {
    Suite s{"primitive-roundtrip"};
    for (long n = 1; n <= max_n; ++n)
        for (long m = 0; m <= max_m; ++m)
            for (long mp = 0; mp <= max_mp; ++mp) {
                LogPoly target;
                target.add_term(Rat(m), mp, Rat(1));
                target.canonicalize();
                const LogPoly back =
                    differentiate(nth_primitive_mhss({n, m, mp}), n);
                std::ostringstream name;
                name << "roundtrip n=" << n << " m=" << m << " mp=" << mp;
                s.checks.push_back({name.str(), poly_str(target), poly_str(back),
                                    back == target});
            }
    return s;
}

Suite check_primitive_forms(long max_n, long max_m, long max_mp) {
    Suite s{"primitive-forms"};
    for (long n = 1; n <= max_n; ++n)
        for (long m = 0; m <= max_m; ++m)
            for (long mp = 0; mp <= max_mp; ++mp) {
                const IntegralSpec spec{n, m, mp};
                const LogPoly a = nth_primitive_mhss(spec);
                const LogPoly b = nth_primitive_partitions(spec);
                std::ostringstream name;
                name << "forms n=" << n << " m=" << m << " mp=" << mp;
                s.checks.push_back(
                    {name.str() + " mhss=partitions", poly_str(a), poly_str(b), a == b});

                std::map<long, LogPoly> phi;
                for (long j = 0; j < n; ++j) phi[j] = single_primitive(Rat(m + j), mp);
                const LogPoly c = nth_primitive_via_reduction(n, phi);
                s.checks.push_back(
                    {name.str() + " mhss=reduction", poly_str(a), poly_str(c), a == c});

                if (mp == 1) {
                    const LogPoly d = nth_primitive_ln_alternating(n, m);
                    s.checks.push_back({name.str() + " mhss=alternating", poly_str(a),
                                        poly_str(d), a == d});
                }
            }
    return s;
}

Suite check_recurrent_exact(long max_n, size_t pairs) {
    Suite s{"recurrent-exact"};
    const auto pts = random_rat_pairs(pairs);
    for (long n = 1; n <= max_n; ++n)
        for (size_t i = 0; i < pts.size(); ++i) {
            const auto& [Fa, Fb] = pts[i];
            const Rat closed = definite_recurrent_closed<Rat>(n, Fa, Fb);
            const Rat part = definite_recurrent_partition<Rat>(n, Fa, Fb);
            const Rat ftc = definite_recurrent_ftc<Rat>(n, rho_vector<Rat>(n, Fa),
                                                        rho_vector<Rat>(n, Fb));
            std::ostringstream name;
            name << "recurrent n=" << n << " pair#" << i;
            push_exact(s, name.str() + " partition", closed, part);
            push_exact(s, name.str() + " ftc", closed, ftc);
        }
    return s;
}

Suite check_partition_identity_suite(long max_n, size_t pairs) {
    Suite s{"partition-identities"};
    const auto pts = random_rat_pairs(pairs);
    for (long n = 1; n <= max_n; ++n) {
        // Theorem: arbitrary rational endpoints.
        for (size_t i = 0; i < std::min<size_t>(pts.size(), 5); ++i) {
            const auto& [Fa, Fb] = pts[i];
            const auto w = partition_identity_check(n, Fa, Fb);
            std::ostringstream name;
            name << "2.10 n=" << n << " pair#" << i;
            push_exact(s, name.str(), w.rhs, w.lhs);
        }
        // Corollary 1: sum_k W(n-k)/k! = (-1)^{n+1}/n!.
        Rat c1 = 0;
        for (long k = 1; k <= n; ++k)
            c1 += partition_weight<Rat>(n - k) / Rat(factorial(k));
        const Rat c1_expected = Rat((n % 2 == 0) ? -1 : 1, factorial(n));
        push_exact(s, "c1 n=" + std::to_string(n), c1_expected, c1);
        // Corollaries 2 and 3 over sampled rational endpoints.
        for (size_t i = 0; i < std::min<size_t>(pts.size(), 3); ++i) {
            const auto& [a, b] = pts[i];
            Rat c2 = 0;
            for (long k = 1; k <= n; ++k)
                c2 += rat_pow(b, k) * rat_pow(a, n - k) / Rat(factorial(k)) *
                      partition_weight<Rat>(n - k);
            const Rat c2_expected =
                (rat_pow(b - a, n) - rat_pow(-a, n)) / Rat(factorial(n));
            std::ostringstream name2;
            name2 << "c2 n=" << n << " pair#" << i;
            push_exact(s, name2.str(), c2_expected, c2);

            Rat c3 = 0;
            for (long k = 1; k <= n; ++k)
                c3 += rat_pow(b, k) / Rat(factorial(k)) * partition_weight<Rat>(n - k);
            const Rat c3_expected =
                (rat_pow(b - 1, n) - rat_pow(Rat(-1), n)) / Rat(factorial(n));
            std::ostringstream name3;
            name3 << "c3 n=" << n << " b#" << i;
            push_exact(s, name3.str(), c3_expected, c3);
        }
    }
    return s;
}

Suite check_divergence_growth(long max_n, long max_m, double bound) {
    Suite s{"divergence-growth"};
    for (long m = 0; m <= max_m; ++m) {
        bool increasing = true;
        Rat prev = alternating_harmonic(1, m);
        Rat maxv = prev;
        for (long n = 2; n <= max_n; ++n) {
            const Rat cur = alternating_harmonic(n, m);
            if (!(cur > prev)) increasing = false;
            prev = cur;
            if (cur > maxv) maxv = cur;
        }
        s.checks.push_back({"strictly-increasing m=" + std::to_string(m), "true",
                            increasing ? "true" : "false", increasing});
        if (m >= 1) {
            const bool exceeded = maxv > Rat(bound);
            std::ostringstream name;
            name << "exceeds B=" << bound << " m=" << m;
            s.checks.push_back(
                {name.str(), "true", exceeded ? "true" : "false", exceeded});
        }
    }
    return s;
}

Suite check_repeated_numeric(double tol) {
    Suite s{"repeated-numeric"};
    const std::vector<std::string> names = {"one", "x", "x2", "ln", "xln", "exp", "sin"};
    const std::vector<Interval> ivs = {{1.0, 2.0}, {0.5, 3.0}};
    for (const auto& nm : names) {
        const Builtin& f = builtin(nm);
        for (const Interval& iv : ivs)
            for (long n = 1; n <= 3; ++n) {
                const double oracle = cauchy_formula(n, iv, f.f);
                std::ostringstream name;
                name << nm << " n=" << n << " [" << iv.a << "," << iv.b << "]";
                push_approx(s, name.str() + " ftc",
                            oracle, definite_repeated_builtin_ftc(n, iv, f), tol);
                push_approx(s, name.str() + " moments",
                            oracle, definite_repeated_builtin_moments(n, iv, f), tol);
                push_approx(s, name.str() + " nested",
                            oracle, nested_quadrature(n, iv, f.f), tol);
            }
    }
    return s;
}

Suite check_recurrent_numeric(double tol) {
    Suite s{"recurrent-numeric"};
    const std::vector<std::string> names = {"exp", "sin", "x"};
    const std::vector<Interval> ivs = {{0.0, 1.0}, {1.0, 2.0}};
    for (const auto& nm : names) {
        const Builtin& f = builtin(nm);
        for (const Interval& iv : ivs)
            for (long n = 1; n <= 3; ++n) {
                const double closed =
                    definite_recurrent_closed<double>(n, f.F(iv.a), f.F(iv.b));
                const double ftc = definite_recurrent_ftc<double>(
                    n, rho_vector<double>(n, f.F(iv.a)), rho_vector<double>(n, f.F(iv.b)));
                const double nested = nested_recurrent_quadrature(n, iv, f.f);
                std::ostringstream name;
                name << nm << " n=" << n << " [" << iv.a << "," << iv.b << "]";
                push_approx(s, name.str() + " ftc", closed, ftc, tol);
                push_approx(s, name.str() + " nested", closed, nested, tol);
            }
    }
    return s;
}

Suite check_conjecture_suite(double tol) {
    Suite s{"conjecture-symmetrized"};
    const std::vector<std::string> all = {"one", "x", "x2", "ln", "xln", "exp", "sin"};
    const std::vector<Interval> ivs = {{0.0, 1.0}, {1.0, 2.0}};
    QuadCfg cfg;
    cfg.abs_tol = 1e-9;
    cfg.rel_tol = 1e-9;
    for (const Interval& iv : ivs) {
        std::vector<std::string> names;
        for (const auto& nm : all)
            if (iv.a > 0.0 || !builtin(nm).needs_positive_a) names.push_back(nm);
        const size_t c = names.size();
        for (size_t i = 0; i < c; ++i)
            for (size_t j = i + 1; j < c; ++j) {
                const auto rep = conjecture_symmetrized_check(
                    {builtin(names[i]), builtin(names[j])}, iv, cfg);
                std::ostringstream name;
                name << "pair " << names[i] << "," << names[j] << " [" << iv.a << ","
                     << iv.b << "]";
                push_approx(s, name.str(), rep.product, rep.symmetrized_sum, tol);
            }
        for (size_t i = 0; i < c; ++i)
            for (size_t j = i + 1; j < c; ++j)
                for (size_t k = j + 1; k < c; ++k) {
                    const auto rep = conjecture_symmetrized_check(
                        {builtin(names[i]), builtin(names[j]), builtin(names[k])}, iv, cfg);
                    std::ostringstream name;
                    name << "triple " << names[i] << "," << names[j] << "," << names[k]
                         << " [" << iv.a << "," << iv.b << "]";
                    push_approx(s, name.str(), rep.product, rep.symmetrized_sum, tol);
                }
    }
    return s;
}

std::vector<Suite> verify_all(bool full) {
    std::vector<Suite> suites;
    if (full) {
        suites.push_back(check_mhss_variation(4, 8, 4));
        suites.push_back(check_mhss_partition_reduction(6, 8, 4));
        suites.push_back(check_harmonic_alternating(30, 8));
        suites.push_back(check_harmonic_repeated(30, 6));
        suites.push_back(check_harmonic_binomial(15, 4, 4));
        suites.push_back(check_leibniz(6, 5));
        suites.push_back(check_primitive_roundtrip(6, 5, 4));
        suites.push_back(check_primitive_forms(5, 3, 3));
        suites.push_back(check_recurrent_exact(12, 20));
        suites.push_back(check_partition_identity_suite(20, 20));
        suites.push_back(check_divergence_growth(50, 4, 5.0));
        suites.push_back(check_repeated_numeric(1e-8));
        suites.push_back(check_recurrent_numeric(1e-8));
        suites.push_back(check_conjecture_suite(1e-7));
    } else {
        suites.push_back(check_mhss_variation(3, 5, 3));
        suites.push_back(check_mhss_partition_reduction(4, 5, 3));
        suites.push_back(check_harmonic_alternating(15, 5));
        suites.push_back(check_harmonic_repeated(15, 4));
        suites.push_back(check_harmonic_binomial(10, 3, 3));
        suites.push_back(check_leibniz(5, 4));
        suites.push_back(check_primitive_roundtrip(5, 4, 3));
        suites.push_back(check_primitive_forms(4, 2, 2));
        suites.push_back(check_recurrent_exact(8, 10));
        suites.push_back(check_partition_identity_suite(12, 10));
        suites.push_back(check_divergence_growth(50, 4, 5.0));
        suites.push_back(check_repeated_numeric(1e-8));
        suites.push_back(check_recurrent_numeric(1e-8));
    }
    return suites;
}

}  // namespace repint
