#include <repint/recurrent.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace repint {

Fn recurrent_primitive(long n, const Fn& F) {
    if (n < 0) throw std::invalid_argument("recurrent_primitive: n must be >= 0");
    const double nf = static_cast<double>(factorial(n));
    return [n, nf, F](double x) { return std::pow(F(x), (double)n) / nf; };
}

PartitionIdentityWitness partition_identity_check(long n, const Rat& Fa, const Rat& Fb) {
    if (n < 1) throw std::invalid_argument("partition_identity_check: n must be >= 1");
    PartitionIdentityWitness w;
    w.lhs = definite_recurrent_partition<Rat>(n, Fa, Fb);
    w.rhs = definite_recurrent_closed<Rat>(n, Fa, Fb);
    w.pass = (w.lhs == w.rhs);
    return w;
}

double nested_recurrent_quadrature(long n, const Interval& iv, const Fn& f,
                                   const QuadCfg& cfg) {
    if (n < 1 || n > 3)
        throw std::invalid_argument("nested_recurrent_quadrature: supported for 1 <= n <= 3 only");
    std::vector<Fn> gs(n, f);
    return nested_recurrent_list(gs, iv, cfg);
}

double nested_recurrent_list(const std::vector<Fn>& gs, const Interval& iv,
                             const QuadCfg& cfg) {
    const long n = (long)gs.size();
    if (n < 1 || n > 3)
        throw std::invalid_argument("nested_recurrent_list: supported for 1 <= n <= 3 only");
    validate(iv);
    if (n == 1) return integrate(gs[0], iv.a, iv.b, cfg).value;
    const QuadCfg c1 = cfg.tightened();
    if (n == 2) {
        Fn outer = [&](double x2) {
            return gs[1](x2) * integrate(gs[0], iv.a, x2, c1).value;
        };
        return integrate(outer, iv.a, iv.b, cfg).value;
    }
    const QuadCfg c2 = c1.tightened();
    Fn level1 = [&](double x2) { return gs[1](x2) * integrate(gs[0], iv.a, x2, c2).value; };
    Fn level2 = [&](double x3) { return gs[2](x3) * integrate(level1, iv.a, x3, c1).value; };
    return integrate(level2, iv.a, iv.b, cfg).value;
}

ConjectureReport conjecture_symmetrized_check(const std::vector<Builtin>& fs,
                                              const Interval& iv, const QuadCfg& cfg) {
    const long n = (long)fs.size();
    if (n < 2 || n > 3)
        throw std::invalid_argument("conjecture_symmetrized_check: need 2 or 3 integrands");
    bool needs_pos = false;
    for (const auto& b : fs) needs_pos = needs_pos || b.needs_positive_a;
    validate(iv, needs_pos);

    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    ConjectureReport rep;
    do {
        std::vector<Fn> gs;
        for (size_t i : idx) gs.push_back(fs[i].f);
        rep.symmetrized_sum += nested_recurrent_list(gs, iv, cfg);
    } while (std::next_permutation(idx.begin(), idx.end()));

    rep.product = 1.0;
    for (const auto& b : fs) rep.product *= integrate(b.f, iv.a, iv.b, cfg).value;
    rep.abs_dev = std::abs(rep.symmetrized_sum - rep.product);
    rep.rel_dev = rep.abs_dev / std::max(1e-300, std::abs(rep.product));
    return rep;
}

}  // namespace repint
