#include <repint/quadrature.hpp>

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace repint {

void QuadCfg::validate() const {
    if (!(abs_tol > 0.0 && abs_tol < 1.0) || !(rel_tol > 0.0 && rel_tol < 1.0))
        throw std::invalid_argument("QuadCfg: tolerances must lie in (0, 1)");
    if (max_depth < 1 || max_depth > 64)
        throw std::invalid_argument("QuadCfg: max_depth must be in [1, 64]");
}

QuadCfg QuadCfg::tightened(double factor, double floor_tol) const {
    QuadCfg c = *this;
    c.abs_tol = std::max(abs_tol * factor, floor_tol);
    c.rel_tol = std::max(rel_tol * factor, floor_tol);
    return c;
}

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
const double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
const double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double err;
    int depth;
    bool operator<(const Panel& o) const { return err < o.err; }
};

Panel eval_panel(const Fn& f, double a, double b, int depth) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resg = kWg[3] * fc;
    double resk = kWgk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        const double fsum = f(c - x) + f(c + x);
        resk += kWgk[j] * fsum;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.depth = depth;
    p.value = resk * h;
    p.err = std::abs((resk - resg) * h);
    return p;
}

}  // namespace

QuadResult integrate(const Fn& f, double a, double b, const QuadCfg& cfg) {
    cfg.validate();
    if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");

    std::priority_queue<Panel> queue;
    queue.push(eval_panel(f, a, b, 0));
    double total = queue.top().value;
    double total_err = queue.top().err;

    const auto tolerance = [&] { return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)); };

    // Refine the worst panel until the summed error estimate is in budget.
    // Panel count is capped so a pathological integrand cannot spin forever.
    const size_t max_panels = 1u << 15;
    size_t splits = 0;
    while (total_err > tolerance()) {
        Panel worst = queue.top();
        if (worst.depth >= cfg.max_depth || ++splits > max_panels) {
            QuadResult best{total, total_err};
            throw QuadFailure("integrate: tolerance not reached (best estimate attached)", best);
        }
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = eval_panel(f, worst.a, mid, worst.depth + 1);
        Panel right = eval_panel(f, mid, worst.b, worst.depth + 1);
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        queue.push(left);
        queue.push(right);
    }
    return {total, total_err};
}

}  // namespace repint
