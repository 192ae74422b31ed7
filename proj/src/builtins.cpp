#include <repint/builtins.hpp>
#include <repint/logprimitive.hpp>

#include <cmath>
#include <map>
#include <stdexcept>

namespace repint {

namespace {

Builtin power_log_builtin(std::string name, long m, long mp) {
    Builtin b;
    b.name = std::move(name);
    b.has_power_log = true;
    b.m = m;
    b.mp = mp;
    b.needs_positive_a = mp > 0;
    b.f = [m, mp](double x) { return std::pow(x, (double)m) * std::pow(std::log(x), (double)mp); };
    const LogPoly F = single_primitive(Rat(m), mp);
    b.F = [F](double x) { return evaluate(F, x); };
    return b;
}

std::map<std::string, Builtin> make_registry() {
    std::map<std::string, Builtin> r;
    r["one"] = power_log_builtin("one", 0, 0);
    r["one"].f = [](double) { return 1.0; };  // avoid pow(x,0) at x<=0
    r["one"].F = [](double x) { return x; };
    r["x"] = power_log_builtin("x", 1, 0);
    r["x"].f = [](double x) { return x; };
    r["x"].F = [](double x) { return 0.5 * x * x; };
    r["x2"] = power_log_builtin("x2", 2, 0);
    r["x2"].f = [](double x) { return x * x; };
    r["x2"].F = [](double x) { return x * x * x / 3.0; };
    r["ln"] = power_log_builtin("ln", 0, 1);
    r["xln"] = power_log_builtin("xln", 1, 1);

    Builtin e;
    e.name = "exp";
    e.f = [](double x) { return std::exp(x); };
    e.F = [](double x) { return std::exp(x); };
    r["exp"] = e;

    Builtin s;
    s.name = "sin";
    s.f = [](double x) { return std::sin(x); };
    s.F = [](double x) { return -std::cos(x); };
    r["sin"] = s;
    return r;
}

const std::map<std::string, Builtin>& registry() {
    static const std::map<std::string, Builtin> r = make_registry();
    return r;
}

}  // namespace

const Builtin& builtin(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end())
        throw std::invalid_argument("unknown builtin integrand: " + name);
    return it->second;
}

std::vector<std::string> builtin_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : registry()) names.push_back(k);
    return names;
}

Builtin make_xmlnx(long m, long mp) {
    if (m < 0 || mp < 0) throw std::invalid_argument("make_xmlnx: need m >= 0, mp >= 0");
    return power_log_builtin("xmlnx(" + std::to_string(m) + "," + std::to_string(mp) + ")", m, mp);
}

}  // namespace repint
