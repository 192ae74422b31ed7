#pragma once

#include <repint/quadrature.hpp>

#include <string>
#include <vector>

namespace repint {

// A named integrand with one fixed zero-constant antiderivative.  When the
// integrand is of the x^m (ln x)^mp family, (m, mp) is recorded so engines
// can switch to exact symbolic primitives.
struct Builtin {
    std::string name;
    Fn f;
    Fn F;                          // antiderivative of f, zero constant
    bool has_power_log = false;
    long m = 0;
    long mp = 0;
    bool needs_positive_a = false;  // ln-family: interval must satisfy a > 0
};

// Registry: one, x, x2, ln, xln, exp, sin.
const Builtin& builtin(const std::string& name);
std::vector<std::string> builtin_names();

// Generic x^m (ln x)^mp integrand (mp >= 1 forces a > 0).
Builtin make_xmlnx(long m, long mp);

}  // namespace repint
