#include "essmod/extended_real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace essmod {

bool is_infinite(double v) { return std::isinf(v); }

double reciprocal_extended(double v) {
    if (v == 0.0) return kInfinity;
    if (std::isinf(v)) return 0.0;
    return 1.0 / v;
}

bool nearly_equal_extended(double a, double b, double rel_tol) {
    if (std::isinf(a) || std::isinf(b)) return std::isinf(a) && std::isinf(b) && (a > 0) == (b > 0);
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= rel_tol * scale;
}

std::string format_extended(double v, int precision) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

}  // namespace essmod
