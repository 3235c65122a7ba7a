#pragma once

#include <limits>
#include <string>

namespace essmod {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

bool is_infinite(double v);

// Reciprocal with the conventions 1/0 = +inf and 1/inf = 0.
// Every value <-> reciprocal conversion in the library goes through here.
double reciprocal_extended(double v);

// Relative comparison that treats +inf as equal to +inf.
// Finite values compare as |a - b| <= rel_tol * max(1, |a|, |b|).
bool nearly_equal_extended(double a, double b, double rel_tol);

// Deterministic text form: "inf" for +infinity, fixed %.*g otherwise.
std::string format_extended(double v, int precision = 17);

}  // namespace essmod
