#pragma once

#include <string>

namespace relfix {

// Certification tolerance for float instances. Strict inequalities a < b are
// accepted as b - a > kTol unless the instance is exact (integer distances),
// in which case plain comparisons apply.
inline constexpr double kTol = 1e-9;

// Fixed scientific rendering with 12 significant digits. Every float that
// reaches a report or trace goes through this so output is byte-stable.
std::string fmt_double(double v);

// True when v is a nonnegative integer representable exactly in a double.
bool exact_integer(double v);

bool strictly_less(double lhs, double rhs, bool exact);
bool leq_with_slack(double lhs, double rhs, bool exact);

}  // namespace relfix
