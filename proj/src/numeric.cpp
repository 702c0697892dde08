#include "relfix/numeric.hpp"

#include <cmath>
#include <cstdio>

namespace relfix {

std::string fmt_double(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.11e", v);
  return std::string(buf);
}

bool exact_integer(double v) {
  return v >= 0.0 && v <= 9007199254740992.0 && v == std::floor(v);
}

bool strictly_less(double lhs, double rhs, bool exact) {
  return exact ? lhs < rhs : rhs - lhs > kTol;
}

bool leq_with_slack(double lhs, double rhs, bool exact) {
  return exact ? lhs <= rhs : lhs <= rhs + kTol;
}

}  // namespace relfix
