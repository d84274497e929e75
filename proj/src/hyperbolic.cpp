#include "fig8/hyperbolic.hpp"

#include <cmath>

#include "fig8/error.hpp"

namespace fig8 {

HypLength HypLength::from_length(double length) {
  if (!(length >= 0.0)) throw DomainError("hyperbolic length must be nonnegative");
  return {length, 2.0 * std::cosh(length / 2.0)};
}

HypLength HypLength::from_trace(double trace) {
  const double t = std::fabs(trace);
  if (!(t >= 2.0)) throw DomainError("|trace| < 2 is elliptic, not a geodesic or cusp");
  return {2.0 * std::acosh(t / 2.0), trace};
}

double trace_third(double trace_a, double trace_b, double trace_ab) {
  return trace_a * trace_b - trace_ab;
}

BigInt trace_third(const BigInt& trace_a, const BigInt& trace_b, const BigInt& trace_ab) {
  return trace_a * trace_b - trace_ab;
}

HypLength fig8_length(const HypLength& la, const HypLength& lb, const HypLength& lc) {
  return fig8_length(la.length, lb.length, lc.length);
}

HypLength fig8_length(double la, double lb, double lc) {
  if (!(la >= 0.0 && lb >= 0.0 && lc >= 0.0)) {
    throw DomainError("boundary lengths must be nonnegative");
  }
  const double ch = 2.0 * std::cosh(la / 2.0) * std::cosh(lb / 2.0) + std::cosh(lc / 2.0);
  return {2.0 * std::acosh(ch), 2.0 * ch};
}

double length_trace_convert(double x, Convert direction) {
  if (direction == Convert::length_to_trace) {
    if (!(x >= 0.0)) throw DomainError("length must be nonnegative");
    return 2.0 * std::cosh(x / 2.0);
  }
  if (!(std::fabs(x) > 2.0)) {
    throw DomainError("|trace| <= 2: parabolic or elliptic, no closed geodesic");
  }
  return 2.0 * std::acosh(std::fabs(x) / 2.0);
}

}  // namespace fig8
