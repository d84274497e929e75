#pragma once

#include "fig8/mat2.hpp"

namespace fig8 {

// Tolerance for length <-> trace round trips in double precision.
inline constexpr double kLengthTolerance = 1e-9;

// Hyperbolic translation length with its trace, |trace| = 2 cosh(length / 2).
// Length 0 encodes a cusp (parabolic, trace 2).
struct HypLength {
  double length = 0.0;
  double trace = 2.0;

  static HypLength from_length(double length);
  // Throws DomainError when |trace| < 2.
  static HypLength from_trace(double trace);
};

// tr(A^-1 B) from tr A, tr B and tr AB (Cayley-Hamilton).
double trace_third(double trace_a, double trace_b, double trace_ab);
BigInt trace_third(const BigInt& trace_a, const BigInt& trace_b, const BigInt& trace_ab);

// Length of the figure-eight geodesic a^-1 b in a pair of pants with
// boundary lengths la, lb, lc:
//   cosh(l/2) = 2 cosh(la/2) cosh(lb/2) + cosh(lc/2).
// Throws DomainError on a negative length.
HypLength fig8_length(const HypLength& la, const HypLength& lb, const HypLength& lc);
HypLength fig8_length(double la, double lb, double lc);

enum class Convert { trace_to_length, length_to_trace };

// trace -> 2 acosh(|t| / 2) (requires |t| > 2), length -> 2 cosh(l / 2).
double length_trace_convert(double x, Convert direction);

}  // namespace fig8
