// trig_pi.hpp — cos(pi x) and sin(pi x) with exact zeros on the half-integer
// and integer lattice, so structural zeros of the overlap curves survive into
// the log domain instead of becoming ~1e-16 noise

#pragma once

#include <cmath>
#include <numbers>

namespace eqcdj::detail {

// Folding uses fmod (exact) and Sterbenz-exact subtractions, so lattice
// arguments reach the comparisons unperturbed.
inline double cos_pi(double x) {
  double r = std::fmod(std::abs(x), 2.0);  // [0, 2)
  if (r > 1.0) r = 2.0 - r;                // cos(pi(2-r)) = cos(pi r)
  double s = 1.0;
  if (r > 0.5) {
    r = 1.0 - r;  // cos(pi(1-r)) = -cos(pi r)
    s = -1.0;
  }
  if (r == 0.5) return 0.0;
  if (r == 0.0) return s;
  return s * std::sin(std::numbers::pi * (0.5 - r));  // accurate near the zero
}

inline double sin_pi(double x) {
  double s = x < 0.0 ? -1.0 : 1.0;
  double r = std::fmod(std::abs(x), 2.0);  // [0, 2)
  if (r >= 1.0) {
    r -= 1.0;  // sin(pi(1+r)) = -sin(pi r)
    s = -s;
  }
  if (r > 0.5) r = 1.0 - r;  // sin(pi(1-r)) = sin(pi r)
  if (r == 0.0) return 0.0;
  return s * std::sin(std::numbers::pi * r);
}

}  // namespace eqcdj::detail
