// analysis.cpp

#include "eqcdj/analysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "eqcdj/errors.hpp"
#include "eqcdj/fock.hpp"
#include "trig_pi.hpp"

namespace eqcdj {

namespace {

void check_curve_args(int m, const std::vector<int>& n) {
  if (m < 1 || m > 3) throw validation_error("curve order must be 1, 2, or 3");
  if (static_cast<int>(n.size()) != m)
    throw validation_error("need one particle count per input ensemble");
  for (int v : n)
    if (v < 1) throw validation_error("every ensemble needs at least one particle");
}

// Grid arithmetic yields taus like 0.4999999999999998 where the curve has a
// structural zero; snap to the half-integer lattice so those come out exact.
double snap_tau(double tau) {
  const double lattice = std::round(2.0 * tau) / 2.0;
  return std::abs(tau - lattice) < 1e-9 ? lattice : tau;
}

// |base^power| contributed to a LogSum term, with sign; zero base kills the term.
struct PowTerm {
  int sign = 0;
  double ln_mag = 0.0;
};

PowTerm signed_pow(double base, int power) {
  if (base == 0.0) return {0, 0.0};
  const int sign = (base < 0.0 && (power & 1)) ? -1 : 1;
  return {sign, power * std::log(std::abs(base))};
}

}  // namespace

LogReal p_m(double tau, int m, const std::vector<int>& n) {
  check_curve_args(m, n);
  tau = snap_tau(tau);

  if (m == 1) {
    const double c = detail::cos_pi(tau);
    if (c == 0.0) return LogReal::zero();
    return LogReal::from_ln(1, 2.0 * n[0] * std::log(std::abs(c)));
  }

  if (m == 2) {
    LogSum sum;
    for (int k1 = 0; k1 <= n[0]; ++k1) {
      const double c = detail::cos_pi(tau * (2.0 * k1 - n[0]));
      const PowTerm t = signed_pow(c, n[1]);
      if (t.sign == 0) continue;
      sum.add(t.sign, log_binomial(n[0], k1).ln_mag + t.ln_mag);
    }
    return sum.value().abs_sq() * LogReal::from_ln(1, -n[0] * std::log(4.0));
  }

  LogSum sum;
  for (int k1 = 0; k1 <= n[0]; ++k1) {
    const double lnc1 = log_binomial(n[0], k1).ln_mag;
    for (int k2 = 0; k2 <= n[1]; ++k2) {
      const double c = detail::cos_pi(tau * (2.0 * k1 - n[0]) * (2.0 * k2 - n[1]));
      const PowTerm t = signed_pow(c, n[2]);
      if (t.sign == 0) continue;
      sum.add(t.sign, lnc1 + log_binomial(n[1], k2).ln_mag + t.ln_mag);
    }
  }
  return sum.value().abs_sq() * LogReal::from_ln(1, -(n[0] + n[1]) * std::log(4.0));
}

double p1_gaussian(double tau, int n1) {
  if (n1 < 1) throw validation_error("every ensemble needs at least one particle");
  const double pi2 = std::numbers::pi * std::numbers::pi;
  double sum = 0.0;
  for (int j = -3; j <= 3; ++j) {
    const double d = tau + j;
    sum += std::exp(-n1 * pi2 * d * d);
  }
  return sum;
}

LogReal epsilon_m(double tau, int m, const std::vector<int>& n) {
  check_curve_args(m, n);
  tau = snap_tau(tau);

  if (m == 1) {
    const double s = detail::sin_pi(tau);
    if (s == 0.0) return LogReal::zero();
    return LogReal::from_ln(1, 2.0 * n[0] * std::log(std::abs(s)));
  }

  // For odd N1 the k <-> N-k reflection flips every sine factor an odd
  // number of times and the sum cancels identically.
  if (n[0] % 2 == 1) return LogReal::zero();

  if (m == 2) {
    LogSum sum;
    for (int k2 = 0; k2 <= n[1]; ++k2) {
      const double s = detail::sin_pi(tau * (2.0 * k2 - n[1]));
      const PowTerm t = signed_pow(s, n[0]);
      if (t.sign == 0) continue;
      sum.add(t.sign, log_binomial(n[1], k2).ln_mag + t.ln_mag);
    }
    return sum.value().abs_sq() * LogReal::from_ln(1, -n[1] * std::log(4.0));
  }

  LogSum sum;
  for (int k2 = 0; k2 <= n[1]; ++k2) {
    const double lnc2 = log_binomial(n[1], k2).ln_mag;
    for (int k3 = 0; k3 <= n[2]; ++k3) {
      const double s = detail::sin_pi(tau * (2.0 * k2 - n[1]) * (2.0 * k3 - n[2]));
      const PowTerm t = signed_pow(s, n[0]);
      if (t.sign == 0) continue;
      sum.add(t.sign, lnc2 + log_binomial(n[2], k3).ln_mag + t.ln_mag);
    }
  }
  return sum.value().abs_sq() * LogReal::from_ln(1, -(n[1] + n[2]) * std::log(4.0));
}

Epsilon1Estimate epsilon1_estimate(double tau, int n1) {
  if (n1 < 1) throw validation_error("every ensemble needs at least one particle");
  if (std::abs(tau) >= 0.5)
    throw validation_error("exponent model only applies for |tau| < 1/2");
  Epsilon1Estimate out;
  if (tau == 0.0) return out;  // both channels exactly zero
  out.exact = epsilon_m(tau, 1, {n1});
  out.approx = LogReal::from_ln(1, 2.0 * n1 * std::log(std::numbers::pi * std::abs(tau)));
  return out;
}

namespace {

double ln_eps(double tau, int m, const std::vector<int>& n) {
  const LogReal e = epsilon_m(tau, m, n);
  return e.is_zero() ? -std::numeric_limits<double>::infinity() : e.ln_mag;
}

}  // namespace

LogReal epsilon_max_over_window(int m, int n, double* tau_at_max) {
  check_curve_args(m, std::vector<int>(m, n));
  if (m >= 2 && n % 2 == 1)
    throw grid_error("error curve is identically zero for odd particle counts");

  const std::vector<int> counts(m, n);
  const double b = 0.5 / std::pow(static_cast<double>(n), m - 1);

  // Golden-section search for the interior maximum, then compare with both
  // endpoints; in practice the curve is monotone and the right endpoint wins.
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0, hi = b;
  double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
  double fc = ln_eps(c, m, counts), fd = ln_eps(d, m, counts);
  while (hi - lo > 1e-4 * b) {
    if (fc < fd) {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = ln_eps(d, m, counts);
    } else {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = ln_eps(c, m, counts);
    }
  }

  double best_tau = 0.5 * (lo + hi);
  double best = ln_eps(best_tau, m, counts);
  for (double cand : {0.0, b}) {
    const double v = ln_eps(cand, m, counts);
    if (v > best) {
      best = v;
      best_tau = cand;
    }
  }
  if (tau_at_max != nullptr) *tau_at_max = best_tau;
  if (best == -std::numeric_limits<double>::infinity()) return LogReal::zero();
  return LogReal::from_ln(1, best);
}

ScalingFit fit_epsilon_scaling(int m, const std::vector<int>& n_grid) {
  if (m != 2 && m != 3) throw grid_error("scaling fit is defined for orders 2 and 3");
  if (n_grid.size() < 6) throw grid_error("scaling fit needs at least 6 grid points");
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] < 6) throw grid_error("scaling fit needs particle counts of at least 6");
    if (n_grid[i] % 2 == 1) throw grid_error("scaling fit needs even particle counts");
    if (i > 0 && n_grid[i] <= n_grid[i - 1])
      throw grid_error("scaling fit needs a strictly increasing grid");
  }

  ScalingFit fit;
  fit.order = m;
  fit.n_grid = n_grid;
  for (int n : n_grid) {
    double tau = 0.0;
    const LogReal e = epsilon_max_over_window(m, n, &tau);
    if (e.is_zero()) throw grid_error("error curve vanished over the whole window");
    fit.tau_at_max.push_back(tau);
    fit.ln_eps_max.push_back(e.ln_mag);
  }

  const auto pts = static_cast<double>(n_grid.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    sx += n_grid[i];
    sy += fit.ln_eps_max[i];
  }
  const double mx = sx / pts, my = sy / pts;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    const double dx = n_grid[i] - mx;
    sxx += dx * dx;
    sxy += dx * (fit.ln_eps_max[i] - my);
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;

  double ss = 0.0;
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    const double r = fit.ln_eps_max[i] - (fit.intercept + fit.slope * n_grid[i]);
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / pts);
  return fit;
}

}  // namespace eqcdj
