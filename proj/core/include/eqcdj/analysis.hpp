// analysis.hpp — closed-form overlap and error curves for products of
// ensembles, plus the exponential-suppression fit

#pragma once

#include <vector>

#include "eqcdj/log_real.hpp"

namespace eqcdj {

// Probability of remaining in ⊗|1/sqrt2,1/sqrt2>> under the m-ensemble
// diagonal phase exp(i pi tau prod_n S^Z_n), n = [N_1..N_m]:
//   m=1: cos^(2 N1)(pi tau)
//   m=2: 4^-N1 | sum_k1 C(N1,k1) cos^N2(pi tau (2 k1 - N1)) |^2
//   m=3: 4^-(N1+N2) | sum_k1,k2 C C cos^N3(pi tau (2k1-N1)(2k2-N2)) |^2
// Period 1 in tau; exact zeros (half-odd-integer arguments) come back as
// sign-zero.  Binomial weights are combined in the rescaled log domain.
LogReal p_m(double tau, int m, const std::vector<int>& n);

// Gaussian approximation of the m=1 curve: sum_{|j|<=3} exp(-N1 pi^2 (tau+j)^2).
double p1_gaussian(double tau, int n1);

// Probability of the target flip failing to commute away: overlap of the
// phased state with exp(i pi S^Z_1/2)|init>.
//   m=1: sin^(2 N1)(pi tau)
//   m=2: 0 for odd N1; else 4^-N2 | sum_k2 C(N2,k2) sin^N1(pi tau (2k2-N2)) |^2
//   m=3: 0 for odd N1; else 4^-(N2+N3) | sum C C sin^N1(pi tau (2k2-N2)(2k3-N3)) |^2
LogReal epsilon_m(double tau, int m, const std::vector<int>& n);

struct Epsilon1Estimate {
  LogReal exact;   // sin^(2 N1)(pi tau)
  LogReal approx;  // exp(2 ln(pi |tau|) N1), small-tau exponent model
};

// Requires |tau| < 1/2; tau = 0 returns exact zeros on both channels.
Epsilon1Estimate epsilon1_estimate(double tau, int n1);

struct ScalingFit {
  int order = 2;
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
  std::vector<int> n_grid;
  std::vector<double> tau_at_max;
  std::vector<double> ln_eps_max;
};

// Largest epsilon_m over tau in [0, 1/(2 N^(m-1))] for all-equal counts N,
// located by golden-section search (relative tau tolerance 1e-4) checked
// against both interval endpoints.
LogReal epsilon_max_over_window(int m, int n, double* tau_at_max = nullptr);

// Least-squares line through (N, ln max eps) over an even-N grid, m in {2,3}.
// Grid must be strictly increasing, all even, all >= 6, at least 6 points.
ScalingFit fit_epsilon_scaling(int m, const std::vector<int>& n_grid);

}  // namespace eqcdj
