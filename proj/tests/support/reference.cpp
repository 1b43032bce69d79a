// reference.cpp — independent reimplementations used only by the tests
#include "reference.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "eqcdj/fock.hpp"

namespace testref {

using eqcdj::Complex;
using eqcdj::Matrix;
using eqcdj::Vector;

Matrix expm(const Matrix& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int s = 0;
  while ((norm / (1 << s)) > 0.5) ++s;
  const Matrix b = a / static_cast<double>(1LL << s);

  const auto n = a.rows();
  Matrix sum = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (int k = 1; k <= 40; ++k) {
    term = (term * b) / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-19) break;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

long double ln_binomial(long long n, long long k) {
  if (k < 0 || k > n) return -std::numeric_limits<long double>::infinity();
  if (k > n - k) k = n - k;
  long double sum = 0.0L, comp = 0.0L;
  for (long long i = 1; i <= k; ++i) {
    const long double term = std::log(static_cast<long double>(n - k + i)) -
                             std::log(static_cast<long double>(i));
    const long double y = term - comp;
    const long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

double global_phase_diff(const Vector& a, const Vector& b) {
  Eigen::Index imax = 0;
  b.cwiseAbs().maxCoeff(&imax);
  Complex phase = 1.0;
  if (std::abs(b[imax]) > 0) {
    const Complex r = a[imax] / b[imax];
    if (std::abs(r) > 0) phase = r / std::abs(r);
  }
  return (a - phase * b).cwiseAbs().maxCoeff();
}

long long weight_sum(const eqcdj::BooleanOracle& oracle, const eqcdj::OracleParams& params,
                     const eqcdj::FockIndex& k) {
  long long total = 0;
  for (int x : oracle.f_set()) {
    long long prod = 2LL * params.j(x) + 1;
    for (int n = 0; n < oracle.m(); ++n) {
      const int bit = (x >> n) & 1;
      prod *= k[n] + 1 - bit;
    }
    total += prod;
  }
  return total;
}

Matrix method1_dense_hamiltonian(const eqcdj::BooleanOracle& oracle,
                                 const eqcdj::OracleParams& params,
                                 const eqcdj::EnsembleDims& dims) {
  const int n0 = dims.n_y;
  const Matrix flip = 0.5 * (eqcdj::spin_operator(eqcdj::Axis::X, n0) +
                             static_cast<double>(n0) * Matrix::Identity(n0 + 1, n0 + 1));

  const eqcdj::FockLayout inputs(dims.n_x);
  Matrix diag = Matrix::Zero(inputs.dim(), inputs.dim());
  eqcdj::FockIndex k(dims.m(), 0);
  std::int64_t idx = 0;
  do {
    diag(idx, idx) = static_cast<double>(weight_sum(oracle, params, k));
    ++idx;
  } while (inputs.next(k));

  return std::numbers::pi * eqcdj::kron_all({flip, diag});
}

namespace {

double overlap_sq(double tau, int m, int n, bool with_first_half_turn) {
  // weights C(n,k)/2^n per ensemble; direct sum over the joint basis
  std::vector<double> w(n + 1);
  for (int k = 0; k <= n; ++k)
    w[k] = std::exp(static_cast<double>(ln_binomial(n, k)) - n * std::log(2.0));

  std::vector<int> k(m, 0);
  Complex total = 0.0;
  while (true) {
    double prod = 1.0;
    double zprod = 1.0;
    for (int e = 0; e < m; ++e) {
      prod *= w[k[e]];
      zprod *= 2.0 * k[e] - n;
    }
    double phase = std::numbers::pi * tau * zprod;
    if (with_first_half_turn) phase += std::numbers::pi * (2.0 * k[0] - n) / 2.0;
    total += prod * std::polar(1.0, phase);

    int e = m - 1;
    while (e >= 0 && k[e] == n) k[e--] = 0;
    if (e < 0) break;
    ++k[e];
  }
  return std::norm(total);
}

}  // namespace

double brute_pm(double tau, int m, int n) { return overlap_sq(tau, m, n, false); }

double brute_eps(double tau, int m, int n) { return overlap_sq(tau, m, n, true); }

}  // namespace testref
