// fock.cpp

#include "eqcdj/fock.hpp"

#include <cmath>
#include <numbers>

#include "eqcdj/errors.hpp"

namespace eqcdj {

LogReal log_binomial(long long n, long long k) {
  if (n < 0) throw validation_error("binomial needs n >= 0");
  if (k < 0 || k > n) return LogReal::zero();
  const double ln = std::lgamma(static_cast<double>(n) + 1.0) -
                    std::lgamma(static_cast<double>(k) + 1.0) -
                    std::lgamma(static_cast<double>(n - k) + 1.0);
  return LogReal::from_ln(1, ln);
}

StateVector coherent_state(Complex alpha, Complex beta, int n) {
  if (n < 1) throw validation_error("coherent state needs at least one particle");
  const double norm = std::norm(alpha) + std::norm(beta);
  if (std::abs(norm - 1.0) > 1e-10)
    throw validation_error("coherent state amplitudes must satisfy |alpha|^2 + |beta|^2 = 1");

  const double ra = std::abs(alpha), rb = std::abs(beta);
  const double pa = std::arg(alpha), pb = std::arg(beta);
  StateVector out{FockLayout({n})};
  for (int k = 0; k <= n; ++k) {
    if ((ra == 0.0 && k > 0) || (rb == 0.0 && k < n)) continue;
    const double ln_mag = 0.5 * log_binomial(n, k).ln_mag +
                          (k > 0 ? k * std::log(ra) : 0.0) +
                          (k < n ? (n - k) * std::log(rb) : 0.0);
    out.amps[k] = std::exp(ln_mag) * std::polar(1.0, k * pa + (n - k) * pb);
  }
  return out;
}

Matrix spin_operator(Axis axis, int n) {
  if (n < 1) throw validation_error("spin operator needs at least one particle");
  Matrix s = Matrix::Zero(n + 1, n + 1);
  switch (axis) {
    case Axis::Z:
      for (int k = 0; k <= n; ++k) s(k, k) = 2.0 * k - n;
      break;
    case Axis::X:
      for (int k = 0; k < n; ++k) {
        const double v = std::sqrt(static_cast<double>(k + 1) * (n - k));
        s(k + 1, k) = v;
        s(k, k + 1) = v;
      }
      break;
    case Axis::Y:
      for (int k = 0; k < n; ++k) {
        const double v = std::sqrt(static_cast<double>(k + 1) * (n - k));
        s(k + 1, k) = Complex(0.0, -v);
        s(k, k + 1) = Complex(0.0, v);
      }
      break;
  }
  return s;
}

Matrix matrix_exp_hermitian(const Matrix& h, double t) {
  if (h.rows() != h.cols()) throw validation_error("matrix exponential needs a square matrix");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const auto& vals = es.eigenvalues();
  const Matrix& vecs = es.eigenvectors();
  Vector phases(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i) phases[i] = std::polar(1.0, -t * vals[i]);
  return vecs * phases.asDiagonal() * vecs.adjoint();
}

Matrix rotation(Axis axis, double angle, int n) {
  if (axis == Axis::Z) {
    // Diagonal generator: no eigensolve needed.
    Matrix u = Matrix::Zero(n + 1, n + 1);
    for (int k = 0; k <= n; ++k) u(k, k) = std::polar(1.0, -angle * (2.0 * k - n));
    return u;
  }
  return matrix_exp_hermitian(spin_operator(axis, n), angle);
}

Matrix hadamard(int n) { return rotation(Axis::Y, -std::numbers::pi / 4.0, n); }

Matrix hadamard_inv(int n) { return rotation(Axis::Y, std::numbers::pi / 4.0, n); }

}  // namespace eqcdj
