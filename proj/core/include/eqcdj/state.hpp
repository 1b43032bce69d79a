// state.hpp — Fock-product layouts, state vectors, density matrices

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "eqcdj/errors.hpp"

namespace eqcdj {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Default cap on the total Hilbert-space dimension of dense state vectors.
inline constexpr std::int64_t kDefaultDimCap = std::int64_t{1} << 24;

// Particle counts for one run: ensemble 0 holds the answer register (n_y
// particles), ensembles 1..m hold the input register (n_x[i-1] particles).
struct EnsembleDims {
  int n_y = 1;
  std::vector<int> n_x;

  int m() const { return static_cast<int>(n_x.size()); }

  std::vector<int> all_sizes() const {
    std::vector<int> s;
    s.reserve(n_x.size() + 1);
    s.push_back(n_y);
    s.insert(s.end(), n_x.begin(), n_x.end());
    return s;
  }

  void validate() const {
    if (n_y < 1) throw validation_error("answer ensemble needs at least one particle");
    if (n_x.empty()) throw validation_error("input register needs at least one ensemble");
    for (int n : n_x)
      if (n < 1) throw validation_error("every input ensemble needs at least one particle");
  }
};

// Fock label per ensemble: k[e] particles of the first species in ensemble e.
using FockIndex = std::vector<int>;

// Row-major indexing over the product Fock basis, last ensemble fastest.
// Construction checks the total dimension against a cap.
class FockLayout {
 public:
  explicit FockLayout(std::vector<int> particle_counts, std::int64_t cap = kDefaultDimCap);

  int ensembles() const { return static_cast<int>(counts_.size()); }
  int particles(int e) const { return counts_[e]; }
  const std::vector<int>& particle_counts() const { return counts_; }
  std::int64_t dim() const { return dim_; }
  std::int64_t stride(int e) const { return strides_[e]; }

  std::int64_t index(const FockIndex& k) const;
  FockIndex at(std::int64_t idx) const;

  // Odometer step in index order; returns false after the last label.
  bool next(FockIndex& k) const;

  bool operator==(const FockLayout& o) const { return counts_ == o.counts_; }

 private:
  std::vector<int> counts_;
  std::vector<std::int64_t> strides_;
  std::int64_t dim_ = 1;
};

// Dense amplitudes over a FockLayout.
struct StateVector {
  FockLayout layout;
  Vector amps;

  explicit StateVector(FockLayout l) : layout(std::move(l)), amps(Vector::Zero(layout.dim())) {}
  StateVector(FockLayout l, Vector a);

  double norm() const { return amps.norm(); }
};

// Dense density matrix over a FockLayout.
struct DensityMatrix {
  FockLayout layout;
  Matrix rho;

  explicit DensityMatrix(FockLayout l)
      : layout(std::move(l)), rho(Matrix::Zero(layout.dim(), layout.dim())) {}
  DensityMatrix(FockLayout l, Matrix r);

  static DensityMatrix pure(const StateVector& psi);

  double trace_real() const { return rho.trace().real(); }
};

// <a|b>; layouts must agree.
Complex overlap(const StateVector& a, const StateVector& b);

// Apply a (N_e+1)x(N_e+1) unitary to ensemble e of psi.
StateVector apply_local(const Matrix& u, int e, const StateVector& psi);

// Multiply each amplitude by phase(k).
StateVector apply_diagonal(const StateVector& psi,
                           const std::function<Complex(const FockIndex&)>& phase);

// Conjugate rho by per-ensemble unitaries: rho -> (U_0⊗...⊗U_{E-1}) rho (·)†.
DensityMatrix conjugate_local(const std::vector<Matrix>& us, const DensityMatrix& rho);

// Kronecker product of the given per-ensemble matrices, last factor fastest,
// matching FockLayout index order.
Matrix kron_all(const std::vector<Matrix>& factors);

// Product state ⊗ of per-ensemble single-ensemble states.
StateVector product_state(const std::vector<StateVector>& factors, std::int64_t cap = kDefaultDimCap);

// Rotate by a global phase so the largest-magnitude amplitude is real positive.
// Canonical form for comparisons that are only defined up to a global phase.
StateVector phase_normalized(const StateVector& psi);

// max_k |a_k - b_k|; layouts must agree.
double max_amp_diff(const StateVector& a, const StateVector& b);

}  // namespace eqcdj
