// state.cpp

#include "eqcdj/state.hpp"

#include <string>
#include <utility>

namespace eqcdj {

FockLayout::FockLayout(std::vector<int> particle_counts, std::int64_t cap)
    : counts_(std::move(particle_counts)) {
  if (counts_.empty()) throw validation_error("layout needs at least one ensemble");
  for (int n : counts_)
    if (n < 1) throw validation_error("every ensemble needs at least one particle");
  for (int n : counts_) {
    const auto d = static_cast<std::int64_t>(n) + 1;
    if (dim_ > cap / d)
      throw capacity_error("state dimension exceeds cap " + std::to_string(cap));
    dim_ *= d;
  }
  strides_.assign(counts_.size(), 1);
  for (int e = static_cast<int>(counts_.size()) - 2; e >= 0; --e)
    strides_[e] = strides_[e + 1] * (counts_[e + 1] + 1);
}

std::int64_t FockLayout::index(const FockIndex& k) const {
  if (static_cast<int>(k.size()) != ensembles())
    throw validation_error("Fock label has wrong number of ensembles");
  std::int64_t idx = 0;
  for (int e = 0; e < ensembles(); ++e) {
    if (k[e] < 0 || k[e] > counts_[e])
      throw validation_error("Fock label out of range for ensemble " + std::to_string(e));
    idx += k[e] * strides_[e];
  }
  return idx;
}

FockIndex FockLayout::at(std::int64_t idx) const {
  if (idx < 0 || idx >= dim_) throw validation_error("basis index out of range");
  FockIndex k(counts_.size());
  for (int e = 0; e < ensembles(); ++e) {
    k[e] = static_cast<int>(idx / strides_[e]);
    idx %= strides_[e];
  }
  return k;
}

bool FockLayout::next(FockIndex& k) const {
  for (int e = ensembles() - 1; e >= 0; --e) {
    if (++k[e] <= counts_[e]) return true;
    k[e] = 0;
  }
  return false;
}

StateVector::StateVector(FockLayout l, Vector a) : layout(std::move(l)), amps(std::move(a)) {
  if (amps.size() != layout.dim())
    throw validation_error("amplitude vector does not match layout dimension");
}

DensityMatrix::DensityMatrix(FockLayout l, Matrix r) : layout(std::move(l)), rho(std::move(r)) {
  if (rho.rows() != layout.dim() || rho.cols() != layout.dim())
    throw validation_error("density matrix does not match layout dimension");
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  DensityMatrix out(psi.layout);
  out.rho.noalias() = psi.amps * psi.amps.adjoint();
  return out;
}

Complex overlap(const StateVector& a, const StateVector& b) {
  if (!(a.layout == b.layout)) throw validation_error("overlap between different layouts");
  return a.amps.dot(b.amps);  // Eigen's dot conjugates the left argument
}

StateVector apply_local(const Matrix& u, int e, const StateVector& psi) {
  const FockLayout& layout = psi.layout;
  if (e < 0 || e >= layout.ensembles()) throw validation_error("ensemble index out of range");
  const int d = layout.particles(e) + 1;
  if (u.rows() != d || u.cols() != d)
    throw validation_error("local operator does not match ensemble dimension");

  const std::int64_t s = layout.stride(e);
  const std::int64_t block = d * s;
  const std::int64_t nblocks = layout.dim() / block;

  StateVector out(layout);
  Vector slot(d), rotated(d);
  for (std::int64_t b = 0; b < nblocks; ++b) {
    const std::int64_t base = b * block;
    for (std::int64_t i = 0; i < s; ++i) {
      for (int kk = 0; kk < d; ++kk) slot[kk] = psi.amps[base + i + kk * s];
      rotated.noalias() = u * slot;
      for (int kk = 0; kk < d; ++kk) out.amps[base + i + kk * s] = rotated[kk];
    }
  }
  return out;
}

StateVector apply_diagonal(const StateVector& psi,
                           const std::function<Complex(const FockIndex&)>& phase) {
  StateVector out(psi.layout);
  FockIndex k(psi.layout.ensembles(), 0);
  std::int64_t idx = 0;
  do {
    out.amps[idx] = phase(k) * psi.amps[idx];
    ++idx;
  } while (psi.layout.next(k));
  return out;
}

namespace {

Matrix kron_two(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

Matrix kron_all(const std::vector<Matrix>& factors) {
  if (factors.empty()) throw validation_error("kron of zero factors");
  Matrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron_two(out, factors[i]);
  return out;
}

DensityMatrix conjugate_local(const std::vector<Matrix>& us, const DensityMatrix& rho) {
  if (static_cast<int>(us.size()) != rho.layout.ensembles())
    throw validation_error("one unitary per ensemble required");
  for (int e = 0; e < rho.layout.ensembles(); ++e) {
    const int d = rho.layout.particles(e) + 1;
    if (us[e].rows() != d || us[e].cols() != d)
      throw validation_error("unitary does not match ensemble dimension");
  }
  const Matrix u = kron_all(us);
  DensityMatrix out(rho.layout);
  out.rho.noalias() = u * rho.rho * u.adjoint();
  return out;
}

StateVector product_state(const std::vector<StateVector>& factors, std::int64_t cap) {
  if (factors.empty()) throw validation_error("product of zero states");
  std::vector<int> counts;
  counts.reserve(factors.size());
  for (const StateVector& f : factors) {
    if (f.layout.ensembles() != 1)
      throw validation_error("product_state expects single-ensemble factors");
    counts.push_back(f.layout.particles(0));
  }
  FockLayout layout(counts, cap);
  Vector amps = factors.front().amps;
  for (std::size_t i = 1; i < factors.size(); ++i) {
    const Vector& b = factors[i].amps;
    Vector next(amps.size() * b.size());
    for (Eigen::Index p = 0; p < amps.size(); ++p)
      next.segment(p * b.size(), b.size()) = amps[p] * b;
    amps.swap(next);
  }
  return {std::move(layout), std::move(amps)};
}

StateVector phase_normalized(const StateVector& psi) {
  Eigen::Index imax = 0;
  const double mx = psi.amps.cwiseAbs().maxCoeff(&imax);
  if (mx == 0.0) return psi;
  const Complex u = std::conj(psi.amps[imax]) / std::abs(psi.amps[imax]);
  return {psi.layout, psi.amps * u};
}

double max_amp_diff(const StateVector& a, const StateVector& b) {
  if (!(a.layout == b.layout)) throw validation_error("comparing different layouts");
  return (a.amps - b.amps).cwiseAbs().maxCoeff();
}

}  // namespace eqcdj
