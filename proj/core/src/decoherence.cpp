// decoherence.cpp

#include "eqcdj/decoherence.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "eqcdj/method2.hpp"

namespace eqcdj {

void DephasingSpec::validate() const {
  if (gamma < 0.0) throw validation_error("dephasing rate must be non-negative");
  if (t < 0.0) throw validation_error("exposure time must be non-negative");
  std::set<int> seen;
  for (int e : targets) {
    if (e < 0) throw validation_error("dephasing target out of range");
    if (!seen.insert(e).second) throw validation_error("duplicate dephasing target");
  }
}

void dephase(DensityMatrix& rho, const DephasingSpec& spec) {
  spec.validate();
  std::vector<int> targets = spec.targets;
  if (targets.empty())
    for (int e = 1; e < rho.layout.ensembles(); ++e) targets.push_back(e);
  for (int e : targets)
    if (e >= rho.layout.ensembles()) throw validation_error("dephasing target out of range");
  const double rate = 2.0 * spec.gamma * spec.t;
  if (rate == 0.0) return;

  const std::int64_t dim = rho.layout.dim();
  std::vector<FockIndex> labels;
  labels.reserve(dim);
  for (std::int64_t i = 0; i < dim; ++i) labels.push_back(rho.layout.at(i));

  for (std::int64_t i = 0; i < dim; ++i)
    for (std::int64_t j = 0; j < dim; ++j) {
      double q = 0.0;
      for (int e : targets) {
        const double d = labels[i][e] - labels[j][e];
        q += d * d;
      }
      if (q > 0.0) rho.rho(i, j) *= std::exp(-rate * q);
    }
}

double signal(const DensityMatrix& rho) {
  if (rho.layout.ensembles() < 2)
    throw validation_error("signal needs an answer ensemble plus at least one input");
  const std::int64_t dim = rho.layout.dim();
  std::vector<double> sz(rho.layout.ensembles(), 0.0);
  for (std::int64_t i = 0; i < dim; ++i) {
    const double w = rho.rho(i, i).real();
    const FockIndex k = rho.layout.at(i);
    for (int e = 0; e < rho.layout.ensembles(); ++e)
      sz[e] += w * (2.0 * k[e] - rho.layout.particles(e));
  }
  double s = 1.0;
  for (int e = 1; e < rho.layout.ensembles(); ++e)
    s *= 0.5 * (1.0 - sz[e] / rho.layout.particles(e));
  return s;
}

double constant_signal(double gamma, double t, int m) {
  if (m < 1) throw validation_error("input register needs at least one ensemble");
  if (gamma < 0.0 || t < 0.0) throw validation_error("dephasing parameters must be non-negative");
  return std::pow(0.5 * (1.0 + std::exp(-2.0 * gamma * t)), m);
}

DecoherenceRun run_dj_with_dephasing(Method method, const BooleanOracle& oracle,
                                     const OracleParams& params,
                                     const EnsembleDims& dims,
                                     const DephasingSpec& spec, std::int64_t cap) {
  dims.validate();
  spec.validate();
  if (oracle.m() != dims.m())
    throw validation_error("oracle arity does not match ensemble count");
  if (oracle.classification() == OracleClass::Invalid)
    throw validation_error("decision run requires a constant or balanced oracle");
  for (int e : spec.targets)
    if (e > dims.m()) throw validation_error("dephasing target out of range");

  FockLayout layout{dims.all_sizes(), cap};
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

  StateVector psi{layout};
  if (method == Method::One) {
    // Answer at the odd Fock label 1; inputs on the equator; diagonal parity
    // phases stand in for the oracle.
    std::vector<StateVector> factors;
    StateVector ans{FockLayout({dims.n_y})};
    ans.amps[1] = 1.0;
    factors.push_back(std::move(ans));
    for (int n : dims.n_x) factors.push_back(coherent_state(inv_sqrt2, inv_sqrt2, n));
    psi = product_state(factors, cap);
    psi = apply_diagonal(psi, [&](const FockIndex& k) -> Complex {
      if (k[0] % 2 == 0) return 1.0;
      const FockIndex kx(k.begin() + 1, k.end());
      return parity_px(oracle, params, kx) == Parity::Odd ? -1.0 : 1.0;
    });
  } else {
    // Answer rotated from the logical |1> pole into the S^X = -N0 eigenstate,
    // then the dense oracle evolution.
    std::vector<StateVector> factors;
    StateVector pole{FockLayout({dims.n_y})};
    pole.amps[dims.n_y] = 1.0;
    factors.push_back(StateVector{pole.layout, hadamard(dims.n_y) * pole.amps});
    for (int n : dims.n_x) factors.push_back(coherent_state(inv_sqrt2, inv_sqrt2, n));
    psi = product_state(factors, cap);
    const Matrix u = matrix_exp_hermitian(method2_hamiltonian(oracle, params, dims));
    psi = StateVector{layout, u * psi.amps};
  }

  DensityMatrix rho = DensityMatrix::pure(psi);
  dephase(rho, spec);

  std::vector<Matrix> closers;
  closers.push_back(Matrix::Identity(dims.n_y + 1, dims.n_y + 1));
  for (int n : dims.n_x) closers.push_back(hadamard_inv(n));
  rho = conjugate_local(closers, rho);

  DecoherenceRun out;
  out.dims = dims;
  out.signal_value = signal(rho);
  out.threshold = 0.5 * (1.0 + std::ldexp(1.0, -dims.m()));
  out.decision =
      out.signal_value > out.threshold ? OracleClass::Constant : OracleClass::Balanced;
  return out;
}

}  // namespace eqcdj
