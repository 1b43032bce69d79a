// method2.cpp

#include "eqcdj/method2.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "trig_pi.hpp"

namespace eqcdj {

namespace {

void check_dense_caps(const EnsembleDims& dims) {
  if (dims.m() > kMethod2DenseMaxM)
    throw capacity_error("dense path supports at most " +
                         std::to_string(kMethod2DenseMaxM) + " input ensembles");
  for (int n : dims.all_sizes())
    if (n > kMethod2DenseMaxN)
      throw capacity_error("dense path supports at most " +
                           std::to_string(kMethod2DenseMaxN) + " particles per ensemble");
}

// Multiplier 2j+1 for the f = 1 evolution.  An explicit j_const wins;
// otherwise N0, which cancels the S^X/N0 normalization and realizes the flip
// exactly for every N0.
int f1_multiplier(const OracleParams& params, int n0) {
  if (params.j_const != 0) return 2 * params.j_const + 1;
  return n0;
}

}  // namespace

double phase_function_m2(const OracleCoefficients& coeffs, const EnsembleDims& dims,
                         const FockIndex& k) {
  dims.validate();
  if (coeffs.m != dims.m())
    throw validation_error("coefficient arity does not match ensemble count");
  if (static_cast<int>(k.size()) != dims.m())
    throw validation_error("Fock label has wrong number of input ensembles");
  double sum = 0.0;
  for (std::size_t z = 0; z < coeffs.alpha.size(); ++z) {
    if (coeffs.alpha[z] == 0.0) continue;
    double prod = 1.0;
    for (int n = 0; n < dims.m(); ++n)
      if ((z >> n) & 1) prod *= (2.0 * k[n] - dims.n_x[n]) / dims.n_x[n];
    sum += coeffs.alpha[z] * prod;
  }
  return std::numbers::pi * dims.n_y * sum;
}

OracleParams recommended_params(const BooleanOracle& oracle) {
  OracleParams p;
  for (int x : oracle.f_set())
    if (x & 1) p.j_map[x] = -1;
  return p;
}

Matrix method2_hamiltonian(const BooleanOracle& oracle, const OracleParams& params,
                           const EnsembleDims& dims) {
  dims.validate();
  if (oracle.m() != dims.m())
    throw validation_error("oracle arity does not match ensemble count");
  check_dense_caps(dims);

  const double pi = std::numbers::pi;
  const int n0 = dims.n_y;
  FockLayout full{dims.all_sizes()};
  FockLayout inputs{dims.n_x};

  if (oracle.f_set().empty())
    return 2.0 * pi * params.j_const * Matrix::Identity(full.dim(), full.dim());

  const Matrix flip =
      0.5 * (spin_operator(Axis::X, n0) - static_cast<double>(n0) * Matrix::Identity(n0 + 1, n0 + 1));

  Matrix proj = Matrix::Zero(inputs.dim(), inputs.dim());
  if (static_cast<int>(oracle.f_set().size()) == oracle.size()) {
    proj = (static_cast<double>(f1_multiplier(params, n0)) / n0) *
           Matrix::Identity(inputs.dim(), inputs.dim());
  } else {
    FockIndex k(dims.m(), 0);
    std::int64_t idx = 0;
    do {
      double val = 0.0;
      for (int x : oracle.f_set()) {
        double prod = 2.0 * params.j(x) + 1.0;
        // (1 + (2 x_n - 1) S^Z_n/N_n)/2 evaluated at Fock label k_n.
        for (int n = 0; n < dims.m(); ++n) {
          const int bit = (x >> n) & 1;
          const double z = (2.0 * k[n] - dims.n_x[n]) / dims.n_x[n];
          prod *= 0.5 * (1.0 + (2.0 * bit - 1.0) * z);
        }
        val += prod;
      }
      proj(idx, idx) = val;
      ++idx;
    } while (inputs.next(k));
  }
  return pi * kron_all({flip, proj});
}

Matrix method2_expanded_hamiltonian(const OracleCoefficients& coeffs, const EnsembleDims& dims) {
  dims.validate();
  if (coeffs.m != dims.m())
    throw validation_error("coefficient arity does not match ensemble count");
  check_dense_caps(dims);

  const int n0 = dims.n_y;
  FockLayout inputs{dims.n_x};
  const Matrix flip =
      0.5 * (spin_operator(Axis::X, n0) - static_cast<double>(n0) * Matrix::Identity(n0 + 1, n0 + 1));

  Matrix zsum = Matrix::Zero(inputs.dim(), inputs.dim());
  FockIndex k(dims.m(), 0);
  std::int64_t idx = 0;
  do {
    // phase_function_m2 without the leading pi*N0.
    double val = 0.0;
    for (std::size_t z = 0; z < coeffs.alpha.size(); ++z) {
      if (coeffs.alpha[z] == 0.0) continue;
      double prod = 1.0;
      for (int n = 0; n < dims.m(); ++n)
        if ((z >> n) & 1) prod *= (2.0 * k[n] - dims.n_x[n]) / dims.n_x[n];
      val += coeffs.alpha[z] * prod;
    }
    zsum(idx, idx) = val;
    ++idx;
  } while (inputs.next(k));

  return std::numbers::pi * kron_all({flip, zsum});
}

int classical_mode_m2(const BooleanOracle& oracle, const OracleParams& params, int x, int y,
                      const EnsembleDims& dims) {
  dims.validate();
  if (oracle.m() != dims.m())
    throw validation_error("oracle arity does not match ensemble count");
  if (y != 0 && y != 1) throw validation_error("answer bit must be 0 or 1");
  if (x < 0 || x >= oracle.size()) throw validation_error("input value out of range");
  for (int n : dims.all_sizes())
    if (n > 6) throw capacity_error("classical mode is dense-only; keep ensembles at 6 particles or fewer");

  FockLayout full{dims.all_sizes()};
  StateVector psi{full};
  FockIndex label(dims.m() + 1);
  label[0] = y == 1 ? dims.n_y : 0;  // logical poles: |1> at k = N, |0> at k = 0
  for (int n = 0; n < dims.m(); ++n)
    label[n + 1] = ((x >> n) & 1) ? dims.n_x[n] : 0;
  psi.amps[full.index(label)] = 1.0;

  const Matrix u = matrix_exp_hermitian(method2_hamiltonian(oracle, params, dims));
  psi = StateVector{full, u * psi.amps};

  // Population of the answer ensemble at each logical pole.
  double p0 = 0.0, p1 = 0.0;
  FockIndex k(dims.m() + 1, 0);
  std::int64_t idx = 0;
  do {
    const double w = std::norm(psi.amps[idx]);
    if (k[0] == 0) p0 += w;
    if (k[0] == dims.n_y) p1 += w;
    ++idx;
  } while (full.next(k));

  if (std::max(p0, p1) < 1.0 - 1e-9)
    throw validation_error("oracle evolution left the answer ensemble away from the poles");
  return p1 > p0 ? 1 : 0;
}

Method2Run quantum_mode_m2(const BooleanOracle& oracle, const OracleParams& params,
                           const EnsembleDims& dims, bool force_dense) {
  dims.validate();
  if (oracle.m() != dims.m())
    throw validation_error("oracle arity does not match ensemble count");
  if (oracle.classification() == OracleClass::Invalid)
    throw validation_error("decision run requires a constant or balanced oracle");

  const double pi = std::numbers::pi;
  const int n0 = dims.n_y;

  Method2Run out;
  out.dims = dims;
  out.params = params;

  if (oracle.classification() == OracleClass::Constant) {
    // No input-register phases at all; the run returns exactly to the poles.
    out.p_init = LogReal::one();
    out.decision = OracleClass::Constant;
    if (oracle.f_set().empty()) {
      out.global_phase = 1.0;  // exp(-i 2 pi j)
    } else {
      const int c = f1_multiplier(params, n0);
      out.global_phase = std::polar(1.0, pi * c);
    }
    return out;
  }

  out.coeffs = alpha_coefficients(oracle, params);
  out.global_phase = std::polar(1.0, pi * n0 * out.coeffs.alpha[0]);

  if (out.coeffs.linear_only() && !force_dense) {
    // Single-Z phases factor over the ensembles; each contributes
    // cos^(2 N_n)(pi N0 alpha_n / N_n) to the return probability.
    LogReal p = LogReal::one();
    for (int n = 0; n < dims.m(); ++n) {
      const double alpha = out.coeffs.alpha[std::size_t{1} << n];
      const double c = detail::cos_pi(static_cast<double>(n0) * alpha / dims.n_x[n]);
      p = p * LogReal::from_double(c).abs_sq().pow_int(dims.n_x[n]);
    }
    out.p_init = p;
  } else {
    check_dense_caps(dims);
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    std::vector<StateVector> factors;
    for (int n : dims.n_x) factors.push_back(coherent_state(inv_sqrt2, inv_sqrt2, n));
    StateVector psi = product_state(factors);
    psi = apply_diagonal(psi, [&](const FockIndex& k) -> Complex {
      return std::polar(1.0, phase_function_m2(out.coeffs, dims, k));
    });
    for (int e = 0; e < dims.m(); ++e) psi = apply_local(hadamard_inv(dims.n_x[e]), e, psi);
    out.p_init = LogReal::from_double(std::norm(psi.amps[0]));
    out.final_state = std::move(psi);
  }

  out.decision =
      out.p_init.to_double() > 0.5 ? OracleClass::Constant : OracleClass::Balanced;
  return out;
}

LogReal deutsch_probability(long long n0, long long n1, long long j) {
  if (n0 < 1 || n1 < 1) throw validation_error("both ensembles need at least one particle");
  // cos^(2 n1)(pi t), t = n0 (2j+1) / (2 n1); reduce the rational argument
  // mod 2 in exact integer arithmetic before touching doubles.
  const long long mult = 2 * j + 1;
  __int128 num = static_cast<__int128>(n0) * mult;
  const __int128 den = static_cast<__int128>(2) * n1;
  num %= 2 * den;  // cos(pi t) has period 2 in t
  if (num < 0) num += 2 * den;
  if (num % den == 0) return LogReal::one();               // integer t: cos = ±1
  if ((2 * num) % den == 0) return LogReal::zero();        // half-odd t: cos = 0

  const double t = static_cast<double>(num) / static_cast<double>(den);
  const double c = detail::cos_pi(t);
  if (c == 0.0) return LogReal::zero();
  return LogReal::from_ln(1, 2.0 * static_cast<double>(n1) * std::log(std::abs(c)));
}

}  // namespace eqcdj
