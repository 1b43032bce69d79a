// method1.cpp

#include "eqcdj/method1.hpp"

#include <cmath>
#include <numbers>

namespace eqcdj {

Parity parity_px(const BooleanOracle& oracle, const OracleParams& params, const FockIndex& k) {
  if (static_cast<int>(k.size()) != oracle.m())
    throw validation_error("Fock label has wrong number of input ensembles");
  // Everything mod 2 survives unsigned wraparound, so plain 64-bit products
  // are fine even though the true integers can be astronomically large.
  std::uint64_t sum = 0;
  for (int x : oracle.f_set()) {
    std::uint64_t term = static_cast<std::uint64_t>(2 * params.j(x) + 1);
    for (std::size_t n = 0; n < k.size(); ++n) {
      const int bit = (x >> n) & 1;
      term *= static_cast<std::uint64_t>(k[n] + 1 - bit);
    }
    sum += term;
  }
  return (sum & 1) ? Parity::Odd : Parity::Even;
}

bool classical_mode_m1(const BooleanOracle& oracle, const OracleParams& params,
                       const FockIndex& k, const EnsembleDims& dims) {
  dims.validate();
  if (oracle.m() != dims.m())
    throw validation_error("oracle arity does not match ensemble count");
  if (static_cast<int>(k.size()) != dims.m())
    throw validation_error("Fock label has wrong number of input ensembles");
  for (int n = 0; n < dims.m(); ++n)
    if (k[n] < 0 || k[n] > dims.n_x[n])
      throw validation_error("Fock label out of range");
  return parity_px(oracle, params, k) == Parity::Odd;
}

StateVector cat_state(int n, Parity parity) {
  if (n < 1) throw validation_error("cat state needs at least one particle");
  // (|1/sqrt2,1/sqrt2>> + (-1)^parity |-1/sqrt2,1/sqrt2>>)/sqrt2 keeps only
  // one parity class of k, with amplitude 2^((1-n)/2) sqrt(C(n,k)).
  const int want = parity == Parity::Odd ? 1 : 0;
  const double ln2 = std::numbers::ln2;
  StateVector out{FockLayout({n})};
  for (int k = want; k <= n; k += 2)
    out.amps[k] = std::exp(0.5 * log_binomial(n, k).ln_mag + 0.5 * (1.0 - n) * ln2);
  return out;
}

Method1Run quantum_mode_m1(const BooleanOracle& oracle, const OracleParams& params,
                           const EnsembleDims& dims, int k0, std::int64_t cap) {
  dims.validate();
  if (oracle.m() != dims.m())
    throw validation_error("oracle arity does not match ensemble count");
  if (oracle.classification() == OracleClass::Invalid)
    throw validation_error("decision run requires a constant or balanced oracle");
  if (k0 < 1 || k0 > dims.n_y || k0 % 2 == 0)
    throw validation_error("answer ensemble must sit at an odd Fock label within range");

  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  std::vector<StateVector> factors;
  factors.reserve(dims.n_x.size());
  for (int n : dims.n_x) factors.push_back(coherent_state(inv_sqrt2, inv_sqrt2, n));
  StateVector psi = product_state(factors, cap);

  // With the answer ensemble at odd k0 the oracle reduces to the diagonal
  // sign (-1)^(P_x(k)) on the input register.
  StateVector post = apply_diagonal(psi, [&](const FockIndex& k) -> Complex {
    return parity_px(oracle, params, k) == Parity::Odd ? -1.0 : 1.0;
  });

  StateVector fin = post;
  for (int e = 0; e < dims.m(); ++e) fin = apply_local(hadamard_inv(dims.n_x[e]), e, fin);

  const double p0 = std::norm(fin.amps[0]);
  Method1Run out{dims, k0, std::move(fin), std::move(post), p0,
                 p0 > 0.5 ? OracleClass::Constant : OracleClass::Balanced};
  return out;
}

}  // namespace eqcdj
