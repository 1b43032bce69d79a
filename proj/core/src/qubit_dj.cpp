// qubit_dj.cpp

#include "eqcdj/qubit_dj.hpp"

#include "eqcdj/fock.hpp"

namespace eqcdj {

namespace {

StateVector state_after_oracle(const BooleanOracle& oracle) {
  const int m = oracle.m();
  StateVector psi{FockLayout(std::vector<int>(m + 1, 1))};
  FockIndex start(m + 1, 0);
  start[0] = 1;  // answer register at logical |1>
  psi.amps[psi.layout.index(start)] = 1.0;

  const Matrix h = hadamard(1);
  for (int e = 0; e <= m; ++e) psi = apply_local(h, e, psi);

  const Matrix u = qubit_oracle_unitary(oracle);
  return {psi.layout, u * psi.amps};
}

}  // namespace

CircuitResult run_dj_qubits(const BooleanOracle& oracle) {
  if (oracle.classification() == OracleClass::Invalid)
    throw validation_error("decision circuit requires a constant or balanced oracle");
  const int m = oracle.m();
  StateVector psi = state_after_oracle(oracle);

  const Matrix hinv = hadamard_inv(1);
  for (int e = 1; e <= m; ++e) psi = apply_local(hinv, e, psi);

  double p_x0 = 0.0;
  for (int y = 0; y <= 1; ++y) {
    FockIndex k(m + 1, 0);
    k[0] = y;
    p_x0 += std::norm(psi.amps[psi.layout.index(k)]);
  }
  CircuitResult out{std::move(psi), p_x0,
                    p_x0 > 0.5 ? OracleClass::Constant : OracleClass::Balanced};
  return out;
}

StateVector post_oracle_x_state(const BooleanOracle& oracle) {
  const int m = oracle.m();
  const StateVector full = state_after_oracle(oracle);

  // The answer register is untouched by the oracle up to the kicked-back
  // signs, so contracting with its prepared state leaves a normalized input
  // register state.
  Vector ans(2);
  {
    StateVector one{FockLayout({1})};
    one.amps[1] = 1.0;
    ans = (hadamard(1) * one.amps).eval();
  }
  FockLayout xlayout{std::vector<int>(m, 1)};
  StateVector out{xlayout};
  const std::int64_t half = xlayout.dim();
  for (std::int64_t i = 0; i < half; ++i)
    out.amps[i] = std::conj(ans[0]) * full.amps[i] + std::conj(ans[1]) * full.amps[half + i];
  return out;
}

int classical_mode_qubits(const BooleanOracle& oracle, int y, int x) {
  if (y != 0 && y != 1) throw validation_error("answer bit must be 0 or 1");
  if (x < 0 || x >= oracle.size()) throw validation_error("input value out of range");
  const int m = oracle.m();
  StateVector psi{FockLayout(std::vector<int>(m + 1, 1))};
  FockIndex k = x_to_bits(x, m);
  k.insert(k.begin(), y);
  psi.amps[psi.layout.index(k)] = 1.0;
  psi = StateVector{psi.layout, qubit_oracle_unitary(oracle) * psi.amps};

  Eigen::Index imax = 0;
  psi.amps.cwiseAbs().maxCoeff(&imax);
  return psi.layout.at(imax)[0];
}

}  // namespace eqcdj
