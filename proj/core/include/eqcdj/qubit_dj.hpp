// qubit_dj.hpp — single-particle (N=1) reference circuit for the
// constant-versus-balanced decision

#pragma once

#include "eqcdj/oracle.hpp"
#include "eqcdj/state.hpp"

namespace eqcdj {

struct CircuitResult {
  StateVector final_state;   // all M+1 qubits, answer register slowest
  double p_x0 = 0.0;         // probability every input qubit reads 0
  OracleClass decision = OracleClass::Invalid;
};

// Full circuit: answer qubit at |1>, input at |0...0>, register rotations on
// all qubits, oracle, inverse rotations on the input register.  Decision is
// Constant iff p_x0 > 1/2.  Requires a Constant or Balanced oracle.
CircuitResult run_dj_qubits(const BooleanOracle& oracle);

// Input-register state right after the oracle (answer qubit factored out).
StateVector post_oracle_x_state(const BooleanOracle& oracle);

// Apply the oracle permutation to a computational basis state; returns the
// answer bit, y xor f(x).
int classical_mode_qubits(const BooleanOracle& oracle, int y, int x);

}  // namespace eqcdj
