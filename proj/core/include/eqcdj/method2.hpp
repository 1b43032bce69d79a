// method2.hpp — coherent-encoded ensemble run: logical |y> is the pole state
// |y,1-y>>, the oracle Hamiltonian replaces each qubit sigma^Z by S^Z/N

#pragma once

#include <optional>

#include "eqcdj/fock.hpp"
#include "eqcdj/log_real.hpp"
#include "eqcdj/oracle.hpp"
#include "eqcdj/state.hpp"

namespace eqcdj {

// Default dense-path cap for this encoding: at most 3 input ensembles of at
// most 12 particles each.
inline constexpr int kMethod2DenseMaxM = 3;
inline constexpr int kMethod2DenseMaxN = 12;

// Phase acquired by Fock label k of the input register when the answer
// ensemble sits in the S^X eigenstate of eigenvalue -N0:
//   pi * N0 * sum_z alpha_z prod_n ((2 k_n - N_n)/N_n)^(z_n).
double phase_function_m2(const OracleCoefficients& coeffs, const EnsembleDims& dims,
                         const FockIndex& k);

// j_x = -x_1 for every x in F.  For balanced oracles this pins the
// coefficient of S^Z_1/N_1 to 1/2 and bounds every |alpha_z| by 1/2.
OracleParams recommended_params(const BooleanOracle& oracle);

// Oracle Hamiltonian over the full register (answer ensemble slowest), built
// from pole projectors: interpolations (1 + (2 x_n - 1) S^Z_n/N_n)/2 that are
// 1 on the pole encoding x_n and 0 on the opposite pole.  At every N_n = 1
// this is exactly the qubit Hamiltonian, and classical mode is exact for all
// oracles.  Constants: f=0 -> 2 pi j I; f=1 -> pi c (S^X_0 - N0)/(2 N0) with
// the multiplier c = 2j+1 defaulting to N0, which makes the flip exact for
// every N0 and leaves the global phase (-1)^c on the initial state.
Matrix method2_hamiltonian(const BooleanOracle& oracle, const OracleParams& params,
                           const EnsembleDims& dims);

// The same family written through the expansion coefficients:
//   pi ((S^X_0 - N0)/2) ⊗ sum_z alpha_z prod_n (S^Z_n/N_n)^(z_n).
// On the S^X = -N0 answer eigenstate its t=1 evolution applies exactly
// phase_function_m2; used as the dense cross-check of the diagonal path.
// Related to method2_hamiltonian by reflecting every pole (k_n -> N_n - k_n),
// which leaves all overlap probabilities unchanged.
Matrix method2_expanded_hamiltonian(const OracleCoefficients& coeffs, const EnsembleDims& dims);

// Evolve |y>>|x>> under exp(-i method2_hamiltonian) densely and read which
// pole the answer ensemble reached.  Returns y xor f(x).  Particle counts
// above 6 are rejected (dense path only).
int classical_mode_m2(const BooleanOracle& oracle, const OracleParams& params, int x, int y,
                      const EnsembleDims& dims);

struct Method2Run {
  EnsembleDims dims;
  OracleParams params;
  OracleCoefficients coeffs;                  // empty for constant oracles
  std::optional<StateVector> final_state;     // dense path only
  LogReal p_init = LogReal::zero();           // probability of ⊗|0,1>>
  Complex global_phase = 1.0;                 // recorded, never branched on
  OracleClass decision = OracleClass::Invalid;
};

// Input register at ⊗|1/sqrt2,1/sqrt2>>, diagonal phases from
// phase_function_m2, closing rotations, p_init = probability of finding every
// input ensemble back at |0,1>>.  When the expansion is linear in each S^Z
// the run uses the closed form prod_n cos^(2 N_n)(pi N0 alpha_n / N_n) and
// works at any size; otherwise the dense path requires dims under the cap.
// force_dense makes even linear-only balanced runs take the dense path so
// final_state is populated.
Method2Run quantum_mode_m2(const BooleanOracle& oracle, const OracleParams& params,
                           const EnsembleDims& dims, bool force_dense = false);

// Single-input decision problem, F = {0}, both ensembles at their stated
// sizes: probability of wrongly measuring the initial state,
//   p = cos^(2 n1)(pi n0 (2 j + 1) / (2 n1)),
// exactly zero when n1 divides n0 (2 j + 1) with odd quotient.
LogReal deutsch_probability(long long n0, long long n1, long long j);

}  // namespace eqcdj
