// method1.hpp — parity-encoded ensemble run: the logical bit of ensemble n is
// k_n mod 2, the oracle acts as a diagonal parity phase

#pragma once

#include "eqcdj/fock.hpp"
#include "eqcdj/oracle.hpp"
#include "eqcdj/state.hpp"

namespace eqcdj {

enum class Parity { Even, Odd };

// Parity of P_x(k) = sum_{x' in F} (2 j_{x'} + 1) prod_n (k_n + 1 - x'_n).
// Odd exactly when the decoded input (k_n mod 2 per ensemble) lies in F.
// Evaluated in unsigned arithmetic; wraparound preserves parity.
Parity parity_px(const BooleanOracle& oracle, const OracleParams& params, const FockIndex& k);

// Whether the oracle flips the answer register when the input register sits
// at Fock label k.  k must fit dims.
bool classical_mode_m1(const BooleanOracle& oracle, const OracleParams& params,
                       const FockIndex& k, const EnsembleDims& dims);

// Normalized equal-weight superposition of one parity class:
//   (|1/sqrt2,1/sqrt2>> + (-1)^parity |-1/sqrt2,1/sqrt2>>)/sqrt2.
StateVector cat_state(int n, Parity parity);

struct Method1Run {
  EnsembleDims dims;
  int k0 = 1;
  StateVector final_state;      // input register after closing rotations
  StateVector post_oracle;      // input register before closing rotations
  double overlap_zero = 0.0;    // probability of every ensemble at |0,1>>
  OracleClass decision = OracleClass::Invalid;
};

// Input register starts at ⊗|1/sqrt2,1/sqrt2>>; the oracle multiplies each
// Fock amplitude by (-1)^P_x(k) (the answer ensemble, prepared at odd Fock
// label k0, only contributes that parity and stays passive); closing
// rotations map constants back onto ⊗|0,1>>.  Decision: Constant iff
// overlap_zero > 1/2.  k0 must be odd.
Method1Run quantum_mode_m1(const BooleanOracle& oracle, const OracleParams& params,
                           const EnsembleDims& dims, int k0 = 1,
                           std::int64_t cap = kDefaultDimCap);

}  // namespace eqcdj
