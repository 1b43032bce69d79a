// decoherence.hpp — collective S^Z dephasing applied between the oracle and
// the closing rotations, and the pole-overlap signal read out afterwards

#pragma once

#include <cstdint>
#include <vector>

#include "eqcdj/method1.hpp"
#include "eqcdj/oracle.hpp"
#include "eqcdj/state.hpp"

namespace eqcdj {

// Density matrices are kept dense; prod_n (N_n + 1) is capped well below the
// pure-state cap.
inline constexpr std::int64_t kDensityDimCap = 512;

struct DephasingSpec {
  double gamma = 0.0;  // dephasing rate
  double t = 0.0;      // exposure time
  // Ensembles the channel acts on (0 = answer register); empty means every
  // input ensemble.
  std::vector<int> targets;

  void validate() const;
};

// rho_kk' *= exp(-2 gamma t sum_n (k_n - k'_n)^2) over the targeted
// ensembles.  Trace-preserving and positivity-preserving for gamma t >= 0.
void dephase(DensityMatrix& rho, const DephasingSpec& spec);

// Product over input ensembles of (1 - <S^Z_n>/N_n)/2: the population
// weight sitting at the |0,1>> pole of every input register at once.
double signal(const DensityMatrix& rho);

// Signal for a constant oracle under uniform dephasing of all input
// ensembles: [(1 + exp(-2 gamma t))/2]^M.
double constant_signal(double gamma, double t, int m);

struct DecoherenceRun {
  EnsembleDims dims;
  double signal_value = 0.0;
  double threshold = 0.0;  // (1 + 2^-M)/2
  OracleClass decision = OracleClass::Invalid;
};

enum class Method { One = 1, Two = 2 };

// Full run: prepare, phase, dephase, close rotations, read the signal.
// Decision is Constant iff signal > (1 + 2^-M)/2.
DecoherenceRun run_dj_with_dephasing(Method method, const BooleanOracle& oracle,
                                     const OracleParams& params,
                                     const EnsembleDims& dims,
                                     const DephasingSpec& spec,
                                     std::int64_t cap = kDensityDimCap);

}  // namespace eqcdj
