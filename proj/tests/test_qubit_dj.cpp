// test_qubit_dj.cpp — single-particle reference circuit
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "eqcdj/fock.hpp"
#include "eqcdj/qubit_dj.hpp"
#include "reference.hpp"

using namespace eqcdj;

namespace {

std::vector<BooleanOracle> all_decision_oracles(int m) {
  std::vector<BooleanOracle> out = enumerate_balanced(m);
  out.push_back(BooleanOracle::constant(m, 0));
  out.push_back(BooleanOracle::constant(m, 1));
  return out;
}

}  // namespace

TEST_CASE("one call decides every oracle exactly") {
  for (int m = 1; m <= 3; ++m) {
    for (const auto& oracle : all_decision_oracles(m)) {
      const CircuitResult r = run_dj_qubits(oracle);
      const bool constant = oracle.classification() == OracleClass::Constant;
      const double expected = constant ? 1.0 : 0.0;
      CHECK(std::abs(r.p_x0 - expected) < 1e-12);
      CHECK(r.decision == oracle.classification());
    }
  }
}

TEST_CASE("the oracle only kicks phases into the input register") {
  for (int m = 1; m <= 3; ++m) {
    for (const auto& oracle : all_decision_oracles(m)) {
      const StateVector got = post_oracle_x_state(oracle);
      CHECK(std::abs(got.norm() - 1.0) < 1e-12);

      const double amp = std::pow(2.0, -0.5 * m);
      Vector expected(1 << m);
      for (int x = 0; x < (1 << m); ++x) {
        int idx = 0;
        for (int n = 0; n < m; ++n) idx = (idx << 1) | ((x >> n) & 1);
        expected[idx] = (oracle.f(x) ? -amp : amp);
      }
      CHECK((got.amps - expected).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("classical mode computes y xor f(x)") {
  for (int m = 1; m <= 3; ++m) {
    for (const auto& oracle : all_decision_oracles(m)) {
      for (int x = 0; x < (1 << m); ++x)
        for (int y = 0; y < 2; ++y)
          CHECK(classical_mode_qubits(oracle, y, x) == (y ^ oracle.f(x)));
    }
  }
}

TEST_CASE("invalid tables are rejected") {
  const auto bad = BooleanOracle::parse("0111");
  CHECK_THROWS_AS(run_dj_qubits(bad), validation_error);
}

TEST_CASE("the synthesized evolution drives the whole circuit identically") {
  // swap the permutation oracle for exp(-iH) inside the same gate sequence
  for (const auto& oracle : all_decision_oracles(2)) {
    const int m = oracle.m();
    const Matrix u_perm = qubit_oracle_unitary(oracle);
    const Matrix u_ham =
        matrix_exp_hermitian(qubit_oracle_hamiltonian(oracle, OracleParams::zero()));

    std::vector<int> counts(m + 1, 1);
    StateVector psi{FockLayout(counts)};
    {
      FockIndex start(m + 1, 0);
      start[0] = 1;
      psi.amps[psi.layout.index(start)] = 1.0;
    }
    for (int e = 0; e <= m; ++e) psi = apply_local(hadamard(1), e, psi);

    StateVector a = psi, b = psi;
    a.amps = u_perm * a.amps;
    b.amps = u_ham * b.amps;
    CHECK(testref::global_phase_diff(a.amps, b.amps) < 1e-10);
  }
}
