// test_oracle.cpp — truth tables, Hamiltonian synthesis, expansion coefficients
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "eqcdj/fock.hpp"
#include "eqcdj/oracle.hpp"
#include "reference.hpp"

using namespace eqcdj;

namespace {

OracleParams random_params(const BooleanOracle& oracle, std::mt19937& rng) {
  std::uniform_int_distribution<int> dj(-3, 3);
  OracleParams p;
  for (int x : oracle.f_set()) p.j_map[x] = dj(rng);
  p.j_const = dj(rng);
  return p;
}

}  // namespace

TEST_CASE("table parsing and classification") {
  const BooleanOracle f4 = BooleanOracle::parse(" 1001 \n");
  CHECK(f4.m() == 2);
  CHECK(f4.classification() == OracleClass::Balanced);
  CHECK(f4.f_set() == std::vector<int>{0, 3});
  CHECK(f4.table_string() == "1001");

  CHECK(BooleanOracle::constant(3, 0).classification() == OracleClass::Constant);
  CHECK(BooleanOracle::constant(3, 1).f_set().size() == 8);
  CHECK(BooleanOracle::parse("0111").classification() == OracleClass::Invalid);

  CHECK_THROWS_AS(BooleanOracle::parse("10x1"), validation_error);
  CHECK_THROWS_AS(BooleanOracle::parse("101"), validation_error);
  CHECK_THROWS_AS(BooleanOracle::parse("1"), validation_error);
  CHECK_THROWS_AS(BooleanOracle::parse(""), validation_error);
}

TEST_CASE("balanced enumeration has the right counts and members") {
  CHECK(enumerate_balanced(1).size() == 2);
  CHECK(enumerate_balanced(2).size() == 6);
  CHECK(enumerate_balanced(3).size() == 70);
  CHECK(enumerate_balanced(4).size() == 12870);
  CHECK_THROWS_AS(enumerate_balanced(5), capacity_error);

  const auto m2 = enumerate_balanced(2);
  CHECK(m2.front().table_string() == "0011");
  CHECK(m2.back().table_string() == "1100");
  for (const auto& o : m2) CHECK(o.classification() == OracleClass::Balanced);
}

TEST_CASE("every balanced oracle synthesizes to machine precision") {
  std::mt19937 rng(1234);
  for (int m = 1; m <= 3; ++m) {
    for (const auto& oracle : enumerate_balanced(m)) {
      CHECK(verify_oracle(qubit_oracle_hamiltonian(oracle, OracleParams::zero()), oracle) <
            1e-9);
      const auto p = random_params(oracle, rng);
      CHECK(verify_oracle(qubit_oracle_hamiltonian(oracle, p), oracle) < 1e-9);
    }
  }
  for (int value : {0, 1}) {
    for (int m = 1; m <= 3; ++m) {
      const auto oracle = BooleanOracle::constant(m, value);
      CHECK(verify_oracle(qubit_oracle_hamiltonian(oracle, OracleParams::zero()), oracle) <
            1e-9);
    }
  }
}

TEST_CASE("free integers never change the realized unitary") {
  std::mt19937 rng(555);
  const BooleanOracle oracle = BooleanOracle::parse("01101001");  // parity, m=3
  const Matrix base = matrix_exp_hermitian(qubit_oracle_hamiltonian(oracle, OracleParams::zero()));
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_params(oracle, rng);
    const Matrix u = matrix_exp_hermitian(qubit_oracle_hamiltonian(oracle, p));
    Vector a = Eigen::Map<const Vector>(base.data(), base.size());
    Vector b = Eigen::Map<const Vector>(u.data(), u.size());
    CHECK(testref::global_phase_diff(a, b) < 1e-9);
  }
}

TEST_CASE("exponential of a projector-coupled generator stays in the sector") {
  std::mt19937 rng(8080);
  std::normal_distribution<double> g(0.0, 1.0);
  const int m = 2;
  for (int x = 0; x < 4; ++x) {
    Matrix a(2, 2);
    a << Complex(g(rng), 0.0), Complex(g(rng), g(rng)), 0.0, Complex(g(rng), 0.0);
    a(1, 0) = std::conj(a(0, 1));

    Matrix proj = Matrix::Zero(1 << m, 1 << m);
    // basis order of the input register: bit-reversed x
    int idx = 0;
    for (int n = 0; n < m; ++n) idx = (idx << 1) | ((x >> n) & 1);
    proj(idx, idx) = 1.0;

    const Matrix op = kron_all({a, proj});
    const Matrix lhs = testref::expm(Complex(0.0, 1.0) * op);
    const Matrix ea = testref::expm(Complex(0.0, 1.0) * a);
    const Matrix rhs = Matrix::Identity(8, 8) +
                       kron_all({ea - Matrix::Identity(2, 2), proj});
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("coefficients reconstruct the weighted projector sum") {
  std::mt19937 rng(20202);
  Matrix sz(2, 2);
  sz << 1.0, 0.0, 0.0, -1.0;  // logical 0 carries the +1 eigenvalue
  for (int m = 1; m <= 3; ++m) {
    for (const auto& oracle : enumerate_balanced(m)) {
      const auto params = random_params(oracle, rng);
      const auto coeffs = alpha_coefficients(oracle, params);

      const int dim = 1 << m;
      Matrix lhs = Matrix::Zero(dim, dim);
      for (int z = 0; z < dim; ++z) {
        std::vector<Matrix> factors;
        for (int n = 0; n < m; ++n)
          factors.push_back(((z >> n) & 1) ? sz : Matrix::Identity(2, 2));
        lhs += coeffs.alpha[z] * kron_all(factors);
      }

      Matrix rhs = Matrix::Zero(dim, dim);
      for (int x : oracle.f_set()) {
        int idx = 0;
        for (int n = 0; n < m; ++n) idx = (idx << 1) | ((x >> n) & 1);
        rhs(idx, idx) = 2.0 * params.j(x) + 1.0;
      }
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("linear_only flags exactly the single-variable structure") {
  const auto f4 = BooleanOracle::parse("1001");
  OracleParams rec;  // j_x = -x_1
  rec.j_map[3] = -1;
  CHECK(alpha_coefficients(f4, rec).linear_only());
  OracleParams zero;
  CHECK_FALSE(alpha_coefficients(f4, zero).linear_only());

  const auto f1 = BooleanOracle::parse("0011");
  CHECK(alpha_coefficients(f1, zero).linear_only());  // alpha_0 and alpha_2 only
}

TEST_CASE("x_to_bits uses ensemble 1 as the least significant bit") {
  CHECK(x_to_bits(5, 3) == FockIndex{1, 0, 1});
  CHECK(x_to_bits(4, 3) == FockIndex{0, 0, 1});
  CHECK(x_to_bits(0, 2) == FockIndex{0, 0});
}
