// oracle.cpp

#include "eqcdj/oracle.hpp"

#include "eqcdj/fock.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <numbers>

namespace eqcdj {

const char* to_string(OracleClass c) {
  switch (c) {
    case OracleClass::Constant: return "constant";
    case OracleClass::Balanced: return "balanced";
    case OracleClass::Invalid: return "invalid";
  }
  return "invalid";
}

OracleClass classify(const std::vector<std::uint8_t>& table) {
  std::size_t ones = 0;
  for (auto b : table) ones += b;
  if (ones == 0 || ones == table.size()) return OracleClass::Constant;
  if (2 * ones == table.size()) return OracleClass::Balanced;
  return OracleClass::Invalid;
}

BooleanOracle BooleanOracle::from_table(std::vector<std::uint8_t> table) {
  const std::size_t size = table.size();
  if (size < 2 || !std::has_single_bit(size))
    throw validation_error("truth table length must be a power of two >= 2");
  for (auto b : table)
    if (b > 1) throw validation_error("truth table entries must be 0 or 1");

  BooleanOracle o;
  o.m_ = std::countr_zero(size);
  o.table_ = std::move(table);
  for (std::size_t x = 0; x < o.table_.size(); ++x)
    if (o.table_[x]) o.f_set_.push_back(static_cast<int>(x));
  o.class_ = classify(o.table_);
  return o;
}

BooleanOracle BooleanOracle::parse(const std::string& text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (begin == end) throw validation_error("empty truth table");

  std::vector<std::uint8_t> table;
  table.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    const char c = text[i];
    if (c != '0' && c != '1')
      throw validation_error(std::string("truth table may only contain 0/1, got '") + c + "'");
    table.push_back(c == '1');
  }
  return from_table(std::move(table));
}

BooleanOracle BooleanOracle::constant(int m, int value) {
  if (m < 1) throw validation_error("oracle needs at least one input ensemble");
  if (value != 0 && value != 1) throw validation_error("constant value must be 0 or 1");
  return from_table(std::vector<std::uint8_t>(std::size_t{1} << m, value));
}

std::string BooleanOracle::table_string() const {
  std::string s(table_.size(), '0');
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i]) s[i] = '1';
  return s;
}

double OracleCoefficients::max_abs() const {
  double mx = 0.0;
  for (double a : alpha) mx = std::max(mx, std::abs(a));
  return mx;
}

bool OracleCoefficients::linear_only(double tol) const {
  for (std::size_t z = 0; z < alpha.size(); ++z)
    if (std::popcount(z) >= 2 && std::abs(alpha[z]) > tol) return false;
  return true;
}

OracleCoefficients alpha_coefficients(const BooleanOracle& oracle, const OracleParams& params) {
  if (oracle.f_set().empty())
    throw validation_error("expansion coefficients need at least one satisfied input");
  const int m = oracle.m();
  OracleCoefficients out;
  out.m = m;
  out.alpha.assign(std::size_t{1} << m, 0.0);
  const double scale = std::ldexp(1.0, -m);
  for (std::size_t z = 0; z < out.alpha.size(); ++z) {
    double sum = 0.0;
    for (int x : oracle.f_set()) {
      const int weight = 2 * params.j(x) + 1;
      const int dot = std::popcount(z & static_cast<std::size_t>(x));
      sum += (dot & 1) ? -weight : weight;
    }
    out.alpha[z] = scale * sum;
  }
  return out;
}

namespace {

// Basis index of |y>|x> with qubit 0 slowest and input bit x_1 right after it
// (x_M fastest): the x part is the bit-reversal of x over m bits.
int qubit_basis_index(int y, int x, int m) {
  int q = 0;
  for (int n = 1; n <= m; ++n)
    if ((x >> (n - 1)) & 1) q |= 1 << (m - n);
  return (y << m) | q;
}

}  // namespace

Matrix qubit_oracle_unitary(const BooleanOracle& oracle) {
  const int m = oracle.m();
  const int dim = 1 << (m + 1);
  Matrix u = Matrix::Zero(dim, dim);
  for (int y = 0; y <= 1; ++y)
    for (int x = 0; x < (1 << m); ++x)
      u(qubit_basis_index(y ^ oracle.f(x), x, m), qubit_basis_index(y, x, m)) = 1.0;
  return u;
}

Matrix qubit_oracle_hamiltonian(const BooleanOracle& oracle, const OracleParams& params) {
  const int m = oracle.m();
  const int half = 1 << m;
  const double pi = std::numbers::pi;

  if (oracle.f_set().empty())
    return 2.0 * pi * params.j_const * Matrix::Identity(2 * half, 2 * half);

  // (sigma^X - I)/2 on the answer qubit.
  Matrix flip(2, 2);
  flip << -0.5, 0.5, 0.5, -0.5;

  Matrix proj = Matrix::Zero(half, half);
  if (static_cast<int>(oracle.f_set().size()) == half) {
    proj = (2.0 * params.j_const + 1.0) * Matrix::Identity(half, half);
  } else {
    for (int x : oracle.f_set()) {
      const int q = qubit_basis_index(0, x, m);
      proj(q, q) += 2.0 * params.j(x) + 1.0;
    }
  }
  return pi * kron_all({flip, proj});
}

double verify_oracle(const Matrix& h, const BooleanOracle& oracle) {
  const Matrix u_h = matrix_exp_hermitian(h);
  const Matrix u_o = qubit_oracle_unitary(oracle);
  if (u_h.rows() != u_o.rows())
    throw validation_error("Hamiltonian dimension does not match the oracle register");
  Complex phase = (u_o.adjoint() * u_h).trace();
  phase = std::abs(phase) > 0.0 ? phase / std::abs(phase) : Complex(1.0);
  return (u_h - phase * u_o).cwiseAbs().maxCoeff();
}

std::vector<BooleanOracle> enumerate_balanced(int m) {
  if (m < 1) throw validation_error("oracle needs at least one input ensemble");
  if (m > 4) throw capacity_error("balanced enumeration supported up to 4 inputs");
  const int size = 1 << m;
  std::vector<BooleanOracle> out;
  // Lexicographic order over table strings = increasing integer whose high
  // bit is table[0].
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << size); ++t) {
    if (std::popcount(t) * 2 != size) continue;
    std::vector<std::uint8_t> table(size);
    for (int i = 0; i < size; ++i) table[i] = (t >> (size - 1 - i)) & 1;
    out.push_back(BooleanOracle::from_table(std::move(table)));
  }
  return out;
}

FockIndex x_to_bits(int x, int m) {
  if (m < 1) throw validation_error("input register needs at least one ensemble");
  if (x < 0 || x >= (1 << m)) throw validation_error("input value out of range");
  FockIndex k(m);
  for (int n = 1; n <= m; ++n) k[n - 1] = (x >> (n - 1)) & 1;
  return k;
}

}  // namespace eqcdj
