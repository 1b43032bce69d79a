// oracle.hpp — Boolean-function oracles: truth tables, classification,
// Hamiltonian synthesis, expansion coefficients

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eqcdj/state.hpp"

namespace eqcdj {

enum class OracleClass { Constant, Balanced, Invalid };

const char* to_string(OracleClass c);

// f: {0,...,2^M-1} -> {0,1} as a truth table.  Bit n of x (1-based ensemble
// numbering, x_1 = least significant) addresses input ensemble n.
class BooleanOracle {
 public:
  // Table length must be a power of two >= 2.  Any bit pattern is accepted;
  // classification() reports whether it is usable for the constant/balanced
  // decision problem.
  static BooleanOracle from_table(std::vector<std::uint8_t> table);

  // One line of 2^M characters in {0,1}; surrounding whitespace ignored,
  // anything else rejected.
  static BooleanOracle parse(const std::string& text);

  static BooleanOracle constant(int m, int value);

  int m() const { return m_; }
  int size() const { return static_cast<int>(table_.size()); }
  int f(int x) const { return table_[x]; }
  const std::vector<std::uint8_t>& table() const { return table_; }
  const std::vector<int>& f_set() const { return f_set_; }  // { x : f(x)=1 }
  OracleClass classification() const { return class_; }
  std::string table_string() const;

 private:
  BooleanOracle() = default;
  int m_ = 0;
  std::vector<std::uint8_t> table_;
  std::vector<int> f_set_;
  OracleClass class_ = OracleClass::Invalid;
};

OracleClass classify(const std::vector<std::uint8_t>& table);

// Free integers of the Hamiltonian family: one j_x per x with f(x)=1 (absent
// entries read as 0), plus the j used by constant oracles.
struct OracleParams {
  std::map<int, int> j_map;
  int j_const = 0;

  int j(int x) const {
    auto it = j_map.find(x);
    return it == j_map.end() ? 0 : it->second;
  }

  static OracleParams zero() { return {}; }
};

// Coefficients of the expansion over products of single-ensemble Z operators:
//   sum_x_in_F (2 j_x + 1) |x><x|  =  sum_z alpha_z prod_n (sigma^Z_n)^(z_n)
// with alpha_z = 2^-M sum_{x in F} (2 j_x + 1) (-1)^(z.x), z.x the bitwise
// dot product.  Indexed by the bit mask z.
struct OracleCoefficients {
  int m = 0;
  std::vector<double> alpha;

  double max_abs() const;
  // True when only the constant term and single-bit masks are nonzero.
  bool linear_only(double tol = 1e-12) const;
};

// Requires a non-empty f_set.
OracleCoefficients alpha_coefficients(const BooleanOracle& oracle, const OracleParams& params);

// Permutation on M+1 qubits: |y>|x> -> |y xor f(x)>|x>.  Qubit 0 is the
// answer register (slowest index), input bit x_1 next, x_M fastest.
Matrix qubit_oracle_unitary(const BooleanOracle& oracle);

// Hamiltonian whose t=1 evolution realizes the oracle up to a global phase:
//   f balanced or otherwise non-constant:
//     H = pi ((sigma^X_0 - I)/2) sum_{x in F} (2 j_x + 1) |x><x|
//   f = 0:  H = 2 pi j I
//   f = 1:  H = pi (2 j + 1) ((sigma^X_0 - I)/2)
Matrix qubit_oracle_hamiltonian(const BooleanOracle& oracle, const OracleParams& params);

// Max-abs residual between exp(-iH) and the oracle permutation, minimized
// over a single global phase.
double verify_oracle(const Matrix& h, const BooleanOracle& oracle);

// All balanced truth tables on m inputs in lexicographic table order.
// m <= 4 (counts 2, 6, 70, 12870); larger m is rejected.
std::vector<BooleanOracle> enumerate_balanced(int m);

// FockIndex of the input register encoding integer x (bit n-1 of x -> k_n).
FockIndex x_to_bits(int x, int m);

}  // namespace eqcdj
