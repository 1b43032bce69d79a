// fock.hpp — two-mode Fock machinery: binomials, coherent states, collective
// spin operators, rotations

#pragma once

#include <Eigen/Dense>
#include <complex>

#include "eqcdj/log_real.hpp"
#include "eqcdj/state.hpp"

namespace eqcdj {

enum class Axis { X, Y, Z };

// ln C(n, k) via lgamma.  Exact enough (<= 1e-12 relative) for n up to 1e6.
LogReal log_binomial(long long n, long long k);

// |alpha,beta>> = sum_k sqrt(C(N,k)) alpha^k beta^(N-k) |k>, one ensemble of N
// particles.  Requires |alpha|^2+|beta|^2 = 1 within 1e-10.  Amplitudes are
// assembled in the log domain so large N stays finite.
StateVector coherent_state(Complex alpha, Complex beta, int n);

// Collective spin operator on N+1 Fock states:
//   Z: diagonal 2k-N
//   X: <k+1|S|k> = sqrt((k+1)(N-k))
//   Y: <k+1|S|k> = -i sqrt((k+1)(N-k))
// At N=1 these are the 2x2 Pauli matrices in the (k=0, k=1) basis ordering.
Matrix spin_operator(Axis axis, int n);

// exp(-i angle S[axis]) via eigendecomposition of the Hermitian generator.
Matrix rotation(Axis axis, double angle, int n);

// The register rotation used by every circuit here: exp(+i (pi/4) S^Y).
// Maps the pole |0,1>> to the equatorial |1/sqrt2,1/sqrt2>> and |1,0>> to
// |1/sqrt2,-1/sqrt2>>.  Not self-inverse: circuits close with hadamard_inv.
Matrix hadamard(int n);
Matrix hadamard_inv(int n);

// exp(-i t H) for Hermitian H (eigendecomposition).
Matrix matrix_exp_hermitian(const Matrix& h, double t = 1.0);

}  // namespace eqcdj
