#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace qvenn {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Eigenvalues of a Hermitian matrix in ascending order.
///
/// The input is first symmetrized as (H + H^dagger)/2. The d x d complex
/// matrix A + iB is embedded into the 2d x 2d real symmetric matrix
/// [[A, -B], [B, A]], whose spectrum is that of H with every eigenvalue
/// doubled; each pair is reported once.
std::vector<double> hermitian_eigenvalues(const CMatrix& h);

/// Largest elementwise |H - H^dagger|.
double hermitian_deviation(const CMatrix& h);

/// Row-major Kronecker product: the left factor is the most significant.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// max |V^dagger V - I| elementwise.
double isometry_deviation(const CMatrix& v);

/// Single-qubit Pauli matrix for 'I', 'X', 'Y' or 'Z'.
CMatrix pauli(char which);

CMatrix hadamard();

/// Shannon entropy in bits of a spectrum or distribution.
///
/// Values in [-1e-9, 0) are clipped to zero and the result is renormalized to
/// sum 1 before summing -x log2 x with 0 log 0 = 0.
double entropy_bits(std::vector<double> weights);

}  // namespace qvenn
