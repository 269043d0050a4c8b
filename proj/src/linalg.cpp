#include "qvenn/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "qvenn/errors.hpp"
#include "qvenn/tolerances.hpp"

namespace qvenn {

std::vector<double> hermitian_eigenvalues(const CMatrix& h) {
  if (h.rows() != h.cols()) {
    throw DimensionMismatch("hermitian_eigenvalues: matrix is not square");
  }
  const Eigen::Index d = h.rows();
  if (d == 0) return {};
  const CMatrix sym = (h + h.adjoint()) * 0.5;

  Eigen::MatrixXd embed(2 * d, 2 * d);
  embed.topLeftCorner(d, d) = sym.real();
  embed.topRightCorner(d, d) = -sym.imag();
  embed.bottomLeftCorner(d, d) = sym.imag();
  embed.bottomRightCorner(d, d) = sym.real();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(embed, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw InvalidStateError("hermitian_eigenvalues: eigensolver did not converge");
  }
  // Eigen returns the embedded spectrum sorted ascending, so the doubled
  // eigenvalues sit next to each other.
  const Eigen::VectorXd& doubled = solver.eigenvalues();
  std::vector<double> out(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) {
    out[static_cast<std::size_t>(i)] = 0.5 * (doubled(2 * i) + doubled(2 * i + 1));
  }
  return out;
}

double hermitian_deviation(const CMatrix& h) {
  if (h.rows() != h.cols()) return INFINITY;
  if (h.size() == 0) return 0.0;
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double isometry_deviation(const CMatrix& v) {
  if (v.cols() == 0) return 0.0;
  const CMatrix gram = v.adjoint() * v;
  return (gram - CMatrix::Identity(v.cols(), v.cols())).cwiseAbs().maxCoeff();
}

CMatrix pauli(char which) {
  CMatrix m = CMatrix::Zero(2, 2);
  switch (which) {
    case 'I':
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case 'X':
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case 'Y':
      m(0, 1) = cplx(0.0, -1.0);
      m(1, 0) = cplx(0.0, 1.0);
      break;
    case 'Z':
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    default:
      throw DomainError(std::string("pauli: unknown Pauli '") + which + "'");
  }
  return m;
}

CMatrix hadamard() {
  CMatrix h(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  h << r, r, r, -r;
  return h;
}

double entropy_bits(std::vector<double> weights) {
  double total = 0.0;
  for (double& w : weights) {
    if (w < 0.0) w = 0.0;
    total += w;
  }
  if (total <= 0.0) return 0.0;
  double s = 0.0;
  for (double w : weights) {
    const double x = w / total;
    if (x > 0.0) s -= x * std::log2(x);
  }
  return s;
}

}  // namespace qvenn
