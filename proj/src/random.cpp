#include "qvenn/random.hpp"

#include <cmath>

#include "qvenn/errors.hpp"

namespace qvenn {

CMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = cplx(re, im);
    }
  }
  return g;
}

DensityState random_density(const RegisterLayout& layout, Rng& rng) {
  const auto d = static_cast<Eigen::Index>(layout.total_dim());
  const CMatrix g = ginibre(d, d, rng);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityState(layout, std::move(rho));
}

PureState random_pure(const RegisterLayout& layout, Rng& rng) {
  CVector v = ginibre(static_cast<Eigen::Index>(layout.total_dim()), 1, rng).col(0);
  v.normalize();
  return PureState(layout, std::move(v));
}

CMatrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng) {
  if (rows < cols) throw DimensionMismatch("random_isometry: needs rows >= cols");
  const CMatrix g = ginibre(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols), rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(g.rows(), g.cols());
  const CMatrix r = qr.matrixQR().topRows(g.cols()).triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < g.cols(); ++j) {
    const cplx diag = r(j, j);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(j) *= diag / mag;
  }
  return q;
}

CMatrix random_unitary(std::size_t dim, Rng& rng) { return random_isometry(dim, dim, rng); }

QuantumChannel random_channel(std::size_t input_dim, std::size_t output_dim, std::size_t kraus_count,
                              Rng& rng) {
  const CMatrix v = random_isometry(output_dim * kraus_count, input_dim, rng);
  std::vector<CMatrix> kraus;
  const auto out = static_cast<Eigen::Index>(output_dim);
  // Row index of V is (output, environment) row-major; Kraus k collects the
  // rows with environment digit k.
  for (std::size_t k = 0; k < kraus_count; ++k) {
    CMatrix op(out, static_cast<Eigen::Index>(input_dim));
    for (Eigen::Index o = 0; o < out; ++o) {
      op.row(o) = v.row(o * static_cast<Eigen::Index>(kraus_count) + static_cast<Eigen::Index>(k));
    }
    kraus.push_back(std::move(op));
  }
  return QuantumChannel("random", input_dim, output_dim, std::move(kraus));
}

}  // namespace qvenn
