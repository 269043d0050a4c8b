#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "qvenn/classical.hpp"
#include "qvenn/errors.hpp"
#include "qvenn/random.hpp"

namespace qvenn {
namespace {

std::vector<double> random_simplex(std::size_t m, Rng& rng) {
  std::uniform_real_distribution<double> u(0.01, 1.0);
  std::vector<double> p(m);
  double s = 0.0;
  for (auto& x : p) s += (x = u(rng));
  for (auto& x : p) x /= s;
  return p;
}

TEST(Distribution, Validation) {
  EXPECT_THROW(Distribution({0.5, 0.6}), DomainError);
  EXPECT_THROW(Distribution({1.2, -0.2}), DomainError);
  EXPECT_THROW(Distribution({}), DomainError);
  EXPECT_NO_THROW(Distribution({0.25, 0.75}));
  EXPECT_DOUBLE_EQ(Distribution::uniform(4)[3], 0.25);
}

TEST(ClassicalChannel, Validation) {
  EXPECT_THROW(ClassicalChannel({{0.5, 0.4}, {0.5, 0.5}}), DomainError);
  EXPECT_THROW(ClassicalChannel({{1.0, 0.0}, {1.0}}), DimensionMismatch);
  EXPECT_THROW(binary_symmetric_channel(1.5), DomainError);
}

TEST(ShannonEntropy, Values) {
  EXPECT_DOUBLE_EQ(shannon_entropy({0.5, 0.5}), 1.0);
  EXPECT_NEAR(shannon_entropy({0.11, 0.89}), oracle::binary_entropy(0.11), 1e-15);
  EXPECT_DOUBLE_EQ(shannon_entropy({1.0, 0.0}), 0.0);
}

TEST(ClassicalReport, Examples) {
  const ClassicalReport n = classical_report(noiseless_channel(2), Distribution::uniform(2));
  EXPECT_NEAR(n.I, 1.0, 1e-12);
  EXPECT_NEAR(n.L, 0.0, 1e-12);
  EXPECT_NEAR(n.N, 0.0, 1e-12);
  const ClassicalReport half = classical_report(binary_symmetric_channel(0.5), Distribution::uniform(2));
  EXPECT_NEAR(half.I, 0.0, 1e-12);
  EXPECT_NEAR(half.L, 1.0, 1e-12);
  const ClassicalReport bsc = classical_report(binary_symmetric_channel(0.11), Distribution::uniform(2));
  EXPECT_NEAR(bsc.I, 1.0 - oracle::binary_entropy(0.11), 1e-10);
  EXPECT_NEAR(bsc.I, 0.500084, 1e-6);
  EXPECT_NEAR(bsc.I + bsc.L, bsc.H_X, 1e-10);
}

TEST(ClassicalReport, DimensionMismatch) {
  EXPECT_THROW(classical_report(noiseless_channel(3), Distribution::uniform(2)), DimensionMismatch);
}

TEST(ClassicalBlock, IndependentInputs) {
  const std::vector<ClassicalChannel> chans{binary_symmetric_channel(0.1), binary_symmetric_channel(0.2)};
  // Product of (0.3, 0.7) and (0.6, 0.4), X1 most significant.
  const Distribution joint({0.3 * 0.6, 0.3 * 0.4, 0.7 * 0.6, 0.7 * 0.4});
  const ClassicalBlockReport r = classical_block_report(chans, joint);
  EXPECT_NEAR(r.M, 0.0, 1e-12);
  EXPECT_NEAR(r.joint_L, r.per_L[0] + r.per_L[1], 1e-10);
  EXPECT_NEAR(r.per_L[0], classical_report(chans[0], Distribution({0.3, 0.7})).L, 1e-12);
  EXPECT_NEAR(r.per_L[1], classical_report(chans[1], Distribution({0.6, 0.4})).L, 1e-12);
}

TEST(ClassicalBlock, CorrelatedPairMatchesJointOracle) {
  const double q = 0.1;
  const ClassicalChannel bsc = binary_symmetric_channel(q);
  const Distribution joint({0.5, 0.0, 0.0, 0.5});
  const ClassicalBlockReport r = classical_block_report({bsc, bsc}, joint);
  // Exact joint oracle: p(x1 x2 y1 y2) and H(X|Y) = H(XY) - H(Y).
  std::vector<double> pxy(16, 0.0), py(4, 0.0);
  for (int x = 0; x < 2; ++x) {
    for (int y1 = 0; y1 < 2; ++y1) {
      for (int y2 = 0; y2 < 2; ++y2) {
        const double p = 0.5 * (y1 == x ? 1 - q : q) * (y2 == x ? 1 - q : q);
        pxy[static_cast<std::size_t>((x * 2 + x) * 4 + y1 * 2 + y2)] += p;
        py[static_cast<std::size_t>(y1 * 2 + y2)] += p;
      }
    }
  }
  auto h = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double p : v) {
      if (p > 0) s -= p * std::log2(p);
    }
    return s;
  };
  EXPECT_NEAR(r.joint_L, h(pxy) - h(py), 1e-12);
  EXPECT_LT(r.joint_L, r.per_L[0] + r.per_L[1]);
  EXPECT_NEAR(r.M, 1.0, 1e-12);
  EXPECT_TRUE(r.sandwich_holds);
}

TEST(ClassicalBlock, SingleSymbolReducesToReport) {
  const Distribution in({0.2, 0.5, 0.3});
  const ClassicalChannel ch({{0.7, 0.3}, {0.1, 0.9}, {0.5, 0.5}});
  const ClassicalBlockReport r = classical_block_report({ch}, in);
  const ClassicalReport one = classical_report(ch, in);
  EXPECT_NEAR(r.joint_I, one.I, 1e-12);
  EXPECT_NEAR(r.joint_L, one.L, 1e-12);
  EXPECT_NEAR(r.M, 0.0, 1e-12);
}

TEST(ClassicalBlock, DimensionMismatch) {
  EXPECT_THROW(classical_block_report({noiseless_channel(2), noiseless_channel(2)}, Distribution::uniform(3)),
               DimensionMismatch);
}

TEST(ClassicalProperties, SandwichAndRateBound) {
  Rng rng(81);
  std::uniform_int_distribution<std::size_t> alpha(2, 4), count(1, 3);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = count(rng);
    std::vector<ClassicalChannel> chans;
    std::size_t in = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t a = alpha(rng), b = alpha(rng);
      std::vector<std::vector<double>> rows;
      for (std::size_t x = 0; x < a; ++x) rows.push_back(random_simplex(b, rng));
      chans.emplace_back(rows);
      in *= a;
    }
    const ClassicalBlockReport r = classical_block_report(chans, Distribution(random_simplex(in, rng)));
    double sum_l = 0.0, sum_i = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sum_l += r.per_L[i];
      sum_i += r.per_I[i];
    }
    EXPECT_GE(r.joint_L, sum_l - r.M - 1e-10);
    EXPECT_LE(r.joint_L, sum_l + 1e-10);
    EXPECT_LE(r.joint_I, sum_i + 1e-10);
    EXPECT_NEAR(r.rate_bound, sum_i / static_cast<double>(n), 1e-12);
    EXPECT_TRUE(r.sandwich_holds && r.information_subadditive && r.loss_subadditive);
  }
}

TEST(Embedding, KrausSetIsComplete) {
  const QuantumChannel q = embed_classical_channel(binary_symmetric_channel(0.2));
  EXPECT_EQ(q.kraus().size(), 4u);
  EXPECT_EQ(q.input_dim(), 2u);
}

TEST(Embedding, ClassicalQuantumConsistency) {
  Rng rng(82);
  std::vector<std::pair<ClassicalChannel, Distribution>> cases{
      {binary_symmetric_channel(0.11), Distribution::uniform(2)},
      {noiseless_channel(3), Distribution({0.2, 0.3, 0.5})},
      {ClassicalChannel({{0.6, 0.3, 0.1}, {0.2, 0.2, 0.6}}), Distribution({0.35, 0.65})}};
  for (const auto& [ch, in] : cases) {
    const ClassicalQuantumConsistency c = classical_quantum_consistency(ch, in);
    EXPECT_NEAR(c.mutual_R_Q, c.classical.I, 1e-8);
    EXPECT_NEAR(c.cond_mutual_R_E_given_Q, c.classical.L, 1e-8);
    EXPECT_NEAR(c.cond_mutual_Q_E_given_R, 2.0 * c.classical.N, 1e-8);
    EXPECT_NEAR(c.mutual_R_E, c.classical.H_X, 1e-8);
    EXPECT_TRUE(c.holds);
  }
}

}  // namespace
}  // namespace qvenn
