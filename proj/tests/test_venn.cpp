#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "qvenn/errors.hpp"
#include "qvenn/random.hpp"
#include "qvenn/venn.hpp"

namespace qvenn {
namespace {

// Joint-entropy oracle: all seven marginal entropies of a three-qubit matrix,
// indexed by a bitmask over positions {0, 1, 2}.
struct Marginals {
  double s[8] = {};
  explicit Marginals(const CMatrix& rho, std::vector<std::size_t> dims = {2, 2, 2}) {
    for (unsigned mask = 1; mask < 8; ++mask) {
      std::vector<std::size_t> keep;
      for (std::size_t p = 0; p < 3; ++p) {
        if (mask & (1u << p)) keep.push_back(p);
      }
      s[mask] = oracle::marginal_entropy(rho, dims, keep);
    }
  }
};

DensityState dephased_ghz() {
  CMatrix m = CMatrix::Zero(8, 8);
  m(0, 0) = m(7, 7) = 0.5;
  return DensityState(RegisterLayout({{"A", 2}, {"B", 2}, {"C", 2}}), m);
}

PureState bell_times_pure() {
  return tensor_product(bell_pair("A", "B"), basis_state(RegisterLayout({{"C", 2}}), {0}));
}

TEST(SubsetEntropy, GhzSingleQubit) {
  const PureState g = ghz_state({"A", "B", "C"});
  const Marginals m(oracle::projector(g.amplitudes()));
  for (const auto& l : {"A", "B", "C"}) EXPECT_NEAR(subset_entropy(g, {l}), 1.0, 1e-10);
  EXPECT_NEAR(m.s[1], 1.0, 1e-10);
}

TEST(SubsetEntropy, BellJointIsZero) { EXPECT_NEAR(subset_entropy(bell_pair("A", "B"), {"A", "B"}), 0.0, 1e-10); }

TEST(SubsetEntropy, PurifiedDiagonalReference) {
  const PureState p = purify(diagonal_state("Q", {0.75, 0.25}), "R");
  EXPECT_NEAR(subset_entropy(p, {"R"}), oracle::binary_entropy(0.25), 1e-9);
}

TEST(SubsetEntropy, PureAndDensityPathsAgree) {
  Rng rng(5);
  const PureState s = random_pure(RegisterLayout({{"A", 2}, {"B", 3}, {"C", 2}}), rng);
  const DensityState d = to_density(s);
  for (const Labels& l : {Labels{"A"}, Labels{"B"}, Labels{"A", "B"}, Labels{"B", "C"}, Labels{"A", "B", "C"}}) {
    EXPECT_NEAR(subset_entropy(s, l), subset_entropy(d, l), 1e-9);
  }
}

TEST(SubsetEntropy, UnknownLabelRejected) { EXPECT_THROW(subset_entropy(bell_pair("A", "B"), {"Z"}), AddressingError); }

TEST(ConditionalEntropy, Examples) {
  EXPECT_NEAR(conditional_entropy(bell_pair("A", "B"), {"A"}, {"B"}), -1.0, 1e-10);
  const DensityState prod = tensor_product(maximally_mixed("A", 2), maximally_mixed("B", 2));
  EXPECT_NEAR(conditional_entropy(prod, {"A"}, {"B"}), 1.0, 1e-10);
  EXPECT_NEAR(conditional_entropy(ghz_state({"A", "B", "C"}), {"A"}, {"B", "C"}), -1.0, 1e-10);
}

TEST(ConditionalEntropy, OverlapRejected) {
  EXPECT_THROW(conditional_entropy(bell_pair("A", "B"), {"A"}, {"A", "B"}), Error);
}

TEST(MutualEntropy, Examples) {
  EXPECT_NEAR(mutual_entropy(bell_pair("A", "B"), {"A"}, {"B"}), 2.0, 1e-10);
  const DensityState prod = tensor_product(maximally_mixed("A", 2), diagonal_state("B", {0.3, 0.7}));
  EXPECT_NEAR(mutual_entropy(prod, {"A"}, {"B"}), 0.0, 1e-10);
  CMatrix cc = CMatrix::Zero(4, 4);
  cc(0, 0) = cc(3, 3) = 0.5;
  const DensityState classical(RegisterLayout({{"A", 2}, {"B", 2}}), cc);
  EXPECT_NEAR(mutual_entropy(classical, {"A"}, {"B"}), 1.0, 1e-10);
}

TEST(ConditionalMutualEntropy, Examples) {
  const PureState g = ghz_state({"A", "B", "C"});
  const Marginals m(oracle::projector(g.amplitudes()));
  // S(AC) + S(BC) - S(C) - S(ABC)
  EXPECT_NEAR(conditional_mutual_entropy(g, {"A"}, {"B"}, {"C"}), m.s[5] + m.s[6] - m.s[4] - m.s[7], 1e-10);
  EXPECT_NEAR(conditional_mutual_entropy(g, {"A"}, {"B"}, {"C"}), 1.0, 1e-10);
  const DensityState prod =
      tensor_product(tensor_product(maximally_mixed("A", 2), maximally_mixed("B", 2)), maximally_mixed("C", 2));
  EXPECT_NEAR(conditional_mutual_entropy(prod, {"A"}, {"B"}, {"C"}), 0.0, 1e-10);
  EXPECT_NEAR(conditional_mutual_entropy(bell_times_pure(), {"A"}, {"B"}, {"C"}), 2.0, 1e-10);
}

TEST(TernaryMutualEntropy, Examples) {
  Rng rng(8);
  const PureState p = random_pure(RegisterLayout({{"A", 2}, {"B", 2}, {"C", 3}}), rng);
  EXPECT_NEAR(ternary_mutual_entropy(p, {"A"}, {"B"}, {"C"}), 0.0, 1e-8);
  const DensityState d = dephased_ghz();
  const Marginals m(d.matrix());
  const double oracle_center = m.s[1] + m.s[2] + m.s[4] - m.s[3] - m.s[5] - m.s[6] + m.s[7];
  EXPECT_NEAR(oracle_center, 1.0, 1e-10);
  EXPECT_NEAR(ternary_mutual_entropy(d, {"A"}, {"B"}, {"C"}), 1.0, 1e-10);
  const DensityState prod =
      tensor_product(tensor_product(maximally_mixed("A", 2), maximally_mixed("B", 2)), maximally_mixed("C", 2));
  EXPECT_NEAR(ternary_mutual_entropy(prod, {"A"}, {"B"}, {"C"}), 0.0, 1e-10);
}

TEST(TernaryMutualEntropy, SymmetricInArguments) {
  Rng rng(9);
  const DensityState d = random_density(RegisterLayout({{"A", 2}, {"B", 2}, {"C", 2}}), rng);
  const double abc = ternary_mutual_entropy(d, {"A"}, {"B"}, {"C"});
  EXPECT_NEAR(abc, ternary_mutual_entropy(d, {"B"}, {"C"}, {"A"}), 1e-8);
  EXPECT_NEAR(abc, ternary_mutual_entropy(d, {"C"}, {"A"}, {"B"}), 1e-8);
  EXPECT_NEAR(abc, ternary_mutual_entropy(d, {"B"}, {"A"}, {"C"}), 1e-8);
}

TEST(Venn3, Ghz) {
  const VennDiagram3 v = venn3(ghz_state({"A", "B", "C"}), {"A"}, {"B"}, {"C"});
  EXPECT_NEAR(v.exclusive_x, -1.0, 1e-10);
  EXPECT_NEAR(v.exclusive_y, -1.0, 1e-10);
  EXPECT_NEAR(v.exclusive_z, -1.0, 1e-10);
  EXPECT_NEAR(v.pair_xy_given_z, 1.0, 1e-10);
  EXPECT_NEAR(v.pair_xz_given_y, 1.0, 1e-10);
  EXPECT_NEAR(v.pair_yz_given_x, 1.0, 1e-10);
  EXPECT_NEAR(v.center, 0.0, 1e-10);
  EXPECT_NEAR(v.region_sum(), v.joint, 1e-8);
}

TEST(Venn3, BellTimesPure) {
  const VennDiagram3 v = venn3(bell_times_pure(), {"A"}, {"B"}, {"C"});
  EXPECT_NEAR(v.exclusive_x, -1.0, 1e-10);
  EXPECT_NEAR(v.exclusive_y, -1.0, 1e-10);
  EXPECT_NEAR(v.exclusive_z, 0.0, 1e-10);
  EXPECT_NEAR(v.pair_xy_given_z, 2.0, 1e-10);
  EXPECT_NEAR(v.pair_xz_given_y, 0.0, 1e-10);
  EXPECT_NEAR(v.pair_yz_given_x, 0.0, 1e-10);
  EXPECT_NEAR(v.center, 0.0, 1e-10);
}

TEST(Venn3, RegionsMatchMarginalOracle) {
  Rng rng(10);
  for (int t = 0; t < 10; ++t) {
    const DensityState d = random_density(RegisterLayout({{"A", 2}, {"B", 2}, {"C", 2}}), rng);
    const Marginals m(d.matrix());
    const VennDiagram3 v = venn3(d, {"A"}, {"B"}, {"C"});
    EXPECT_NEAR(v.exclusive_x, m.s[7] - m.s[6], 1e-9);
    EXPECT_NEAR(v.pair_xy_given_z, m.s[5] + m.s[6] - m.s[4] - m.s[7], 1e-9);
    EXPECT_NEAR(v.joint, m.s[7], 1e-9);
    EXPECT_NEAR(v.region_sum(), v.joint, 1e-8);
    EXPECT_GE(v.pair_xy_given_z, -1e-9);
    EXPECT_GE(v.pair_xz_given_y, -1e-9);
    EXPECT_GE(v.pair_yz_given_x, -1e-9);
  }
}

TEST(Venn3, GroupedLabels) {
  const PureState g = ghz_state({"A", "B", "C", "D"});
  const VennDiagram3 v = venn3(g, {"A", "B"}, {"C"}, {"D"});
  EXPECT_EQ(v.label_x, "AB");
  EXPECT_NEAR(v.center, 0.0, 1e-8);
  EXPECT_NEAR(v.joint, 0.0, 1e-10);
}

TEST(Venn3, OverlapRejected) {
  EXPECT_THROW(venn3(ghz_state({"A", "B", "C"}), {"A"}, {"A"}, {"C"}), Error);
}

TEST(Venn3, RenderListsAllRegions) {
  const std::string text = render_venn(venn3(ghz_state({"A", "B", "C"}), {"A"}, {"B"}, {"C"}));
  for (const char* key : {"S(X|YZ)", "S(X:Y|Z)", "S(X:Y:Z)", "S(XYZ)"}) {
    EXPECT_NE(text.find(key), std::string::npos) << key;
  }
}

TEST(ChainRule, ResidualVanishes) {
  EXPECT_NEAR(chain_rule_residual(ghz_state({"A", "B", "C"}), {"A"}, {"B"}, {"C"}), 0.0, 1e-10);
  EXPECT_NEAR(chain_rule_residual(bell_times_pure(), {"A"}, {"B"}, {"C"}), 0.0, 1e-10);
  Rng rng(12);
  for (int t = 0; t < 10; ++t) {
    const DensityState d = random_density(RegisterLayout({{"A", 2}, {"B", 2}, {"C", 2}}), rng);
    EXPECT_NEAR(chain_rule_residual(d, {"A"}, {"B"}, {"C"}), 0.0, 1e-8);
  }
}

TEST(VennProperties, SubadditivityAndArakiLieb) {
  Rng rng(13);
  std::uniform_int_distribution<std::size_t> dim(2, 4);
  for (int t = 0; t < 60; ++t) {
    const DensityState d = random_density(RegisterLayout({{"A", dim(rng)}, {"B", dim(rng)}}), rng);
    const double m = mutual_entropy(d, {"A"}, {"B"});
    EXPECT_GE(m, -1e-9);
    EXPECT_LE(m, 2.0 * std::min(subset_entropy(d, {"A"}), subset_entropy(d, {"B"})) + 1e-8);
  }
}

TEST(VennProperties, PureCenterZero) {
  Rng rng(14);
  for (int t = 0; t < 30; ++t) {
    const PureState p = random_pure(RegisterLayout({{"A", 2}, {"B", 3}, {"C", 2}}), rng);
    EXPECT_NEAR(ternary_mutual_entropy(p, {"A"}, {"B"}, {"C"}), 0.0, 1e-8);
  }
}

}  // namespace
}  // namespace qvenn
