#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "qvenn/codes.hpp"
#include "qvenn/errors.hpp"
#include "qvenn/random.hpp"
#include "qvenn/venn.hpp"

namespace qvenn {
namespace {

// Dense-marginal oracle for S(R:Q_e) on the encoded state, with every
// register (R and each physical qubit) as a separate oracle subsystem.
double oracle_mutual_rqe(const EncodingIsometry& code, const ErasurePattern& pattern) {
  const PureState s = encode_entangled(code);
  const CMatrix rho = oracle::projector(s.amplitudes());
  std::vector<std::size_t> dims{std::size_t{1} << code.k()};
  for (std::size_t i = 0; i < code.n(); ++i) dims.push_back(2);
  std::vector<std::size_t> qe;
  for (auto i : pattern) qe.push_back(i + 1);
  std::vector<std::size_t> rqe{0};
  rqe.insert(rqe.end(), qe.begin(), qe.end());
  const double s_r = oracle::marginal_entropy(rho, dims, {0});
  if (qe.empty()) return 0.0;
  return s_r + oracle::marginal_entropy(rho, dims, qe) - oracle::marginal_entropy(rho, dims, rqe);
}

void expect_stabilized(const EncodingIsometry& code, const std::vector<std::string>& stabilizers) {
  for (const auto& s : stabilizers) {
    EXPECT_LT((pauli_string(s) * code.matrix() - code.matrix()).cwiseAbs().maxCoeff(), 1e-10) << s;
  }
}

TEST(PauliString, KroneckerOrder) {
  EXPECT_LT((pauli_string("XZ") - kron(pauli('X'), pauli('Z'))).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_THROW(pauli_string("XQ"), DomainError);
}

TEST(EncodingIsometry, RejectsNonIsometry) {
  EXPECT_THROW(EncodingIsometry(1, 1, 2.0 * CMatrix::Identity(2, 2)), InvalidStateError);
  EXPECT_THROW(EncodingIsometry(1, 2, CMatrix::Identity(2, 2)), DimensionMismatch);
}

TEST(BuiltinCodes, FiveQubitIsStabilizedIsometry) {
  const EncodingIsometry c = five_qubit_code();
  EXPECT_EQ(c.k(), 1u);
  EXPECT_EQ(c.n(), 5u);
  EXPECT_LT(isometry_deviation(c.matrix()), 1e-10);
  expect_stabilized(c, {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"});
  // Logical X maps the two codewords onto each other.
  EXPECT_LT((pauli_string("XXXXX") * c.matrix().col(0) - c.matrix().col(1)).norm(), 1e-10);
}

TEST(BuiltinCodes, FourTwoIsStabilizedIsometry) {
  const EncodingIsometry c = four_two_code();
  EXPECT_EQ(c.k(), 2u);
  EXPECT_EQ(c.n(), 4u);
  EXPECT_LT(isometry_deviation(c.matrix()), 1e-10);
  expect_stabilized(c, {"XXXX", "ZZZZ"});
}

TEST(EncodeEntangled, ReferenceEntropyIsK) {
  const PureState id = encode_entangled(identity_code(1));
  EXPECT_LT((id.amplitudes() - bell_pair("R", "Q1").amplitudes()).norm(), 1e-14);
  EXPECT_NEAR(subset_entropy(encode_entangled(five_qubit_code()), {"R"}), 1.0, 1e-9);
  EXPECT_NEAR(subset_entropy(encode_entangled(four_two_code()), {"R"}), 2.0, 1e-9);
  EXPECT_EQ(encode_entangled(five_qubit_code()).layout().size(), 6u);
}

TEST(ErasurePatternLoss, FiveQubitPairsMatchOracle) {
  const EncodingIsometry c = five_qubit_code();
  const auto patterns = erasure_patterns(5, 2);
  ASSERT_EQ(patterns.size(), 10u);
  for (const auto& p : patterns) {
    const PatternLoss l = erasure_pattern_loss(c, p);
    EXPECT_NEAR(l.mutual_RQe, oracle_mutual_rqe(c, p), 1e-9);
    EXPECT_NEAR(l.mutual_RQe, 0.0, 1e-7);
    EXPECT_NEAR(l.mutual_RQu, 2.0, 1e-7);
  }
}

TEST(ErasurePatternLoss, FiveQubitTriplesLeak) {
  const EncodingIsometry c = five_qubit_code();
  double worst = 0.0;
  for (const auto& p : erasure_patterns(5, 3)) {
    const PatternLoss l = erasure_pattern_loss(c, p);
    EXPECT_NEAR(l.mutual_RQe, oracle_mutual_rqe(c, p), 1e-9);
    worst = std::max(worst, l.mutual_RQe);
  }
  EXPECT_GT(worst, 1e-3);
}

TEST(ErasurePatternLoss, EmptyPattern) {
  const PatternLoss l = erasure_pattern_loss(four_two_code(), {});
  EXPECT_NEAR(l.mutual_RQe, 0.0, 1e-12);
  EXPECT_NEAR(l.mutual_RQu, 4.0, 1e-8);
}

TEST(ErasurePatternLoss, OutOfRange) { EXPECT_THROW(erasure_pattern_loss(five_qubit_code(), {5}), AddressingError); }

TEST(VerifyErasureCode, SingletonSaturation) {
  const ErasureVerdict five2 = verify_erasure_code(five_qubit_code(), 2);
  EXPECT_TRUE(five2.correctable);
  EXPECT_EQ(five2.patterns_checked, 10u);
  EXPECT_LE(five2.worst_pattern_loss, 1e-7);
  const ErasureVerdict five3 = verify_erasure_code(five_qubit_code(), 3);
  EXPECT_FALSE(five3.correctable);
  const ErasureVerdict four1 = verify_erasure_code(four_two_code(), 1);
  EXPECT_TRUE(four1.correctable);
  EXPECT_EQ(four1.patterns_checked, 4u);
  EXPECT_FALSE(verify_erasure_code(four_two_code(), 2).correctable);
  EXPECT_EQ(singleton_max_k(5, 2), five_qubit_code().k());
  EXPECT_EQ(singleton_max_k(4, 1), four_two_code().k());
}

TEST(VerifyErasureCode, RangeCheck) { EXPECT_THROW(verify_erasure_code(four_two_code(), 5), DomainError); }

TEST(ErasurePatterns, Lexicographic) {
  const auto p = erasure_patterns(4, 2);
  ASSERT_EQ(p.size(), 6u);
  EXPECT_EQ(p.front(), (ErasurePattern{0, 1}));
  EXPECT_EQ(p.back(), (ErasurePattern{2, 3}));
  EXPECT_EQ(erasure_patterns(3, 0).size(), 1u);
}

TEST(SingletonMaxK, Examples) {
  EXPECT_EQ(singleton_max_k(5, 2), 1u);
  EXPECT_EQ(singleton_max_k(4, 1), 2u);
  EXPECT_EQ(singleton_max_k(3, 2), 0u);
}

TEST(FractionBounds, Examples) {
  EXPECT_DOUBLE_EQ(bounded_fraction_rate_bound(0.5, FractionModel::Erasures), 0.0);
  EXPECT_DOUBLE_EQ(bounded_fraction_rate_bound(0.25, FractionModel::Errors), 0.0);
  EXPECT_DOUBLE_EQ(bounded_fraction_rate_bound(0.0, FractionModel::Erasures), 1.0);
  EXPECT_DOUBLE_EQ(bounded_fraction_rate_bound(0.0, FractionModel::Errors), 1.0);
  EXPECT_DOUBLE_EQ(bounded_fraction_rate_bound(0.1, FractionModel::Erasures), 0.8);
  EXPECT_THROW(bounded_fraction_rate_bound(1.5, FractionModel::Errors), DomainError);
}

TEST(CodeProperties, ConcentrationOnBuiltins) {
  for (const auto& c : {five_qubit_code(), four_two_code()}) {
    for (std::size_t e = 0; e <= c.n(); ++e) {
      for (const auto& p : erasure_patterns(c.n(), e)) {
        const PatternLoss l = erasure_pattern_loss(c, p);
        if (l.mutual_RQe <= 1e-7) {
          EXPECT_GE(l.mutual_RQu, 2.0 * static_cast<double>(c.k()) - 1e-7);
        }
      }
    }
  }
}

TEST(CodeProperties, SingletonConsistencyOnRandomIsometries) {
  Rng rng(51);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
    const std::size_t k = 1 + static_cast<std::size_t>(t % 2);
    const EncodingIsometry c(k, n, random_isometry(std::size_t{1} << n, std::size_t{1} << k, rng), "random");
    for (std::size_t e = 0; e <= n; ++e) {
      if (verify_erasure_code(c, e).correctable) {
        EXPECT_LE(k + 2 * e, n);
      }
    }
  }
}

}  // namespace
}  // namespace qvenn
