#pragma once

#include <string>
#include <vector>

#include "qvenn/registers.hpp"

namespace qvenn {

/// Tensor product of single-qubit Paulis, leftmost character on Q1.
CMatrix pauli_string(const std::string& word);

/// ((n,k)) code map: 2^n x 2^k with V^dagger V = I to 1e-10.
class EncodingIsometry {
 public:
  EncodingIsometry(std::size_t k, std::size_t n, CMatrix matrix, std::string name = "code");

  std::size_t k() const { return k_; }
  std::size_t n() const { return n_; }
  const CMatrix& matrix() const { return matrix_; }
  const std::string& name() const { return name_; }

 private:
  std::size_t k_;
  std::size_t n_;
  CMatrix matrix_;
  std::string name_;
};

/// Columns are X_L^x Pi |0...0>, normalized, for x over k-bit strings with
/// logical_x[0] on the most significant bit. Pi projects onto the joint +1
/// eigenspace of `stabilizers`.
EncodingIsometry stabilizer_code(const std::vector<std::string>& stabilizers,
                                 const std::vector<std::string>& logical_x, std::string name);

EncodingIsometry five_qubit_code();
EncodingIsometry four_two_code();
EncodingIsometry identity_code(std::size_t k);

/// (1_R (x) V)|Phi> over layout R (dim 2^k), Q1..Qn.
PureState encode_entangled(const EncodingIsometry& code);

/// Physical qubit indices are 0-based.
using ErasurePattern = std::vector<std::size_t>;

struct PatternLoss {
  double mutual_RQe = 0.0;
  double mutual_RQu = 0.0;
};

PatternLoss erasure_pattern_loss(const EncodingIsometry& code, const ErasurePattern& pattern);
/// Same query on an already encoded state whose code qubits are Q1..Qn and
/// whose reference is `reference`.
PatternLoss erasure_pattern_loss(const PureState& encoded, const Labels& reference, std::size_t n,
                                 const ErasurePattern& pattern);

struct ErasureVerdict {
  bool correctable = false;
  double worst_pattern_loss = 0.0;
  ErasurePattern worst_pattern;
  std::size_t patterns_checked = 0;
};

/// Exhausts all C(n, e) patterns; correctable iff the worst S(R:Q_e) <= 1e-7.
ErasureVerdict verify_erasure_code(const EncodingIsometry& code, std::size_t e);

/// All size-e subsets of {0..n-1} in lexicographic order.
std::vector<ErasurePattern> erasure_patterns(std::size_t n, std::size_t e);

std::size_t singleton_max_k(std::size_t n, std::size_t e);

enum class FractionModel { Erasures, Errors };

/// max(1 - 2p, 0) for erasures, max(1 - 4p, 0) for errors.
double bounded_fraction_rate_bound(double p, FractionModel model);

}  // namespace qvenn
