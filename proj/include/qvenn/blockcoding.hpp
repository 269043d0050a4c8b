#pragma once

#include <vector>

#include "qvenn/channel.hpp"

namespace qvenn {

/// Maximum number of parallel symbols accepted by block and mixture analyses.
inline constexpr std::size_t kMaxBlockSymbols = 6;

/// Joint n-symbol channel versus its individual uses.
struct BlockReport {
  std::size_t n = 0;
  double source_entropy = 0.0;  // S(Q1...Qn)
  double joint_I = 0.0;
  double joint_L = 0.0;
  std::vector<double> per_symbol_I;
  std::vector<double> per_symbol_L;
  std::vector<double> per_symbol_S;
  double correlation_M = 0.0;
  double average_loss_l = 0.0;      // L / n
  double one_symbol_loss_l1 = 0.0;  // sum L_i / n
  double rate_bound = 0.0;          // sum I_i / 2n

  double sum_I() const;
  double sum_L() const;
  /// sum L_i - 2M <= L <= sum L_i
  bool sandwich_holds(double slack) const;
  /// I <= sum I_i and L <= sum L_i
  bool subadditivity_holds(double slack) const;
};

struct JointInformation {
  double I = 0.0;  // S(R:Q')
  double L = 0.0;  // S(R:E')
};

/// Joint I and L of parallel channels on a pure input whose symbol marginal
/// is `rho_q` and whose reference entropy is `source_entropy`.
JointInformation joint_information(const DensityState& rho_q, double source_entropy, const Labels& symbols,
                                   const std::vector<QuantumChannel>& channels);

/// Applies channels[i] to symbols[i] with a fresh environment "E<i+1>"
/// appended on the right, in symbol order.
PureState parallel_apply(const std::vector<QuantumChannel>& channels, const PureState& input,
                         const Labels& symbols);

/// Every label of `input` outside `symbols` is the reference.
BlockReport block_report(const std::vector<QuantumChannel>& channels, const PureState& input,
                         const Labels& symbols);

double rate_bound_one_symbol(const BlockReport& report);

/// Labels Q1..Qn.
Labels symbol_labels(std::size_t n);

/// Bell pairs (R_i, Q_i) for i = 1..n, layout R1 Q1 R2 Q2 ...
PureState product_bell_input(std::size_t n);

/// One reference R of dimension 2^n maximally entangled with Q1..Qn.
PureState entangled_block_input(std::size_t n);

}  // namespace qvenn
