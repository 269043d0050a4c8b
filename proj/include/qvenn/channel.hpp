#pragma once

#include <string>
#include <vector>

#include "qvenn/registers.hpp"

namespace qvenn {

/// Completely positive trace-preserving map in Kraus form. Each Kraus
/// operator is output_dim x input_dim and sum_k K_k^dagger K_k = I to 1e-10.
class QuantumChannel {
 public:
  QuantumChannel(std::string name, std::size_t input_dim, std::size_t output_dim, std::vector<CMatrix> kraus);

  const std::string& name() const { return name_; }
  std::size_t input_dim() const { return input_dim_; }
  std::size_t output_dim() const { return output_dim_; }
  const std::vector<CMatrix>& kraus() const { return kraus_; }

 private:
  std::string name_;
  std::size_t input_dim_;
  std::size_t output_dim_;
  std::vector<CMatrix> kraus_;
};

/// V |psi> = sum_k (K_k |psi>) (x) |k>_E. Rows are indexed (output, env)
/// row-major.
struct StinespringIsometry {
  CMatrix isometry;
  std::size_t input_dim = 0;
  std::size_t output_dim = 0;
  std::size_t env_dim = 0;
  std::string env_label;
};

StinespringIsometry stinespring_dilation(const QuantumChannel& ch, const std::string& env_label);

/// Replaces `target` by the channel output and appends the environment
/// register `env_label` (initially |0>) on the right.
PureState apply_with_environment(const QuantumChannel& ch, const PureState& state, const std::string& target,
                                 const std::string& env_label);

/// Kraus set of the map rho -> Tr_Q'(V rho V^dagger), output on the
/// environment: (Kc_o)_{k,i} = (K_k)_{o,i}.
QuantumChannel complementary_channel(const QuantumChannel& ch);

/// Applies channels[i] to targets[i] at the density-matrix level; each
/// target keeps its label with the channel's output dimension.
DensityState apply_local_channels(const DensityState& state, const Labels& targets,
                                  const std::vector<QuantumChannel>& channels);

/// Information, loss and noise of a channel for one input.
struct ChannelReport {
  double source_entropy_S = 0.0;
  double information_I = 0.0;  // S(R:Q')
  double loss_L = 0.0;         // S(R:E')
  double noise_N = 0.0;        // S(Q':E')
  double output_entropy = 0.0;
  double residual_IL = 0.0;  // I + L - 2S
  double residual_IN = 0.0;  // I + N - 2S(Q')
};

/// Purifies `input` with a reference R, applies the dilation and reads
/// I, L, N off the joint pure state of R, Q', E'.
ChannelReport channel_report(const QuantumChannel& ch, const DensityState& input);

/// Same report for an explicit purification: `joint` is pure, `target` is
/// the channel input and every other subsystem is the reference.
ChannelReport channel_report(const QuantumChannel& ch, const PureState& joint, const std::string& target);

QuantumChannel make_identity(std::size_t dim);
/// Kraus set sqrt(1-p) I, sqrt(p/3) X, sqrt(p/3) Y, sqrt(p/3) Z.
QuantumChannel make_depolarizing(double p);
/// Qubit to qutrit: sqrt(1-p)(|0><0| + |1><1|), sqrt(p)|2><0|, sqrt(p)|2><1|.
QuantumChannel make_erasure(double p);
QuantumChannel make_unitary(const CMatrix& u, std::string name = "unitary");

/// Probabilistic selection of `a` with weight `lambda` and `b` otherwise:
/// the Kraus set {sqrt(lambda) A_i} u {sqrt(1-lambda) B_j}, i.e. an
/// environment enlarged by an orthogonal selector.
QuantumChannel mix(double lambda, const QuantumChannel& a, const QuantumChannel& b);

/// `second` after `first`: Kraus products B_j A_i.
QuantumChannel chain(const QuantumChannel& first, const QuantumChannel& second);

struct DataProcessingRecord {
  double L1 = 0.0, L12 = 0.0;
  double I1 = 0.0, I12 = 0.0;
  double N2 = 0.0, N12 = 0.0;
  double I2 = 0.0;  // S(RE':Q''), the second channel seen with reference RE'
  bool loss_increases = false;      // 0 <= L1 <= L12
  bool information_decreases = false;  // I12 <= I1 and I12 <= I2
  bool noise_increases = false;     // 0 <= N2 <= N12
  bool holds() const { return loss_increases && information_decreases && noise_increases; }
};

/// Runs both channels with separate environments E' and E'' on a
/// purification of `input`.
DataProcessingRecord data_processing_check(const QuantumChannel& first, const QuantumChannel& second,
                                           const DensityState& input);

}  // namespace qvenn
