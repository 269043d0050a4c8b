#include "qvenn/channel.hpp"

#include <cmath>

#include "qvenn/errors.hpp"
#include "qvenn/tolerances.hpp"
#include "qvenn/venn.hpp"

namespace qvenn {

namespace {

void require_probability(const char* op, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError(std::string(op) + ": probability " + std::to_string(p) + " outside [0, 1]");
  }
}

std::string format_p(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", p);
  return buf;
}

/// Rows of `m` are indexed by `layout`; returns (I (x) op (x) I) m where op
/// acts on subsystem `pos` and maps its dimension to op.rows().
CMatrix apply_local_rows(const CMatrix& m, const RegisterLayout& layout, std::size_t pos, const CMatrix& op,
                         RegisterLayout& out_layout) {
  std::vector<Subsystem> subs = layout.subsystems();
  subs[pos].dim = static_cast<std::size_t>(op.rows());
  out_layout = RegisterLayout(std::move(subs));
  const auto rest = complement_positions(layout, {pos});
  const auto old_t = subsystem_offsets(layout, {pos});
  const auto old_r = subsystem_offsets(layout, rest);
  const auto new_t = subsystem_offsets(out_layout, {pos});
  const auto new_r = subsystem_offsets(out_layout, rest);
  CMatrix out(static_cast<Eigen::Index>(out_layout.total_dim()), m.cols());
  CMatrix block(static_cast<Eigen::Index>(old_t.size()), m.cols());
  for (std::size_t r = 0; r < old_r.size(); ++r) {
    for (std::size_t i = 0; i < old_t.size(); ++i) block.row(i) = m.row(old_t[i] + old_r[r]);
    const CMatrix moved = op * block;
    for (std::size_t o = 0; o < new_t.size(); ++o) out.row(new_t[o] + new_r[r]) = moved.row(o);
  }
  return out;
}

}  // namespace

QuantumChannel::QuantumChannel(std::string name, std::size_t input_dim, std::size_t output_dim,
                               std::vector<CMatrix> kraus)
    : name_(std::move(name)), input_dim_(input_dim), output_dim_(output_dim), kraus_(std::move(kraus)) {
  if (input_dim_ == 0 || output_dim_ == 0) throw InvalidChannelError("QuantumChannel: zero dimension");
  if (kraus_.empty()) throw InvalidChannelError("QuantumChannel: no Kraus operators");
  const auto din = static_cast<Eigen::Index>(input_dim_);
  const auto dout = static_cast<Eigen::Index>(output_dim_);
  CMatrix completeness = CMatrix::Zero(din, din);
  for (const auto& k : kraus_) {
    if (k.rows() != dout || k.cols() != din) {
      throw InvalidChannelError("QuantumChannel: Kraus operator is " + std::to_string(k.rows()) + "x" +
                                std::to_string(k.cols()) + ", expected " + std::to_string(dout) + "x" +
                                std::to_string(din));
    }
    completeness += k.adjoint() * k;
  }
  const double dev = (completeness - CMatrix::Identity(din, din)).cwiseAbs().maxCoeff();
  if (dev > tol::kState) {
    throw InvalidChannelError("QuantumChannel '" + name_ + "': completeness violated by " + std::to_string(dev));
  }
}

StinespringIsometry stinespring_dilation(const QuantumChannel& ch, const std::string& env_label) {
  const auto k = static_cast<Eigen::Index>(ch.kraus().size());
  const auto dout = static_cast<Eigen::Index>(ch.output_dim());
  StinespringIsometry s;
  s.input_dim = ch.input_dim();
  s.output_dim = ch.output_dim();
  s.env_dim = ch.kraus().size();
  s.env_label = env_label;
  s.isometry = CMatrix::Zero(dout * k, static_cast<Eigen::Index>(ch.input_dim()));
  for (Eigen::Index e = 0; e < k; ++e) {
    const CMatrix& op = ch.kraus()[static_cast<std::size_t>(e)];
    for (Eigen::Index o = 0; o < dout; ++o) s.isometry.row(o * k + e) = op.row(o);
  }
  if (isometry_deviation(s.isometry) > tol::kState) {
    throw InvalidChannelError("stinespring_dilation: isometry condition violated");
  }
  return s;
}

PureState apply_with_environment(const QuantumChannel& ch, const PureState& state, const std::string& target,
                                 const std::string& env_label) {
  const auto& layout = state.layout();
  if (layout.contains(env_label)) {
    throw LayoutError("apply_with_environment: environment label '" + env_label + "' already in use");
  }
  if (layout.dim_of(target) != ch.input_dim()) {
    throw DimensionMismatch("apply_with_environment: subsystem '" + target + "' has dimension " +
                            std::to_string(layout.dim_of(target)) + ", channel '" + ch.name() +
                            "' expects " + std::to_string(ch.input_dim()));
  }
  const StinespringIsometry v = stinespring_dilation(ch, env_label);
  CVector vacuum = CVector::Ones(1);
  PureState extended = append_subsystem(state, {env_label, 1}, vacuum);
  return apply_operator(extended, {target, env_label}, v.isometry, {v.output_dim, v.env_dim});
}

QuantumChannel complementary_channel(const QuantumChannel& ch) {
  const auto k = static_cast<Eigen::Index>(ch.kraus().size());
  const auto din = static_cast<Eigen::Index>(ch.input_dim());
  std::vector<CMatrix> kraus;
  for (Eigen::Index o = 0; o < static_cast<Eigen::Index>(ch.output_dim()); ++o) {
    CMatrix kc(k, din);
    for (Eigen::Index e = 0; e < k; ++e) kc.row(e) = ch.kraus()[static_cast<std::size_t>(e)].row(o);
    kraus.push_back(std::move(kc));
  }
  return QuantumChannel("complement(" + ch.name() + ")", ch.input_dim(), ch.kraus().size(), std::move(kraus));
}

DensityState apply_local_channels(const DensityState& state, const Labels& targets,
                                  const std::vector<QuantumChannel>& channels) {
  if (targets.size() != channels.size()) {
    throw DimensionMismatch("apply_local_channels: " + std::to_string(channels.size()) + " channels for " +
                            std::to_string(targets.size()) + " targets");
  }
  RegisterLayout layout = state.layout();
  CMatrix rho = state.matrix();
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const std::size_t pos = layout.index_of(targets[t]);
    if (layout.subsystems()[pos].dim != channels[t].input_dim()) {
      throw DimensionMismatch("apply_local_channels: subsystem '" + targets[t] + "' has dimension " +
                              std::to_string(layout.subsystems()[pos].dim) + ", channel '" +
                              channels[t].name() + "' expects " + std::to_string(channels[t].input_dim()));
    }
    RegisterLayout next;
    CMatrix acc;
    for (const auto& k : channels[t].kraus()) {
      // rho is Hermitian, so A rho A^dagger = A (A rho)^dagger.
      const CMatrix half = apply_local_rows(rho, layout, pos, k, next);
      const CMatrix term = apply_local_rows(half.adjoint(), layout, pos, k, next);
      if (acc.size() == 0) {
        acc = term;
      } else {
        acc += term;
      }
    }
    rho = std::move(acc);
    layout = std::move(next);
  }
  return DensityState(std::move(layout), std::move(rho));
}

ChannelReport channel_report(const QuantumChannel& ch, const PureState& joint, const std::string& target) {
  Labels reference;
  for (const auto& l : joint.layout().labels()) {
    if (l != target) reference.push_back(l);
  }
  if (reference.empty()) throw LayoutError("channel_report: no reference subsystem");
  std::string env = "E";
  while (joint.layout().contains(env)) env += "'";
  const PureState out = apply_with_environment(ch, joint, target, env);

  ChannelReport r;
  r.source_entropy_S = subset_entropy(joint, {target});
  r.output_entropy = subset_entropy(out, {target});
  r.information_I = mutual_entropy(out, reference, {target});
  r.loss_L = mutual_entropy(out, reference, {env});
  r.noise_N = mutual_entropy(out, {target}, {env});
  r.residual_IL = r.information_I + r.loss_L - 2.0 * r.source_entropy_S;
  r.residual_IN = r.information_I + r.noise_N - 2.0 * r.output_entropy;
  return r;
}

ChannelReport channel_report(const QuantumChannel& ch, const DensityState& input) {
  if (input.layout().total_dim() != ch.input_dim()) {
    throw DimensionMismatch("channel_report: input dimension " + std::to_string(input.layout().total_dim()) +
                            " but channel '" + ch.name() + "' expects " + std::to_string(ch.input_dim()));
  }
  const DensityState q(RegisterLayout({{"Q", ch.input_dim()}}), input.matrix());
  return channel_report(ch, purify(q, "R"), "Q");
}

QuantumChannel make_identity(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return QuantumChannel("identity", dim, dim, {CMatrix::Identity(d, d)});
}

QuantumChannel make_depolarizing(double p) {
  require_probability("make_depolarizing", p);
  const double a = std::sqrt(1.0 - p);
  const double b = std::sqrt(p / 3.0);
  return QuantumChannel("depolarizing:" + format_p(p), 2, 2,
                        {a * pauli('I'), b * pauli('X'), b * pauli('Y'), b * pauli('Z')});
}

QuantumChannel make_erasure(double p) {
  require_probability("make_erasure", p);
  CMatrix keep = CMatrix::Zero(3, 2);
  keep(0, 0) = std::sqrt(1.0 - p);
  keep(1, 1) = std::sqrt(1.0 - p);
  CMatrix erase0 = CMatrix::Zero(3, 2);
  erase0(2, 0) = std::sqrt(p);
  CMatrix erase1 = CMatrix::Zero(3, 2);
  erase1(2, 1) = std::sqrt(p);
  return QuantumChannel("erasure:" + format_p(p), 2, 3, {keep, erase0, erase1});
}

QuantumChannel make_unitary(const CMatrix& u, std::string name) {
  if (u.rows() != u.cols()) throw InvalidChannelError("make_unitary: matrix is not square");
  const auto d = static_cast<std::size_t>(u.rows());
  return QuantumChannel(std::move(name), d, d, {u});
}

QuantumChannel mix(double lambda, const QuantumChannel& a, const QuantumChannel& b) {
  require_probability("mix", lambda);
  if (a.input_dim() != b.input_dim() || a.output_dim() != b.output_dim()) {
    throw DimensionMismatch("mix: channels have different shapes");
  }
  std::vector<CMatrix> kraus;
  for (const auto& k : a.kraus()) kraus.push_back(std::sqrt(lambda) * k);
  for (const auto& k : b.kraus()) kraus.push_back(std::sqrt(1.0 - lambda) * k);
  return QuantumChannel("mix(" + format_p(lambda) + "," + a.name() + "," + b.name() + ")", a.input_dim(),
                        a.output_dim(), std::move(kraus));
}

QuantumChannel chain(const QuantumChannel& first, const QuantumChannel& second) {
  if (first.output_dim() != second.input_dim()) {
    throw DimensionMismatch("chain: first output dimension " + std::to_string(first.output_dim()) +
                            " != second input dimension " + std::to_string(second.input_dim()));
  }
  std::vector<CMatrix> kraus;
  for (const auto& b : second.kraus()) {
    for (const auto& a : first.kraus()) kraus.push_back(b * a);
  }
  return QuantumChannel(second.name() + "*" + first.name(), first.input_dim(), second.output_dim(),
                        std::move(kraus));
}

DataProcessingRecord data_processing_check(const QuantumChannel& first, const QuantumChannel& second,
                                           const DensityState& input) {
  if (first.output_dim() != second.input_dim()) {
    throw DimensionMismatch("data_processing_check: channels are not chainable");
  }
  if (input.layout().total_dim() != first.input_dim()) {
    throw DimensionMismatch("data_processing_check: input dimension does not match first channel");
  }
  const DensityState q(RegisterLayout({{"Q", first.input_dim()}}), input.matrix());
  const PureState start = purify(q, "R");
  const PureState mid = apply_with_environment(first, start, "Q", "E1");
  const PureState end = apply_with_environment(second, mid, "Q", "E2");

  DataProcessingRecord r;
  r.L1 = mutual_entropy(mid, {"R"}, {"E1"});
  r.I1 = mutual_entropy(mid, {"R"}, {"Q"});
  r.L12 = mutual_entropy(end, {"R"}, {"E1", "E2"});
  r.I12 = mutual_entropy(end, {"R"}, {"Q"});
  r.N2 = mutual_entropy(end, {"Q"}, {"E2"});
  r.N12 = mutual_entropy(end, {"Q"}, {"E1", "E2"});
  r.I2 = mutual_entropy(end, {"R", "E1"}, {"Q"});
  r.loss_increases = r.L1 >= -tol::kSign && r.L1 <= r.L12 + tol::kIdentity;
  r.information_decreases = r.I12 <= r.I1 + tol::kIdentity && r.I12 <= r.I2 + tol::kIdentity;
  r.noise_increases = r.N2 >= -tol::kSign && r.N2 <= r.N12 + tol::kIdentity;
  return r;
}

}  // namespace qvenn
