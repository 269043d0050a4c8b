#include "qvenn/blockcoding.hpp"

#include <cmath>
#include <numeric>

#include "qvenn/errors.hpp"
#include "qvenn/venn.hpp"

namespace qvenn {

namespace {

void check_block(const std::vector<QuantumChannel>& channels, const PureState& input, const Labels& symbols) {
  if (symbols.empty()) throw LayoutError("block: no symbols");
  if (symbols.size() > kMaxBlockSymbols) {
    throw DomainError("block: n = " + std::to_string(symbols.size()) + " exceeds the cap of " +
                      std::to_string(kMaxBlockSymbols) + " symbols");
  }
  if (channels.size() != symbols.size()) {
    throw DimensionMismatch("block: " + std::to_string(channels.size()) + " channels for " +
                            std::to_string(symbols.size()) + " symbols");
  }
  input.layout().positions(symbols);
  if (input.layout().size() == symbols.size()) throw LayoutError("block: input has no reference subsystem");
}

std::string env_label(std::size_t i) { return "E" + std::to_string(i + 1); }

}  // namespace

double BlockReport::sum_I() const { return std::accumulate(per_symbol_I.begin(), per_symbol_I.end(), 0.0); }
double BlockReport::sum_L() const { return std::accumulate(per_symbol_L.begin(), per_symbol_L.end(), 0.0); }

bool BlockReport::sandwich_holds(double slack) const {
  const double s = sum_L();
  return s - 2.0 * correlation_M - slack <= joint_L && joint_L <= s + slack;
}

bool BlockReport::subadditivity_holds(double slack) const {
  return joint_I <= sum_I() + slack && joint_L <= sum_L() + slack;
}

JointInformation joint_information(const DensityState& rho_q, double source_entropy, const Labels& symbols,
                                   const std::vector<QuantumChannel>& channels) {
  // R Q' E' is pure, so S(RQ') = S(E') and S(RE') = S(Q').
  std::vector<QuantumChannel> complements;
  for (const auto& ch : channels) complements.push_back(complementary_channel(ch));
  const double s_out = von_neumann_entropy(apply_local_channels(rho_q, symbols, channels));
  const double s_env = von_neumann_entropy(apply_local_channels(rho_q, symbols, complements));
  return {source_entropy + s_out - s_env, source_entropy + s_env - s_out};
}

PureState parallel_apply(const std::vector<QuantumChannel>& channels, const PureState& input,
                         const Labels& symbols) {
  check_block(channels, input, symbols);
  PureState out = input;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    out = apply_with_environment(channels[i], out, symbols[i], env_label(i));
  }
  return out;
}

BlockReport block_report(const std::vector<QuantumChannel>& channels, const PureState& input,
                         const Labels& symbols) {
  check_block(channels, input, symbols);
  const std::size_t n = symbols.size();

  BlockReport r;
  r.n = n;
  r.source_entropy = subset_entropy(input, symbols);

  const JointInformation joint =
      joint_information(partial_trace(input, symbols), r.source_entropy, symbols, channels);
  r.joint_I = joint.I;
  r.joint_L = joint.L;

  for (std::size_t i = 0; i < n; ++i) {
    Labels enlarged;
    for (const auto& l : input.layout().labels()) {
      if (l != symbols[i]) enlarged.push_back(l);
    }
    const PureState single = apply_with_environment(channels[i], input, symbols[i], env_label(i));
    r.per_symbol_S.push_back(subset_entropy(input, {symbols[i]}));
    r.per_symbol_I.push_back(mutual_entropy(single, enlarged, {symbols[i]}));
    r.per_symbol_L.push_back(mutual_entropy(single, enlarged, {env_label(i)}));
  }
  r.correlation_M =
      std::accumulate(r.per_symbol_S.begin(), r.per_symbol_S.end(), 0.0) - r.source_entropy;
  const double dn = static_cast<double>(n);
  r.average_loss_l = r.joint_L / dn;
  r.one_symbol_loss_l1 = r.sum_L() / dn;
  r.rate_bound = r.sum_I() / (2.0 * dn);
  return r;
}

double rate_bound_one_symbol(const BlockReport& report) {
  if (report.n == 0) throw DomainError("rate_bound_one_symbol: empty report");
  return report.sum_I() / (2.0 * static_cast<double>(report.n));
}

Labels symbol_labels(std::size_t n) {
  Labels out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("Q" + std::to_string(i));
  return out;
}

PureState product_bell_input(std::size_t n) {
  if (n == 0) throw DomainError("product_bell_input: n must be positive");
  PureState s = bell_pair("R1", "Q1");
  for (std::size_t i = 2; i <= n; ++i) {
    s = tensor_product(s, bell_pair("R" + std::to_string(i), "Q" + std::to_string(i)));
  }
  return s;
}

PureState entangled_block_input(std::size_t n) {
  if (n == 0) throw DomainError("entangled_block_input: n must be positive");
  const std::size_t d = std::size_t{1} << n;
  std::vector<Subsystem> subs{{"R", d}};
  for (const auto& l : symbol_labels(n)) subs.push_back({l, 2});
  RegisterLayout layout(std::move(subs));
  CVector amp = CVector::Zero(static_cast<Eigen::Index>(d * d));
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) amp(static_cast<Eigen::Index>(i * d + i)) = a;
  return PureState(std::move(layout), std::move(amp));
}

}  // namespace qvenn
