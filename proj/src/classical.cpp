#include "qvenn/classical.hpp"

#include <cmath>
#include <numeric>

#include "qvenn/errors.hpp"
#include "qvenn/tolerances.hpp"
#include "qvenn/venn.hpp"

namespace qvenn {

namespace {

void check_distribution(const std::vector<double>& p, const char* what) {
  if (p.empty()) throw DomainError(std::string(what) + ": empty distribution");
  double sum = 0.0;
  for (double x : p) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError(std::string(what) + ": negative or non-finite probability");
    sum += x;
  }
  if (std::abs(sum - 1.0) > tol::kDistribution) {
    throw DomainError(std::string(what) + ": probabilities sum to " + std::to_string(sum));
  }
}

/// Joint distribution p(x) p(y|x) indexed [x][y].
std::vector<std::vector<double>> joint(const ClassicalChannel& ch, const Distribution& input) {
  if (input.size() != ch.input_size()) {
    throw DimensionMismatch("classical channel has " + std::to_string(ch.input_size()) +
                            " inputs but the distribution has " + std::to_string(input.size()));
  }
  std::vector<std::vector<double>> j(ch.input_size(), std::vector<double>(ch.output_size()));
  for (std::size_t x = 0; x < ch.input_size(); ++x) {
    for (std::size_t y = 0; y < ch.output_size(); ++y) j[x][y] = input[x] * ch(x, y);
  }
  return j;
}

ClassicalReport report_from_joint(const std::vector<std::vector<double>>& j) {
  std::vector<double> px(j.size(), 0.0), py(j.front().size(), 0.0), flat;
  for (std::size_t x = 0; x < j.size(); ++x) {
    for (std::size_t y = 0; y < j[x].size(); ++y) {
      px[x] += j[x][y];
      py[y] += j[x][y];
      flat.push_back(j[x][y]);
    }
  }
  const double hxy = shannon_entropy(flat);
  ClassicalReport r;
  r.H_X = shannon_entropy(px);
  r.H_Y = shannon_entropy(py);
  r.I = r.H_X + r.H_Y - hxy;
  r.L = hxy - r.H_Y;
  r.N = hxy - r.H_X;
  return r;
}

}  // namespace

Distribution::Distribution(std::vector<double> probabilities) : p_(std::move(probabilities)) {
  check_distribution(p_, "Distribution");
}

Distribution Distribution::uniform(std::size_t n) {
  if (n == 0) throw DomainError("Distribution::uniform: empty alphabet");
  return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double shannon_entropy(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

ClassicalChannel::ClassicalChannel(std::vector<std::vector<double>> transition) : rows_(std::move(transition)) {
  if (rows_.empty()) throw DomainError("ClassicalChannel: no input symbols");
  for (const auto& row : rows_) {
    if (row.size() != rows_.front().size()) throw DimensionMismatch("ClassicalChannel: ragged transition matrix");
    check_distribution(row, "ClassicalChannel row");
  }
}

ClassicalChannel binary_symmetric_channel(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("binary_symmetric_channel: q outside [0, 1]");
  return ClassicalChannel({{1.0 - q, q}, {q, 1.0 - q}});
}

ClassicalChannel noiseless_channel(std::size_t n) {
  std::vector<std::vector<double>> t(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) t[i][i] = 1.0;
  return ClassicalChannel(std::move(t));
}

ClassicalReport classical_report(const ClassicalChannel& ch, const Distribution& input) {
  return report_from_joint(joint(ch, input));
}

ClassicalBlockReport classical_block_report(const std::vector<ClassicalChannel>& channels,
                                            const Distribution& joint_input) {
  if (channels.empty()) throw DomainError("classical_block_report: no channels");
  const std::size_t n = channels.size();
  std::size_t in_size = 1, out_size = 1;
  for (const auto& c : channels) {
    in_size *= c.input_size();
    out_size *= c.output_size();
  }
  if (joint_input.size() != in_size) {
    throw DimensionMismatch("classical_block_report: joint input has " + std::to_string(joint_input.size()) +
                            " entries, channels need " + std::to_string(in_size));
  }
  if (in_size * out_size > (std::size_t{1} << 22)) throw DomainError("classical_block_report: alphabet too large");

  std::vector<std::vector<double>> j(in_size, std::vector<double>(out_size, 0.0));
  std::vector<std::vector<double>> marginal_x(n);
  for (std::size_t i = 0; i < n; ++i) marginal_x[i].assign(channels[i].input_size(), 0.0);
  std::vector<std::size_t> xs(n), ys(n);
  for (std::size_t x = 0; x < in_size; ++x) {
    std::size_t rem = x;
    for (std::size_t i = n; i-- > 0;) {
      xs[i] = rem % channels[i].input_size();
      rem /= channels[i].input_size();
    }
    for (std::size_t i = 0; i < n; ++i) marginal_x[i][xs[i]] += joint_input[x];
    for (std::size_t y = 0; y < out_size; ++y) {
      std::size_t r = y;
      double w = joint_input[x];
      for (std::size_t i = n; i-- > 0;) {
        ys[i] = r % channels[i].output_size();
        r /= channels[i].output_size();
        w *= channels[i](xs[i], ys[i]);
      }
      j[x][y] = w;
    }
  }

  ClassicalBlockReport b;
  b.n = n;
  const ClassicalReport whole = report_from_joint(j);
  b.H_X = whole.H_X;
  b.joint_I = whole.I;
  b.joint_L = whole.L;
  double sum_hx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> m = marginal_x[i];
    const double total = std::accumulate(m.begin(), m.end(), 0.0);
    for (auto& v : m) v /= total;
    const ClassicalReport ri = classical_report(channels[i], Distribution(std::move(m)));
    b.per_I.push_back(ri.I);
    b.per_L.push_back(ri.L);
    sum_hx += ri.H_X;
  }
  b.M = sum_hx - b.H_X;
  const double sum_I = std::accumulate(b.per_I.begin(), b.per_I.end(), 0.0);
  const double sum_L = std::accumulate(b.per_L.begin(), b.per_L.end(), 0.0);
  const double dn = static_cast<double>(n);
  b.rate = b.H_X / dn;
  b.rate_bound = sum_I / dn;
  b.information_subadditive = b.joint_I <= sum_I + tol::kClassical;
  b.loss_subadditive = b.joint_L <= sum_L + tol::kClassical;
  b.sandwich_holds = sum_L - b.M - tol::kClassical <= b.joint_L && b.loss_subadditive;
  return b;
}

QuantumChannel embed_classical_channel(const ClassicalChannel& ch) {
  const auto nx = static_cast<Eigen::Index>(ch.input_size());
  const auto ny = static_cast<Eigen::Index>(ch.output_size());
  std::vector<CMatrix> kraus;
  for (Eigen::Index x = 0; x < nx; ++x) {
    for (Eigen::Index y = 0; y < ny; ++y) {
      CMatrix k = CMatrix::Zero(ny, nx);
      k(y, x) = std::sqrt(ch(static_cast<std::size_t>(x), static_cast<std::size_t>(y)));
      kraus.push_back(std::move(k));
    }
  }
  return QuantumChannel("classical", ch.input_size(), ch.output_size(), std::move(kraus));
}

ClassicalQuantumConsistency classical_quantum_consistency(const ClassicalChannel& ch, const Distribution& input) {
  ClassicalQuantumConsistency r;
  r.classical = classical_report(ch, input);
  const std::size_t d = ch.input_size();
  CVector amp = CVector::Zero(static_cast<Eigen::Index>(d * d * d));
  for (std::size_t x = 0; x < d; ++x) amp(static_cast<Eigen::Index>((x * d + x) * d + x)) = std::sqrt(input[x]);
  const PureState prep(RegisterLayout({{"R'", d}, {"R", d}, {"X", d}}), amp);
  const PureState out = apply_with_environment(embed_classical_channel(ch), prep, "X", "E");
  r.mutual_R_Q = mutual_entropy(out, {"R"}, {"X"});
  r.cond_mutual_R_E_given_Q = conditional_mutual_entropy(out, {"R"}, {"E"}, {"X"});
  r.cond_mutual_Q_E_given_R = conditional_mutual_entropy(out, {"X"}, {"E"}, {"R"});
  r.mutual_R_E = mutual_entropy(out, {"R"}, {"E"});
  // Given x, Q' and E' share the pure state sum_y sqrt(p(y|x)) |y>|x,y>.
  const double t = tol::kIdentity;
  r.holds = std::abs(r.mutual_R_Q - r.classical.I) <= t &&
            std::abs(r.cond_mutual_R_E_given_Q - r.classical.L) <= t &&
            std::abs(r.cond_mutual_Q_E_given_R - 2.0 * r.classical.N) <= t;
  return r;
}

}  // namespace qvenn
