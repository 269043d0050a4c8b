#include "qvenn/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "qvenn/codes.hpp"
#include "qvenn/errors.hpp"
#include "qvenn/tolerances.hpp"
#include "qvenn/venn.hpp"

namespace qvenn {

namespace {

void require_unit(const char* op, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError(std::string(op) + ": p = " + std::to_string(p) + " outside [0, 1]");
}

double weight_parameter(double p, NoiseModel model) {
  if (model == NoiseModel::Erasure) return p;
  return std::min(1.0, 4.0 * p / 3.0);
}

void check_mixture_input(const char* op, std::size_t n, double p, const PureState& input, NoiseModel model) {
  require_unit(op, p);
  if (model == NoiseModel::Depolarizing && p > 0.75 + 1e-15) {
    throw DomainError(std::string(op) + ": depolarizing p = " + std::to_string(p) +
                      " exceeds 3/4, where the channel is no longer a mixture with the identity");
  }
  if (n == 0) throw DomainError(std::string(op) + ": n must be positive");
  if (n > kMaxBlockSymbols) {
    throw DomainError(std::string(op) + ": n = " + std::to_string(n) + " exceeds the cap of " +
                      std::to_string(kMaxBlockSymbols));
  }
  for (const auto& l : symbol_labels(n)) {
    if (input.layout().dim_of(l) != 2) throw DimensionMismatch(std::string(op) + ": symbol " + l + " is not a qubit");
  }
  if (input.layout().size() == n) throw LayoutError(std::string(op) + ": input has no reference subsystem");
}

QuantumChannel noisy(double p, NoiseModel model) {
  return model == NoiseModel::Erasure ? make_erasure(p) : make_depolarizing(p);
}

Labels labels_of(const std::vector<std::size_t>& idx) {
  Labels out;
  for (auto i : idx) out.push_back("Q" + std::to_string(i + 1));
  return out;
}

double entropy_or_zero(const PureState& s, const std::vector<std::size_t>& idx) {
  return idx.empty() ? 0.0 : subset_entropy(s, labels_of(idx));
}

}  // namespace

double dyadic_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("dyadic_entropy: argument outside [0, 1]");
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

const std::vector<BoundFormula>& all_bound_formulas() {
  static const std::vector<BoundFormula> all{BoundFormula::Erasure1_2p,     BoundFormula::Errors1_4p,
                                             BoundFormula::Depol8p3,        BoundFormula::DepolCloning4p,
                                             BoundFormula::DepolHashing1Hp, BoundFormula::StabilizerHBound};
  return all;
}

std::string formula_id(BoundFormula f) {
  switch (f) {
    case BoundFormula::Erasure1_2p: return "erasure_1_2p";
    case BoundFormula::Errors1_4p: return "errors_1_4p";
    case BoundFormula::Depol8p3: return "depol_8p3";
    case BoundFormula::DepolCloning4p: return "depol_cloning_4p";
    case BoundFormula::DepolHashing1Hp: return "depol_hashing_1_Hp";
    case BoundFormula::StabilizerHBound: return "stabilizer_H_bound";
  }
  return "unknown";
}

BoundFormula parse_formula_id(const std::string& id) {
  for (auto f : all_bound_formulas()) {
    if (formula_id(f) == id) return f;
  }
  throw DomainError("unknown formula id '" + id + "'");
}

std::pair<double, double> validity_range(BoundFormula f) {
  switch (f) {
    case BoundFormula::Depol8p3:
    case BoundFormula::DepolCloning4p: return {0.0, 0.75};
    case BoundFormula::DepolHashing1Hp: return {0.0, 0.5};
    case BoundFormula::StabilizerHBound: return {0.0, 0.25};
    default: return {0.0, 1.0};
  }
}

std::string validity_note(BoundFormula f) {
  switch (f) {
    case BoundFormula::Erasure1_2p: return "erasure channel, lossless block coding";
    case BoundFormula::Errors1_4p: return "fixed error fraction p, via e = 2t erasures";
    case BoundFormula::Depol8p3: return "depolarizing channel, entropic bound; p <= 3/4";
    case BoundFormula::DepolCloning4p: return "depolarizing channel, universal cloning argument; p <= 3/4";
    case BoundFormula::DepolHashing1Hp: return "depolarizing channel, additive codes; evaluated for p <= 1/2";
    case BoundFormula::StabilizerHBound: return "additive (stabilizer) codes, error fraction p; evaluated for p <= 1/4";
  }
  return "";
}

double bound_value(BoundFormula f, double p) {
  require_unit("bound_value", p);
  const auto [lo, hi] = validity_range(f);
  if (p < lo || p > hi) return 0.0;
  double v = 0.0;
  switch (f) {
    case BoundFormula::Erasure1_2p: v = 1.0 - 2.0 * p; break;
    case BoundFormula::Errors1_4p: v = 1.0 - 4.0 * p; break;
    case BoundFormula::Depol8p3: v = 1.0 - 8.0 * p / 3.0; break;
    case BoundFormula::DepolCloning4p: v = 1.0 - 4.0 * p; break;
    case BoundFormula::DepolHashing1Hp: v = 1.0 - dyadic_entropy(p); break;
    case BoundFormula::StabilizerHBound:
      v = dyadic_entropy(std::min(1.0, 0.5 + std::sqrt(std::max(0.0, 2.0 * p * (1.0 - 2.0 * p)))));
      break;
  }
  return std::clamp(v, 0.0, 1.0);
}

BoundCurve bound_curve(BoundFormula f, const std::vector<double>& grid) {
  BoundCurve c;
  c.name = formula_id(f);
  c.formula = f;
  for (double p : grid) c.samples.emplace_back(p, bound_value(f, p));
  return c;
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError("grid '" + spec + "': '" + item + "' is not a number");
    }
  }
  if (parts.size() != 3) throw DomainError("grid '" + spec + "' must be start:stop:step");
  const double start = parts[0], stop = parts[1], step = parts[2];
  if (!(step > 0.0) || stop < start) throw DomainError("grid '" + spec + "' needs step > 0 and stop >= start");
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  if (count > 100000) throw DomainError("grid '" + spec + "' has too many points");
  std::vector<double> grid;
  for (std::size_t i = 0; i < count; ++i) grid.push_back(std::min(stop, start + static_cast<double>(i) * step));
  return grid;
}

BoundCatalog capacity_bound_catalog(double p) {
  require_unit("capacity_bound_catalog", p);
  BoundCatalog cat;
  cat.p = p;
  for (auto f : all_bound_formulas()) {
    const auto [lo, hi] = validity_range(f);
    cat.entries.push_back({formula_id(f), bound_value(f, p), p >= lo && p <= hi, validity_note(f)});
  }
  cat.nondegenerate_zero_rate = p >= 1.0 / 6.0;
  return cat;
}

std::string model_name(NoiseModel m) { return m == NoiseModel::Erasure ? "erasure" : "depolarizing"; }

NoiseModel parse_model(const std::string& name) {
  if (name == "erasure") return NoiseModel::Erasure;
  if (name == "depolarizing") return NoiseModel::Depolarizing;
  throw DomainError("unknown noise model '" + name + "' (expected erasure or depolarizing)");
}

double MixtureAnalysis::weight_sum() const {
  double s = 0.0;
  for (const auto& w : weights) s += w.weight;
  return s;
}

JointInformation product_channel_information(std::size_t n, double p, const PureState& input,
                                             NoiseModel model) {
  check_mixture_input("product_channel_information", n, p, input, model);
  const Labels symbols = symbol_labels(n);
  const std::vector<QuantumChannel> channels(n, noisy(p, model));
  return joint_information(partial_trace(input, symbols), subset_entropy(input, symbols), symbols, channels);
}

MixtureAnalysis binomial_mixture_analysis(std::size_t n, double p, const PureState& input, NoiseModel model) {
  check_mixture_input("binomial_mixture_analysis", n, p, input, model);
  const Labels symbols = symbol_labels(n);
  const DensityState rho_q = partial_trace(input, symbols);

  MixtureAnalysis m;
  m.n = n;
  m.p = p;
  m.model = model;
  m.weight_parameter = weight_parameter(p, model);
  m.source_entropy = subset_entropy(input, symbols);
  const JointInformation joint =
      joint_information(rho_q, m.source_entropy, symbols, std::vector<QuantumChannel>(n, noisy(p, model)));
  m.joint_I = joint.I;
  m.joint_L = joint.L;

  const double q = m.weight_parameter;
  const QuantumChannel keep = make_identity(2);
  const QuantumChannel hit = model == NoiseModel::Erasure ? make_erasure(1.0) : make_depolarizing(0.75);
  for (std::size_t e = 0; e <= n; ++e) {
    const double w = std::pow(q, static_cast<double>(e)) * std::pow(1.0 - q, static_cast<double>(n - e));
    for (const auto& pattern : erasure_patterns(n, e)) {
      std::vector<QuantumChannel> channels(n, keep);
      for (auto i : pattern) channels[i] = hit;
      const double ic = joint_information(rho_q, m.source_entropy, symbols, channels).I;
      m.weights.push_back({pattern, w});
      m.per_pattern_I.push_back(ic);
      m.convex_bound += w * ic;
    }
  }
  m.intermediate_bound = m.source_entropy + static_cast<double>(n) * (1.0 - 2.0 * q);
  return m;
}

DualRelation dual_channel_relation(std::size_t n, double p, const PureState& input, NoiseModel model) {
  check_mixture_input("dual_channel_relation", n, p, input, model);
  DualRelation d;
  d.p = p;
  d.dual_p = model == NoiseModel::Erasure ? 1.0 - p : 0.75 - p;
  d.k = subset_entropy(input, symbol_labels(n));
  const JointInformation a = product_channel_information(n, p, input, model);
  const JointInformation b = product_channel_information(n, d.dual_p, input, model);
  d.I_p = a.I;
  d.L_p = a.L;
  d.I_dual = b.I;
  d.L_dual = b.L;
  d.sum_I = a.I + b.I;
  d.sum_L = a.L + b.L;
  d.holds = d.sum_I <= 2.0 * d.k + tol::kIdentity && d.sum_L >= 2.0 * d.k - tol::kIdentity;
  return d;
}

double average_loss_lower_bound(double p, double rate, NoiseModel model) {
  require_unit("average_loss_lower_bound", p);
  if (!(rate >= 0.0 && rate <= 1.0)) throw DomainError("average_loss_lower_bound: rate outside [0, 1]");
  if (model == NoiseModel::Depolarizing && p > 0.75) {
    throw DomainError("average_loss_lower_bound: depolarizing p exceeds 3/4");
  }
  const double slope = model == NoiseModel::Erasure ? 2.0 : 8.0 / 3.0;
  return std::max(rate + slope * p - 1.0, 0.0);
}

PairedPatternStep paired_pattern_step(const PureState& encoded, std::size_t n,
                                      const std::vector<std::size_t>& erased,
                                      const std::vector<std::size_t>& dual_erased) {
  if (erased.size() != dual_erased.size()) throw DomainError("paired_pattern_step: patterns differ in size");
  std::set<std::size_t> used;
  for (auto i : erased) used.insert(i);
  for (auto i : dual_erased) used.insert(i);
  if (used.size() != 2 * erased.size()) throw DomainError("paired_pattern_step: patterns overlap or repeat");
  if (!used.empty() && *used.rbegin() >= n) throw AddressingError("paired_pattern_step: index out of range");
  std::vector<std::size_t> star, unerased, dual_unerased;
  for (std::size_t i = 0; i < n; ++i) {
    if (!used.count(i)) star.push_back(i);
    if (std::find(erased.begin(), erased.end(), i) == erased.end()) unerased.push_back(i);
    if (std::find(dual_erased.begin(), dual_erased.end(), i) == dual_erased.end()) dual_unerased.push_back(i);
  }
  PairedPatternStep r;
  r.lhs = entropy_or_zero(encoded, unerased) - entropy_or_zero(encoded, erased) +
          entropy_or_zero(encoded, dual_unerased) - entropy_or_zero(encoded, dual_erased);
  r.overlap_bound = 2.0 * entropy_or_zero(encoded, star);
  r.dimension_bound = 2.0 * static_cast<double>(star.size());
  return r;
}

}  // namespace qvenn
