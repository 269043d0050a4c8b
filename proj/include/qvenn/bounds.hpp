#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qvenn/blockcoding.hpp"

namespace qvenn {

/// H(x) = -x log2 x - (1-x) log2 (1-x), with H(0) = H(1) = 0.
double dyadic_entropy(double x);

enum class BoundFormula {
  Erasure1_2p,
  Errors1_4p,
  Depol8p3,
  DepolCloning4p,
  DepolHashing1Hp,
  StabilizerHBound,
};

const std::vector<BoundFormula>& all_bound_formulas();
std::string formula_id(BoundFormula f);
BoundFormula parse_formula_id(const std::string& id);

/// Inclusive p range on which the formula is monotone and meaningful.
std::pair<double, double> validity_range(BoundFormula f);
std::string validity_note(BoundFormula f);

/// Formula value clamped to [0, 1]; 0 beyond the validity range.
double bound_value(BoundFormula f, double p);

struct BoundCurve {
  std::string name;
  BoundFormula formula = BoundFormula::Erasure1_2p;
  std::vector<std::pair<double, double>> samples;  // (p, R_max)
};

BoundCurve bound_curve(BoundFormula f, const std::vector<double>& grid);

/// start:stop:step, inclusive of stop up to rounding.
std::vector<double> parse_grid(const std::string& spec);

struct CatalogEntry {
  std::string formula_id;
  double r_max = 0.0;
  bool within_validity = true;
  std::string validity_note;
};

struct BoundCatalog {
  double p = 0.0;
  std::vector<CatalogEntry> entries;
  bool nondegenerate_zero_rate = false;  // p >= 1/6
};

BoundCatalog capacity_bound_catalog(double p);

enum class NoiseModel { Erasure, Depolarizing };

std::string model_name(NoiseModel m);
NoiseModel parse_model(const std::string& name);

struct PatternWeight {
  std::vector<std::size_t> affected;  // erased or randomized symbols, 0-based
  double weight = 0.0;
};

struct MixtureAnalysis {
  std::size_t n = 0;
  double p = 0.0;
  double weight_parameter = 0.0;  // p (erasure) or 4p/3 (depolarizing)
  NoiseModel model = NoiseModel::Erasure;
  double source_entropy = 0.0;  // S(R)
  double joint_I = 0.0;
  double joint_L = 0.0;
  double convex_bound = 0.0;          // sum_c w_c I_c
  double intermediate_bound = 0.0;    // S(R) + n(1 - 2q)
  std::vector<PatternWeight> weights;
  std::vector<double> per_pattern_I;

  double weight_sum() const;
  bool convexity_holds(double slack) const { return joint_I <= convex_bound + slack; }
};

/// Symbols are Q1..Qn of `input`; every other label is the reference.
MixtureAnalysis binomial_mixture_analysis(std::size_t n, double p, const PureState& input, NoiseModel model);

/// I and L of the n-fold product of erasure(p) or depolarizing(p) on Q1..Qn.
JointInformation product_channel_information(std::size_t n, double p, const PureState& input, NoiseModel model);

struct DualRelation {
  double p = 0.0;
  double dual_p = 0.0;  // 1 - p or 3/4 - p
  double k = 0.0;       // S(R)
  double I_p = 0.0, I_dual = 0.0;
  double L_p = 0.0, L_dual = 0.0;
  double sum_I = 0.0, sum_L = 0.0;
  bool holds = false;  // sum_I <= 2k and sum_L >= 2k within 1e-8
};

DualRelation dual_channel_relation(std::size_t n, double p, const PureState& input, NoiseModel model);

/// max(rate + 2p - 1, 0) or max(rate + 8p/3 - 1, 0).
double average_loss_lower_bound(double p, double rate, NoiseModel model);

struct PairedPatternStep {
  double lhs = 0.0;          // S(Q_u) - S(Q_e) + S(Q_u') - S(Q_e')
  double overlap_bound = 0.0;  // 2 S(Q*)
  double dimension_bound = 0.0;  // 2 (n - 2e)
};

/// Dual patterns `erased` and `dual_erased` are disjoint size-e subsets of
/// the n symbols Q1..Qn; Q* is the remainder.
PairedPatternStep paired_pattern_step(const PureState& encoded, std::size_t n,
                                      const std::vector<std::size_t>& erased,
                                      const std::vector<std::size_t>& dual_erased);

}  // namespace qvenn
