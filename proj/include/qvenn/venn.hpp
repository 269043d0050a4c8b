#pragma once

#include <string>

#include "qvenn/registers.hpp"

namespace qvenn {

/// Non-owning view over either kind of state so the entropy calculus can be
/// written once. Marginals of pure states are taken on whichever side of the
/// cut is smaller (Schmidt symmetry).
class StateView {
 public:
  StateView(const DensityState& s) : density_(&s) {}  // NOLINT(google-explicit-constructor)
  StateView(const PureState& s) : pure_(&s) {}        // NOLINT(google-explicit-constructor)

  const RegisterLayout& layout() const;
  bool is_pure() const { return pure_ != nullptr; }
  DensityState marginal(const Labels& keep) const;

 private:
  const DensityState* density_ = nullptr;
  const PureState* pure_ = nullptr;
};

double subset_entropy(StateView state, const Labels& subset);

/// S(AB) - S(B). Negative for entangled states.
double conditional_entropy(StateView state, const Labels& a, const Labels& b);
/// S(A) + S(B) - S(AB).
double mutual_entropy(StateView state, const Labels& a, const Labels& b);
/// S(AC) + S(BC) - S(C) - S(ABC).
double conditional_mutual_entropy(StateView state, const Labels& a, const Labels& b, const Labels& given);
/// S(A:B) - S(A:B|C).
double ternary_mutual_entropy(StateView state, const Labels& a, const Labels& b, const Labels& c);
/// S(X:YZ) - S(X:Y) - S(X:Z|Y); zero for every state.
double chain_rule_residual(StateView state, const Labels& x, const Labels& y, const Labels& z);

/// The seven regions of a tripartite entropy diagram, in bits.
struct VennDiagram3 {
  std::string label_x, label_y, label_z;
  double exclusive_x = 0.0;  // S(X|YZ)
  double exclusive_y = 0.0;  // S(Y|XZ)
  double exclusive_z = 0.0;  // S(Z|XY)
  double pair_xy_given_z = 0.0;
  double pair_xz_given_y = 0.0;
  double pair_yz_given_x = 0.0;
  double center = 0.0;  // S(X:Y:Z)
  double joint = 0.0;   // S(XYZ)

  double region_sum() const;
};

VennDiagram3 venn3(StateView state, const Labels& x, const Labels& y, const Labels& z);

/// Fixed-width text rendering of a tripartite diagram.
std::string render_venn(const VennDiagram3& diagram);

std::string join_labels(const Labels& labels);

}  // namespace qvenn
