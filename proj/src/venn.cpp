#include "qvenn/venn.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "qvenn/errors.hpp"

namespace qvenn {

const RegisterLayout& StateView::layout() const {
  return pure_ != nullptr ? pure_->layout() : density_->layout();
}

DensityState StateView::marginal(const Labels& keep) const {
  return pure_ != nullptr ? partial_trace(*pure_, keep) : partial_trace(*density_, keep);
}

double subset_entropy(StateView state, const Labels& subset) {
  const auto& layout = state.layout();
  if (subset.empty()) throw AddressingError("subset_entropy: empty subset");
  const auto pos = layout.positions(subset);
  if (!state.is_pure()) return von_neumann_entropy(state.marginal(subset));

  const auto rest = complement_positions(layout, pos);
  if (rest.empty()) return 0.0;
  std::size_t kept_dim = 1;
  for (std::size_t p : pos) kept_dim *= layout.subsystems()[p].dim;
  const std::size_t rest_dim = layout.total_dim() / kept_dim;
  if (rest_dim < kept_dim) {
    Labels other;
    for (std::size_t p : rest) other.push_back(layout.subsystems()[p].label);
    return von_neumann_entropy(state.marginal(other));
  }
  return von_neumann_entropy(state.marginal(subset));
}

namespace {

Labels merge(const Labels& a, const Labels& b) {
  Labels out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void require_disjoint(const char* op, std::initializer_list<const Labels*> sets) {
  std::vector<std::string> all;
  for (const Labels* s : sets) {
    if (s->empty()) throw AddressingError(std::string(op) + ": empty label set");
    all.insert(all.end(), s->begin(), s->end());
  }
  std::sort(all.begin(), all.end());
  const auto dup = std::adjacent_find(all.begin(), all.end());
  if (dup != all.end()) {
    throw AddressingError(std::string(op) + ": label '" + *dup + "' appears in more than one set");
  }
}

}  // namespace

double conditional_entropy(StateView state, const Labels& a, const Labels& b) {
  require_disjoint("conditional_entropy", {&a, &b});
  return subset_entropy(state, merge(a, b)) - subset_entropy(state, b);
}

double mutual_entropy(StateView state, const Labels& a, const Labels& b) {
  require_disjoint("mutual_entropy", {&a, &b});
  return subset_entropy(state, a) + subset_entropy(state, b) - subset_entropy(state, merge(a, b));
}

double conditional_mutual_entropy(StateView state, const Labels& a, const Labels& b, const Labels& given) {
  require_disjoint("conditional_mutual_entropy", {&a, &b, &given});
  return subset_entropy(state, merge(a, given)) + subset_entropy(state, merge(b, given)) -
         subset_entropy(state, given) - subset_entropy(state, merge(merge(a, b), given));
}

double ternary_mutual_entropy(StateView state, const Labels& a, const Labels& b, const Labels& c) {
  require_disjoint("ternary_mutual_entropy", {&a, &b, &c});
  return mutual_entropy(state, a, b) - conditional_mutual_entropy(state, a, b, c);
}

double chain_rule_residual(StateView state, const Labels& x, const Labels& y, const Labels& z) {
  require_disjoint("chain_rule_residual", {&x, &y, &z});
  return mutual_entropy(state, x, merge(y, z)) - mutual_entropy(state, x, y) -
         conditional_mutual_entropy(state, x, z, y);
}

double VennDiagram3::region_sum() const {
  return exclusive_x + exclusive_y + exclusive_z + pair_xy_given_z + pair_xz_given_y + pair_yz_given_x +
         center;
}

VennDiagram3 venn3(StateView state, const Labels& x, const Labels& y, const Labels& z) {
  require_disjoint("venn3", {&x, &y, &z});
  const double sx = subset_entropy(state, x);
  const double sy = subset_entropy(state, y);
  const double sz = subset_entropy(state, z);
  const double sxy = subset_entropy(state, merge(x, y));
  const double sxz = subset_entropy(state, merge(x, z));
  const double syz = subset_entropy(state, merge(y, z));
  const double sxyz = subset_entropy(state, merge(merge(x, y), z));

  VennDiagram3 v;
  v.label_x = join_labels(x);
  v.label_y = join_labels(y);
  v.label_z = join_labels(z);
  v.exclusive_x = sxyz - syz;
  v.exclusive_y = sxyz - sxz;
  v.exclusive_z = sxyz - sxy;
  v.pair_xy_given_z = sxz + syz - sz - sxyz;
  v.pair_xz_given_y = sxy + syz - sy - sxyz;
  v.pair_yz_given_x = sxy + sxz - sx - sxyz;
  v.center = sx + sy + sz - sxy - sxz - syz + sxyz;
  v.joint = sxyz;
  return v;
}

std::string join_labels(const Labels& labels) {
  std::string out;
  for (const auto& l : labels) out += l;
  return out;
}

std::string render_venn(const VennDiagram3& v) {
  auto cell = [](double x) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%+8.4f", x);
    return std::string(buf);
  };
  auto pad = [](const std::string& s, std::size_t w) {
    return s.size() >= w ? s.substr(0, w) : s + std::string(w - s.size(), ' ');
  };
  std::ostringstream os;
  os << "entropy diagram  X=" << v.label_x << "  Y=" << v.label_y << "  Z=" << v.label_z << "\n";
  os << "+--------------------+----------+\n";
  os << "| " << pad("S(X|YZ)", 18) << " | " << cell(v.exclusive_x) << " |\n";
  os << "| " << pad("S(Y|XZ)", 18) << " | " << cell(v.exclusive_y) << " |\n";
  os << "| " << pad("S(Z|XY)", 18) << " | " << cell(v.exclusive_z) << " |\n";
  os << "| " << pad("S(X:Y|Z)", 18) << " | " << cell(v.pair_xy_given_z) << " |\n";
  os << "| " << pad("S(X:Z|Y)", 18) << " | " << cell(v.pair_xz_given_y) << " |\n";
  os << "| " << pad("S(Y:Z|X)", 18) << " | " << cell(v.pair_yz_given_x) << " |\n";
  os << "| " << pad("S(X:Y:Z)", 18) << " | " << cell(v.center) << " |\n";
  os << "+--------------------+----------+\n";
  os << "| " << pad("S(XYZ)", 18) << " | " << cell(v.joint) << " |\n";
  os << "+--------------------+----------+\n";
  return os.str();
}

}  // namespace qvenn
