#include "qvenn/registers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "qvenn/errors.hpp"
#include "qvenn/tolerances.hpp"

namespace qvenn {

RegisterLayout::RegisterLayout(std::vector<Subsystem> subsystems)
    : subsystems_(std::move(subsystems)) {
  std::set<std::string> seen;
  for (const auto& sub : subsystems_) {
    if (sub.label.empty()) throw LayoutError("RegisterLayout: empty subsystem label");
    if (sub.dim == 0) throw LayoutError("RegisterLayout: subsystem '" + sub.label + "' has dimension 0");
    if (!seen.insert(sub.label).second) {
      throw LayoutError("RegisterLayout: duplicate label '" + sub.label + "'");
    }
    total_dim_ *= sub.dim;
  }
}

bool RegisterLayout::contains(const std::string& label) const {
  return std::any_of(subsystems_.begin(), subsystems_.end(),
                     [&](const Subsystem& s) { return s.label == label; });
}

std::size_t RegisterLayout::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < subsystems_.size(); ++i) {
    if (subsystems_[i].label == label) return i;
  }
  throw AddressingError("unknown subsystem label '" + label + "'");
}

std::size_t RegisterLayout::dim_of(const std::string& label) const {
  return subsystems_[index_of(label)].dim;
}

std::size_t RegisterLayout::dim_of(const Labels& labels) const {
  std::size_t d = 1;
  for (std::size_t p : positions(labels)) d *= subsystems_[p].dim;
  return d;
}

Labels RegisterLayout::labels() const {
  Labels out;
  out.reserve(subsystems_.size());
  for (const auto& s : subsystems_) out.push_back(s.label);
  return out;
}

std::vector<std::size_t> RegisterLayout::positions(const Labels& labels) const {
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (const auto& l : labels) {
    const std::size_t p = index_of(l);
    if (std::find(out.begin(), out.end(), p) != out.end()) {
      throw AddressingError("label '" + l + "' listed twice");
    }
    out.push_back(p);
  }
  return out;
}

RegisterLayout RegisterLayout::concat(const RegisterLayout& other) const {
  std::vector<Subsystem> all = subsystems_;
  all.insert(all.end(), other.subsystems_.begin(), other.subsystems_.end());
  return RegisterLayout(std::move(all));
}

RegisterLayout RegisterLayout::select(const std::vector<std::size_t>& positions) const {
  std::vector<Subsystem> subs;
  subs.reserve(positions.size());
  for (std::size_t p : positions) subs.push_back(subsystems_.at(p));
  return RegisterLayout(std::move(subs));
}

std::vector<std::size_t> RegisterLayout::strides() const {
  std::vector<std::size_t> s(subsystems_.size(), 1);
  for (std::size_t i = subsystems_.size(); i-- > 1;) s[i - 1] = s[i] * subsystems_[i].dim;
  return s;
}

std::vector<std::size_t> subsystem_offsets(const RegisterLayout& layout,
                                           const std::vector<std::size_t>& positions) {
  const auto strides = layout.strides();
  std::vector<std::size_t> offsets{0};
  for (std::size_t p : positions) {
    const std::size_t d = layout.subsystems()[p].dim;
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * d);
    for (std::size_t base : offsets) {
      for (std::size_t digit = 0; digit < d; ++digit) next.push_back(base + digit * strides[p]);
    }
    offsets = std::move(next);
  }
  return offsets;
}

std::vector<std::size_t> complement_positions(const RegisterLayout& layout,
                                              const std::vector<std::size_t>& positions) {
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (std::find(positions.begin(), positions.end(), i) == positions.end()) rest.push_back(i);
  }
  return rest;
}

PureState::PureState(RegisterLayout layout, CVector amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != layout_.total_dim()) {
    throw DimensionMismatch("PureState: " + std::to_string(amplitudes_.size()) +
                            " amplitudes for total dimension " + std::to_string(layout_.total_dim()));
  }
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > tol::kState) {
    throw InvalidStateError("PureState: amplitude norm " + std::to_string(norm) + " is not 1");
  }
  amplitudes_ /= norm;
}

DensityState::DensityState(RegisterLayout layout, CMatrix matrix)
    : layout_(std::move(layout)), matrix_(std::move(matrix)) {
  const auto d = static_cast<Eigen::Index>(layout_.total_dim());
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw DimensionMismatch("DensityState: matrix is " + std::to_string(matrix_.rows()) + "x" +
                            std::to_string(matrix_.cols()) + " for total dimension " +
                            std::to_string(d));
  }
  const double herm = hermitian_deviation(matrix_);
  if (herm > tol::kState) {
    throw InvalidStateError("DensityState: not Hermitian (deviation " + std::to_string(herm) + ")");
  }
  const cplx tr = matrix_.trace();
  if (std::abs(tr - 1.0) > tol::kState) {
    throw InvalidStateError("DensityState: trace " + std::to_string(tr.real()) + " is not 1");
  }
  matrix_ = (matrix_ + matrix_.adjoint()).eval() * (0.5 / tr.real());
  spectrum_ = hermitian_eigenvalues(matrix_);
  if (!spectrum_.empty() && spectrum_.front() < -tol::kClip) {
    throw InvalidStateError("DensityState: negative eigenvalue " + std::to_string(spectrum_.front()));
  }
  double total = 0.0;
  for (double& x : spectrum_) {
    if (x < 0.0) x = 0.0;
    total += x;
  }
  for (double& x : spectrum_) x /= total;
}

DensityState to_density(const PureState& state) {
  const CVector& a = state.amplitudes();
  return DensityState(state.layout(), a * a.adjoint());
}

DensityState tensor_product(const DensityState& a, const DensityState& b) {
  RegisterLayout layout = a.layout().concat(b.layout());
  return DensityState(std::move(layout), kron(a.matrix(), b.matrix()));
}

PureState tensor_product(const PureState& a, const PureState& b) {
  RegisterLayout layout = a.layout().concat(b.layout());
  const CVector& x = a.amplitudes();
  const CVector& y = b.amplitudes();
  CVector out(x.size() * y.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out.segment(i * y.size(), y.size()) = x(i) * y;
  return PureState(std::move(layout), std::move(out));
}

namespace {

std::vector<std::size_t> sorted_positions(const RegisterLayout& layout, const Labels& keep) {
  if (keep.empty()) throw AddressingError("partial_trace: empty set of kept labels");
  auto pos = layout.positions(keep);
  std::sort(pos.begin(), pos.end());
  return pos;
}

}  // namespace

DensityState partial_trace(const DensityState& state, const Labels& keep) {
  const auto& layout = state.layout();
  const auto kept = sorted_positions(layout, keep);
  const auto rest = complement_positions(layout, kept);
  const auto ok = subsystem_offsets(layout, kept);
  const auto orr = subsystem_offsets(layout, rest);
  const CMatrix& rho = state.matrix();
  const auto dk = static_cast<Eigen::Index>(ok.size());
  CMatrix out = CMatrix::Zero(dk, dk);
  for (Eigen::Index a = 0; a < dk; ++a) {
    for (Eigen::Index b = 0; b < dk; ++b) {
      cplx acc = 0.0;
      for (std::size_t r : orr) acc += rho(ok[a] + r, ok[b] + r);
      out(a, b) = acc;
    }
  }
  return DensityState(layout.select(kept), std::move(out));
}

DensityState partial_trace(const PureState& state, const Labels& keep) {
  const auto& layout = state.layout();
  const auto kept = sorted_positions(layout, keep);
  const auto rest = complement_positions(layout, kept);
  const auto ok = subsystem_offsets(layout, kept);
  const auto orr = subsystem_offsets(layout, rest);
  const CVector& amp = state.amplitudes();
  CMatrix m(static_cast<Eigen::Index>(ok.size()), static_cast<Eigen::Index>(orr.size()));
  for (std::size_t a = 0; a < ok.size(); ++a) {
    for (std::size_t r = 0; r < orr.size(); ++r) m(a, r) = amp(ok[a] + orr[r]);
  }
  return DensityState(layout.select(kept), m * m.adjoint());
}

PureState purify(const DensityState& rho, const std::string& reference_label) {
  if (rho.layout().contains(reference_label)) {
    throw LayoutError("purify: reference label '" + reference_label + "' already in layout");
  }
  const auto d = static_cast<Eigen::Index>(rho.layout().total_dim());
  // rho = P^T L D L^dagger P with diagonal pivoting; M = P^T L sqrt(D)
  // satisfies M M^dagger = rho, so sum_ij M_ji |i>_R |j>_Q purifies rho.
  Eigen::LDLT<CMatrix> ldlt(rho.matrix());
  if (ldlt.info() != Eigen::Success) throw InvalidStateError("purify: factorization failed");
  const Eigen::VectorXd diag = ldlt.vectorD().real();
  if (diag.minCoeff() < -tol::kClip) {
    throw InvalidStateError("purify: state is not positive semidefinite");
  }
  const Eigen::VectorXd root = diag.cwiseMax(0.0).cwiseSqrt();
  CMatrix lower = ldlt.matrixL();
  CMatrix m = lower * root.cast<cplx>().asDiagonal();
  m = ldlt.transpositionsP().transpose() * m;

  CVector amp(d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) amp(i * d + j) = m(j, i);
  }
  std::vector<Subsystem> subs{{reference_label, static_cast<std::size_t>(d)}};
  for (const auto& s : rho.layout().subsystems()) subs.push_back(s);
  return PureState(RegisterLayout(std::move(subs)), amp / amp.norm());
}

double von_neumann_entropy(const DensityState& rho) { return entropy_bits(rho.spectrum()); }

PureState apply_operator(const PureState& state, const Labels& targets, const CMatrix& op,
                         const std::vector<std::size_t>& out_dims) {
  const auto& layout = state.layout();
  const auto pos = layout.positions(targets);
  if (out_dims.size() != pos.size()) {
    throw DimensionMismatch("apply_operator: " + std::to_string(out_dims.size()) +
                            " output dimensions for " + std::to_string(pos.size()) + " targets");
  }
  std::size_t in_dim = 1, out_dim = 1;
  std::vector<Subsystem> subs = layout.subsystems();
  for (std::size_t i = 0; i < pos.size(); ++i) {
    in_dim *= subs[pos[i]].dim;
    out_dim *= out_dims[i];
    subs[pos[i]].dim = out_dims[i];
  }
  if (static_cast<std::size_t>(op.cols()) != in_dim || static_cast<std::size_t>(op.rows()) != out_dim) {
    throw DimensionMismatch("apply_operator: operator is " + std::to_string(op.rows()) + "x" +
                            std::to_string(op.cols()) + ", targets need " + std::to_string(out_dim) +
                            "x" + std::to_string(in_dim));
  }
  RegisterLayout out_layout(std::move(subs));
  const auto rest = complement_positions(layout, pos);
  const auto old_t = subsystem_offsets(layout, pos);
  const auto old_r = subsystem_offsets(layout, rest);
  const auto new_t = subsystem_offsets(out_layout, pos);
  const auto new_r = subsystem_offsets(out_layout, rest);

  const CVector& amp = state.amplitudes();
  CMatrix gathered(static_cast<Eigen::Index>(old_t.size()), static_cast<Eigen::Index>(old_r.size()));
  for (std::size_t r = 0; r < old_r.size(); ++r) {
    for (std::size_t i = 0; i < old_t.size(); ++i) gathered(i, r) = amp(old_t[i] + old_r[r]);
  }
  const CMatrix moved = op * gathered;
  CVector out(static_cast<Eigen::Index>(out_layout.total_dim()));
  for (std::size_t r = 0; r < new_r.size(); ++r) {
    for (std::size_t o = 0; o < new_t.size(); ++o) out(new_t[o] + new_r[r]) = moved(o, r);
  }
  const double norm = out.norm();
  if (std::abs(norm - 1.0) > tol::kState) {
    throw InvalidChannelError("apply_operator: operator is not norm preserving on this state (norm " +
                              std::to_string(norm) + ")");
  }
  return PureState(std::move(out_layout), std::move(out));
}

PureState apply_operator(const PureState& state, const Labels& targets, const CMatrix& op) {
  std::vector<std::size_t> dims;
  for (const auto& t : targets) dims.push_back(state.layout().dim_of(t));
  return apply_operator(state, targets, op, dims);
}

PureState append_subsystem(const PureState& state, const Subsystem& sub, const CVector& local) {
  PureState tail(RegisterLayout({sub}), local);
  return tensor_product(state, tail);
}

PureState merge_adjacent(const PureState& state, const Labels& labels, const std::string& merged) {
  const auto& layout = state.layout();
  const auto pos = layout.positions(labels);
  if (pos.empty()) throw AddressingError("merge_adjacent: nothing to merge");
  for (std::size_t i = 1; i < pos.size(); ++i) {
    if (pos[i] != pos[i - 1] + 1) {
      throw LayoutError("merge_adjacent: labels must be adjacent and in layout order");
    }
  }
  std::vector<Subsystem> subs;
  std::size_t dim = 1;
  for (std::size_t p : pos) dim *= layout.subsystems()[p].dim;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (i == pos.front()) subs.push_back({merged, dim});
    if (i < pos.front() || i > pos.back()) subs.push_back(layout.subsystems()[i]);
  }
  return PureState(RegisterLayout(std::move(subs)), state.amplitudes());
}

PureState relabel(const PureState& state, const std::string& from, const std::string& to) {
  std::vector<Subsystem> subs = state.layout().subsystems();
  subs[state.layout().index_of(from)].label = to;
  return PureState(RegisterLayout(std::move(subs)), state.amplitudes());
}

PureState basis_state(const RegisterLayout& layout, const std::vector<std::size_t>& digits) {
  if (digits.size() != layout.size()) {
    throw DimensionMismatch("basis_state: digit count does not match subsystem count");
  }
  const auto strides = layout.strides();
  std::size_t index = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= layout.subsystems()[i].dim) throw AddressingError("basis_state: digit out of range");
    index += digits[i] * strides[i];
  }
  CVector amp = CVector::Zero(static_cast<Eigen::Index>(layout.total_dim()));
  amp(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(layout, std::move(amp));
}

PureState maximally_entangled(const std::string& a, const std::string& b, std::size_t dim) {
  RegisterLayout layout({{a, dim}, {b, dim}});
  const auto d = static_cast<Eigen::Index>(dim);
  CVector amp = CVector::Zero(d * d);
  for (Eigen::Index i = 0; i < d; ++i) amp(i * d + i) = 1.0 / std::sqrt(static_cast<double>(dim));
  return PureState(std::move(layout), std::move(amp));
}

PureState bell_pair(const std::string& a, const std::string& b) { return maximally_entangled(a, b, 2); }

PureState ghz_state(const Labels& labels) {
  std::vector<Subsystem> subs;
  for (const auto& l : labels) subs.push_back({l, 2});
  RegisterLayout layout(std::move(subs));
  CVector amp = CVector::Zero(static_cast<Eigen::Index>(layout.total_dim()));
  amp(0) = 1.0 / std::sqrt(2.0);
  amp(amp.size() - 1) = 1.0 / std::sqrt(2.0);
  return PureState(std::move(layout), std::move(amp));
}

DensityState maximally_mixed(const std::string& label, std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return DensityState(RegisterLayout({{label, dim}}), CMatrix::Identity(d, d) / static_cast<double>(dim));
}

DensityState diagonal_state(const std::string& label, const std::vector<double>& probabilities) {
  const auto d = static_cast<Eigen::Index>(probabilities.size());
  CMatrix m = CMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) m(i, i) = probabilities[static_cast<std::size_t>(i)];
  return DensityState(RegisterLayout({{label, probabilities.size()}}), std::move(m));
}

}  // namespace qvenn
