#include "qvenn/sidechannel.hpp"

#include <cmath>

#include "qvenn/blockcoding.hpp"
#include "qvenn/errors.hpp"
#include "qvenn/tolerances.hpp"

namespace qvenn {

namespace {

const std::string kP = "P";
const std::string kC = "C";

Labels with(Labels a, const Labels& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// |i>|j> -> |i>|j + i mod d>
CMatrix shift_copy(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d * d);
  CMatrix u = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      u(static_cast<Eigen::Index>(i * d + (i + j) % d), static_cast<Eigen::Index>(i * d + j)) = 1.0;
    }
  }
  return u;
}

/// Control on the first (most significant) qubit.
CMatrix cnot() {
  CMatrix u = CMatrix::Zero(4, 4);
  u(0, 0) = u(1, 1) = u(3, 2) = u(2, 3) = 1.0;
  return u;
}

CVector plus_state(std::size_t qubits) {
  const auto d = Eigen::Index{1} << qubits;
  return CVector::Constant(d, cplx(1.0 / std::sqrt(static_cast<double>(d)), 0.0));
}

void expect(SideChannelDiagram& d, const char* name, double value, double target) {
  if (std::abs(value - target) > tol::kCorrectable) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s = %.10g, expected %.10g", name, value, target);
    d.violations.emplace_back(buf);
  }
}

}  // namespace

SideChannelState amplify_precursor(const PureState& state, const CMatrix& basis, const Labels& reference,
                                   const Labels& quantum) {
  const std::size_t d = state.layout().dim_of(kP);
  if (basis.rows() != static_cast<Eigen::Index>(d) || basis.cols() != static_cast<Eigen::Index>(d)) {
    throw DimensionMismatch("amplify_precursor: basis must be " + std::to_string(d) + "x" + std::to_string(d));
  }
  const double dev = isometry_deviation(basis);
  if (dev > tol::kState) {
    throw InvalidStateError("amplify_precursor: amplification basis is not orthonormal (deviation " +
                            std::to_string(dev) + ")");
  }
  if (state.layout().contains(kC)) throw LayoutError("amplify_precursor: label C already in use");
  PureState s = apply_operator(state, {kP}, basis.adjoint());
  CVector zero = CVector::Zero(static_cast<Eigen::Index>(d));
  zero(0) = 1.0;
  s = append_subsystem(s, {kC, d}, zero);
  s = apply_operator(s, {kP, kC}, shift_copy(d));
  s = apply_operator(s, {kP}, basis);

  SideChannelState sc{s, basis, reference, quantum};
  sc.k = subset_entropy(sc.state, reference);
  sc.s = subset_entropy(sc.state, quantum);
  sc.c = subset_entropy(sc.state, {kC});
  return sc;
}

LosslessCheck lossless_amplification_check(const SideChannelState& sc) {
  LosslessCheck r;
  r.mutual_RP = mutual_entropy(sc.state, sc.reference, {kP});
  r.mutual_RQC = mutual_entropy(sc.state, sc.reference, with(sc.quantum, {kC}));
  r.lossless = r.mutual_RP <= tol::kCorrectable;
  return r;
}

SideChannelDiagram side_channel_diagram(const SideChannelState& sc) {
  const LosslessCheck lc = lossless_amplification_check(sc);
  if (!lc.lossless) {
    throw IdentityViolation("side_channel_diagram: amplification is not lossless, S(R:P) = " +
                            std::to_string(lc.mutual_RP));
  }
  const Labels& R = sc.reference;
  const Labels& Q = sc.quantum;
  const Labels C{kC};
  SideChannelDiagram d;
  d.k = sc.k;
  d.s = sc.s;
  d.c = sc.c;
  d.S_P = subset_entropy(sc.state, {kP});
  d.S_CP = subset_entropy(sc.state, {kP, kC});
  d.S_RQ = subset_entropy(sc.state, with(R, Q));
  d.S_RC = subset_entropy(sc.state, with(R, C));
  d.S_QC = subset_entropy(sc.state, with(Q, C));
  d.S_RQC = subset_entropy(sc.state, with(with(R, Q), C));
  d.mutual_RQ = mutual_entropy(sc.state, R, Q);
  d.mutual_RC = mutual_entropy(sc.state, R, C);
  d.mutual_QC = mutual_entropy(sc.state, Q, C);
  d.mutual_RP = lc.mutual_RP;
  d.mutual_RQC = lc.mutual_RQC;
  d.mutual_R_PC = mutual_entropy(sc.state, R, {kP, kC});
  d.center = ternary_mutual_entropy(sc.state, R, Q, C);
  d.cond_RQ_C = conditional_entropy(sc.state, with(R, Q), C);
  d.cond_C_RQ = conditional_entropy(sc.state, C, with(R, Q));
  d.cond_mutual_RC_Q = conditional_mutual_entropy(sc.state, R, C, Q);
  d.venn = venn3(sc.state, R, Q, C);

  const double k = d.k, s = d.s, c = d.c;
  expect(d, "S(P)", d.S_P, c);
  expect(d, "S(CP)", d.S_CP, c);
  expect(d, "S(R:QC)", d.mutual_RQC, 2.0 * k);
  expect(d, "S(RQ)", d.S_RQ, c);
  expect(d, "S(RC)", d.S_RC, k + c);
  expect(d, "S(QC)", d.S_QC, k + c);
  expect(d, "S(RQC)", d.S_RQC, c);
  expect(d, "S(R:C)", d.mutual_RC, 0.0);
  expect(d, "S(Q:C)", d.mutual_QC, s - k);
  expect(d, "S(R:Q)", d.mutual_RQ, k + s - c);
  expect(d, "S(R:C|Q)", d.cond_mutual_RC_Q, k + c - s);
  expect(d, "S(R:Q:C)", d.center, s - k - c);
  expect(d, "S(RQ|C)", d.cond_RQ_C, 0.0);
  expect(d, "S(C|RQ)", d.cond_C_RQ, 0.0);
  const double slack = tol::kIdentity;
  if (!(s - k >= -slack && s - k <= c + slack && c <= s + k + slack)) {
    d.violations.emplace_back("0 <= s-k <= c <= s+k");
  }
  return d;
}

SideChannelState build_teleportation_model() {
  PureState s = tensor_product(bell_pair("R", "L"), bell_pair("A", "Q"));
  s = apply_operator(s, {"L", "A"}, cnot());
  s = apply_operator(s, {"L"}, hadamard());
  s = merge_adjacent(s, {"L", "A"}, kP);
  return amplify_precursor(s, CMatrix::Identity(4, 4), {"R"}, {"Q"});
}

SideChannelState build_controlled_flip_model(bool hadamard_amplification) {
  PureState s = append_subsystem(bell_pair("R", "Q"), {kP, 2}, plus_state(1));
  s = apply_operator(s, {kP, "Q"}, cnot());
  return amplify_precursor(s, hadamard_amplification ? hadamard() : CMatrix::Identity(2, 2), {"R"}, {"Q"});
}

SideChannelState build_code_side_channel(const EncodingIsometry& code, const std::vector<std::string>& controlled,
                                         const CMatrix& basis) {
  const std::size_t m = controlled.size();
  PureState s = append_subsystem(encode_entangled(code), {kP, std::size_t{1} << m}, plus_state(m));
  const Labels q = symbol_labels(code.n());
  // Controlled Paulis commute, so one block-diagonal operator on (Q, P) suffices.
  std::vector<CMatrix> words;
  for (const auto& w : controlled) {
    if (w.size() != code.n()) throw DimensionMismatch("build_code_side_channel: Pauli word length differs from n");
    words.push_back(pauli_string(w));
  }
  const auto dq = Eigen::Index{1} << code.n();
  const auto dp = Eigen::Index{1} << m;
  Labels targets = q;
  targets.push_back(kP);
  CMatrix op = CMatrix::Zero(dq * dp, dq * dp);
  for (Eigen::Index b = 0; b < dp; ++b) {
    CMatrix u = CMatrix::Identity(dq, dq);
    for (std::size_t j = 0; j < m; ++j) {
      if ((b >> (m - 1 - j)) & 1) u = words[j] * u;
    }
    for (Eigen::Index r = 0; r < dq; ++r) {
      for (Eigen::Index c = 0; c < dq; ++c) op(r * dp + b, c * dp + b) = u(r, c);
    }
  }
  s = apply_operator(s, targets, op);
  const CMatrix amp_basis = basis.size() == 0 ? CMatrix::Identity(dp, dp) : basis;
  return amplify_precursor(s, amp_basis, {"R"}, q);
}

SideChannelState random_lossless_model(std::size_t logical_dim, std::size_t quantum_dim, std::size_t branches,
                                       Rng& rng) {
  if (logical_dim == 0 || quantum_dim < logical_dim || branches == 0 || branches > logical_dim * logical_dim) {
    throw DomainError(
        "random_lossless_model: need 0 < logical_dim <= quantum_dim and 0 < branches <= logical_dim^2");
  }
  std::uniform_real_distribution<double> uni(0.05, 1.0);
  std::vector<double> w(branches);
  double total = 0.0;
  for (auto& x : w) total += (x = uni(rng));
  const auto dl = static_cast<Eigen::Index>(logical_dim);
  const auto dq = static_cast<Eigen::Index>(quantum_dim);
  const auto dp = static_cast<Eigen::Index>(branches);
  const CMatrix v = random_isometry(quantum_dim, logical_dim, rng);
  const double two_pi = 2.0 * std::acos(-1.0);
  CVector amp = CVector::Zero(dl * dq * dp);
  for (Eigen::Index i = 0; i < dp; ++i) {
    // Branch i uses V X^a Z^b; distinct Weyl operators are trace-orthogonal,
    // so the branch states on RQ are orthogonal.
    const Eigen::Index a = i % dl, b = i / dl;
    CMatrix weyl = CMatrix::Zero(dl, dl);
    for (Eigen::Index r = 0; r < dl; ++r) {
      weyl((r + a) % dl, r) = std::polar(1.0, two_pi * static_cast<double>(b * r) / static_cast<double>(dl));
    }
    const CMatrix vi = v * weyl;
    const double scale = std::sqrt(w[static_cast<std::size_t>(i)] / total / static_cast<double>(logical_dim));
    for (Eigen::Index r = 0; r < dl; ++r) {
      for (Eigen::Index q = 0; q < dq; ++q) amp((r * dq + q) * dp + i) += scale * vi(q, r);
    }
  }
  PureState s(RegisterLayout({{"R", logical_dim}, {"Q", quantum_dim}, {kP, branches}}), amp);
  return amplify_precursor(s, CMatrix::Identity(dp, dp), {"R"}, {"Q"});
}

SideErasureCheck side_channel_erasure_check(const SideChannelState& sc, const std::vector<std::size_t>& pattern) {
  Labels erased;
  for (auto i : pattern) {
    if (i >= sc.quantum.size()) {
      throw AddressingError("side_channel_erasure_check: index " + std::to_string(i) + " out of range");
    }
    erased.push_back(sc.quantum[i]);
  }
  erased.push_back(kP);
  SideErasureCheck r;
  r.mutual_R_QeP = mutual_entropy(sc.state, sc.reference, erased);
  r.correctable = r.mutual_R_QeP <= tol::kCorrectable;
  return r;
}

SideErasureVerdict verify_side_channel_code(const SideChannelState& sc, std::size_t e) {
  const std::size_t n = sc.quantum.size();
  if (e > n) throw DomainError("verify_side_channel_code: e exceeds n");
  SideErasureVerdict v;
  v.worst_loss = -1.0;
  for (const auto& p : erasure_patterns(n, e)) {
    const double loss = side_channel_erasure_check(sc, p).mutual_R_QeP;
    ++v.patterns_checked;
    if (loss > v.worst_loss) {
      v.worst_loss = loss;
      v.worst_pattern = p;
    }
  }
  v.correctable = v.worst_loss <= tol::kCorrectable;
  const auto k = static_cast<std::size_t>(std::lround(sc.k));
  v.singleton_consistent = !v.correctable || k <= singleton_max_k(n, e);
  return v;
}

}  // namespace qvenn
