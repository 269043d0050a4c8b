#include "qvenn/codes.hpp"

#include <algorithm>
#include <cmath>

#include "qvenn/blockcoding.hpp"
#include "qvenn/errors.hpp"
#include "qvenn/tolerances.hpp"
#include "qvenn/venn.hpp"

namespace qvenn {

namespace {

Labels qubit_labels(const ErasurePattern& idx) {
  Labels out;
  for (auto i : idx) out.push_back("Q" + std::to_string(i + 1));
  return out;
}

}  // namespace

CMatrix pauli_string(const std::string& word) {
  if (word.empty()) throw DomainError("pauli_string: empty word");
  CMatrix out = CMatrix::Identity(1, 1);
  for (char c : word) out = kron(out, pauli(c));
  return out;
}

EncodingIsometry::EncodingIsometry(std::size_t k, std::size_t n, CMatrix matrix, std::string name)
    : k_(k), n_(n), matrix_(std::move(matrix)), name_(std::move(name)) {
  if (n_ == 0 || n_ > 12) throw DomainError("EncodingIsometry: n must be in [1, 12]");
  if (k_ > n_) throw DomainError("EncodingIsometry: k exceeds n");
  if (matrix_.rows() != (Eigen::Index{1} << n_) || matrix_.cols() != (Eigen::Index{1} << k_)) {
    throw DimensionMismatch("EncodingIsometry: matrix is " + std::to_string(matrix_.rows()) + "x" +
                            std::to_string(matrix_.cols()) + ", expected 2^n x 2^k");
  }
  const double dev = isometry_deviation(matrix_);
  if (dev > tol::kState) {
    throw InvalidStateError("EncodingIsometry '" + name_ + "': V^dagger V deviates from I by " +
                            std::to_string(dev));
  }
}

EncodingIsometry stabilizer_code(const std::vector<std::string>& stabilizers,
                                 const std::vector<std::string>& logical_x, std::string name) {
  if (stabilizers.empty()) throw DomainError("stabilizer_code: no stabilizers");
  const std::size_t n = stabilizers.front().size();
  const auto dim = Eigen::Index{1} << n;
  CMatrix projector = CMatrix::Identity(dim, dim);
  for (const auto& s : stabilizers) {
    if (s.size() != n) throw DimensionMismatch("stabilizer_code: stabilizer lengths differ");
    projector = projector * (CMatrix::Identity(dim, dim) + pauli_string(s)) * 0.5;
  }
  const std::size_t k = logical_x.size();
  std::vector<CMatrix> xs;
  for (const auto& x : logical_x) {
    if (x.size() != n) throw DimensionMismatch("stabilizer_code: logical operator length differs");
    xs.push_back(pauli_string(x));
  }
  CVector seed = projector.col(0);
  if (seed.norm() < 1e-6) throw DomainError("stabilizer_code: |0...0> has no code-space component");
  seed.normalize();
  CMatrix v(dim, Eigen::Index{1} << k);
  for (Eigen::Index col = 0; col < v.cols(); ++col) {
    CVector c = seed;
    for (std::size_t b = 0; b < k; ++b) {
      if ((col >> (k - 1 - b)) & 1) c = xs[b] * c;
    }
    v.col(col) = c;
  }
  return EncodingIsometry(k, n, std::move(v), std::move(name));
}

EncodingIsometry five_qubit_code() {
  return stabilizer_code({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}, {"XXXXX"}, "five-qubit");
}

EncodingIsometry four_two_code() { return stabilizer_code({"XXXX", "ZZZZ"}, {"XXII", "XIXI"}, "four-two"); }

EncodingIsometry identity_code(std::size_t k) {
  const auto d = Eigen::Index{1} << k;
  return EncodingIsometry(k, k, CMatrix::Identity(d, d), "identity");
}

PureState encode_entangled(const EncodingIsometry& code) {
  const std::size_t dk = std::size_t{1} << code.k();
  const std::size_t dn = std::size_t{1} << code.n();
  std::vector<Subsystem> subs{{"R", dk}};
  for (const auto& l : symbol_labels(code.n())) subs.push_back({l, 2});
  CVector amp(static_cast<Eigen::Index>(dk * dn));
  const double a = 1.0 / std::sqrt(static_cast<double>(dk));
  for (std::size_t i = 0; i < dk; ++i) {
    amp.segment(static_cast<Eigen::Index>(i * dn), static_cast<Eigen::Index>(dn)) =
        a * code.matrix().col(static_cast<Eigen::Index>(i));
  }
  return PureState(RegisterLayout(std::move(subs)), std::move(amp));
}

PatternLoss erasure_pattern_loss(const PureState& encoded, const Labels& reference, std::size_t n,
                                 const ErasurePattern& pattern) {
  std::vector<bool> erased(n, false);
  for (auto i : pattern) {
    if (i >= n) {
      throw AddressingError("erasure pattern index " + std::to_string(i) + " out of range for n = " +
                            std::to_string(n));
    }
    if (erased[i]) throw AddressingError("erasure pattern repeats index " + std::to_string(i));
    erased[i] = true;
  }
  ErasurePattern kept;
  for (std::size_t i = 0; i < n; ++i) {
    if (!erased[i]) kept.push_back(i);
  }
  PatternLoss r;
  if (!pattern.empty()) r.mutual_RQe = mutual_entropy(encoded, reference, qubit_labels(pattern));
  if (!kept.empty()) r.mutual_RQu = mutual_entropy(encoded, reference, qubit_labels(kept));
  return r;
}

PatternLoss erasure_pattern_loss(const EncodingIsometry& code, const ErasurePattern& pattern) {
  return erasure_pattern_loss(encode_entangled(code), {"R"}, code.n(), pattern);
}

std::vector<ErasurePattern> erasure_patterns(std::size_t n, std::size_t e) {
  std::vector<ErasurePattern> out;
  if (e > n) return out;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(e), true);
  do {
    ErasurePattern p;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask[i]) p.push_back(i);
    }
    out.push_back(std::move(p));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

ErasureVerdict verify_erasure_code(const EncodingIsometry& code, std::size_t e) {
  if (e > code.n()) throw DomainError("verify_erasure_code: e exceeds n");
  const PureState encoded = encode_entangled(code);
  ErasureVerdict v;
  v.worst_pattern_loss = -1.0;
  for (const auto& p : erasure_patterns(code.n(), e)) {
    const double loss = erasure_pattern_loss(encoded, {"R"}, code.n(), p).mutual_RQe;
    ++v.patterns_checked;
    if (loss > v.worst_pattern_loss) {
      v.worst_pattern_loss = loss;
      v.worst_pattern = p;
    }
  }
  v.correctable = v.worst_pattern_loss <= tol::kCorrectable;
  return v;
}

std::size_t singleton_max_k(std::size_t n, std::size_t e) {
  if (n == 0) throw DomainError("singleton_max_k: n must be at least 1");
  return n > 2 * e ? n - 2 * e : 0;
}

double bounded_fraction_rate_bound(double p, FractionModel model) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("bounded_fraction_rate_bound: p outside [0, 1]");
  const double slope = model == FractionModel::Erasures ? 2.0 : 4.0;
  return std::clamp(1.0 - slope * p, 0.0, 1.0);
}

}  // namespace qvenn
