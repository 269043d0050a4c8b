#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qvenn/linalg.hpp"

namespace qvenn {

struct Subsystem {
  std::string label;
  std::size_t dim = 1;

  bool operator==(const Subsystem&) const = default;
};

using Labels = std::vector<std::string>;

/// Ordered list of labeled subsystems. The leftmost subsystem is the most
/// significant tensor factor (row-major Kronecker ordering) everywhere.
class RegisterLayout {
 public:
  RegisterLayout() = default;
  explicit RegisterLayout(std::vector<Subsystem> subsystems);

  const std::vector<Subsystem>& subsystems() const { return subsystems_; }
  std::size_t size() const { return subsystems_.size(); }
  std::size_t total_dim() const { return total_dim_; }

  bool contains(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;
  std::size_t dim_of(const std::string& label) const;
  Labels labels() const;

  /// Positions of `labels` in layout order; throws on unknown or repeated
  /// labels.
  std::vector<std::size_t> positions(const Labels& labels) const;
  /// Total dimension of the listed subsystems.
  std::size_t dim_of(const Labels& labels) const;

  RegisterLayout concat(const RegisterLayout& other) const;
  RegisterLayout select(const std::vector<std::size_t>& positions) const;

  /// Stride of each subsystem in the flat index.
  std::vector<std::size_t> strides() const;

  bool operator==(const RegisterLayout& other) const { return subsystems_ == other.subsystems_; }

 private:
  std::vector<Subsystem> subsystems_;
  std::size_t total_dim_ = 1;
};

/// Flat offsets of every basis state of the selected subsystems, enumerated
/// row-major in the order given. Adding the offsets of complementary
/// selections yields full flat indices.
std::vector<std::size_t> subsystem_offsets(const RegisterLayout& layout,
                                           const std::vector<std::size_t>& positions);

/// Positions of the subsystems not in `positions`, in layout order.
std::vector<std::size_t> complement_positions(const RegisterLayout& layout,
                                              const std::vector<std::size_t>& positions);

/// Unit vector over a RegisterLayout. The constructor rejects norms off by
/// more than 1e-10 and renormalizes the rest.
class PureState {
 public:
  PureState(RegisterLayout layout, CVector amplitudes);

  const RegisterLayout& layout() const { return layout_; }
  const CVector& amplitudes() const { return amplitudes_; }

 private:
  RegisterLayout layout_;
  CVector amplitudes_;
};

/// Hermitian, positive semidefinite, unit-trace matrix over a RegisterLayout.
///
/// Construction validates hermiticity and trace to 1e-10 and the smallest
/// eigenvalue against -1e-9, then stores the symmetrized matrix together with
/// its clipped spectrum so entropies need no second decomposition.
class DensityState {
 public:
  DensityState(RegisterLayout layout, CMatrix matrix);

  const RegisterLayout& layout() const { return layout_; }
  const CMatrix& matrix() const { return matrix_; }
  /// Ascending eigenvalues, clipped at zero and renormalized to sum 1.
  const std::vector<double>& spectrum() const { return spectrum_; }

 private:
  RegisterLayout layout_;
  CMatrix matrix_;
  std::vector<double> spectrum_;
};

DensityState to_density(const PureState& state);

DensityState tensor_product(const DensityState& a, const DensityState& b);
PureState tensor_product(const PureState& a, const PureState& b);

/// Reduced state on `keep`; the result lists the kept subsystems in their
/// original layout order regardless of the order requested.
DensityState partial_trace(const DensityState& state, const Labels& keep);
DensityState partial_trace(const PureState& state, const Labels& keep);

/// Purification |Psi> on (reference, original subsystems) with a reference of
/// the full dimension of rho.
PureState purify(const DensityState& rho, const std::string& reference_label);

/// -Tr(rho log2 rho) in bits.
double von_neumann_entropy(const DensityState& rho);

/// Apply `op` to the listed subsystems. Rows of `op` enumerate the output
/// dimensions `out_dims` row-major in target order, columns the current
/// dimensions. Output dimensions may differ from input dimensions.
PureState apply_operator(const PureState& state, const Labels& targets, const CMatrix& op,
                         const std::vector<std::size_t>& out_dims);
PureState apply_operator(const PureState& state, const Labels& targets, const CMatrix& op);

/// Tensor a fresh subsystem in the given local pure state onto the right.
PureState append_subsystem(const PureState& state, const Subsystem& sub, const CVector& local);

/// Fuse adjacent subsystems (listed in layout order) into one register.
PureState merge_adjacent(const PureState& state, const Labels& labels, const std::string& merged);

PureState relabel(const PureState& state, const std::string& from, const std::string& to);

// Fixtures used throughout tests and the CLI.
PureState basis_state(const RegisterLayout& layout, const std::vector<std::size_t>& digits);
/// (|00> + |11>)/sqrt(2) on two qubits.
PureState bell_pair(const std::string& a, const std::string& b);
/// sum_i |ii>/sqrt(d).
PureState maximally_entangled(const std::string& a, const std::string& b, std::size_t dim);
/// (|0...0> + |1...1>)/sqrt(2) over qubits.
PureState ghz_state(const Labels& labels);
DensityState maximally_mixed(const std::string& label, std::size_t dim);
DensityState diagonal_state(const std::string& label, const std::vector<double>& probabilities);

}  // namespace qvenn
