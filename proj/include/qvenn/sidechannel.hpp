#pragma once

#include <string>
#include <vector>

#include "qvenn/codes.hpp"
#include "qvenn/random.hpp"
#include "qvenn/venn.hpp"

namespace qvenn {

/// Pure state over reference, quantum output, precursor "P" and amplified
/// classical variable "C", with P and C fully correlated in `basis`.
struct SideChannelState {
  PureState state;
  CMatrix basis;  // columns are the amplification basis of P
  Labels reference;
  Labels quantum;
  double k = 0.0;  // S(R)
  double c = 0.0;  // S(C)
  double s = 0.0;  // S(Q)
};

/// Copies P into a fresh C (dim C = dim P) in the given orthonormal basis:
/// B^dagger on P, |i>_P|j>_C -> |i>_P|j+i mod d>_C, then B on P.
SideChannelState amplify_precursor(const PureState& state, const CMatrix& basis, const Labels& reference,
                                   const Labels& quantum);

struct LosslessCheck {
  double mutual_RP = 0.0;
  double mutual_RQC = 0.0;
  bool lossless = false;  // S(R:P) <= 1e-7
};

LosslessCheck lossless_amplification_check(const SideChannelState& sc);

struct SideChannelDiagram {
  double k = 0.0, s = 0.0, c = 0.0;
  double S_RQ = 0.0, S_RC = 0.0, S_QC = 0.0, S_RQC = 0.0;
  double S_P = 0.0, S_CP = 0.0;
  double mutual_RQ = 0.0, mutual_RC = 0.0, mutual_QC = 0.0;
  double mutual_RP = 0.0, mutual_RQC = 0.0, mutual_R_PC = 0.0;
  double center = 0.0;       // S(R:Q:C)
  double cond_RQ_C = 0.0;    // S(RQ|C)
  double cond_C_RQ = 0.0;    // S(C|RQ)
  double cond_mutual_RC_Q = 0.0;  // S(R:C|Q)
  VennDiagram3 venn;         // R, Q, C after amplification
  std::vector<std::string> violations;

  bool holds() const { return violations.empty(); }
};

/// Throws IdentityViolation when the amplification is not lossless; the
/// remaining identities are checked to 1e-7 and listed in `violations`.
SideChannelDiagram side_channel_diagram(const SideChannelState& sc);

/// R-L Bell pair and A-Q Bell pair; the unitary Bell measurement (CNOT L->A,
/// then H on L) maps (L, A) to the precursor P, amplified in the
/// computational basis.
SideChannelState build_teleportation_model();

/// R-Q Bell pair and a precursor qubit in |+> controlling X on Q, amplified
/// in the computational basis (lossless) or the Hadamard basis (lossy).
SideChannelState build_controlled_flip_model(bool hadamard_amplification);

/// Encodes R with `code` over Q1..Qn, prepares m = |controlled| precursor
/// qubits in |+>, lets qubit j apply Pauli word j to the code block and
/// amplifies P in `basis` (identity when empty).
SideChannelState build_code_side_channel(const EncodingIsometry& code, const std::vector<std::string>& controlled,
                                         const CMatrix& basis = CMatrix());

/// Encoder sum_i sqrt(p_i) (1 (x) V W_i)|Phi>_{RL} |i>_P with a random
/// isometry V : L -> Q, distinct Weyl operators W_i and random weights p_i,
/// amplified in the computational basis. branches <= logical_dim^2.
SideChannelState random_lossless_model(std::size_t logical_dim, std::size_t quantum_dim, std::size_t branches,
                                       Rng& rng);

struct SideErasureCheck {
  double mutual_R_QeP = 0.0;
  bool correctable = false;
};

/// S(R:Q_e P) for 0-based pattern indices into sc.quantum.
SideErasureCheck side_channel_erasure_check(const SideChannelState& sc, const std::vector<std::size_t>& pattern);

struct SideErasureVerdict {
  bool correctable = false;
  double worst_loss = 0.0;
  std::vector<std::size_t> worst_pattern;
  std::size_t patterns_checked = 0;
  bool singleton_consistent = true;  // correctable implies round(k) <= n - 2e
};

SideErasureVerdict verify_side_channel_code(const SideChannelState& sc, std::size_t e);

}  // namespace qvenn
