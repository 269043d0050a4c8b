#pragma once

namespace qvenn::tol {

// State and channel invariants (norm, trace, hermiticity, completeness).
inline constexpr double kState = 1e-10;
// Eigenvalues in [-kClip, 0) are numerical noise and are clipped to zero.
inline constexpr double kClip = 1e-9;
// Non-negativity slack for mutual and conditional-mutual entropies.
inline constexpr double kSign = 1e-9;
// Equality of entropy differences (one decade looser than the eigensolver).
inline constexpr double kIdentity = 1e-8;
// Erasure correctability and the side-channel diagram identities.
inline constexpr double kCorrectable = 1e-7;
// Classical quantities are exact sums over probabilities.
inline constexpr double kClassical = 1e-10;
inline constexpr double kDistribution = 1e-12;

}  // namespace qvenn::tol
