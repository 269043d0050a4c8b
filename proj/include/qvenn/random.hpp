#pragma once

#include <cstdint>
#include <random>

#include "qvenn/channel.hpp"
#include "qvenn/registers.hpp"

namespace qvenn {

using Rng = std::mt19937_64;

/// Complex Gaussian matrix with independent standard-normal real and
/// imaginary parts.
CMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// G G^dagger / Tr(G G^dagger) for a square Ginibre G: full rank almost surely.
DensityState random_density(const RegisterLayout& layout, Rng& rng);
PureState random_pure(const RegisterLayout& layout, Rng& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with the phase fix).
CMatrix random_unitary(std::size_t dim, Rng& rng);
/// rows x cols isometry, rows >= cols.
CMatrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng);

/// Channel whose Kraus operators are the blocks of a random isometry.
QuantumChannel random_channel(std::size_t input_dim, std::size_t output_dim, std::size_t kraus_count,
                              Rng& rng);

}  // namespace qvenn
