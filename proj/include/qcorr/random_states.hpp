#pragma once

#include <cstdint>
#include <random>

#include "qcorr/qstate.hpp"

namespace qcorr {

using Rng = std::mt19937_64;

/// Full-rank random state G G^dagger / Tr from a complex Gaussian G.
DensityMatrix random_state(Rng& rng);

/// Random state with both marginals maximally mixed: the average of a random
/// state and its spin-flipped partner (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y).
DensityMatrix random_degenerate_marginal_state(Rng& rng);

/// Haar-random 2x2 unitary.
Mat2 random_unitary(Rng& rng);

/// Random Hermitian matrix with Gaussian entries.
Mat4 random_hermitian(Rng& rng);

} // namespace qcorr
