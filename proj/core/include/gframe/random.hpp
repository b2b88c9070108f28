#pragma once

#include <cstdint>
#include <random>

#include "gframe/linalg.hpp"

namespace gframe {

using Rng = std::mt19937_64;

/// Matrix with i.i.d. complex Gaussian entries; real and imaginary parts are
/// each N(0, scale^2 / 2), so E|z|^2 = scale^2.
Matrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng, double scale = 1.0);

/// Haar-distributed unitary of size n (QR of a Gaussian matrix with the
/// phases of R's diagonal removed).
Matrix random_unitary(Eigen::Index n, Rng& rng);

/// k x d coisometry (U U^* = I_k), k <= d: the first k rows of a Haar unitary.
Matrix random_coisometry(Eigen::Index k, Eigen::Index d, Rng& rng);

}  // namespace gframe
