// Pure and mixed states on C^|G| = L^2(G). Amplitudes are indexed by the
// lexicographic element order of the group.
#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <random>
#include <stdexcept>

namespace wehrl {

using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

class InvalidState : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DenseLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cap on dense operator sizes. WEHRL_DENSE_LIMIT overrides the default 256.
std::size_t dense_limit();

/// Unit vector, norm 1 to 1e-12.
class StateVector {
 public:
  explicit StateVector(Vector amplitudes);
  static StateVector normalized(const Vector& v);
  static StateVector basis(std::size_t dim, std::size_t index);

  const Vector& amplitudes() const { return amplitudes_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }

 private:
  Vector amplitudes_;
};

/// Hermitian to 1e-12, eigenvalues >= -1e-10, trace 1 to 1e-10.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries);
  static DensityMatrix pure(const StateVector& psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  const Matrix& entries() const { return entries_; }
  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }

 private:
  Matrix entries_;
};

/// Haar-random unit vector (normalized complex Gaussian).
StateVector random_state(std::size_t dim, std::mt19937_64& rng);

/// G G^dagger / tr for a Ginibre matrix G of shape dim x rank. rank == 0
/// picks a rank uniformly in [1, dim].
DensityMatrix random_density(std::size_t dim, std::mt19937_64& rng, std::size_t rank = 0);

}  // namespace wehrl
