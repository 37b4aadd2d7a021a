#include "wehrl/states.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace wehrl {

std::size_t dense_limit() {
  if (const char* env = std::getenv("WEHRL_DENSE_LIMIT")) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
  }
  return 256;
}

StateVector::StateVector(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw InvalidState("state vector is empty");
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > 1e-12) {
    throw InvalidState("state vector norm " + std::to_string(norm) + " is not 1");
  }
}

StateVector StateVector::normalized(const Vector& v) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw InvalidState("cannot normalize a zero vector");
  return StateVector(v / norm);
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(std::move(v));
}

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
    throw InvalidState("density matrix must be square and non-empty");
  }
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw InvalidState("density matrix is not Hermitian");
  }
  const std::complex<double> trace = entries_.trace();
  if (std::abs(trace - 1.0) > 1e-10) throw InvalidState("density matrix trace is not 1");
  const Eigen::SelfAdjointEigenSolver<Matrix> eig(entries_, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-10) throw InvalidState("density matrix is not positive semidefinite");
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  const Vector& v = psi.amplitudes();
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return DensityMatrix(Matrix::Identity(d, d) / static_cast<double>(dim));
}

StateVector random_state(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = {normal(rng), normal(rng)};
  return StateVector::normalized(v);
}

DensityMatrix random_density(std::size_t dim, std::mt19937_64& rng, std::size_t rank) {
  if (rank == 0) rank = std::uniform_int_distribution<std::size_t>(1, dim)(rng);
  std::normal_distribution<double> normal;
  Matrix g(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(rank));
  for (Eigen::Index j = 0; j < g.cols(); ++j) {
    for (Eigen::Index i = 0; i < g.rows(); ++i) g(i, j) = {normal(rng), normal(rng)};
  }
  Matrix rho = g * g.adjoint();
  rho = (rho + rho.adjoint()).eval() * 0.5;
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho));
}

}  // namespace wehrl
