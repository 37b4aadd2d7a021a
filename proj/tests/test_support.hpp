// Test-only oracles. Everything here is computed from the defining formulas
// in floating point, independently of the exact-phase library paths.
#pragma once

#include "wehrl/group.hpp"
#include "wehrl/states.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

namespace wehrl::oracle {

inline const std::vector<std::string>& standard_suite() {
  static const std::vector<std::string> suite{"Z2", "Z3",    "Z4",    "Z6", "Z8",
                                              "Z2xZ2", "Z4xZ2", "Z3xZ3", "Z9", "Z2xZ2xZ2"};
  return suite;
}

/// exp(2 pi i sum_j a_j g_j / n_j) straight from the coordinates.
inline std::complex<double> naive_character(const GroupDescriptor& group, std::size_t a, std::size_t g) {
  const GroupElement ea = group.element(a);
  const GroupElement eg = group.element(g);
  double angle = 0.0;
  for (std::size_t j = 0; j < group.rank(); ++j) {
    angle += 2.0 * std::numbers::pi * ea.coords[j] * eg.coords[j] / group.cyclic_orders()[j];
  }
  return std::polar(1.0, angle);
}

/// Coordinate-wise h - g, without index arithmetic.
inline std::size_t naive_sub(const GroupDescriptor& group, std::size_t h, std::size_t g) {
  GroupElement eh = group.element(h);
  const GroupElement eg = group.element(g);
  for (std::size_t j = 0; j < group.rank(); ++j) {
    const int n = group.cyclic_orders()[j];
    eh.coords[j] = ((eh.coords[j] - eg.coords[j]) % n + n) % n;
  }
  return group.index_of(eh);
}

/// Dense W(g, lambda): M[h, h - g] = lambda(h).
inline Matrix naive_weyl(const GroupDescriptor& group, std::size_t z) {
  const std::size_t n = group.order();
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t h = 0; h < n; ++h) {
    m(static_cast<Eigen::Index>(h), static_cast<Eigen::Index>(naive_sub(group, h, z / n))) =
        naive_character(group, z % n, h);
  }
  return m;
}

/// Q(z) = |<W(z) phi, psi>|^2 by dense matrix-vector products.
inline std::vector<double> naive_husimi(const GroupDescriptor& group, const Vector& phi, const Vector& psi) {
  std::vector<double> q(group.phase_space_size());
  for (std::size_t z = 0; z < q.size(); ++z) q[z] = std::norm((naive_weyl(group, z) * phi).dot(psi));
  return q;
}

/// -sum_z (1/|G|) Q log Q on the unnormalized vector psi.
inline double naive_entropy(const GroupDescriptor& group, const Vector& phi, const Vector& psi) {
  double s = 0.0;
  for (double q : naive_husimi(group, phi, psi)) {
    if (q > 0.0) s -= q * std::log(q);
  }
  return s / static_cast<double>(group.order());
}

}  // namespace wehrl::oracle
