// Cocycle, Heisenberg group law and Weyl operators of the natural
// representation (W(g, lambda) f)(h) = lambda(h) f(h - g) on C^|G|.
#pragma once

#include "wehrl/group.hpp"
#include "wehrl/states.hpp"

#include <cstdint>
#include <vector>

namespace wehrl {

/// omega((g, lambda), (g', lambda')) = lambda(g') conj(lambda'(g)).
Phase cocycle_phase(const GroupDescriptor& group, const PhaseSpacePoint& z, const PhaseSpacePoint& w);
std::complex<double> cocycle(const GroupDescriptor& group, const PhaseSpacePoint& z, const PhaseSpacePoint& w);
Phase cocycle_phase_index(const GroupDescriptor& group, std::size_t z, std::size_t w);

/// (z, t) in Heis(G) = F x T, with t carried as an exact phase.
struct HeisenbergElement {
  PhaseSpacePoint z;
  Phase t;
  bool operator==(const HeisenbergElement&) const = default;
};

HeisenbergElement heis_identity(const GroupDescriptor& group);
/// (z, t)(z', t') = (z + z', t t' omega(z, z')).
HeisenbergElement heis_mul(const GroupDescriptor& group, const HeisenbergElement& a, const HeisenbergElement& b);

/// W(z) in structured form D_lambda P_g: a translation followed by a
/// diagonal of character values. Application is O(|G|).
class WeylOperator {
 public:
  WeylOperator(const GroupDescriptor& group, const PhaseSpacePoint& z);
  WeylOperator(const GroupDescriptor& group, std::size_t point_index);

  std::size_t dim() const { return source_.size(); }

  /// out[h] = lambda(h) f[h - g].
  Vector apply(const Vector& f) const;
  /// W(z)^dagger f, i.e. out[k] = conj(lambda(k + g)) f[k + g].
  Vector apply_adjoint(const Vector& f) const;

  /// M[h, h - g] = lambda(h). Throws DenseLimitExceeded above `limit`.
  Matrix dense(std::size_t limit = dense_limit()) const;

 private:
  void build(const GroupDescriptor& group, std::size_t g, std::size_t lambda);

  std::vector<std::size_t> source_;            // h - g
  std::vector<std::complex<double>> diagonal_;  // lambda(h)
};

Vector weyl_apply(const GroupDescriptor& group, const PhaseSpacePoint& z, const Vector& f);
StateVector weyl_apply(const GroupDescriptor& group, const PhaseSpacePoint& z, const StateVector& f);
Matrix weyl_dense(const GroupDescriptor& group, const PhaseSpacePoint& z, std::size_t limit = dense_limit());

struct CcrReport {
  std::size_t pairs_checked = 0;
  bool exhaustive = false;
  double max_residual = 0.0;
  bool passed = false;
};

/// Checks W(z) W(z') f = omega(z, z') W(z') W(z) f on random vectors f,
/// over all pairs when |F| <= 256 and 10^4 random pairs otherwise.
CcrReport verify_ccr(const GroupDescriptor& group, std::uint64_t seed = 0, double tolerance = 1e-12);

}  // namespace wehrl
