// Coherent-state frames {|z> = W(z)|phi> : z in F} and the vacuum
// structure for a subgroup H: the indicator vacuum, its uniqueness, the
// overlap dichotomy and the orthonormal coset basis.
//
// Haar convention: every z in F carries weight 1/|G|. The frame then
// resolves the identity with constant 1 and vol(K) = |K|/|G| = 1 for every
// maximal compact K.
#pragma once

#include "wehrl/group.hpp"
#include "wehrl/states.hpp"
#include "wehrl/weyl.hpp"

#include <optional>
#include <vector>

namespace wehrl {

class NotVacuumFrame : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Normalized indicator of H.
StateVector vacuum_vector(const Subgroup& h);

/// max_{u in K} ||W(u) psi - psi||_inf.
double invariance_residual(const PhaseSubgroup& k, const Vector& psi);

/// Dimension of { psi : W(u) psi = psi for all u in K }, as the null space of
/// sum_{u in K} (I - W(u)) with singular values below 1e-9 * dim counted as
/// zero.
std::size_t invariant_subspace_dim(const PhaseSubgroup& k);

/// Unit vector spanning the invariant subspace of K, from the null space
/// (defined up to phase; only meaningful when the dimension is 1).
StateVector invariant_vector(const PhaseSubgroup& k);

class CoherentFrame {
 public:
  /// Frame whose fiducial is the indicator vacuum of H.
  static CoherentFrame vacuum(const Subgroup& h);

  /// Generalized frame over an arbitrary unit fiducial.
  CoherentFrame(GroupDescriptor group, StateVector fiducial);

  /// Frame with a candidate subgroup; it counts as a vacuum frame iff the
  /// fiducial is invariant under K = maximal_compact(h) to 1e-12.
  CoherentFrame(StateVector fiducial, const Subgroup& h);

  const GroupDescriptor& group() const { return group_; }
  const StateVector& fiducial() const { return fiducial_; }
  std::size_t dim() const { return group_.order(); }
  std::size_t size() const { return group_.phase_space_size(); }
  double haar_weight() const { return 1.0 / static_cast<double>(group_.order()); }

  const std::optional<Subgroup>& subgroup() const { return subgroup_; }
  bool is_vacuum() const { return stabilizer_.has_value(); }
  /// K for a vacuum frame; throws NotVacuumFrame otherwise.
  const PhaseSubgroup& stabilizer() const;

  Vector state(std::size_t point_index) const;
  StateVector coherent_state(const PhaseSpacePoint& z) const;

 private:
  GroupDescriptor group_;
  StateVector fiducial_;
  std::optional<Subgroup> subgroup_;
  std::optional<PhaseSubgroup> stabilizer_;
};

inline StateVector coherent_state(const CoherentFrame& frame, const PhaseSpacePoint& z) {
  return frame.coherent_state(z);
}

/// sum_z w |z><z|.
Matrix frame_operator(const CoherentFrame& frame);
/// ||sum_z w |z><z| - I||_max.
double resolution_residual(const CoherentFrame& frame);

/// |<z|z'>| for all pairs, indexed by phase-space index. Requires
/// |F| <= limit.
Eigen::MatrixXd overlap_matrix(const CoherentFrame& frame, std::size_t limit = dense_limit());

struct DichotomyReport {
  double max_deviation = 0.0;  // distance of each |<z|z'>| from {0, 1}
  bool relation_matches = false;  // value 1 exactly on z - z' in K
};

/// Overlap dichotomy of a vacuum frame checked against K-coset equivalence.
DichotomyReport overlap_dichotomy(const CoherentFrame& frame, std::size_t limit = dense_limit());

/// Some u in K with omega(z, u) != 1, for z outside K.
std::optional<PhaseSpacePoint> separating_element(const PhaseSubgroup& k, const PhaseSpacePoint& z);

/// max over z outside K of |<0|W(z)|0>| for the frame fiducial.
double vacuum_offcoset_expectation(const CoherentFrame& frame);

/// Coherent states at the coset representatives of F/K.
std::vector<StateVector> coset_basis(const CoherentFrame& frame);

/// ||Gram - I||_max.
double gram_residual(const std::vector<StateVector>& family);

/// Product frame over G1 x G2 with fiducial phi1 (x) phi2. When both inputs
/// are vacuum frames the product carries H1 x H2.
CoherentFrame tensor_product(const CoherentFrame& a, const CoherentFrame& b);

/// Concatenation of the cyclic factors of `a` and `b`.
GroupDescriptor product_group(const GroupDescriptor& a, const GroupDescriptor& b);

}  // namespace wehrl
