// Husimi functions, Wehrl and von Neumann entropies, the measuring channel
// and the tensor-product machinery used for monotonicity.
#pragma once

#include "wehrl/coherent_frame.hpp"
#include "wehrl/group.hpp"
#include "wehrl/states.hpp"

#include <string>
#include <vector>

namespace wehrl {

/// Q(z) = <z|rho|z> for every z in F, indexed by phase-space index.
class HusimiTable {
 public:
  HusimiTable(GroupDescriptor group, std::vector<double> values);

  const GroupDescriptor& group() const { return group_; }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t index) const { return values_[index]; }
  double at(const PhaseSpacePoint& z) const { return values_[group_.index_of(z)]; }
  double haar_weight() const { return 1.0 / static_cast<double>(group_.order()); }

  /// sum_z w Q(z); 1 for a state and a resolving frame.
  double mass() const;
  double max() const;
  std::size_t argmax() const;

 private:
  GroupDescriptor group_;
  std::vector<double> values_;
};

/// Reference path, O(|G|^4).
HusimiTable husimi(const CoherentFrame& frame, const DensityMatrix& rho);

/// Pure-state path: for each g, lambda -> <W(g, lambda) phi | psi> is a DFT
/// of h -> conj(phi(h - g)) psi(h). O(|G|^2 log |G|).
HusimiTable husimi_fast(const CoherentFrame& frame, const StateVector& psi);

/// Values of Q below this are treated as exact zeros in entropies.
inline constexpr double kZeroQ = 1e-15;

/// -sum_z w Q log Q in nats, with 0 log 0 = 0.
double wehrl_entropy(const HusimiTable& table);

/// -vol(K) sum over coset representatives of Q log Q, vol(K) = 1. Requires
/// a vacuum frame.
double wehrl_entropy_coset(const CoherentFrame& frame, const DensityMatrix& rho);

/// Largest spread max - min of Q within a single K-coset.
double coset_spread(const CoherentFrame& frame, const HusimiTable& table);

/// -tr rho log rho in nats; eigenvalues below 1e-12 are clamped to 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// Phi[rho] = sum_z w Q(z) |z><z|.
DensityMatrix measurement_channel(const CoherentFrame& frame, const DensityMatrix& rho);

/// A table counts as coherent when max Q >= 1 - 1e-9.
bool is_coherent(const HusimiTable& table);

enum class LogBase { e, two };

std::string to_string(LogBase base);
LogBase parse_log_base(const std::string& text);

/// Entropy values are reported in `base`.
struct EntropyReport {
  double wehrl = 0.0;
  double von_neumann = 0.0;
  double gap = 0.0;
  LogBase log_base = LogBase::e;
};

EntropyReport entropy_report(const CoherentFrame& frame, const DensityMatrix& rho, LogBase base = LogBase::e);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

enum class Factor { first, second };

/// Traces out `traced` from a density matrix on C^dim_a (x) C^dim_b.
DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b, Factor traced);

/// sum_{z2} w2 Q12(z1, z2) as a table over F1.
HusimiTable husimi_marginal(const HusimiTable& joint, const GroupDescriptor& first, const GroupDescriptor& second);

/// S^W(rho12) - [S^W(rho1) + S^W(rho2) + S(rho12) - S(rho1) - S(rho2)].
/// Evaluated for reporting only; no sign is asserted.
double strong_subadditivity_gap(const CoherentFrame& a, const CoherentFrame& b, const DensityMatrix& rho12);

}  // namespace wehrl
