#include "wehrl/coherent_frame.hpp"

#include <algorithm>
#include <cmath>

namespace wehrl {

StateVector vacuum_vector(const Subgroup& h) {
  const auto d = static_cast<Eigen::Index>(h.parent().order());
  Vector v = Vector::Zero(d);
  const double amplitude = 1.0 / std::sqrt(static_cast<double>(h.size()));
  for (std::size_t i : h.indices()) v(static_cast<Eigen::Index>(i)) = amplitude;
  return StateVector(std::move(v));
}

double invariance_residual(const PhaseSubgroup& k, const Vector& psi) {
  double worst = 0.0;
  for (std::size_t u : k.indices()) {
    worst = std::max(worst, (WeylOperator(k.group(), u).apply(psi) - psi).cwiseAbs().maxCoeff());
  }
  return worst;
}

namespace {

Matrix invariance_defect(const PhaseSubgroup& k) {
  const std::size_t n = k.group().order();
  if (n > dense_limit()) throw DenseLimitExceeded("invariant subspace computation exceeds dense limit");
  const auto d = static_cast<Eigen::Index>(n);
  Matrix m = Matrix::Zero(d, d);
  for (std::size_t u : k.indices()) m += Matrix::Identity(d, d) - WeylOperator(k.group(), u).dense();
  return m;
}

}  // namespace

std::size_t invariant_subspace_dim(const PhaseSubgroup& k) {
  const Matrix m = invariance_defect(k);
  const Eigen::JacobiSVD<Matrix> svd(m);
  const double cutoff = 1e-9 * static_cast<double>(m.rows());
  const auto& sv = svd.singularValues();
  return static_cast<std::size_t>(std::count_if(sv.begin(), sv.end(), [&](double s) { return s < cutoff; }));
}

StateVector invariant_vector(const PhaseSubgroup& k) {
  const Matrix m = invariance_defect(k);
  const Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  return StateVector::normalized(svd.matrixV().col(m.cols() - 1));
}

// ---------------------------------------------------------------------------
// CoherentFrame

CoherentFrame CoherentFrame::vacuum(const Subgroup& h) { return CoherentFrame(vacuum_vector(h), h); }

CoherentFrame::CoherentFrame(GroupDescriptor group, StateVector fiducial)
    : group_(std::move(group)), fiducial_(std::move(fiducial)) {
  if (fiducial_.dim() != group_.order()) throw DimensionMismatch("fiducial dimension does not match |G|");
}

CoherentFrame::CoherentFrame(StateVector fiducial, const Subgroup& h)
    : group_(h.parent()), fiducial_(std::move(fiducial)), subgroup_(h) {
  if (fiducial_.dim() != group_.order()) throw DimensionMismatch("fiducial dimension does not match |G|");
  PhaseSubgroup k = maximal_compact(h);
  if (invariance_residual(k, fiducial_.amplitudes()) <= 1e-12) stabilizer_ = std::move(k);
}

const PhaseSubgroup& CoherentFrame::stabilizer() const {
  if (!stabilizer_) throw NotVacuumFrame("not a vacuum frame");
  return *stabilizer_;
}

Vector CoherentFrame::state(std::size_t point_index) const {
  return WeylOperator(group_, point_index).apply(fiducial_.amplitudes());
}

StateVector CoherentFrame::coherent_state(const PhaseSpacePoint& z) const {
  return StateVector(WeylOperator(group_, z).apply(fiducial_.amplitudes()));
}

Matrix frame_operator(const CoherentFrame& frame) {
  const auto d = static_cast<Eigen::Index>(frame.dim());
  Matrix sum = Matrix::Zero(d, d);
  for (std::size_t z = 0; z < frame.size(); ++z) {
    const Vector v = frame.state(z);
    sum.noalias() += v * v.adjoint();
  }
  return sum * frame.haar_weight();
}

double resolution_residual(const CoherentFrame& frame) {
  const auto d = static_cast<Eigen::Index>(frame.dim());
  return (frame_operator(frame) - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

namespace {

Matrix all_states(const CoherentFrame& frame) {
  Matrix states(static_cast<Eigen::Index>(frame.dim()), static_cast<Eigen::Index>(frame.size()));
  for (std::size_t z = 0; z < frame.size(); ++z) states.col(static_cast<Eigen::Index>(z)) = frame.state(z);
  return states;
}

}  // namespace

Eigen::MatrixXd overlap_matrix(const CoherentFrame& frame, std::size_t limit) {
  if (frame.size() > limit) {
    throw DenseLimitExceeded("overlap matrix over |F| = " + std::to_string(frame.size()) + " exceeds limit " +
                             std::to_string(limit));
  }
  const Matrix states = all_states(frame);
  return (states.adjoint() * states).cwiseAbs();
}

DichotomyReport overlap_dichotomy(const CoherentFrame& frame, std::size_t limit) {
  const PhaseSubgroup& k = frame.stabilizer();
  const GroupDescriptor& group = frame.group();
  const std::size_t n = group.order();
  const Eigen::MatrixXd overlaps = overlap_matrix(frame, limit);
  DichotomyReport report;
  report.relation_matches = true;
  for (std::size_t z = 0; z < frame.size(); ++z) {
    for (std::size_t w = 0; w < frame.size(); ++w) {
      const double v = overlaps(static_cast<Eigen::Index>(z), static_cast<Eigen::Index>(w));
      report.max_deviation = std::max(report.max_deviation, std::min(std::abs(v), std::abs(1.0 - v)));
      const std::size_t diff = group.sub_index(z / n, w / n) * n + group.sub_index(z % n, w % n);
      if ((v > 0.5) != k.contains_index(diff)) report.relation_matches = false;
    }
  }
  return report;
}

std::optional<PhaseSpacePoint> separating_element(const PhaseSubgroup& k, const PhaseSpacePoint& z) {
  const GroupDescriptor& group = k.group();
  const std::size_t zi = group.index_of(z);
  for (std::size_t u : k.indices()) {
    if (!cocycle_phase_index(group, zi, u).is_zero()) return group.point(u);
  }
  return std::nullopt;
}

double vacuum_offcoset_expectation(const CoherentFrame& frame) {
  const PhaseSubgroup& k = frame.stabilizer();
  const Vector& phi = frame.fiducial().amplitudes();
  double worst = 0.0;
  for (std::size_t z = 0; z < frame.size(); ++z) {
    if (k.contains_index(z)) continue;
    worst = std::max(worst, std::abs(phi.dot(frame.state(z))));
  }
  return worst;
}

std::vector<StateVector> coset_basis(const CoherentFrame& frame) {
  const PhaseSubgroup& k = frame.stabilizer();
  std::vector<StateVector> basis;
  for (std::size_t z : coset_representative_indices(k)) basis.push_back(StateVector::normalized(frame.state(z)));
  return basis;
}

double gram_residual(const std::vector<StateVector>& family) {
  double worst = 0.0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      const std::complex<double> ip = family[i].amplitudes().dot(family[j].amplitudes());
      worst = std::max(worst, std::abs(ip - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

GroupDescriptor product_group(const GroupDescriptor& a, const GroupDescriptor& b) {
  std::vector<int> orders = a.cyclic_orders();
  orders.insert(orders.end(), b.cyclic_orders().begin(), b.cyclic_orders().end());
  return GroupDescriptor(std::move(orders));
}

CoherentFrame tensor_product(const CoherentFrame& a, const CoherentFrame& b) {
  const GroupDescriptor group = product_group(a.group(), b.group());
  const Vector& pa = a.fiducial().amplitudes();
  const Vector& pb = b.fiducial().amplitudes();
  Vector fiducial(pa.size() * pb.size());
  for (Eigen::Index i = 0; i < pa.size(); ++i) fiducial.segment(i * pb.size(), pb.size()) = pa(i) * pb;
  StateVector phi = StateVector::normalized(fiducial);
  if (a.subgroup() && b.subgroup()) {
    std::vector<std::size_t> indices;
    for (std::size_t i : a.subgroup()->indices()) {
      for (std::size_t j : b.subgroup()->indices()) indices.push_back(i * b.dim() + j);
    }
    return CoherentFrame(std::move(phi), Subgroup::from_indices(group, std::move(indices)));
  }
  return CoherentFrame(group, std::move(phi));
}

}  // namespace wehrl
