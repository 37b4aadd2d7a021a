#include "wehrl/weyl.hpp"

#include <algorithm>
#include <random>

namespace wehrl {

Phase cocycle_phase_index(const GroupDescriptor& group, std::size_t z, std::size_t w) {
  const std::size_t n = group.order();
  // lambda(g') - lambda'(g) as phases.
  return group.pairing(z % n, w / n) - group.pairing(w % n, z / n);
}

Phase cocycle_phase(const GroupDescriptor& group, const PhaseSpacePoint& z, const PhaseSpacePoint& w) {
  return cocycle_phase_index(group, group.index_of(z), group.index_of(w));
}

std::complex<double> cocycle(const GroupDescriptor& group, const PhaseSpacePoint& z, const PhaseSpacePoint& w) {
  return cocycle_phase(group, z, w).value();
}

HeisenbergElement heis_identity(const GroupDescriptor& group) {
  return HeisenbergElement{group.point(0), Phase()};
}

HeisenbergElement heis_mul(const GroupDescriptor& group, const HeisenbergElement& a, const HeisenbergElement& b) {
  return HeisenbergElement{add(group, a.z, b.z), a.t + b.t + cocycle_phase(group, a.z, b.z)};
}

WeylOperator::WeylOperator(const GroupDescriptor& group, const PhaseSpacePoint& z) {
  build(group, group.index_of(z.g), group.index_of(z.lambda));
}

WeylOperator::WeylOperator(const GroupDescriptor& group, std::size_t point_index) {
  if (point_index >= group.phase_space_size()) throw DescriptorMismatch("phase-space index out of range");
  build(group, point_index / group.order(), point_index % group.order());
}

void WeylOperator::build(const GroupDescriptor& group, std::size_t g, std::size_t lambda) {
  const std::size_t n = group.order();
  source_.resize(n);
  diagonal_.resize(n);
  for (std::size_t h = 0; h < n; ++h) {
    source_[h] = group.sub_index(h, g);
    diagonal_[h] = group.pairing(lambda, h).value();
  }
}

Vector WeylOperator::apply(const Vector& f) const {
  if (static_cast<std::size_t>(f.size()) != dim()) throw DimensionMismatch("weyl_apply: vector dimension mismatch");
  Vector out(f.size());
  for (std::size_t h = 0; h < dim(); ++h) {
    out(static_cast<Eigen::Index>(h)) = diagonal_[h] * f(static_cast<Eigen::Index>(source_[h]));
  }
  return out;
}

Vector WeylOperator::apply_adjoint(const Vector& f) const {
  if (static_cast<std::size_t>(f.size()) != dim()) throw DimensionMismatch("weyl_apply: vector dimension mismatch");
  Vector out(f.size());
  for (std::size_t h = 0; h < dim(); ++h) {
    out(static_cast<Eigen::Index>(source_[h])) = std::conj(diagonal_[h]) * f(static_cast<Eigen::Index>(h));
  }
  return out;
}

Matrix WeylOperator::dense(std::size_t limit) const {
  if (dim() > limit) {
    throw DenseLimitExceeded("dense Weyl operator of dimension " + std::to_string(dim()) + " exceeds limit " +
                             std::to_string(limit));
  }
  const auto d = static_cast<Eigen::Index>(dim());
  Matrix m = Matrix::Zero(d, d);
  for (std::size_t h = 0; h < dim(); ++h) {
    m(static_cast<Eigen::Index>(h), static_cast<Eigen::Index>(source_[h])) = diagonal_[h];
  }
  return m;
}

Vector weyl_apply(const GroupDescriptor& group, const PhaseSpacePoint& z, const Vector& f) {
  return WeylOperator(group, z).apply(f);
}

StateVector weyl_apply(const GroupDescriptor& group, const PhaseSpacePoint& z, const StateVector& f) {
  return StateVector::normalized(WeylOperator(group, z).apply(f.amplitudes()));
}

Matrix weyl_dense(const GroupDescriptor& group, const PhaseSpacePoint& z, std::size_t limit) {
  return WeylOperator(group, z).dense(limit);
}

CcrReport verify_ccr(const GroupDescriptor& group, std::uint64_t seed, double tolerance) {
  const std::size_t points = group.phase_space_size();
  std::mt19937_64 rng(seed);
  std::vector<WeylOperator> ops;
  ops.reserve(points);
  for (std::size_t z = 0; z < points; ++z) ops.emplace_back(group, z);

  CcrReport report;
  report.exhaustive = points <= 256;
  auto check = [&](std::size_t z, std::size_t w, const Vector& f) {
    const Vector lhs = ops[z].apply(ops[w].apply(f));
    const Vector rhs = cocycle_phase_index(group, z, w).value() * ops[w].apply(ops[z].apply(f));
    report.max_residual = std::max(report.max_residual, (lhs - rhs).cwiseAbs().maxCoeff());
    ++report.pairs_checked;
  };

  if (report.exhaustive) {
    for (std::size_t z = 0; z < points; ++z) {
      const Vector f = random_state(group.order(), rng).amplitudes();
      for (std::size_t w = 0; w < points; ++w) check(z, w, f);
    }
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, points - 1);
    for (int i = 0; i < 10000; ++i) {
      const std::size_t z = pick(rng);
      const std::size_t w = pick(rng);
      check(z, w, random_state(group.order(), rng).amplitudes());
    }
  }
  report.passed = report.max_residual <= tolerance;
  return report;
}

}  // namespace wehrl
