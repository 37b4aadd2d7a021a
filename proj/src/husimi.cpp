#include "wehrl/husimi.hpp"

#include "wehrl/cyclic_fft.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wehrl {

HusimiTable::HusimiTable(GroupDescriptor group, std::vector<double> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_.phase_space_size()) throw DimensionMismatch("Husimi table size is not |F|");
}

double HusimiTable::mass() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0) * haar_weight();
}

double HusimiTable::max() const { return *std::max_element(values_.begin(), values_.end()); }

std::size_t HusimiTable::argmax() const {
  return static_cast<std::size_t>(std::max_element(values_.begin(), values_.end()) - values_.begin());
}

HusimiTable husimi(const CoherentFrame& frame, const DensityMatrix& rho) {
  if (rho.dim() != frame.dim()) throw DimensionMismatch("husimi: density matrix dimension does not match frame");
  std::vector<double> q(frame.size());
  for (std::size_t z = 0; z < frame.size(); ++z) {
    const Vector v = frame.state(z);
    q[z] = v.dot(rho.entries() * v).real();
  }
  return HusimiTable(frame.group(), std::move(q));
}

HusimiTable husimi_fast(const CoherentFrame& frame, const StateVector& psi) {
  if (psi.dim() != frame.dim()) throw DimensionMismatch("husimi_fast: state dimension does not match frame");
  const GroupDescriptor& group = frame.group();
  const std::size_t n = group.order();
  const Vector& phi = frame.fiducial().amplitudes();
  const Vector& amp = psi.amplitudes();
  CyclicFft fft(group);
  auto buf = fft.data();
  std::vector<double> q(frame.size());
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      buf[h] = std::conj(phi(static_cast<Eigen::Index>(group.sub_index(h, g)))) * amp(static_cast<Eigen::Index>(h));
    }
    fft.forward();
    for (std::size_t a = 0; a < n; ++a) q[g * n + a] = std::norm(buf[a]);
  }
  return HusimiTable(group, std::move(q));
}

namespace {

double entropy_term(double q) { return q < kZeroQ ? 0.0 : -q * std::log(q); }

}  // namespace

double wehrl_entropy(const HusimiTable& table) {
  double sum = 0.0;
  for (double q : table.values()) sum += entropy_term(q);
  return sum * table.haar_weight();
}

double wehrl_entropy_coset(const CoherentFrame& frame, const DensityMatrix& rho) {
  if (!frame.is_vacuum()) throw NotVacuumFrame("coset formula requires vacuum frame");
  if (rho.dim() != frame.dim()) throw DimensionMismatch("density matrix dimension does not match frame");
  const double volume = static_cast<double>(frame.stabilizer().size()) * frame.haar_weight();
  double sum = 0.0;
  for (std::size_t z : coset_representative_indices(frame.stabilizer())) {
    const Vector v = frame.state(z);
    sum += entropy_term(v.dot(rho.entries() * v).real());
  }
  return volume * sum;
}

double coset_spread(const CoherentFrame& frame, const HusimiTable& table) {
  const PhaseSubgroup& k = frame.stabilizer();
  const GroupDescriptor& group = frame.group();
  const std::size_t n = group.order();
  double worst = 0.0;
  for (std::size_t z : coset_representative_indices(k)) {
    double lo = table[z];
    double hi = table[z];
    for (std::size_t u : k.indices()) {
      const double q = table[group.add_index(z / n, u / n) * n + group.add_index(z % n, u % n)];
      lo = std::min(lo, q);
      hi = std::max(hi, q);
    }
    worst = std::max(worst, hi - lo);
  }
  return worst;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const Eigen::SelfAdjointEigenSolver<Matrix> eig(rho.entries(), Eigen::EigenvaluesOnly);
  double sum = 0.0;
  for (double p : eig.eigenvalues()) {
    if (p >= 1e-12) sum -= p * std::log(p);
  }
  return sum;
}

DensityMatrix measurement_channel(const CoherentFrame& frame, const DensityMatrix& rho) {
  if (rho.dim() != frame.dim()) throw DimensionMismatch("channel: density matrix dimension does not match frame");
  const auto d = static_cast<Eigen::Index>(frame.dim());
  Matrix out = Matrix::Zero(d, d);
  for (std::size_t z = 0; z < frame.size(); ++z) {
    const Vector v = frame.state(z);
    const double q = v.dot(rho.entries() * v).real();
    out.noalias() += q * (v * v.adjoint());
  }
  return DensityMatrix(out * frame.haar_weight());
}

bool is_coherent(const HusimiTable& table) { return table.max() >= 1.0 - 1e-9; }

std::string to_string(LogBase base) { return base == LogBase::e ? "e" : "2"; }

LogBase parse_log_base(const std::string& text) {
  if (text == "e") return LogBase::e;
  if (text == "2") return LogBase::two;
  throw ParseError("log base must be 'e' or '2', got '" + text + "'");
}

EntropyReport entropy_report(const CoherentFrame& frame, const DensityMatrix& rho, LogBase base) {
  const double scale = base == LogBase::e ? 1.0 : 1.0 / std::log(2.0);
  EntropyReport report;
  report.wehrl = wehrl_entropy(husimi(frame, rho)) * scale;
  report.von_neumann = von_neumann_entropy(rho) * scale;
  report.gap = report.wehrl - report.von_neumann;
  report.log_base = base;
  return report;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  const Matrix& ma = a.entries();
  const Matrix& mb = b.entries();
  const Eigen::Index db = mb.rows();
  Matrix out(ma.rows() * db, ma.cols() * db);
  for (Eigen::Index i = 0; i < ma.rows(); ++i) {
    for (Eigen::Index j = 0; j < ma.cols(); ++j) out.block(i * db, j * db, db, db) = ma(i, j) * mb;
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b, Factor traced) {
  if (rho.dim() != dim_a * dim_b) throw DimensionMismatch("partial_trace: dimensions do not factor the matrix");
  const auto da = static_cast<Eigen::Index>(dim_a);
  const auto db = static_cast<Eigen::Index>(dim_b);
  const Matrix& m = rho.entries();
  if (traced == Factor::second) {
    Matrix out = Matrix::Zero(da, da);
    for (Eigen::Index i = 0; i < da; ++i) {
      for (Eigen::Index j = 0; j < da; ++j) out(i, j) = m.block(i * db, j * db, db, db).trace();
    }
    return DensityMatrix(std::move(out));
  }
  Matrix out = Matrix::Zero(db, db);
  for (Eigen::Index k = 0; k < da; ++k) out += m.block(k * db, k * db, db, db);
  return DensityMatrix(std::move(out));
}

HusimiTable husimi_marginal(const HusimiTable& joint, const GroupDescriptor& first, const GroupDescriptor& second) {
  const GroupDescriptor group = product_group(first, second);
  if (!(joint.group() == group)) throw DimensionMismatch("husimi_marginal: table is not over the product group");
  const std::size_t n1 = first.order();
  const std::size_t n2 = second.order();
  const std::size_t n = n1 * n2;
  std::vector<double> out(first.phase_space_size(), 0.0);
  // Product index: g = g1 n2 + g2, lambda = a1 n2 + a2.
  for (std::size_t z = 0; z < joint.values().size(); ++z) {
    const std::size_t g = z / n;
    const std::size_t a = z % n;
    out[(g / n2) * n1 + a / n2] += joint[z];
  }
  const double w2 = 1.0 / static_cast<double>(n2);
  for (double& q : out) q *= w2;
  return HusimiTable(first, std::move(out));
}

double strong_subadditivity_gap(const CoherentFrame& a, const CoherentFrame& b, const DensityMatrix& rho12) {
  const CoherentFrame joint = tensor_product(a, b);
  const DensityMatrix rho1 = partial_trace(rho12, a.dim(), b.dim(), Factor::second);
  const DensityMatrix rho2 = partial_trace(rho12, a.dim(), b.dim(), Factor::first);
  const double lhs = wehrl_entropy(husimi(joint, rho12));
  const double rhs = wehrl_entropy(husimi(a, rho1)) + wehrl_entropy(husimi(b, rho2)) + von_neumann_entropy(rho12) -
                     von_neumann_entropy(rho1) - von_neumann_entropy(rho2);
  return lhs - rhs;
}

}  // namespace wehrl
