#include "wehrl/minimizer.hpp"

#include "wehrl/cyclic_fft.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace wehrl {

void MinimizerConfig::validate() const {
  if (max_iters < 0) throw std::invalid_argument("max_iters must be non-negative");
  if (!(step_size > 0.0) || !(tol_grad > 0.0) || !(tol_entropy > 0.0)) {
    throw std::invalid_argument("step size and tolerances must be positive");
  }
  if (restarts < 1) throw std::invalid_argument("restarts must be at least 1");
}

double state_entropy(const CoherentFrame& frame, const StateVector& psi) {
  return wehrl_entropy(husimi_fast(frame, psi));
}

Vector entropy_gradient(const CoherentFrame& frame, const StateVector& psi) {
  if (psi.dim() != frame.dim()) throw DimensionMismatch("entropy_gradient: state dimension does not match frame");
  const GroupDescriptor& group = frame.group();
  const std::size_t n = group.order();
  const Vector& phi = frame.fiducial().amplitudes();
  const Vector& amp = psi.amplitudes();
  const double weight = frame.haar_weight();

  CyclicFft fft(group);
  auto buf = fft.data();
  Vector grad = Vector::Zero(amp.size());
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      buf[h] = std::conj(phi(static_cast<Eigen::Index>(group.sub_index(h, g)))) * amp(static_cast<Eigen::Index>(h));
    }
    fft.forward();  // buf[a] = <z|psi>, z = (g, a)
    for (std::size_t a = 0; a < n; ++a) {
      const double q = std::norm(buf[a]);
      buf[a] = q < 1e-12 ? std::complex<double>{} : -weight * (std::log(q) + 1.0) * buf[a];
    }
    fft.backward();  // buf[h] = sum_a coef(g, a) lambda_a(h)
    for (std::size_t h = 0; h < n; ++h) {
      grad(static_cast<Eigen::Index>(h)) += buf[h] * phi(static_cast<Eigen::Index>(group.sub_index(h, g)));
    }
  }
  return grad - amp.dot(grad).real() * amp;
}

namespace {

void fill_nearest(const CoherentFrame& frame, MinimizerResult& result) {
  const HusimiTable table = husimi_fast(frame, result.best_state);
  const std::size_t best = table.argmax();
  result.nearest_coherent = frame.group().point(best);
  result.overlap = std::sqrt(table[best]);
}

}  // namespace

MinimizerResult minimize_from(const CoherentFrame& frame, const StateVector& start, const MinimizerConfig& config) {
  config.validate();
  StateVector psi = start;
  double entropy = state_entropy(frame, psi);
  int iterations = 0;
  bool converged = false;
  for (; iterations < config.max_iters; ++iterations) {
    if (entropy <= config.tol_entropy) {
      converged = true;
      break;
    }
    const Vector grad = entropy_gradient(frame, psi);
    if (grad.norm() <= config.tol_grad) {
      converged = true;
      break;
    }
    bool accepted = false;
    for (double step = config.step_size; step > 1e-18; step *= 0.5) {
      StateVector candidate = StateVector::normalized(psi.amplitudes() - step * grad);
      const double trial = state_entropy(frame, candidate);
      if (trial < entropy) {
        psi = std::move(candidate);
        entropy = trial;
        accepted = true;
        break;
      }
    }
    // No decreasing step: stationary to working precision.
    if (!accepted) {
      converged = true;
      break;
    }
  }
  if (!converged && entropy <= config.tol_entropy) converged = true;

  MinimizerResult result{psi, entropy, {}, 0.0, iterations, converged, 0};
  fill_nearest(frame, result);
  return result;
}

std::vector<MinimizerResult> minimize_restarts(const CoherentFrame& frame, const MinimizerConfig& config) {
  config.validate();
  std::vector<MinimizerResult> results;
  results.reserve(static_cast<std::size_t>(config.restarts));
  for (int r = 0; r < config.restarts; ++r) {
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(r)};
    std::mt19937_64 rng(seq);
    MinimizerResult result = minimize_from(frame, random_state(frame.dim(), rng), config);
    result.restart = r;
    results.push_back(std::move(result));
  }
  return results;
}

MinimizerResult minimize(const CoherentFrame& frame, const MinimizerConfig& config) {
  std::vector<MinimizerResult> results = minimize_restarts(frame, config);
  std::size_t best = 0;
  for (std::size_t r = 1; r < results.size(); ++r) {
    if (results[r].best_entropy < results[best].best_entropy) best = r;
  }
  return std::move(results[best]);
}

std::vector<ScanRow> scan_fiducials(const Subgroup& control, int trials, const MinimizerConfig& config) {
  if (trials < 0) throw std::invalid_argument("trials must be non-negative");
  std::vector<ScanRow> rows;
  const auto run = [&](const CoherentFrame& frame, std::string kind, std::uint64_t fiducial_seed) {
    const MinimizerResult result = minimize(frame, config);
    rows.push_back(ScanRow{std::move(kind), fiducial_seed, result.best_entropy, result.overlap, result.iterations,
                           result.converged});
  };
  run(CoherentFrame::vacuum(control), "vacuum", 0);
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t fiducial_seed = config.seed + 1000003ULL * static_cast<std::uint64_t>(t + 1);
    std::mt19937_64 rng(fiducial_seed);
    run(CoherentFrame(control.parent(), random_state(control.parent().order(), rng)), "random", fiducial_seed);
  }
  return rows;
}

}  // namespace wehrl
