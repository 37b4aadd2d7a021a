// Projected gradient descent of the Wehrl entropy over pure states on the
// unit sphere of C^|G|, with renormalization as the retraction.
#pragma once

#include "wehrl/coherent_frame.hpp"
#include "wehrl/husimi.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wehrl {

struct MinimizerConfig {
  int max_iters = 5000;
  double step_size = 0.1;     // initial trial step of each backtracking search
  double tol_grad = 1e-8;     // stop when the tangent gradient norm falls below
  double tol_entropy = 1e-9;  // stop when the entropy reaches this (the bound is 0)
  int restarts = 16;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on non-positive tolerances or counts.
  void validate() const;
};

struct MinimizerResult {
  StateVector best_state;
  double best_entropy = 0.0;
  PhaseSpacePoint nearest_coherent;
  double overlap = 0.0;  // max_z |<z|psi*>|
  int iterations = 0;
  bool converged = false;
  int restart = 0;
};

/// Wehrl entropy of |psi><psi| via the fast Husimi path.
double state_entropy(const CoherentFrame& frame, const StateVector& psi);

/// Wirtinger gradient -sum_z w (log Q(z) + 1) <z|psi> |z>, skipping points
/// with Q < 1e-12, projected onto the tangent space at psi:
/// g - Re<psi, g> psi.
Vector entropy_gradient(const CoherentFrame& frame, const StateVector& psi);

/// Single descent from `start`.
MinimizerResult minimize_from(const CoherentFrame& frame, const StateVector& start, const MinimizerConfig& config);

/// One result per restart, in restart order. Restart r starts from a
/// Haar-random state seeded by (config.seed, r).
std::vector<MinimizerResult> minimize_restarts(const CoherentFrame& frame, const MinimizerConfig& config);

/// Best of `config.restarts` descents from random unit starts; ties go to
/// the lowest restart index.
MinimizerResult minimize(const CoherentFrame& frame, const MinimizerConfig& config);

struct ScanRow {
  std::string fiducial_kind;  // "vacuum" or "random"
  std::uint64_t fiducial_seed = 0;
  double best_entropy = 0.0;
  double overlap = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Row 0 is the vacuum frame of `control` (control row); rows 1..trials use
/// Haar-random fiducials. No assertions are made on the values.
std::vector<ScanRow> scan_fiducials(const Subgroup& control, int trials, const MinimizerConfig& config);

}  // namespace wehrl
