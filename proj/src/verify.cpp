#include "wehrl/verify.hpp"

#include "wehrl/coherent_frame.hpp"
#include "wehrl/husimi.hpp"
#include "wehrl/minimizer.hpp"
#include "wehrl/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace wehrl {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

class Recorder {
 public:
  explicit Recorder(std::vector<Check>& out) : out_(out) {}

  void at_most(std::string name, double value, double bound, const char* text) {
    out_.push_back({std::move(name), value, std::string("<= ") + text, value <= bound});
  }
  void at_least(std::string name, double value, double bound, const char* text) {
    out_.push_back({std::move(name), value, std::string(">= ") + text, value >= bound});
  }
  void equals(std::string name, double value, double expected) {
    out_.push_back({std::move(name), value, "== " + std::to_string(static_cast<long long>(expected)),
                    value == expected});
  }

 private:
  std::vector<Check>& out_;
};

std::size_t phase_add(const GroupDescriptor& group, std::size_t z, std::size_t w) {
  const std::size_t n = group.order();
  return group.add_index(z / n, w / n) * n + group.add_index(z % n, w % n);
}

double cocycle_bilinearity_residual(const GroupDescriptor& group, std::mt19937_64& rng) {
  const std::size_t points = group.phase_space_size();
  double worst = 0.0;
  auto check = [&](std::size_t z, std::size_t z1, std::size_t w) {
    const auto lhs = cocycle_phase_index(group, phase_add(group, z, z1), w).value();
    const auto rhs = cocycle_phase_index(group, z, w).value() * cocycle_phase_index(group, z1, w).value();
    worst = std::max(worst, std::abs(lhs - rhs));
  };
  if (points <= 81) {
    for (std::size_t z = 0; z < points; ++z)
      for (std::size_t z1 = 0; z1 < points; ++z1)
        for (std::size_t w = 0; w < points; ++w) check(z, z1, w);
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, points - 1);
    for (int i = 0; i < 10000; ++i) check(pick(rng), pick(rng), pick(rng));
  }
  return worst;
}

}  // namespace

VerifyReport run_invariant_suite(const Subgroup& h, const VerifyOptions& options) {
  const GroupDescriptor& group = h.parent();
  const std::size_t n = group.order();
  VerifyReport report{group.to_string(), h.generators_string(), {}};
  Recorder rec(report.checks);
  std::mt19937_64 rng(options.seed);

  // Group structure.
  const Subgroup a = annihilator(h);
  rec.equals("annihilator_duality", static_cast<double>(a.size() * h.size()), static_cast<double>(n));
  rec.equals("double_annihilator", annihilator(a) == h ? 1.0 : 0.0, 1.0);
  const PhaseSubgroup k = maximal_compact(h);
  rec.equals("maximal_compact_order", static_cast<double>(k.size()), static_cast<double>(n));
  std::size_t unseparated = 0;
  for (std::size_t g = 0; g < n; ++g) {
    if (h.contains_index(g)) continue;
    if (std::none_of(a.indices().begin(), a.indices().end(),
                     [&](std::size_t lam) { return !group.pairing(lam, g).is_zero(); })) {
      ++unseparated;
    }
  }
  rec.equals("maximality_unseparated", static_cast<double>(unseparated), 0.0);

  // Weyl system.
  const CcrReport ccr = verify_ccr(group, options.seed);
  rec.at_most("ccr_residual", ccr.max_residual, 1e-12, "1e-12");
  rec.at_most("cocycle_bilinearity", cocycle_bilinearity_residual(group, rng), 1e-12, "1e-12");
  std::size_t nontrivial_on_k = 0;
  for (std::size_t u : k.indices())
    for (std::size_t v : k.indices()) nontrivial_on_k += cocycle_phase_index(group, u, v).is_zero() ? 0 : 1;
  rec.equals("cocycle_nontrivial_on_K", static_cast<double>(nontrivial_on_k), 0.0);

  // Vacuum and frame.
  const StateVector vacuum = vacuum_vector(h);
  rec.at_most("vacuum_invariance", invariance_residual(k, vacuum.amplitudes()), 1e-13, "1e-13");
  rec.equals("invariant_subspace_dim", static_cast<double>(invariant_subspace_dim(k)), 1.0);
  rec.at_most("vacuum_nullspace_mismatch",
              1.0 - std::abs(vacuum.amplitudes().dot(invariant_vector(k).amplitudes())), 1e-10, "1e-10");

  const CoherentFrame frame = CoherentFrame::vacuum(h);
  rec.at_most("resolution_identity_vacuum", resolution_residual(frame), 1e-11, "1e-11");
  double fiducial_worst = 0.0;
  for (int i = 0; i < options.random_fiducials; ++i) {
    fiducial_worst = std::max(fiducial_worst, resolution_residual(CoherentFrame(group, random_state(n, rng))));
  }
  rec.at_most("resolution_identity_random_fiducials", fiducial_worst, 1e-11, "1e-11");

  if (frame.size() <= dense_limit()) {
    const DichotomyReport dichotomy = overlap_dichotomy(frame);
    rec.at_most("overlap_dichotomy_deviation", dichotomy.max_deviation, 1e-12, "1e-12");
    rec.equals("overlap_relation_is_K_coset", dichotomy.relation_matches ? 1.0 : 0.0, 1.0);
  }
  std::size_t missing_separator = 0;
  for (std::size_t z = 0; z < frame.size(); ++z) {
    if (!k.contains_index(z) && !separating_element(k, group.point(z))) ++missing_separator;
  }
  rec.equals("offcoset_without_separator", static_cast<double>(missing_separator), 0.0);
  rec.at_most("offcoset_vacuum_expectation", vacuum_offcoset_expectation(frame), 1e-13, "1e-13");
  const auto basis = coset_basis(frame);
  rec.equals("coset_basis_count", static_cast<double>(basis.size()), static_cast<double>(n));
  rec.at_most("coset_basis_gram", gram_residual(basis), 1e-12, "1e-12");

  // Husimi paths and coset formula on pure states.
  double fast_vs_dense = 0.0;
  double spread = 0.0;
  double coset_formula = 0.0;
  for (int i = 0; i < options.pure_samples; ++i) {
    const StateVector psi = random_state(n, rng);
    const DensityMatrix rho = DensityMatrix::pure(psi);
    const HusimiTable dense = husimi(frame, rho);
    const HusimiTable fast = husimi_fast(frame, psi);
    for (std::size_t z = 0; z < frame.size(); ++z) fast_vs_dense = std::max(fast_vs_dense, std::abs(dense[z] - fast[z]));
    spread = std::max(spread, coset_spread(frame, dense));
    coset_formula = std::max(coset_formula, std::abs(wehrl_entropy(dense) - wehrl_entropy_coset(frame, rho)));
  }
  rec.at_most("husimi_fast_vs_dense", fast_vs_dense, 1e-11, "1e-11");
  rec.at_most("coset_spread", spread, 1e-12, "1e-12");
  rec.at_most("coset_formula_vs_full_sum", coset_formula, 1e-10, "1e-10");

  // Entropy bounds over random density matrices.
  double min_wehrl = std::numeric_limits<double>::infinity();
  double min_gap = std::numeric_limits<double>::infinity();
  double min_noncoherent = std::numeric_limits<double>::infinity();
  double mass_error = 0.0;
  double max_q = 0.0;
  double channel_trace = 0.0;
  bool channel_valid = true;
  for (int i = 0; i < options.random_states; ++i) {
    const DensityMatrix rho = random_density(n, rng);
    const HusimiTable table = husimi(frame, rho);
    const double sw = wehrl_entropy(table);
    min_wehrl = std::min(min_wehrl, sw);
    min_gap = std::min(min_gap, sw - von_neumann_entropy(rho));
    if (table.max() < 1.0 - 1e-6) min_noncoherent = std::min(min_noncoherent, sw);
    mass_error = std::max(mass_error, std::abs(table.mass() - 1.0));
    max_q = std::max(max_q, table.max());
    if (i < 100) {
      try {
        const DensityMatrix out = measurement_channel(frame, rho);
        channel_trace = std::max(channel_trace, std::abs(out.entries().trace() - 1.0));
      } catch (const InvalidState&) {
        channel_valid = false;
      }
    }
  }
  rec.at_least("wehrl_min_random", min_wehrl, -1e-9, "-1e-9");
  rec.at_least("wehrl_minus_von_neumann_min", min_gap, -1e-9, "-1e-9");
  rec.at_least("wehrl_min_noncoherent", min_noncoherent, 1e-3, "1e-3");
  rec.at_most("husimi_mass_error", mass_error, 1e-10, "1e-10");
  rec.at_most("husimi_max", max_q, 1.0 + 1e-12, "1+1e-12");
  rec.equals("channel_output_is_state", channel_valid ? 1.0 : 0.0, 1.0);
  rec.at_most("channel_trace_error", channel_trace, 1e-10, "1e-10");

  double coherent_max = 0.0;
  for (std::size_t z = 0; z < frame.size(); ++z) {
    const DensityMatrix rho = DensityMatrix::pure(StateVector::normalized(frame.state(z)));
    coherent_max = std::max(coherent_max, wehrl_entropy(husimi(frame, rho)));
  }
  rec.at_most("wehrl_coherent_max", coherent_max, 1e-12, "1e-12");

  const DensityMatrix mixed = DensityMatrix::maximally_mixed(n);
  const double log_n = std::log(static_cast<double>(n));
  rec.at_most("maximally_mixed_wehrl_error", std::abs(wehrl_entropy(husimi(frame, mixed)) - log_n), 1e-10, "1e-10");
  rec.at_most("maximally_mixed_von_neumann_error", std::abs(von_neumann_entropy(mixed) - log_n), 1e-10, "1e-10");

  if (options.run_minimizer) {
    MinimizerConfig config;
    config.seed = options.seed;
    const MinimizerResult best = minimize(frame, config);
    rec.at_most("minimizer_best_entropy", best.best_entropy, 1e-6, "1e-6");
    rec.at_least("minimizer_coherent_overlap", best.overlap, 1.0 - 1e-4, "1-1e-4");
  }
  return report;
}

}  // namespace wehrl
