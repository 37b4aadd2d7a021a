// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include "wehrl/coherent_frame.hpp"
#include "wehrl/husimi.hpp"
#include "wehrl/minimizer.hpp"
#include "wehrl/weyl.hpp"

#include "test_support.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#ifndef WEHRL_CLI_PATH
#error "WEHRL_CLI_PATH must point at the wehrl executable"
#endif

using namespace wehrl;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

std::string sci(double x) {
  std::ostringstream ss;
  ss.precision(3);
  ss << std::scientific << x;
  return ss.str();
}

struct Pair {
  std::string spec;
  Subgroup h;
};

std::vector<Pair> suite_pairs() {
  std::vector<Pair> out;
  for (const auto& spec : oracle::standard_suite()) {
    for (auto& h : all_subgroups(GroupDescriptor::parse(spec))) out.push_back({spec, std::move(h)});
  }
  return out;
}

std::string label(const Pair& p) { return p.spec + " H=<" + p.h.generators_string() + ">"; }

Outcome ccr() {
  Outcome out;
  double worst = 0.0;
  for (const auto& spec : oracle::standard_suite()) {
    const auto report = verify_ccr(GroupDescriptor::parse(spec), 1);
    worst = std::max(worst, report.max_residual);
    if (!report.exhaustive || report.max_residual > 1e-12) {
      out.passed = false;
      out.detail += " " + spec;
    }
  }
  out.detail = "max residual " + sci(worst) + out.detail;
  return out;
}

Outcome dichotomy(const std::vector<Pair>& pairs) {
  Outcome out;
  double worst = 0.0;
  for (const auto& p : pairs) {
    const auto report = overlap_dichotomy(CoherentFrame::vacuum(p.h));
    worst = std::max(worst, report.max_deviation);
    if (report.max_deviation > 1e-12 || !report.relation_matches) {
      out.passed = false;
      out.detail += " " + label(p);
    }
  }
  out.detail = "max deviation from {0,1} " + sci(worst) + " over " + std::to_string(pairs.size()) + " pairs" + out.detail;
  return out;
}

Outcome vacuum_uniqueness(const std::vector<Pair>& pairs) {
  Outcome out;
  for (const auto& p : pairs) {
    const std::size_t dim = invariant_subspace_dim(maximal_compact(p.h));
    if (dim != 1) {
      out.passed = false;
      out.detail += " " + label(p) + " dim=" + std::to_string(dim);
    }
  }
  out.detail = "invariant dimension 1 for " + std::to_string(pairs.size()) + " maximal compact subgroups" + out.detail;
  return out;
}

Outcome resolution(const std::vector<Pair>& pairs, std::mt19937_64& rng) {
  Outcome out;
  double worst = 0.0;
  auto record = [&](double r, const std::string& what) {
    worst = std::max(worst, r);
    if (r > 1e-11) {
      out.passed = false;
      out.detail += " " + what;
    }
  };
  for (const auto& p : pairs) record(resolution_residual(CoherentFrame::vacuum(p.h)), label(p));
  for (const auto& spec : oracle::standard_suite()) {
    const auto g = GroupDescriptor::parse(spec);
    for (int i = 0; i < 5; ++i) record(resolution_residual(CoherentFrame(g, random_state(g.order(), rng))), spec + " random");
  }
  out.detail = "max residual " + sci(worst) + out.detail;
  return out;
}

Outcome lower_bound(const std::vector<Pair>& pairs, std::mt19937_64& rng) {
  Outcome out;
  double min_random = 1e300;
  double max_coherent = -1e300;
  double min_noncoherent = 1e300;
  std::size_t noncoherent = 0;
  for (const auto& p : pairs) {
    const auto frame = CoherentFrame::vacuum(p.h);
    const auto& g = frame.group();
    for (int i = 0; i < 1000; ++i) {
      const auto table = husimi(frame, random_density(g.order(), rng));
      const double s = wehrl_entropy(table);
      min_random = std::min(min_random, s);
      if (table.max() < 1.0 - 1e-6) {
        ++noncoherent;
        min_noncoherent = std::min(min_noncoherent, s);
      }
    }
    for (std::size_t z = 0; z < frame.size(); ++z) {
      const auto table = husimi_fast(frame, StateVector(frame.state(z)));
      max_coherent = std::max(max_coherent, wehrl_entropy(table));
    }
  }
  out.passed = min_random >= -1e-9 && max_coherent <= 1e-12 && min_noncoherent >= 1e-3;
  out.detail = "min S^W random " + sci(min_random) + ", max S^W coherent " + sci(max_coherent) +
               ", min S^W non-coherent " + sci(min_noncoherent) + " (" + std::to_string(noncoherent) + " states)";
  return out;
}

Outcome coset_formula(const std::vector<Pair>& pairs, std::mt19937_64& rng) {
  Outcome out;
  double spread = 0.0;
  double diff = 0.0;
  for (const auto& p : pairs) {
    const auto frame = CoherentFrame::vacuum(p.h);
    for (int i = 0; i < 100; ++i) {
      const auto rho = random_density(frame.dim(), rng);
      const auto table = husimi(frame, rho);
      spread = std::max(spread, coset_spread(frame, table));
      diff = std::max(diff, std::abs(wehrl_entropy(table) - wehrl_entropy_coset(frame, rho)));
    }
  }
  out.passed = spread <= 1e-12 && diff <= 1e-10;
  out.detail = "max coset spread " + sci(spread) + ", max |coset - full| " + sci(diff);
  return out;
}

Outcome wehrl_vs_von_neumann(const std::vector<Pair>& pairs, std::mt19937_64& rng) {
  Outcome out;
  double min_gap = 1e300;
  double equality = 0.0;
  auto sweep = [&](const CoherentFrame& frame) {
    for (int i = 0; i < 1000; ++i) {
      const auto rho = random_density(frame.dim(), rng);
      min_gap = std::min(min_gap, wehrl_entropy(husimi(frame, rho)) - von_neumann_entropy(rho));
    }
    const auto mixed = DensityMatrix::maximally_mixed(frame.dim());
    const double log_g = std::log(static_cast<double>(frame.dim()));
    equality = std::max({equality, std::abs(wehrl_entropy(husimi(frame, mixed)) - log_g),
                         std::abs(von_neumann_entropy(mixed) - log_g)});
  };
  for (const auto& p : pairs) sweep(CoherentFrame::vacuum(p.h));
  for (const auto& spec : oracle::standard_suite()) {
    const auto g = GroupDescriptor::parse(spec);
    sweep(CoherentFrame(g, random_state(g.order(), rng)));
  }
  out.passed = min_gap >= -1e-9 && equality <= 1e-10;
  out.detail = "min gap " + sci(min_gap) + ", max error at I/|G| " + sci(equality);
  return out;
}

Outcome monotonicity(std::mt19937_64& rng) {
  Outcome out;
  double worst_gap = 1e300;
  double marginal_err = 0.0;
  const std::array<std::pair<const char*, const char*>, 2> products{{{"Z2", "Z2"}, {"Z4", "Z2"}}};
  for (const auto& [s1, s2] : products) {
    const auto g1 = GroupDescriptor::parse(s1);
    const auto g2 = GroupDescriptor::parse(s2);
    for (const auto& h1 : all_subgroups(g1)) {
      for (const auto& h2 : all_subgroups(g2)) {
        const auto a = CoherentFrame::vacuum(h1);
        const auto b = CoherentFrame::vacuum(h2);
        const auto ab = tensor_product(a, b);
        for (int i = 0; i < 100; ++i) {
          const auto rho12 = random_density(ab.dim(), rng);
          const auto joint = husimi(ab, rho12);
          const auto rho1 = partial_trace(rho12, a.dim(), b.dim(), Factor::second);
          const auto q1 = husimi(a, rho1);
          const auto marginal = husimi_marginal(joint, g1, g2);
          for (std::size_t z = 0; z < q1.values().size(); ++z) {
            marginal_err = std::max(marginal_err, std::abs(marginal[z] - q1[z]));
          }
          worst_gap = std::min(worst_gap, wehrl_entropy(joint) - wehrl_entropy(q1));
        }
      }
    }
  }
  out.passed = worst_gap >= -1e-9 && marginal_err <= 1e-10;
  out.detail = "min S^W(rho12) - S^W(rho1) " + sci(worst_gap) + ", max marginal error " + sci(marginal_err);
  return out;
}

template <class F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome fast_path(std::mt19937_64& rng) {
  Outcome out;
  double worst = 0.0;
  for (const auto& spec : oracle::standard_suite()) {
    const auto g = GroupDescriptor::parse(spec);
    const auto frame = CoherentFrame::vacuum(Subgroup::whole(g));
    for (int i = 0; i < 100; ++i) {
      const StateVector psi = random_state(g.order(), rng);
      const auto fast = husimi_fast(frame, psi);
      const auto dense = husimi(frame, DensityMatrix::pure(psi));
      for (std::size_t z = 0; z < frame.size(); ++z) worst = std::max(worst, std::abs(fast[z] - dense[z]));
    }
  }
  // Timing at |G| = 64, informational.
  const auto g64 = GroupDescriptor::parse("Z8xZ8");
  const auto frame = CoherentFrame::vacuum(Subgroup::parse(g64, "4,0;0,4"));
  const StateVector psi = random_state(64, rng);
  const auto rho = DensityMatrix::pure(psi);
  double sink = 0.0;
  const int reps = 5;
  const double t_dense = seconds([&] {
    for (int i = 0; i < reps; ++i) sink += husimi(frame, rho).mass();
  });
  const double t_fast = seconds([&] {
    for (int i = 0; i < reps; ++i) sink += husimi_fast(frame, psi).mass();
  });
  out.passed = worst <= 1e-11;
  std::ostringstream ss;
  ss.precision(1);
  ss << std::fixed << t_dense / t_fast;
  out.detail = "max |fast - dense| " + sci(worst) + "; speedup at |G|=64: " + ss.str() + "x (informational" +
               (sink > 0 ? ")" : ", check)");
  return out;
}

Outcome minimizer(const std::vector<Pair>& pairs, std::mt19937_64& rng) {
  Outcome out;
  double worst_entropy = -1e300;
  double worst_overlap = 1.0;
  const MinimizerConfig config;
  for (const auto& p : pairs) {
    const auto result = minimize(CoherentFrame::vacuum(p.h), config);
    worst_entropy = std::max(worst_entropy, result.best_entropy);
    worst_overlap = std::min(worst_overlap, result.overlap);
    if (result.best_entropy > 1e-6 || result.overlap < 1.0 - 1e-4) out.detail += " " + label(p);
  }
  double worst_rel = 0.0;
  for (const auto& spec : oracle::standard_suite()) {
    const auto g = GroupDescriptor::parse(spec);
    const auto frame = CoherentFrame::vacuum(Subgroup::parse(g, ""));
    const Vector& phi = frame.fiducial().amplitudes();
    for (int i = 0; i < 20; ++i) {
      const StateVector psi = random_state(g.order(), rng);
      const Vector& v = psi.amplitudes();
      const double h = 1e-6;
      Vector fd(v.size());
      for (Eigen::Index k = 0; k < v.size(); ++k) {
        std::array<double, 2> parts{};
        for (int part = 0; part < 2; ++part) {
          const std::complex<double> step = part == 0 ? std::complex<double>(h, 0) : std::complex<double>(0, h);
          Vector p = v;
          Vector m = v;
          p(k) += step;
          m(k) -= step;
          parts[part] = (oracle::naive_entropy(g, phi, p) - oracle::naive_entropy(g, phi, m)) / (2 * h);
        }
        fd(k) = std::complex<double>(parts[0], parts[1]) / 2.0;
      }
      fd -= v.dot(fd).real() * v;
      worst_rel = std::max(worst_rel, (entropy_gradient(frame, psi) - fd).norm() / fd.norm());
    }
  }
  out.passed = worst_entropy <= 1e-6 && worst_overlap >= 1.0 - 1e-4 && worst_rel <= 1e-4;
  out.detail = "max best_entropy " + sci(worst_entropy) + ", min overlap " + std::to_string(worst_overlap) +
               ", max gradient rel. err " + sci(worst_rel) + out.detail;
  return out;
}

std::string run_cli(const std::string& args, int& status) {
  const std::string cmd = std::string(WEHRL_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return output;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
  status = pclose(pipe);
  return output;
}

Outcome determinism() {
  Outcome out;
  const std::vector<std::string> invocations{
      "minimize --group Z4 --subgroup 2 --seed 7",
      "scan --group Z2xZ2 --subgroup 1,0 --seed 3 --trials 2",
      "entropy --group Z3xZ3 --subgroup 1,1 --state random:5",
      "husimi --group Z6 --subgroup 3 --state random_pure:9",
      "channel --group Z4 --subgroup 2 --state random:2",
      "verify --group Z4 --subgroup 2 --seed 1",
  };
  for (const auto& args : invocations) {
    int s1 = 0;
    int s2 = 0;
    const std::string a = run_cli(args, s1);
    const std::string b = run_cli(args, s2);
    if (a.empty() || a != b || s1 != 0 || s2 != 0) {
      out.passed = false;
      out.detail += " [" + args + "]";
    }
  }
  out.detail = std::to_string(invocations.size()) + " invocations run twice" + (out.passed ? ", byte-identical" : ", mismatch:") + out.detail;
  return out;
}

}  // namespace

int main() {
  std::mt19937_64 rng(20240601);
  const auto pairs = suite_pairs();
  int failures = 0;
  auto report = [&](int n, const char* name, const Outcome& o) {
    if (!o.passed) ++failures;
    std::cout << "AC" << n << ' ' << (o.passed ? "PASS" : "FAIL") << ' ' << name << ": " << o.detail << std::endl;
  };
  report(1, "CCR relations", ccr());
  report(2, "overlap dichotomy", dichotomy(pairs));
  report(3, "vacuum uniqueness", vacuum_uniqueness(pairs));
  report(4, "resolution of identity", resolution(pairs, rng));
  report(5, "Wehrl lower bound and equality", lower_bound(pairs, rng));
  report(6, "coset formula", coset_formula(pairs, rng));
  report(7, "Wehrl >= von Neumann", wehrl_vs_von_neumann(pairs, rng));
  report(8, "monotonicity", monotonicity(rng));
  report(9, "fast Husimi path", fast_path(rng));
  report(10, "minimizer", minimizer(pairs, rng));
  report(11, "CLI determinism", determinism());
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
