// Invariant suite for one (G, H): the checks behind `wehrl verify`.
#pragma once

#include "wehrl/group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wehrl {

struct Check {
  std::string name;
  double value = 0.0;
  std::string requirement;  // e.g. "<= 1e-12", "== 1"
  bool passed = false;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  int random_states = 1000;    // density matrices for the entropy bounds
  int pure_samples = 100;      // pure states for fast-path and coset checks
  int random_fiducials = 5;    // generalized frames for the resolution of identity
  bool run_minimizer = true;
};

struct VerifyReport {
  std::string group;
  std::string subgroup;
  std::vector<Check> checks;

  bool passed() const;
};

VerifyReport run_invariant_suite(const Subgroup& h, const VerifyOptions& options = {});

}  // namespace wehrl
