// wehrl: command-line front end.
//
//   wehrl <group-info|verify|entropy|husimi|channel|minimize|scan>
//         --group Z4xZ2 [--subgroup 2,0;0,1] [--state FILE|KEYWORD]
//         [--log-base e|2] [--output json|csv] [--seed N] [--trials N]
//
// Exit codes: 0 success, 1 invariant failure, 2 input or parse error.

#include "wehrl/coherent_frame.hpp"
#include "wehrl/group.hpp"
#include "wehrl/husimi.hpp"
#include "wehrl/io.hpp"
#include "wehrl/minimizer.hpp"
#include "wehrl/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <random>
#include <utility>
#include <vector>
#include <string>

namespace {

using wehrl::io::Json;

struct CommandSpec {
  std::string subcommand;
  std::string group;
  std::string subgroup;
  bool subgroup_given = false;
  std::string state;
  std::string log_base = "e";
  std::string output;
  std::uint64_t seed = 0;
  int trials = 4;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string field_coords(const wehrl::Subgroup& h) {
  std::string out;
  for (std::size_t i = 0; i < h.generators().size(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < h.generators()[i].coords.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(h.generators()[i].coords[j]);
    }
  }
  return out;
}

wehrl::io::AnyState load_state(const CommandSpec& spec, const wehrl::CoherentFrame& frame) {
  const std::size_t n = frame.dim();
  const std::string& s = spec.state;
  if (s.empty()) throw InputError("--state is required for this subcommand");
  if (s == "maximally_mixed") return wehrl::DensityMatrix::maximally_mixed(n);
  if (s.starts_with("coherent:")) {
    const std::string body = s.substr(9);
    const std::size_t slash = body.find('/');
    if (slash == std::string::npos) throw InputError("coherent state needs 'g/lambda', e.g. coherent:1,0/0,1");
    const wehrl::PhaseSpacePoint z{wehrl::GroupElement{wehrl::parse_tuple(body.substr(0, slash))},
                                   wehrl::Character{wehrl::parse_tuple(body.substr(slash + 1))}};
    frame.group().check(z);
    return frame.coherent_state(z);
  }
  if (s.starts_with("random_pure:") || s.starts_with("random:")) {
    const bool pure = s.starts_with("random_pure:");
    const std::string digits = s.substr(pure ? 12 : 7);
    std::uint64_t seed = 0;
    try {
      std::size_t used = 0;
      seed = std::stoull(digits, &used);
      if (used != digits.size()) throw std::invalid_argument(digits);
    } catch (const std::exception&) {
      throw InputError("bad seed in state keyword '" + s + "'");
    }
    std::mt19937_64 rng(seed);
    if (pure) return wehrl::random_state(n, rng);
    return wehrl::random_density(n, rng);
  }
  wehrl::io::AnyState state = wehrl::io::read_any_state(wehrl::io::read_file(s));
  const std::size_t dim = std::visit([](const auto& x) { return x.dim(); }, state);
  if (dim != n) {
    throw InputError("state dimension " + std::to_string(dim) + " does not match |G| = " + std::to_string(n));
  }
  return state;
}

wehrl::DensityMatrix as_density(const wehrl::io::AnyState& state) {
  if (const auto* psi = std::get_if<wehrl::StateVector>(&state)) return wehrl::DensityMatrix::pure(*psi);
  return std::get<wehrl::DensityMatrix>(state);
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

int group_info(const CommandSpec& spec, const wehrl::GroupDescriptor& group) {
  const auto subgroups = wehrl::all_subgroups(group);
  if (spec.output == "csv") {
    std::cout << "generators,order,annihilator_order,is_corwin\n";
    for (const auto& h : subgroups) {
      std::cout << field_coords(h) << ',' << h.size() << ',' << wehrl::annihilator(h).size() << ','
                << (wehrl::is_corwin(h) ? "true" : "false") << '\n';
    }
    return 0;
  }
  Json rows = Json::array();
  for (const auto& h : subgroups) {
    Json row;
    row["generators"] = h.generators_string();
    row["order"] = h.size();
    row["annihilator_order"] = wehrl::annihilator(h).size();
    row["is_corwin"] = wehrl::is_corwin(h);
    rows.push_back(std::move(row));
  }
  Json out;
  out["group"] = group.to_string();
  out["order"] = group.order();
  out["real_rank"] = group.real_rank();
  out["dual"] = group.to_string();
  out["phase_space_size"] = group.phase_space_size();
  out["subgroup_count"] = subgroups.size();
  out["subgroups"] = std::move(rows);
  print_json(out);
  return 0;
}

int verify(const CommandSpec& spec, const wehrl::Subgroup& h) {
  wehrl::VerifyOptions options;
  options.seed = spec.seed;
  const wehrl::VerifyReport report = wehrl::run_invariant_suite(h, options);
  if (spec.output == "csv") {
    std::cout << "name,value,requirement,passed\n";
    for (const auto& c : report.checks) {
      std::cout << c.name << ',' << wehrl::io::format_double(c.value) << ',' << c.requirement << ','
                << (c.passed ? "true" : "false") << '\n';
    }
  } else {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      Json row;
      row["name"] = c.name;
      row["value"] = c.value;
      row["requirement"] = c.requirement;
      row["passed"] = c.passed;
      checks.push_back(std::move(row));
    }
    Json out;
    out["group"] = report.group;
    out["subgroup"] = report.subgroup;
    out["seed"] = spec.seed;
    out["passed"] = report.passed();
    out["checks"] = std::move(checks);
    print_json(out);
  }
  for (const auto& c : report.checks) {
    if (!c.passed) std::cerr << "FAILED " << c.name << " = " << c.value << " (" << c.requirement << ")\n";
  }
  return report.passed() ? 0 : 1;
}

int entropy(const CommandSpec& spec, const wehrl::CoherentFrame& frame) {
  const auto base = wehrl::parse_log_base(spec.log_base);
  const wehrl::EntropyReport report = wehrl::entropy_report(frame, as_density(load_state(spec, frame)), base);
  if (spec.output == "csv") {
    std::cout << wehrl::io::entropy_csv(report);
  } else {
    print_json(wehrl::io::entropy_json(report));
  }
  return 0;
}

int husimi(const CommandSpec& spec, const wehrl::CoherentFrame& frame) {
  const auto state = load_state(spec, frame);
  const wehrl::HusimiTable table = std::holds_alternative<wehrl::StateVector>(state)
                                       ? wehrl::husimi_fast(frame, std::get<wehrl::StateVector>(state))
                                       : wehrl::husimi(frame, std::get<wehrl::DensityMatrix>(state));
  if (spec.output == "json") {
    print_json(wehrl::io::husimi_json(table));
  } else {
    std::cout << wehrl::io::write_husimi_csv(table);
  }
  return 0;
}

int channel(const CommandSpec& spec, const wehrl::CoherentFrame& frame) {
  const wehrl::DensityMatrix out = wehrl::measurement_channel(frame, as_density(load_state(spec, frame)));
  if (spec.output == "csv") {
    std::cout << "row,col,re,im\n";
    const auto& m = out.entries();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        std::cout << r << ',' << c << ',' << wehrl::io::format_double(m(r, c).real()) << ','
                  << wehrl::io::format_double(m(r, c).imag()) << '\n';
      }
    }
  } else {
    std::cout << wehrl::io::write_density_json(out);
  }
  return 0;
}

double in_base(double nats, wehrl::LogBase base) { return base == wehrl::LogBase::e ? nats : nats / std::log(2.0); }

int minimize(const CommandSpec& spec, const wehrl::Subgroup& h) {
  const auto base = wehrl::parse_log_base(spec.log_base);
  wehrl::MinimizerConfig config;
  config.seed = spec.seed;
  const wehrl::CoherentFrame frame = wehrl::CoherentFrame::vacuum(h);
  const wehrl::MinimizerResult result = wehrl::minimize(frame, config);
  if (spec.output == "csv") {
    std::cout << "group,subgroup,fiducial_kind,best_entropy,overlap,iterations,seed\n"
              << h.parent().to_string() << ',' << field_coords(h) << ",vacuum,"
              << wehrl::io::format_double(in_base(result.best_entropy, base)) << ','
              << wehrl::io::format_double(result.overlap) << ',' << result.iterations << ',' << spec.seed << '\n';
    return 0;
  }
  Json nearest;
  nearest["g"] = result.nearest_coherent.g.coords;
  nearest["lambda"] = result.nearest_coherent.lambda.coords;
  Json out;
  out["group"] = h.parent().to_string();
  out["subgroup"] = h.generators_string();
  out["fiducial_kind"] = "vacuum";
  out["best_entropy"] = in_base(result.best_entropy, base);
  out["overlap"] = result.overlap;
  out["iterations"] = result.iterations;
  out["seed"] = spec.seed;
  out["converged"] = result.converged;
  out["restart"] = result.restart;
  out["nearest_coherent"] = std::move(nearest);
  out["log_base"] = wehrl::to_string(base);
  print_json(out);
  return 0;
}

int scan(const CommandSpec& spec, const wehrl::Subgroup& h) {
  const auto base = wehrl::parse_log_base(spec.log_base);
  wehrl::MinimizerConfig config;
  config.seed = spec.seed;
  const auto rows = wehrl::scan_fiducials(h, spec.trials, config);
  if (spec.output == "csv") {
    std::cout << "fiducial_kind,fiducial_seed,best_entropy,overlap,iterations,converged\n";
    for (const auto& r : rows) {
      std::cout << r.fiducial_kind << ',' << r.fiducial_seed << ','
                << wehrl::io::format_double(in_base(r.best_entropy, base)) << ','
                << wehrl::io::format_double(r.overlap) << ',' << r.iterations << ','
                << (r.converged ? "true" : "false") << '\n';
    }
    return 0;
  }
  Json out_rows = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["fiducial_kind"] = r.fiducial_kind;
    row["fiducial_seed"] = r.fiducial_seed;
    row["best_entropy"] = in_base(r.best_entropy, base);
    row["overlap"] = r.overlap;
    row["iterations"] = r.iterations;
    row["converged"] = r.converged;
    out_rows.push_back(std::move(row));
  }
  Json out;
  out["group"] = h.parent().to_string();
  out["subgroup"] = h.generators_string();
  out["seed"] = spec.seed;
  out["trials"] = spec.trials;
  out["log_base"] = wehrl::to_string(base);
  out["rows"] = std::move(out_rows);
  print_json(out);
  return 0;
}

int run(CommandSpec spec) {
  const wehrl::GroupDescriptor group = wehrl::GroupDescriptor::parse(spec.group);
  if (spec.output.empty()) spec.output = spec.subcommand == "husimi" ? "csv" : "json";
  if (spec.output != "json" && spec.output != "csv") throw InputError("--output must be json or csv");
  wehrl::parse_log_base(spec.log_base);
  if (spec.subcommand == "group-info") return group_info(spec, group);

  const wehrl::Subgroup h =
      spec.subgroup_given ? wehrl::Subgroup::parse(group, spec.subgroup) : wehrl::Subgroup::whole(group);
  if (spec.subcommand == "verify") return verify(spec, h);
  if (spec.subcommand == "minimize") return minimize(spec, h);
  if (spec.subcommand == "scan") return scan(spec, h);

  const wehrl::CoherentFrame frame = wehrl::CoherentFrame::vacuum(h);
  if (spec.subcommand == "entropy") return entropy(spec, frame);
  if (spec.subcommand == "husimi") return husimi(spec, frame);
  if (spec.subcommand == "channel") return channel(spec, frame);
  throw InputError("unknown subcommand " + spec.subcommand);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl systems, coherent frames and Wehrl entropy over finite abelian groups"};
  app.fallthrough();
  app.require_subcommand(1);

  CommandSpec spec;
  app.add_option("--group", spec.group, "group, e.g. Z4xZ2")->required();
  auto* subgroup = app.add_option("--subgroup", spec.subgroup, "subgroup generators, e.g. 2,0;0,1 (default: H = G)");
  app.add_option("--state", spec.state,
                 "state file (JSON/CSV vector or JSON density matrix) or maximally_mixed, coherent:<g>/<lambda>, "
                 "random:<seed>, random_pure:<seed>");
  app.add_option("--log-base", spec.log_base, "entropy units")->check(CLI::IsMember({"e", "2"}));
  app.add_option("--output", spec.output, "report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", spec.seed, "random seed");
  app.add_option("--trials", spec.trials, "random fiducials for scan")->check(CLI::NonNegativeNumber);

  const std::vector<std::pair<std::string, std::string>> subcommands{
      {"group-info", "order, dual, subgroup lattice, annihilators, Corwin flags"},
      {"verify", "run the invariant suite for (G, H); exit 1 on any failure"},
      {"entropy", "Wehrl and von Neumann entropy of a state"},
      {"husimi", "Husimi table of a state"},
      {"channel", "apply the measuring channel to a state"},
      {"minimize", "minimize the Wehrl entropy over pure states in the vacuum frame"},
      {"scan", "minimize over random fiducials plus a vacuum control"}};
  for (const auto& [name, description] : subcommands) {
    app.add_subcommand(name, description)->callback([&spec, name = name] { spec.subcommand = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  spec.subgroup_given = subgroup->count() > 0;

  try {
    return run(spec);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const wehrl::DenseLimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const wehrl::NotVacuumFrame& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
