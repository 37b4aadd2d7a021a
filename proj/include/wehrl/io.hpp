// File formats.
//
//   StateVector    JSON: [[re, im], ...] in lexicographic element order
//                  CSV:  header `index,re,im`, one row per amplitude
//   DensityMatrix  JSON: {"dim": d, "entries": [[re, im], ...]} row-major
//   HusimiTable    CSV:  header `g_coords,lambda_coords,Q`; coordinates are
//                  space-separated inside their column
//   EntropyReport  JSON: {"wehrl", "von_neumann", "gap", "log_base"}
//
// Doubles are written in shortest round-trip form, so write(read(x)) == x
// byte for byte for anything this module wrote.
#pragma once

#include "wehrl/husimi.hpp"
#include "wehrl/states.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <variant>

namespace wehrl::io {

using Json = nlohmann::ordered_json;

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string format_double(double value);

std::string write_state_json(const StateVector& psi);
std::string write_state_csv(const StateVector& psi);
StateVector read_state_json(std::string_view text);
StateVector read_state_csv(std::string_view text);

std::string write_density_json(const DensityMatrix& rho);
DensityMatrix read_density_json(std::string_view text);

using AnyState = std::variant<StateVector, DensityMatrix>;

/// Vector or density matrix, recognized by shape: a JSON array is a vector,
/// a JSON object a density matrix, anything starting with `index` a CSV
/// vector.
AnyState read_any_state(std::string_view text);
std::string read_file(const std::string& path);

std::string write_husimi_csv(const HusimiTable& table);
Json husimi_json(const HusimiTable& table);

Json entropy_json(const EntropyReport& report);
std::string entropy_csv(const EntropyReport& report);

}  // namespace wehrl::io
