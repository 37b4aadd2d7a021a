#include "wehrl/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace wehrl::io {

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw FormatError("cannot format double");
  return std::string(buf, ptr);
}

namespace {

double parse_double(std::string_view token) {
  while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
  while (!token.empty() && (token.back() == ' ' || token.back() == '\t' || token.back() == '\r')) token.remove_suffix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw FormatError("bad number '" + std::string(token) + "'");
  }
  return value;
}

Json pair_json(std::complex<double> c) { return Json::array({c.real(), c.imag()}); }

std::complex<double> pair_value(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw FormatError("expected a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<std::string_view> lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find('\n', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view line = text.substr(pos, next - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) out.push_back(line);
    pos = next + 1;
  }
  return out;
}

std::string coords_field(const std::vector<int>& coords) {
  std::string out;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (j) out += ' ';
    out += std::to_string(coords[j]);
  }
  return out;
}

}  // namespace

std::string write_state_json(const StateVector& psi) {
  Json out = Json::array();
  for (const auto& c : psi.amplitudes()) out.push_back(pair_json(c));
  return out.dump() + "\n";
}

std::string write_state_csv(const StateVector& psi) {
  std::string out = "index,re,im\n";
  const Vector& v = psi.amplitudes();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out += std::to_string(i) + ',' + format_double(v(i).real()) + ',' + format_double(v(i).imag()) + '\n';
  }
  return out;
}

namespace {

StateVector state_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("state vector JSON must be a non-empty array of pairs");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = pair_value(j[i]);
  return StateVector(std::move(v));
}

DensityMatrix density_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
    throw FormatError("density matrix JSON needs 'dim' and 'entries'");
  }
  if (!j.at("dim").is_number_integer()) throw FormatError("density matrix 'dim' must be an integer");
  const auto dim = j.at("dim").get<std::int64_t>();
  const Json& entries = j.at("entries");
  if (dim <= 0 || !entries.is_array() || entries.size() != static_cast<std::size_t>(dim * dim)) {
    throw FormatError("density matrix 'entries' must hold dim*dim pairs");
  }
  Matrix m(dim, dim);
  for (std::int64_t r = 0; r < dim; ++r) {
    for (std::int64_t c = 0; c < dim; ++c) m(r, c) = pair_value(entries[static_cast<std::size_t>(r * dim + c)]);
  }
  return DensityMatrix(std::move(m));
}

}  // namespace

StateVector read_state_json(std::string_view text) { return state_from_json(parse_json(text)); }

StateVector read_state_csv(std::string_view text) {
  const auto rows = lines(text);
  if (rows.empty() || rows.front() != "index,re,im") throw FormatError("state CSV must start with 'index,re,im'");
  Vector v(static_cast<Eigen::Index>(rows.size() - 1));
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const std::string_view row = rows[r];
    const std::size_t c1 = row.find(',');
    const std::size_t c2 = row.find(',', c1 == std::string_view::npos ? row.size() : c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos) throw FormatError("state CSV row needs 3 columns");
    const double index = parse_double(row.substr(0, c1));
    if (index != static_cast<double>(r - 1)) throw FormatError("state CSV indices must be 0, 1, 2, ... in order");
    v(static_cast<Eigen::Index>(r - 1)) = {parse_double(row.substr(c1 + 1, c2 - c1 - 1)), parse_double(row.substr(c2 + 1))};
  }
  if (v.size() == 0) throw FormatError("state CSV has no rows");
  return StateVector(std::move(v));
}

std::string write_density_json(const DensityMatrix& rho) {
  const Matrix& m = rho.entries();
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(pair_json(m(r, c)));
  }
  Json out;
  out["dim"] = m.rows();
  out["entries"] = std::move(entries);
  return out.dump() + "\n";
}

DensityMatrix read_density_json(std::string_view text) { return density_from_json(parse_json(text)); }

AnyState read_any_state(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw FormatError("empty state file");
  if (text.substr(first).starts_with("index")) return read_state_csv(text.substr(first));
  const Json j = parse_json(text);
  if (j.is_array()) return state_from_json(j);
  if (j.is_object()) return density_from_json(j);
  throw FormatError("state file is neither a vector nor a density matrix");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string write_husimi_csv(const HusimiTable& table) {
  const GroupDescriptor& group = table.group();
  std::string out = "g_coords,lambda_coords,Q\n";
  for (std::size_t z = 0; z < table.values().size(); ++z) {
    const PhaseSpacePoint p = group.point(z);
    out += coords_field(p.g.coords) + ',' + coords_field(p.lambda.coords) + ',' + format_double(table[z]) + '\n';
  }
  return out;
}

Json husimi_json(const HusimiTable& table) {
  const GroupDescriptor& group = table.group();
  Json rows = Json::array();
  for (std::size_t z = 0; z < table.values().size(); ++z) {
    const PhaseSpacePoint p = group.point(z);
    Json row;
    row["g"] = p.g.coords;
    row["lambda"] = p.lambda.coords;
    row["Q"] = table[z];
    rows.push_back(std::move(row));
  }
  Json out;
  out["group"] = group.to_string();
  out["haar_weight"] = table.haar_weight();
  out["values"] = std::move(rows);
  return out;
}

Json entropy_json(const EntropyReport& report) {
  Json out;
  out["wehrl"] = report.wehrl;
  out["von_neumann"] = report.von_neumann;
  out["gap"] = report.gap;
  out["log_base"] = to_string(report.log_base);
  return out;
}

std::string entropy_csv(const EntropyReport& report) {
  return "wehrl,von_neumann,gap,log_base\n" + format_double(report.wehrl) + ',' + format_double(report.von_neumann) +
         ',' + format_double(report.gap) + ',' + to_string(report.log_base) + '\n';
}

}  // namespace wehrl::io
