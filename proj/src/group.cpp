#include "wehrl/group.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

namespace wehrl {

// ---------------------------------------------------------------------------
// Phase

Phase::Phase(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("Phase: denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  const std::int64_t d = std::gcd(num, den);
  num_ = num / d;
  den_ = den / d;
}

Phase Phase::operator+(const Phase& other) const {
  const std::int64_t den = std::lcm(den_, other.den_);
  return Phase(num_ * (den / den_) + other.num_ * (den / other.den_), den);
}

Phase Phase::operator-(const Phase& other) const { return *this + (-other); }

Phase Phase::operator-() const { return Phase(-num_, den_); }

std::complex<double> Phase::value() const {
  if (num_ == 0) return {1.0, 0.0};
  if (2 * num_ == den_) return {-1.0, 0.0};
  if (4 * num_ == den_) return {0.0, 1.0};
  if (4 * num_ == 3 * den_) return {0.0, -1.0};
  if (2 * num_ > den_) return std::conj(Phase(den_ - num_, den_).value());
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
  return {std::cos(angle), std::sin(angle)};
}

// ---------------------------------------------------------------------------
// GroupDescriptor

GroupDescriptor::GroupDescriptor(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders)) {
  if (orders_.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
  for (int n : orders_) {
    if (n < 1) throw std::invalid_argument("cyclic orders must be >= 1");
  }
  strides_.assign(orders_.size(), 1);
  for (std::size_t j = orders_.size(); j-- > 0;) {
    strides_[j] = order_;
    order_ *= static_cast<std::size_t>(orders_[j]);
  }
  for (int n : orders_) lcm_ = std::lcm(lcm_, static_cast<std::int64_t>(n));
  for (int n : orders_) lcm_factor_.push_back(lcm_ / n);
}

GroupDescriptor GroupDescriptor::parse(std::string_view spec) {
  std::vector<int> orders;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = spec.find('x', pos);
    const std::string_view token = spec.substr(pos, next == std::string_view::npos ? spec.npos : next - pos);
    if (token.size() < 2 || token[0] != 'Z') {
      throw ParseError("bad group factor '" + std::string(token) + "' in '" + std::string(spec) + "'");
    }
    int n = 0;
    const auto digits = token.substr(1);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || n < 1) {
      throw ParseError("bad cyclic order in '" + std::string(token) + "'");
    }
    orders.push_back(n);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return GroupDescriptor(std::move(orders));
}

std::string GroupDescriptor::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    if (j) out += 'x';
    out += 'Z' + std::to_string(orders_[j]);
  }
  return out;
}

namespace {

bool in_range(const std::vector<int>& coords, const std::vector<int>& orders) {
  if (coords.size() != orders.size()) return false;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (coords[j] < 0 || coords[j] >= orders[j]) return false;
  }
  return true;
}

}  // namespace

bool GroupDescriptor::contains(const GroupElement& g) const { return in_range(g.coords, orders_); }
bool GroupDescriptor::contains(const Character& lambda) const { return in_range(lambda.coords, orders_); }

void GroupDescriptor::check(const GroupElement& g) const {
  if (!contains(g)) {
    throw DescriptorMismatch("element (" + format_tuple(g.coords) + ") does not belong to " + to_string());
  }
}

void GroupDescriptor::check(const Character& lambda) const {
  if (!contains(lambda)) {
    throw DescriptorMismatch("character (" + format_tuple(lambda.coords) + ") does not belong to the dual of " +
                             to_string());
  }
}

void GroupDescriptor::check(const PhaseSpacePoint& z) const {
  check(z.g);
  check(z.lambda);
}

GroupElement GroupDescriptor::zero() const { return GroupElement{std::vector<int>(orders_.size(), 0)}; }

GroupElement GroupDescriptor::element(std::size_t index) const {
  GroupElement g{std::vector<int>(orders_.size())};
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    g.coords[j] = static_cast<int>((index / strides_[j]) % static_cast<std::size_t>(orders_[j]));
  }
  return g;
}

Character GroupDescriptor::character(std::size_t index) const { return Character{element(index).coords}; }

PhaseSpacePoint GroupDescriptor::point(std::size_t index) const {
  return PhaseSpacePoint{element(index / order_), character(index % order_)};
}

std::size_t GroupDescriptor::index_of(const GroupElement& g) const {
  check(g);
  std::size_t index = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) index += strides_[j] * static_cast<std::size_t>(g.coords[j]);
  return index;
}

std::size_t GroupDescriptor::index_of(const Character& lambda) const {
  check(lambda);
  return index_of(GroupElement{lambda.coords});
}

std::size_t GroupDescriptor::index_of(const PhaseSpacePoint& z) const {
  return index_of(z.g) * order_ + index_of(z.lambda);
}

std::vector<GroupElement> GroupDescriptor::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) out.push_back(element(i));
  return out;
}

std::size_t GroupDescriptor::add_index(std::size_t i, std::size_t j) const {
  std::size_t out = 0;
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    const std::size_t n = static_cast<std::size_t>(orders_[k]);
    const std::size_t a = (i / strides_[k]) % n;
    const std::size_t b = (j / strides_[k]) % n;
    out += strides_[k] * ((a + b) % n);
  }
  return out;
}

std::size_t GroupDescriptor::neg_index(std::size_t i) const {
  std::size_t out = 0;
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    const std::size_t n = static_cast<std::size_t>(orders_[k]);
    const std::size_t a = (i / strides_[k]) % n;
    out += strides_[k] * ((n - a) % n);
  }
  return out;
}

std::size_t GroupDescriptor::sub_index(std::size_t i, std::size_t j) const { return add_index(i, neg_index(j)); }

Phase GroupDescriptor::pairing(std::size_t char_index, std::size_t elem_index) const {
  std::int64_t num = 0;
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    const auto n = static_cast<std::size_t>(orders_[k]);
    const auto a = static_cast<std::int64_t>((char_index / strides_[k]) % n);
    const auto g = static_cast<std::int64_t>((elem_index / strides_[k]) % n);
    num = (num + a * g % static_cast<std::int64_t>(n) * lcm_factor_[k]) % lcm_;
  }
  return Phase(num, lcm_);
}

// ---------------------------------------------------------------------------
// Element arithmetic

GroupElement add(const GroupDescriptor& group, const GroupElement& g, const GroupElement& h) {
  group.check(g);
  group.check(h);
  GroupElement out = g;
  for (std::size_t j = 0; j < out.coords.size(); ++j) {
    out.coords[j] = (g.coords[j] + h.coords[j]) % group.cyclic_orders()[j];
  }
  return out;
}

GroupElement neg(const GroupDescriptor& group, const GroupElement& g) {
  group.check(g);
  GroupElement out = g;
  for (std::size_t j = 0; j < out.coords.size(); ++j) {
    const int n = group.cyclic_orders()[j];
    out.coords[j] = (n - g.coords[j]) % n;
  }
  return out;
}

GroupElement sub(const GroupDescriptor& group, const GroupElement& g, const GroupElement& h) {
  return add(group, g, neg(group, h));
}

Phase char_phase(const GroupDescriptor& group, const Character& lambda, const GroupElement& g) {
  return group.pairing(group.index_of(lambda), group.index_of(g));
}

std::complex<double> char_eval(const GroupDescriptor& group, const Character& lambda, const GroupElement& g) {
  return char_phase(group, lambda, g).value();
}

PhaseSpacePoint add(const GroupDescriptor& group, const PhaseSpacePoint& z, const PhaseSpacePoint& w) {
  return PhaseSpacePoint{add(group, z.g, w.g),
                         Character{add(group, GroupElement{z.lambda.coords}, GroupElement{w.lambda.coords}).coords}};
}

PhaseSpacePoint sub(const GroupDescriptor& group, const PhaseSpacePoint& z, const PhaseSpacePoint& w) {
  return PhaseSpacePoint{sub(group, z.g, w.g),
                         Character{sub(group, GroupElement{z.lambda.coords}, GroupElement{w.lambda.coords}).coords}};
}

// ---------------------------------------------------------------------------
// Subgroup

namespace {

std::vector<std::size_t> close_indices(const GroupDescriptor& group, const std::vector<std::size_t>& gens) {
  std::vector<bool> seen(group.order(), false);
  std::vector<std::size_t> out{0};
  seen[0] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t gen : gens) {
      const std::size_t next = group.add_index(out[i], gen);
      if (!seen[next]) {
        seen[next] = true;
        out.push_back(next);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Greedy generating set: scan in increasing order, keep what is not yet
// generated.
std::vector<std::size_t> greedy_generators(const GroupDescriptor& group, const std::vector<std::size_t>& indices) {
  std::vector<std::size_t> gens;
  std::vector<std::size_t> span{0};
  for (std::size_t idx : indices) {
    if (std::binary_search(span.begin(), span.end(), idx)) continue;
    gens.push_back(idx);
    span = close_indices(group, gens);
  }
  return gens;
}

}  // namespace

Subgroup::Subgroup(GroupDescriptor parent, std::vector<GroupElement> generators, std::vector<std::size_t> indices)
    : parent_(std::move(parent)), generators_(std::move(generators)), indices_(std::move(indices)) {
  member_.assign(parent_.order(), false);
  for (std::size_t i : indices_) member_[i] = true;
}

Subgroup Subgroup::closure(const GroupDescriptor& parent, std::vector<GroupElement> generators) {
  std::vector<std::size_t> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(parent.index_of(g));
  return Subgroup(parent, std::move(generators), close_indices(parent, gens));
}

Subgroup Subgroup::from_indices(const GroupDescriptor& parent, std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (std::size_t i : indices) {
    if (i >= parent.order()) throw std::invalid_argument("subgroup index out of range");
  }
  const auto gens = greedy_generators(parent, indices);
  if (close_indices(parent, gens) != indices) throw std::invalid_argument("element set is not a subgroup");
  std::vector<GroupElement> generators;
  for (std::size_t g : gens) generators.push_back(parent.element(g));
  return Subgroup(parent, std::move(generators), std::move(indices));
}

Subgroup Subgroup::parse(const GroupDescriptor& parent, std::string_view generators) {
  std::vector<GroupElement> gens;
  std::size_t pos = 0;
  while (pos < generators.size()) {
    const std::size_t next = generators.find(';', pos);
    const auto token = generators.substr(pos, next == std::string_view::npos ? generators.npos : next - pos);
    GroupElement g{parse_tuple(token)};
    if (!parent.contains(g)) {
      throw ParseError("generator (" + std::string(token) + ") is not an element of " + parent.to_string());
    }
    gens.push_back(std::move(g));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return closure(parent, std::move(gens));
}

Subgroup Subgroup::whole(const GroupDescriptor& parent) {
  std::vector<std::size_t> all(parent.order());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return from_indices(parent, std::move(all));
}

std::vector<GroupElement> Subgroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(indices_.size());
  for (std::size_t i : indices_) out.push_back(parent_.element(i));
  return out;
}

bool Subgroup::contains(const GroupElement& g) const { return member_[parent_.index_of(g)]; }

std::string Subgroup::generators_string() const {
  std::string out;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ';';
    out += format_tuple(generators_[i].coords);
  }
  return out;
}

Subgroup annihilator(const Subgroup& h) {
  const GroupDescriptor& group = h.parent();
  std::vector<std::size_t> gens;
  for (const auto& g : h.generators()) gens.push_back(group.index_of(g));
  std::vector<std::size_t> kept;
  for (std::size_t a = 0; a < group.order(); ++a) {
    const bool trivial_on_h =
        std::all_of(gens.begin(), gens.end(), [&](std::size_t g) { return group.pairing(a, g).is_zero(); });
    if (trivial_on_h) kept.push_back(a);
  }
  if (kept.size() * h.size() != group.order()) {
    throw std::logic_error("annihilator duality |A||H| = |G| violated");
  }
  return Subgroup::from_indices(group, std::move(kept));
}

std::vector<Subgroup> all_subgroups(const GroupDescriptor& group) {
  std::set<std::vector<std::size_t>> seen;
  std::deque<std::vector<std::size_t>> queue;
  std::vector<std::vector<std::size_t>> found;
  const std::vector<std::size_t> trivial{0};
  seen.insert(trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    const auto current = queue.front();
    queue.pop_front();
    found.push_back(current);
    const auto gens = greedy_generators(group, current);
    std::vector<bool> member(group.order(), false);
    for (std::size_t i : current) member[i] = true;
    for (std::size_t x = 0; x < group.order(); ++x) {
      if (member[x]) continue;
      auto extended = gens;
      extended.push_back(x);
      auto next = close_indices(group, extended);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& indices : found) out.push_back(Subgroup::from_indices(group, std::move(indices)));
  return out;
}

bool is_corwin(const Subgroup& h) {
  const GroupDescriptor& group = h.parent();
  std::vector<bool> hit(group.order(), false);
  for (std::size_t i : h.indices()) hit[group.add_index(i, i)] = true;
  return std::all_of(h.indices().begin(), h.indices().end(), [&](std::size_t i) { return hit[i]; });
}

// ---------------------------------------------------------------------------
// PhaseSubgroup

PhaseSubgroup::PhaseSubgroup(GroupDescriptor group, std::vector<std::size_t> indices)
    : group_(std::move(group)), indices_(std::move(indices)) {
  member_.assign(group_.phase_space_size(), false);
  for (std::size_t i : indices_) member_[i] = true;
}

PhaseSubgroup PhaseSubgroup::from_indices(const GroupDescriptor& group, std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  const std::size_t n = group.order();
  if (indices.empty() || indices.front() != 0) throw std::invalid_argument("phase subgroup must contain 0");
  std::vector<bool> member(group.phase_space_size(), false);
  for (std::size_t i : indices) {
    if (i >= member.size()) throw std::invalid_argument("phase-space index out of range");
    member[i] = true;
  }
  // Finite: closure under addition suffices.
  for (std::size_t a : indices) {
    for (std::size_t b : indices) {
      const std::size_t sum = group.add_index(a / n, b / n) * n + group.add_index(a % n, b % n);
      if (!member[sum]) throw std::invalid_argument("element set is not a subgroup of F");
    }
  }
  return PhaseSubgroup(group, std::move(indices));
}

PhaseSubgroup PhaseSubgroup::whole(const GroupDescriptor& group) {
  std::vector<std::size_t> all(group.phase_space_size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return PhaseSubgroup(group, std::move(all));
}

PhaseSubgroup PhaseSubgroup::trivial(const GroupDescriptor& group) { return PhaseSubgroup(group, {0}); }

bool PhaseSubgroup::contains(const PhaseSpacePoint& z) const { return member_[group_.index_of(z)]; }

PhaseSubgroup maximal_compact(const Subgroup& h) {
  const GroupDescriptor& group = h.parent();
  const Subgroup a = annihilator(h);
  const std::size_t n = group.order();
  std::vector<std::size_t> indices;
  indices.reserve(h.size() * a.size());
  for (std::size_t g : h.indices()) {
    for (std::size_t lam : a.indices()) indices.push_back(g * n + lam);
  }
  if (indices.size() != n) throw std::logic_error("|K| != |G|");
  for (std::size_t g = 0; g < n; ++g) {
    if (h.contains_index(g)) continue;
    const bool separated = std::any_of(a.indices().begin(), a.indices().end(),
                                       [&](std::size_t lam) { return !group.pairing(lam, g).is_zero(); });
    if (!separated) throw std::logic_error("maximality of K violated");
  }
  std::sort(indices.begin(), indices.end());
  return PhaseSubgroup::from_indices(group, std::move(indices));
}

std::vector<std::size_t> coset_representative_indices(const PhaseSubgroup& k) {
  const GroupDescriptor& group = k.group();
  const std::size_t n = group.order();
  std::vector<bool> visited(group.phase_space_size(), false);
  std::vector<std::size_t> reps;
  for (std::size_t z = 0; z < visited.size(); ++z) {
    if (visited[z]) continue;
    reps.push_back(z);
    for (std::size_t u : k.indices()) {
      visited[group.add_index(z / n, u / n) * n + group.add_index(z % n, u % n)] = true;
    }
  }
  return reps;
}

std::vector<PhaseSpacePoint> cosets(const PhaseSubgroup& k) {
  std::vector<PhaseSpacePoint> out;
  for (std::size_t z : coset_representative_indices(k)) out.push_back(k.group().point(z));
  return out;
}

// ---------------------------------------------------------------------------
// Tuples

std::vector<int> parse_tuple(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = text.find(',', pos);
    const auto token = text.substr(pos, next == std::string_view::npos ? text.npos : next - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("bad coordinate tuple '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::string format_tuple(const std::vector<int>& coords) {
  std::string out;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(coords[j]);
  }
  return out;
}

}  // namespace wehrl
