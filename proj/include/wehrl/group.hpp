// Finite abelian groups G = Z_{n_1} x ... x Z_{n_k}, their duals, subgroups,
// annihilators and the maximal compact subgroups K = H x A(G^, H) of the
// phase space F = G x G^.
//
// Elements are addressed two ways: by coordinate tuples (the public, checked
// API) and by their lexicographic index (the hot-loop API). The index of an
// element is its mixed-radix value with the first cyclic factor most
// significant. Phase-space points z = (g, lambda) are indexed as
// index(g) * |G| + index(lambda).
#pragma once

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wehrl {

class DescriptorMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact phase num/den of a unit complex number exp(2 pi i num/den), kept in
/// [0, 1) and in lowest terms so equal phases compare equal.
class Phase {
 public:
  Phase() = default;
  Phase(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Phase operator+(const Phase& other) const;
  Phase operator-(const Phase& other) const;
  Phase operator-() const;

  /// exp(2 pi i num/den). Quarter turns are exact and value(-p) is the
  /// bitwise conjugate of value(p).
  std::complex<double> value() const;

  bool operator==(const Phase&) const = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

struct GroupElement {
  std::vector<int> coords;
  auto operator<=>(const GroupElement&) const = default;
};

/// Character lambda_a(g) = exp(2 pi i sum_j a_j g_j / n_j).
struct Character {
  std::vector<int> coords;
  auto operator<=>(const Character&) const = default;
};

/// A point z = (g, lambda) of F = G x G^.
struct PhaseSpacePoint {
  GroupElement g;
  Character lambda;
  auto operator<=>(const PhaseSpacePoint&) const = default;
};

class GroupDescriptor {
 public:
  explicit GroupDescriptor(std::vector<int> cyclic_orders);

  /// Parses `Z4xZ2`-style strings.
  static GroupDescriptor parse(std::string_view spec);

  const std::vector<int>& cyclic_orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::size_t order() const { return order_; }
  std::size_t phase_space_size() const { return order_ * order_; }

  /// Number of real-line factors in the structure decomposition; zero for
  /// every finite group, so the Wehrl entropy lower bound is 0.
  int real_rank() const { return 0; }

  std::string to_string() const;

  bool contains(const GroupElement& g) const;
  bool contains(const Character& lambda) const;
  void check(const GroupElement& g) const;
  void check(const Character& lambda) const;
  void check(const PhaseSpacePoint& z) const;

  GroupElement zero() const;
  GroupElement element(std::size_t index) const;
  Character character(std::size_t index) const;
  PhaseSpacePoint point(std::size_t index) const;
  std::size_t index_of(const GroupElement& g) const;
  std::size_t index_of(const Character& lambda) const;
  std::size_t index_of(const PhaseSpacePoint& z) const;
  std::vector<GroupElement> elements() const;

  std::size_t add_index(std::size_t i, std::size_t j) const;
  std::size_t sub_index(std::size_t i, std::size_t j) const;
  std::size_t neg_index(std::size_t i) const;

  /// Exact phase of lambda_a(g) for character index a and element index g.
  Phase pairing(std::size_t char_index, std::size_t elem_index) const;

  bool operator==(const GroupDescriptor& other) const { return orders_ == other.orders_; }

 private:
  std::vector<int> orders_;
  std::vector<std::size_t> strides_;
  std::vector<std::int64_t> lcm_factor_;  // lcm / n_j
  std::int64_t lcm_ = 1;
  std::size_t order_ = 1;
};

GroupElement add(const GroupDescriptor& group, const GroupElement& g, const GroupElement& h);
GroupElement sub(const GroupDescriptor& group, const GroupElement& g, const GroupElement& h);
GroupElement neg(const GroupDescriptor& group, const GroupElement& g);

Phase char_phase(const GroupDescriptor& group, const Character& lambda, const GroupElement& g);
std::complex<double> char_eval(const GroupDescriptor& group, const Character& lambda,
                               const GroupElement& g);

PhaseSpacePoint add(const GroupDescriptor& group, const PhaseSpacePoint& z, const PhaseSpacePoint& w);
PhaseSpacePoint sub(const GroupDescriptor& group, const PhaseSpacePoint& z, const PhaseSpacePoint& w);

/// A subgroup stored by full element enumeration. The same type serves for
/// subgroups of the dual, which shares the descriptor of G.
class Subgroup {
 public:
  /// Smallest subgroup containing `generators`.
  static Subgroup closure(const GroupDescriptor& parent, std::vector<GroupElement> generators);
  /// Throws std::invalid_argument if `indices` is not a subgroup.
  static Subgroup from_indices(const GroupDescriptor& parent, std::vector<std::size_t> indices);
  /// Parses generator strings like `2,0;0,1`. An empty string is {0}.
  static Subgroup parse(const GroupDescriptor& parent, std::string_view generators);
  static Subgroup whole(const GroupDescriptor& parent);

  const GroupDescriptor& parent() const { return parent_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  const std::vector<std::size_t>& indices() const { return indices_; }
  std::vector<GroupElement> elements() const;
  std::size_t size() const { return indices_.size(); }

  bool contains(const GroupElement& g) const;
  bool contains_index(std::size_t index) const { return member_[index]; }

  /// `2,0;0,1` form of the generators.
  std::string generators_string() const;

  bool operator==(const Subgroup& other) const {
    return parent_ == other.parent_ && indices_ == other.indices_;
  }

 private:
  Subgroup(GroupDescriptor parent, std::vector<GroupElement> generators,
           std::vector<std::size_t> indices);

  GroupDescriptor parent_;
  std::vector<GroupElement> generators_;
  std::vector<std::size_t> indices_;
  std::vector<bool> member_;
};

/// A(G^, H) = { lambda : lambda(h) = 1 for all h in H }, by exact filtering
/// of every character against the generators of H.
Subgroup annihilator(const Subgroup& h);

/// Every subgroup of `group`, sorted by (size, element indices).
std::vector<Subgroup> all_subgroups(const GroupDescriptor& group);

/// True iff h -> 2h maps H onto itself.
bool is_corwin(const Subgroup& h);

/// A subgroup of F = G x G^, stored as sorted phase-space indices.
class PhaseSubgroup {
 public:
  static PhaseSubgroup from_indices(const GroupDescriptor& group, std::vector<std::size_t> indices);
  static PhaseSubgroup whole(const GroupDescriptor& group);
  static PhaseSubgroup trivial(const GroupDescriptor& group);

  const GroupDescriptor& group() const { return group_; }
  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool contains(const PhaseSpacePoint& z) const;
  bool contains_index(std::size_t index) const { return member_[index]; }

 private:
  PhaseSubgroup(GroupDescriptor group, std::vector<std::size_t> indices);

  GroupDescriptor group_;
  std::vector<std::size_t> indices_;
  std::vector<bool> member_;
};

/// K = H x A(G^, H). Asserts |K| = |G| and that every g outside H is
/// separated from 0 by some character in A(G^, H).
PhaseSubgroup maximal_compact(const Subgroup& h);

/// Lexicographically least member of every coset of K in F, in increasing
/// order.
std::vector<std::size_t> coset_representative_indices(const PhaseSubgroup& k);
std::vector<PhaseSpacePoint> cosets(const PhaseSubgroup& k);

/// Parses `g1,g2` tuples; used for generators and phase-space points.
std::vector<int> parse_tuple(std::string_view text);
std::string format_tuple(const std::vector<int>& coords);

}  // namespace wehrl
