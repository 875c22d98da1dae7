#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rosecover {

/// Index of a group element. The identity always has index 0.
using Element = int;

/// A finite group given by its full multiplication table.
///
/// Construction validates the group axioms. Associativity is checked
/// exhaustively up to `kAssociativityCheckBound` elements; larger tables must
/// be passed with `trusted = true`. If the identity is not at index 0 the
/// elements are relabeled so that it is.
class FiniteGroup {
public:
  static constexpr std::size_t kAssociativityCheckBound = 256;

  static FiniteGroup from_mul_table(const std::vector<std::vector<int>> &table,
                                    std::vector<std::string> labels = {}, bool trusted = false);

  std::size_t order() const { return order_; }
  static constexpr Element identity() { return 0; }

  Element mul(Element x, Element y) const { return table_[static_cast<std::size_t>(x) * order_ + y]; }
  Element inv(Element x) const { return inv_[x]; }
  Element pow(Element x, long long k) const;

  /// Least k >= 1 with x^k = identity.
  int element_order(Element x) const;

  const std::string &label(Element x) const { return labels_[x]; }
  const std::vector<std::string> &labels() const { return labels_; }
  /// Element with the given label, or -1.
  Element find_label(const std::string &label) const;

  std::vector<std::vector<int>> mul_table() const;

  bool is_abelian() const;

private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  std::vector<std::string> labels_;
};

/// Builtin families: cyclic(m), elementary_abelian(p,k), dihedral(m) of
/// order 2m, symmetric(k) for k <= 5.
struct GroupFamily {
  std::string name;
  std::vector<int> params;
};

FiniteGroup builtin_group(const GroupFamily &family);
/// Parses "cyclic:5", "elementary_abelian:2,2", "dihedral:4", "symmetric:3".
GroupFamily parse_group_family(const std::string &text);

/// A subgroup, stored as the sorted list of its members.
struct Subgroup {
  std::vector<Element> members;

  std::size_t order() const { return members.size(); }
  bool contains(Element x) const;
  bool operator==(const Subgroup &) const = default;
};

Subgroup subgroup_generated(const FiniteGroup &group, const std::vector<Element> &gens);

/// Left cosets gH. Blocks are sorted internally and ordered by their smallest
/// element, so the block containing the identity comes first.
std::vector<std::vector<Element>> left_cosets(const FiniteGroup &group, const Subgroup &sub);

inline int element_order(const FiniteGroup &group, Element x) { return group.element_order(x); }

} // namespace rosecover
