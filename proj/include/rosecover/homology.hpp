#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rosecover/cover.hpp"
#include "rosecover/matrix.hpp"

namespace rosecover {

/// Finitely supported rational 1-chain on a cover. Zero coefficients are
/// never stored.
class Chain1 {
public:
  Chain1() = default;

  static Chain1 of_edge(const Edge &e, const Rational &c = 1);
  /// Sum of +-1 per step of the path.
  static Chain1 of_path(const EdgePath &path);

  void add(const Edge &e, const Rational &c);
  Rational coefficient(const Edge &e) const;
  const std::map<Edge, Rational> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Chain1 &operator+=(const Chain1 &rhs);
  Chain1 &operator-=(const Chain1 &rhs);
  Chain1 &operator*=(const Rational &s);
  bool operator==(const Chain1 &) const = default;

  /// Nonzero coefficients of the boundary, keyed by vertex.
  std::map<Element, Rational> boundary(const CoverGraph &cover) const;
  /// Deck translate by g: (h, i) -> (g h, i).
  Chain1 translated(const CoverGraph &cover, Element g) const;

private:
  std::map<Edge, Rational> terms_;
};

Chain1 operator+(Chain1 lhs, const Chain1 &rhs);
Chain1 operator-(Chain1 lhs, const Chain1 &rhs);
Chain1 operator*(const Rational &s, Chain1 c);

/// Coordinates in the fundamental-cycle basis of a HomologyBasis.
using HomologyClass = QVector;

/// Fundamental-cycle basis of H_1 of the cover, or of a subgraph of it.
///
/// The spanning tree is grown breadth-first from the root; at each vertex the
/// petals are scanned in ascending order, forward edges before backward ones.
/// Cotree edges are ordered by (vertex, petal).
class HomologyBasis {
public:
  Element root() const { return root_; }
  const std::vector<Element> &vertices() const { return vertices_; }
  const std::vector<Edge> &tree() const { return tree_; }
  const std::vector<Edge> &cotree() const { return cotree_; }
  const std::vector<Chain1> &cycles() const { return cycles_; }
  std::size_t rank() const { return cotree_.size(); }

  bool contains_vertex(Element v) const;
  bool contains_edge(const Edge &e) const;
  /// Coordinate index of a cotree edge, or nullopt for tree / foreign edges.
  std::optional<std::size_t> cotree_index(const Edge &e) const;

  /// Steps of the tree path from the root to v.
  std::vector<PathStep> tree_path_from_root(Element v) const;

  friend HomologyBasis build_basis(const CoverGraph &cover, std::vector<Element> vertices,
                                   std::vector<Edge> edges, Element root);

private:
  Element root_ = 0;
  std::vector<Element> vertices_;
  std::vector<Edge> tree_;
  std::vector<Edge> cotree_;
  std::vector<Chain1> cycles_;
  std::map<Edge, std::size_t> cotree_index_;
  std::map<Edge, bool> edge_in_subgraph_;
  std::map<Element, std::pair<PathStep, Element>> parent_; // arriving step, previous vertex
};

HomologyBasis build_basis(const CoverGraph &cover, std::vector<Element> vertices, std::vector<Edge> edges,
                          Element root);

/// Basis of H_1(Y; Q), rooted at the identity vertex.
HomologyBasis cycle_basis(const CoverGraph &cover);
/// Basis of H_1 of one complement component, rooted at its smallest vertex.
HomologyBasis cycle_basis(const CoverGraph &cover, const ComplementComponent &component);

/// Throws NotACycle when the chain has nonzero boundary or leaves the subgraph.
HomologyClass chain_to_class(const CoverGraph &cover, const HomologyBasis &basis, const Chain1 &z);
Chain1 class_to_chain(const HomologyBasis &basis, const HomologyClass &v);

/// Class of a closed edge path.
HomologyClass path_class(const CoverGraph &cover, const HomologyBasis &basis, const EdgePath &path);

/// xi_e(z): the coefficient of e in z.
inline Rational cocycle_eval(const Edge &xi, const Chain1 &z) { return z.coefficient(xi); }

HomologyClass translate_class(const CoverGraph &cover, const HomologyBasis &basis, Element g,
                              const HomologyClass &v);

/// Matrix of z -> g.z. The subgraph underlying the basis must be g-invariant.
QMatrix deck_action_matrix(const CoverGraph &cover, const HomologyBasis &basis, Element g);
std::vector<QMatrix> deck_action_matrices(const CoverGraph &cover, const HomologyBasis &basis);

Rational character(const CoverGraph &cover, const HomologyBasis &basis, Element g);

/// Rank of span{ g.v : g in G }.
std::size_t orbit_rank(const CoverGraph &cover, const HomologyBasis &basis, const HomologyClass &v);
/// Rank of span{ g.v : g in elements }.
std::size_t orbit_rank(const CoverGraph &cover, const HomologyBasis &basis, const HomologyClass &v,
                       const std::vector<Element> &elements);

struct InclusionReport {
  bool injective = false;
  std::vector<std::size_t> component_ranks;
  std::size_t image_rank = 0;
};

/// Checks that the map from the direct sum of H_1 of the components into
/// H_1(Y) is injective.
InclusionReport inclusion_rank_test(const CoverGraph &cover, const HomologyBasis &basis,
                                    const std::vector<ComplementComponent> &components);

} // namespace rosecover
