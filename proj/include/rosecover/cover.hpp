#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rosecover/finite_group.hpp"
#include "rosecover/word.hpp"

namespace rosecover {

/// The values q(a_1), ..., q(a_n) of the quotient map F_n -> G.
struct GeneratorImages {
  std::vector<Element> images;

  int n() const { return static_cast<int>(images.size()); }
  Element operator[](int petal) const { return images[static_cast<std::size_t>(petal - 1)]; }
};

struct CoverSpec {
  FiniteGroup group;
  GeneratorImages images;

  int n() const { return images.n(); }
};

/// Edge (g, i): the lift of petal a_i starting at vertex g.
struct Edge {
  Element vertex = 0;
  int petal = 1;

  bool operator==(const Edge &) const = default;
  auto operator<=>(const Edge &) const = default;
};

struct PathStep {
  Edge edge;
  bool forward = true;

  bool operator==(const PathStep &) const = default;
};

struct EdgePath {
  Element start = 0;
  std::vector<PathStep> steps;

  bool operator==(const EdgePath &) const = default;
};

/// Cayley graph of G with respect to q(a_1), ..., q(a_n); this is the normal
/// cover of the n-petal rose determined by q. Vertices are group elements,
/// edge (g, i) runs from g to g * q(a_i). Loops and multi-edges are allowed.
class CoverGraph {
public:
  explicit CoverGraph(CoverSpec spec);

  const CoverSpec &spec() const { return spec_; }
  const FiniteGroup &group() const { return spec_.group; }
  int n() const { return spec_.n(); }
  Element image(int petal) const { return spec_.images[petal]; }

  std::size_t vertex_count() const { return spec_.group.order(); }
  std::size_t edge_count() const { return vertex_count() * static_cast<std::size_t>(n()); }

  std::size_t edge_id(const Edge &e) const {
    return static_cast<std::size_t>(e.vertex) * static_cast<std::size_t>(n()) + static_cast<std::size_t>(e.petal - 1);
  }
  Edge edge_from_id(std::size_t id) const {
    return Edge{static_cast<Element>(id / static_cast<std::size_t>(n())), static_cast<int>(id % static_cast<std::size_t>(n())) + 1};
  }

  Element tail(const Edge &e) const { return e.vertex; }
  Element head(const Edge &e) const { return group().mul(e.vertex, image(e.petal)); }

  /// q(w) in G.
  Element evaluate(const Word &w) const;

  Edge translate(Element g, const Edge &e) const { return Edge{group().mul(g, e.vertex), e.petal}; }

private:
  CoverSpec spec_;
};

/// Throws Disconnected if the images do not generate the group.
CoverGraph build_cover(CoverSpec spec);

Element path_end(const CoverGraph &cover, const EdgePath &path);
bool is_closed(const CoverGraph &cover, const EdgePath &path);
/// Checks that consecutive steps are incident.
bool is_valid_path(const CoverGraph &cover, const EdgePath &path);

EdgePath lift_word(const CoverGraph &cover, const Word &w, Element start);
EdgePath deck_translate_path(const CoverGraph &cover, Element g, const EdgePath &path);

/// A connected component of the cover with the interiors of all petal-j
/// edges removed. Its vertices form a left coset of G_0 = <q(a_i) : i != j>.
struct ComplementComponent {
  std::vector<Element> vertices; // sorted
  std::vector<Edge> edges;       // sorted
  Element representative = 0;    // smallest vertex
};

/// Components ordered by smallest vertex; the first contains the identity.
std::vector<ComplementComponent> petal_complement_components(const CoverGraph &cover, int petal);

/// G_0 = <q(a_i) : i != petal>.
Subgroup petal_complement_subgroup(const CoverGraph &cover, int petal);

/// Graphviz rendering: vertices labeled by group labels, edges colored by petal.
std::string to_dot(const CoverGraph &cover);

} // namespace rosecover
