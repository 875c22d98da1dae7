#include "rosecover/homology.hpp"

#include <algorithm>
#include <deque>

#include "rosecover/error.hpp"

namespace rosecover {

// ---------------------------------------------------------------------------
// Chain1

Chain1 Chain1::of_edge(const Edge &e, const Rational &c) {
  Chain1 z;
  z.add(e, c);
  return z;
}

Chain1 Chain1::of_path(const EdgePath &path) {
  Chain1 z;
  for (const auto &step : path.steps)
    z.add(step.edge, step.forward ? 1 : -1);
  return z;
}

void Chain1::add(const Edge &e, const Rational &c) {
  if (sgn(c) == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0)
      terms_.erase(it);
  }
}

Rational Chain1::coefficient(const Edge &e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Chain1 &Chain1::operator+=(const Chain1 &rhs) {
  for (const auto &[e, c] : rhs.terms_)
    add(e, c);
  return *this;
}

Chain1 &Chain1::operator-=(const Chain1 &rhs) {
  for (const auto &[e, c] : rhs.terms_)
    add(e, -c);
  return *this;
}

Chain1 &Chain1::operator*=(const Rational &s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[e, c] : terms_)
    c *= s;
  return *this;
}

std::map<Element, Rational> Chain1::boundary(const CoverGraph &cover) const {
  std::map<Element, Rational> d;
  for (const auto &[e, c] : terms_) {
    d[cover.head(e)] += c;
    d[cover.tail(e)] -= c;
  }
  std::erase_if(d, [](const auto &kv) { return sgn(kv.second) == 0; });
  return d;
}

Chain1 Chain1::translated(const CoverGraph &cover, Element g) const {
  Chain1 out;
  for (const auto &[e, c] : terms_)
    out.terms_.emplace(cover.translate(g, e), c);
  return out;
}

Chain1 operator+(Chain1 lhs, const Chain1 &rhs) { return lhs += rhs; }
Chain1 operator-(Chain1 lhs, const Chain1 &rhs) { return lhs -= rhs; }
Chain1 operator*(const Rational &s, Chain1 c) { return c *= s; }

// ---------------------------------------------------------------------------
// HomologyBasis

bool HomologyBasis::contains_vertex(Element v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool HomologyBasis::contains_edge(const Edge &e) const { return edge_in_subgraph_.count(e) != 0; }

std::optional<std::size_t> HomologyBasis::cotree_index(const Edge &e) const {
  const auto it = cotree_index_.find(e);
  if (it == cotree_index_.end())
    return std::nullopt;
  return it->second;
}

std::vector<PathStep> HomologyBasis::tree_path_from_root(Element v) const {
  std::vector<PathStep> steps;
  while (v != root_) {
    const auto &[step, previous] = parent_.at(v);
    steps.push_back(step);
    v = previous;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

HomologyBasis build_basis(const CoverGraph &cover, std::vector<Element> vertices, std::vector<Edge> edges,
                          Element root) {
  const auto &g = cover.group();
  HomologyBasis b;
  std::sort(vertices.begin(), vertices.end());
  std::sort(edges.begin(), edges.end());
  b.root_ = root;
  b.vertices_ = vertices;
  for (const auto &e : edges)
    b.edge_in_subgraph_.emplace(e, true);
  if (!b.contains_vertex(root))
    throw Error(Errc::InvalidArgument, "root is not a vertex of the subgraph");

  std::map<Element, Chain1> root_chain;
  std::map<Edge, bool> in_tree;
  root_chain.emplace(root, Chain1{});
  std::deque<Element> queue{root};
  while (!queue.empty()) {
    const Element v = queue.front();
    queue.pop_front();
    for (int i = 1; i <= cover.n(); ++i) {
      const Element s = cover.image(i);
      const Edge forward{v, i};
      const Edge backward{g.mul(v, g.inv(s)), i};
      const std::pair<Edge, bool> candidates[] = {{forward, true}, {backward, false}};
      for (const auto &[e, fwd] : candidates) {
        if (!b.contains_edge(e))
          continue;
        const Element w = fwd ? cover.head(e) : cover.tail(e);
        if (root_chain.count(w))
          continue;
        Chain1 chain = root_chain.at(v);
        chain.add(e, fwd ? 1 : -1);
        root_chain.emplace(w, std::move(chain));
        b.parent_.emplace(w, std::pair{PathStep{e, fwd}, v});
        in_tree.emplace(e, true);
        b.tree_.push_back(e);
        queue.push_back(w);
      }
    }
  }
  if (root_chain.size() != vertices.size())
    throw Error(Errc::Disconnected, "subgraph is not connected");

  for (const auto &e : edges) {
    if (in_tree.count(e))
      continue;
    b.cotree_index_.emplace(e, b.cotree_.size());
    b.cotree_.push_back(e);
    Chain1 z = root_chain.at(cover.tail(e));
    z.add(e, 1);
    z -= root_chain.at(cover.head(e));
    b.cycles_.push_back(std::move(z));
  }
  return b;
}

HomologyBasis cycle_basis(const CoverGraph &cover) {
  std::vector<Element> vertices(cover.vertex_count());
  std::vector<Edge> edges;
  edges.reserve(cover.edge_count());
  for (std::size_t v = 0; v < vertices.size(); ++v)
    vertices[v] = Element(v);
  for (std::size_t id = 0; id < cover.edge_count(); ++id)
    edges.push_back(cover.edge_from_id(id));
  return build_basis(cover, std::move(vertices), std::move(edges), FiniteGroup::identity());
}

HomologyBasis cycle_basis(const CoverGraph &cover, const ComplementComponent &component) {
  return build_basis(cover, component.vertices, component.edges, component.representative);
}

// ---------------------------------------------------------------------------
// Coordinates

HomologyClass chain_to_class(const CoverGraph &cover, const HomologyBasis &basis, const Chain1 &z) {
  for (const auto &[e, c] : z.terms())
    if (!basis.contains_edge(e))
      throw Error(Errc::NotACycle, "chain uses edge (" + std::to_string(e.vertex) + ", " + std::to_string(e.petal) +
                                       ") outside the subgraph");
  const auto d = z.boundary(cover);
  if (!d.empty())
    throw Error(Errc::NotACycle, "nonzero boundary at vertex " + std::to_string(d.begin()->first));
  HomologyClass v(basis.rank());
  for (std::size_t k = 0; k < basis.rank(); ++k)
    v[k] = z.coefficient(basis.cotree()[k]);
  return v;
}

Chain1 class_to_chain(const HomologyBasis &basis, const HomologyClass &v) {
  if (v.size() != basis.rank())
    throw Error(Errc::InvalidArgument, "class has " + std::to_string(v.size()) + " coordinates, basis has rank " +
                                           std::to_string(basis.rank()));
  Chain1 z;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (sgn(v[k]) != 0)
      z += v[k] * basis.cycles()[k];
  return z;
}

HomologyClass path_class(const CoverGraph &cover, const HomologyBasis &basis, const EdgePath &path) {
  return chain_to_class(cover, basis, Chain1::of_path(path));
}

HomologyClass translate_class(const CoverGraph &cover, const HomologyBasis &basis, Element g,
                              const HomologyClass &v) {
  return chain_to_class(cover, basis, class_to_chain(basis, v).translated(cover, g));
}

QMatrix deck_action_matrix(const CoverGraph &cover, const HomologyBasis &basis, Element g) {
  std::vector<QVector> columns;
  columns.reserve(basis.rank());
  for (const auto &z : basis.cycles())
    columns.push_back(chain_to_class(cover, basis, z.translated(cover, g)));
  return QMatrix::from_columns(columns, basis.rank());
}

std::vector<QMatrix> deck_action_matrices(const CoverGraph &cover, const HomologyBasis &basis) {
  std::vector<QMatrix> out;
  out.reserve(cover.vertex_count());
  for (std::size_t g = 0; g < cover.vertex_count(); ++g)
    out.push_back(deck_action_matrix(cover, basis, Element(g)));
  return out;
}

Rational character(const CoverGraph &cover, const HomologyBasis &basis, Element g) {
  // Only the diagonal is needed: coordinate k of g.z_k.
  Rational trace = 0;
  for (std::size_t k = 0; k < basis.rank(); ++k)
    trace += basis.cycles()[k].translated(cover, g).coefficient(basis.cotree()[k]);
  return trace;
}

std::size_t orbit_rank(const CoverGraph &cover, const HomologyBasis &basis, const HomologyClass &v,
                       const std::vector<Element> &elements) {
  const Chain1 z = class_to_chain(basis, v);
  std::vector<QVector> orbit;
  orbit.reserve(elements.size());
  for (Element g : elements)
    orbit.push_back(chain_to_class(cover, basis, z.translated(cover, g)));
  return rank_of(std::move(orbit));
}

std::size_t orbit_rank(const CoverGraph &cover, const HomologyBasis &basis, const HomologyClass &v) {
  std::vector<Element> all(cover.vertex_count());
  for (std::size_t g = 0; g < all.size(); ++g)
    all[g] = Element(g);
  return orbit_rank(cover, basis, v, all);
}

InclusionReport inclusion_rank_test(const CoverGraph &cover, const HomologyBasis &basis,
                                    const std::vector<ComplementComponent> &components) {
  InclusionReport report;
  std::vector<QVector> images;
  std::size_t total = 0;
  for (const auto &component : components) {
    const HomologyBasis sub = cycle_basis(cover, component);
    report.component_ranks.push_back(sub.rank());
    total += sub.rank();
    for (const auto &z : sub.cycles())
      images.push_back(chain_to_class(cover, basis, z));
  }
  report.image_rank = rank_of(std::move(images));
  report.injective = report.image_rank == total;
  return report;
}

} // namespace rosecover
