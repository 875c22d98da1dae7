#include "rosecover/cover.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "rosecover/error.hpp"

namespace rosecover {

CoverGraph::CoverGraph(CoverSpec spec) : spec_(std::move(spec)) {}

Element CoverGraph::evaluate(const Word &w) const {
  Element x = FiniteGroup::identity();
  for (const auto &l : w.letters) {
    const Element s = image(l.petal);
    x = group().mul(x, l.exponent > 0 ? s : group().inv(s));
  }
  return x;
}

CoverGraph build_cover(CoverSpec spec) {
  const int n = spec.n();
  if (n < 1)
    throw Error(Errc::InvalidArgument, "the rose needs at least one petal");
  for (Element x : spec.images.images)
    if (x < 0 || std::size_t(x) >= spec.group.order())
      throw Error(Errc::InvalidArgument, "generator image " + std::to_string(x) + " out of range");
  const Subgroup generated = subgroup_generated(spec.group, spec.images.images);
  if (generated.order() != spec.group.order())
    throw Error(Errc::Disconnected, "images generate a subgroup of order " + std::to_string(generated.order()) +
                                        " in a group of order " + std::to_string(spec.group.order()));
  return CoverGraph(std::move(spec));
}

Element path_end(const CoverGraph &cover, const EdgePath &path) {
  return path.steps.empty() ? path.start
                            : (path.steps.back().forward ? cover.head(path.steps.back().edge)
                                                         : cover.tail(path.steps.back().edge));
}

bool is_closed(const CoverGraph &cover, const EdgePath &path) { return path_end(cover, path) == path.start; }

bool is_valid_path(const CoverGraph &cover, const EdgePath &path) {
  const auto order = cover.vertex_count();
  if (path.start < 0 || std::size_t(path.start) >= order)
    return false;
  Element at = path.start;
  for (const auto &step : path.steps) {
    if (step.edge.vertex < 0 || std::size_t(step.edge.vertex) >= order || step.edge.petal < 1 ||
        step.edge.petal > cover.n())
      return false;
    const Element from = step.forward ? cover.tail(step.edge) : cover.head(step.edge);
    if (from != at)
      return false;
    at = step.forward ? cover.head(step.edge) : cover.tail(step.edge);
  }
  return true;
}

EdgePath lift_word(const CoverGraph &cover, const Word &w, Element start) {
  EdgePath path{start, {}};
  path.steps.reserve(w.letters.size());
  Element at = start;
  const auto &g = cover.group();
  for (const auto &l : w.letters) {
    if (l.petal < 1 || l.petal > cover.n())
      throw Error(Errc::InvalidArgument, "letter a" + std::to_string(l.petal) + " is not a petal of the rose");
    const Element s = cover.image(l.petal);
    if (l.exponent > 0) {
      path.steps.push_back({Edge{at, l.petal}, true});
      at = g.mul(at, s);
    } else {
      at = g.mul(at, g.inv(s));
      path.steps.push_back({Edge{at, l.petal}, false});
    }
  }
  return path;
}

EdgePath deck_translate_path(const CoverGraph &cover, Element g, const EdgePath &path) {
  EdgePath out{cover.group().mul(g, path.start), {}};
  out.steps.reserve(path.steps.size());
  for (const auto &step : path.steps)
    out.steps.push_back({cover.translate(g, step.edge), step.forward});
  return out;
}

Subgroup petal_complement_subgroup(const CoverGraph &cover, int petal) {
  std::vector<Element> gens;
  for (int i = 1; i <= cover.n(); ++i)
    if (i != petal)
      gens.push_back(cover.image(i));
  return subgroup_generated(cover.group(), gens);
}

std::vector<ComplementComponent> petal_complement_components(const CoverGraph &cover, int petal) {
  if (petal < 1 || petal > cover.n())
    throw Error(Errc::InvalidArgument, "petal " + std::to_string(petal) + " out of range");
  const auto &g = cover.group();
  const std::size_t order = cover.vertex_count();
  std::vector<int> component(order, -1);
  std::vector<ComplementComponent> out;
  for (std::size_t s = 0; s < order; ++s) {
    if (component[s] >= 0)
      continue;
    const int id = int(out.size());
    ComplementComponent c;
    c.representative = Element(s);
    std::vector<Element> stack{Element(s)};
    component[s] = id;
    while (!stack.empty()) {
      const Element v = stack.back();
      stack.pop_back();
      c.vertices.push_back(v);
      for (int i = 1; i <= cover.n(); ++i) {
        if (i == petal)
          continue;
        for (Element w : {g.mul(v, cover.image(i)), g.mul(v, g.inv(cover.image(i)))})
          if (component[w] < 0) {
            component[w] = id;
            stack.push_back(w);
          }
      }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    for (Element v : c.vertices)
      for (int i = 1; i <= cover.n(); ++i)
        if (i != petal)
          c.edges.push_back(Edge{v, i});
    out.push_back(std::move(c));
  }
  return out;
}

std::string to_dot(const CoverGraph &cover) {
  static constexpr std::array<const char *, 8> kColors = {"red",    "blue",   "darkgreen", "orange",
                                                          "purple", "brown", "magenta",   "cyan4"};
  std::ostringstream os;
  os << "digraph cover {\n";
  os << "  // " << cover.vertex_count() << " vertices, " << cover.edge_count() << " edges, n = " << cover.n()
     << "\n";
  for (std::size_t v = 0; v < cover.vertex_count(); ++v) {
    os << "  v" << v << " [label=\"" << cover.group().label(Element(v)) << "\"";
    if (v == 0)
      os << ", shape=doublecircle";
    os << "];\n";
  }
  for (std::size_t id = 0; id < cover.edge_count(); ++id) {
    const Edge e = cover.edge_from_id(id);
    os << "  v" << cover.tail(e) << " -> v" << cover.head(e) << " [label=\"a" << e.petal << "\", color=\""
       << kColors[std::size_t(e.petal - 1) % kColors.size()] << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace rosecover
