#include "adf/reduction.hpp"

#include <array>

#include "adf/errors.hpp"

namespace adf {

namespace {

void require_cubic(const SimpleGraph& g) {
  if (!g.is_cubic()) throw PreconditionError("graph is not cubic");
}

class Colorer {
 public:
  explicit Colorer(const SimpleGraph& g)
      : g_(g), colors_(g.size(), -1), used_(g.order(), 0) {}

  std::optional<std::vector<int>> run() {
    if (g_.size() == 0) return colors_;
    // The three edges at vertex 0 get distinct colours in any colouring, so
    // fixing them to 0, 1, 2 loses nothing.
    int c = 0;
    for (Vertex w : g_.neighbors(0)) {
      if (!assign(*g_.edge_index(0, w), c++)) return std::nullopt;
    }
    if (extend(0)) return colors_;
    return std::nullopt;
  }

 private:
  bool assign(std::size_t e, int c) {
    const Edge& edge = g_.edges()[e];
    const int bit = 1 << c;
    if ((used_[edge.u] | used_[edge.v]) & bit) return false;
    colors_[e] = c;
    used_[edge.u] |= bit;
    used_[edge.v] |= bit;
    return true;
  }

  void unassign(std::size_t e) {
    const Edge& edge = g_.edges()[e];
    const int bit = 1 << colors_[e];
    used_[edge.u] &= ~bit;
    used_[edge.v] &= ~bit;
    colors_[e] = -1;
  }

  bool extend(std::size_t from) {
    std::size_t e = from;
    while (e < colors_.size() && colors_[e] >= 0) ++e;
    if (e == colors_.size()) return true;
    for (int c = 0; c < 3; ++c) {
      if (!assign(e, c)) continue;
      if (extend(e + 1)) return true;
      unassign(e);
    }
    return false;
  }

  const SimpleGraph& g_;
  std::vector<int> colors_;
  std::vector<int> used_;
};

}  // namespace

Digraph cubic_to_digraph(const SimpleGraph& g) {
  require_cubic(g);
  std::vector<Arc> arcs;
  arcs.reserve(2 * g.size());
  for (const Edge& e : g.edges()) {
    arcs.push_back({e.u, e.v});
    arcs.push_back({e.v, e.u});
  }
  return Digraph(g.order(), std::move(arcs));
}

ReductionOutcome three_edge_colorable_via_adf(const SimpleGraph& g, const SearchOptions& options) {
  ReductionOutcome out;
  out.certificate = decide_adf(cubic_to_digraph(g), options);
  out.decision = out.certificate.decision;
  return out;
}

std::optional<EdgeColoring> three_edge_color_direct(const SimpleGraph& g) {
  require_cubic(g);
  auto colors = Colorer(g).run();
  if (!colors) return std::nullopt;
  EdgeColoring c{g.edges(), std::move(*colors)};
  if (Validation v = validate_edge_coloring(g, c); !v) throw InvariantError(v.reason);
  return c;
}

Validation validate_edge_coloring(const SimpleGraph& g, const EdgeColoring& c) {
  if (c.edges.size() != g.size() || c.colors.size() != g.size()) {
    return Validation::fail("colouring size does not match the edge count");
  }
  std::vector<int> used(g.order(), 0);
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const Edge& e = c.edges[i];
    if (e.u < 0 || e.v >= g.order() || e.u >= e.v || !(g.edges()[i] == e)) {
      return Validation::fail("edge " + std::to_string(i) + " does not match the graph");
    }
    const int color = c.colors[i];
    if (color < 0 || color > 2) return Validation::fail("colour out of range at edge " + std::to_string(i));
    const int bit = 1 << color;
    if ((used[e.u] | used[e.v]) & bit) {
      return Validation::fail("colour " + std::to_string(color) + " repeats at edge " +
                              std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    used[e.u] |= bit;
    used[e.v] |= bit;
  }
  return Validation::pass();
}

CycleCover coloring_to_adf(const SimpleGraph& g, const EdgeColoring& c) {
  require_cubic(g);
  if (Validation v = validate_edge_coloring(g, c); !v) throw PreconditionError(v.reason);
  const int n = g.order();
  // partner[v][k]: the neighbour joined to v by colour k (k = 0, 1).
  std::vector<std::array<Vertex, 2>> partner(n, {-1, -1});
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const int k = c.colors[i];
    if (k == 2) continue;
    partner[c.edges[i].u][k] = c.edges[i].v;
    partner[c.edges[i].v][k] = c.edges[i].u;
  }
  CycleCover cover;
  cover.forward.emplace();
  std::vector<bool> seen(n, false);
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> cycle;
    Vertex v = start;
    int k = 0;
    while (!seen[v]) {
      seen[v] = true;
      cycle.push_back(v);
      v = partner[v][k];
      k ^= 1;
    }
    if (v != start || cycle.size() % 2 != 0 || cycle.size() < 4) {
      throw InvariantError("two colour classes did not close into an even cycle");
    }
    std::vector<bool> forward(cycle.size());
    for (std::size_t i = 0; i < cycle.size(); ++i) forward[i] = i % 2 == 0;
    cover.cycles.push_back(std::move(cycle));
    cover.forward->push_back(std::move(forward));
  }
  return cover;
}

EdgeColoring adf_to_coloring(const SimpleGraph& g, const CycleCover& cover) {
  const Digraph d = cubic_to_digraph(g);
  if (Validation v = validate_anti_directed_cover(d, cover); !v) throw PreconditionError(v.reason);
  EdgeColoring c{g.edges(), std::vector<int>(g.size(), 2)};
  for (const auto& cycle : cover.cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto e = g.edge_index(cycle[i], cycle[(i + 1) % cycle.size()]);
      if (!e) throw InvariantError("cover uses a non-edge");
      c.colors[*e] = static_cast<int>(i % 2);
    }
  }
  if (Validation v = validate_edge_coloring(g, c); !v) throw InvariantError(v.reason);
  return c;
}

}  // namespace adf
