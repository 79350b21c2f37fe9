#include "adf/generators.hpp"

#include <algorithm>

#include "adf/errors.hpp"

namespace adf {

namespace {

// Mutable arc set used while building random digraphs.
class ArcSet {
 public:
  explicit ArcSet(int n) : n_(n), present_(static_cast<std::size_t>(n) * n, false) {}

  bool has(Vertex u, Vertex v) const { return present_[index(u, v)]; }
  bool add(Vertex u, Vertex v) {
    if (u == v || has(u, v)) return false;
    present_[index(u, v)] = true;
    arcs_.push_back({u, v});
    return true;
  }
  void replace(std::size_t i, Arc a) {
    present_[index(arcs_[i].from, arcs_[i].to)] = false;
    present_[index(a.from, a.to)] = true;
    arcs_[i] = a;
  }
  const std::vector<Arc>& arcs() const { return arcs_; }
  Digraph build() const { return Digraph(n_, arcs_); }

 private:
  std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }
  int n_;
  std::vector<bool> present_;
  std::vector<Arc> arcs_;
};

void check_order(int n) {
  if (n < 1) throw PreconditionError("generator needs n >= 1");
}

}  // namespace

Digraph random_digraph(int n, double p, Rng& rng) {
  check_order(n);
  ArcSet set(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && rng.chance(p)) set.add(u, v);
    }
  }
  return set.build();
}

Digraph random_min_degree_digraph(int n, int delta, Rng& rng) {
  check_order(n);
  if (delta < 0 || delta > n - 1) throw PreconditionError("need 0 <= delta <= n-1");
  ArcSet set(n);
  std::vector<int> indeg(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (int pick : rng.sample(n - 1, delta)) {
      Vertex v = pick >= u ? pick + 1 : pick;
      set.add(u, v);
      ++indeg[v];
    }
  }
  for (Vertex w = 0; w < n; ++w) {
    while (indeg[w] < delta) {
      Vertex u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
      if (set.add(u, w)) ++indeg[w];
    }
  }
  return set.build();
}

Digraph uniform_degree_digraph(int n, int delta, Rng& rng) {
  check_order(n);
  if (delta < 0 || delta > n - 1) throw PreconditionError("need 0 <= delta <= n-1");
  ArcSet set(n);
  for (int shift : rng.sample(n - 1, delta)) {
    for (Vertex u = 0; u < n; ++u) set.add(u, (u + shift + 1) % n);
  }
  const std::size_t m = set.arcs().size();
  if (m >= 2) {
    for (std::size_t step = 0; step < 20 * m; ++step) {
      std::size_t i = rng.below(m);
      std::size_t j = rng.below(m);
      Arc a = set.arcs()[i];
      Arc b = set.arcs()[j];
      // (a.from, a.to), (b.from, b.to) -> (a.from, b.to), (b.from, a.to)
      if (a.from == b.from || a.to == b.to) continue;
      if (a.from == b.to || b.from == a.to) continue;
      if (set.has(a.from, b.to) || set.has(b.from, a.to)) continue;
      set.replace(i, {a.from, b.to});
      set.replace(j, {b.from, a.to});
    }
  }
  return set.build();
}

Digraph random_tournament(int n, Rng& rng) {
  check_order(n);
  ArcSet set(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.chance(0.5)) {
        set.add(u, v);
      } else {
        set.add(v, u);
      }
    }
  }
  return set.build();
}

Digraph near_extremal_digraph(int n, Rng& rng) {
  if (n < 4 || n % 2 != 0) throw PreconditionError("near-extremal family needs even n >= 4");
  const int a = (n / 2) % 2 == 1 ? n / 2 : n / 2 - 1;
  auto part = [a](Vertex v) { return v < a ? 0 : 1; };
  ArcSet set(n);
  std::vector<int> out(n, 0), in(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && part(u) == part(v)) {
        set.add(u, v);
        ++out[u];
        ++in[v];
      }
    }
  }
  const int target = n / 2;
  for (Vertex u = 0; u < n; ++u) {
    const Vertex lo = part(u) == 0 ? a : 0;
    const Vertex hi = part(u) == 0 ? n : a;
    while (out[u] < target) {
      Vertex v = static_cast<Vertex>(rng.between(lo, hi - 1));
      if (set.add(u, v)) {
        ++out[u];
        ++in[v];
      }
    }
    while (in[u] < target) {
      Vertex v = static_cast<Vertex>(rng.between(lo, hi - 1));
      if (set.add(v, u)) {
        ++out[v];
        ++in[u];
      }
    }
  }
  return set.build();
}

BipartiteInstance random_bipartite(int half, double p, Rng& rng) {
  if (half < 0) throw PreconditionError("negative side size");
  std::vector<Vertex> xs(half);
  for (int i = 0; i < half; ++i) xs[i] = i;
  std::vector<CrossEdge> edges;
  for (Vertex x = 0; x < half; ++x) {
    for (Vertex y = half; y < 2 * half; ++y) {
      if (rng.chance(p)) edges.push_back({x, y});
    }
  }
  return BipartiteInstance(Equipartition(2 * half, std::move(xs)), std::move(edges));
}

BipartiteInstance planted_deficient_bipartite(int half, int k, double p, Rng& rng) {
  if (k < 1 || k > half) throw PreconditionError("planted set size must be in 1..half");
  std::vector<Vertex> xs(half);
  for (int i = 0; i < half; ++i) xs[i] = i;
  std::vector<int> u_pick = rng.sample(half, k);
  std::vector<int> w_pick = rng.sample(half, k - 1);
  std::vector<bool> in_u(half, false), in_w(half, false);
  for (int i : u_pick) in_u[i] = true;
  for (int i : w_pick) in_w[i] = true;
  std::vector<CrossEdge> edges;
  for (Vertex x = 0; x < half; ++x) {
    for (int j = 0; j < half; ++j) {
      if (in_u[x] && !in_w[j]) continue;
      // Planted pairs are dense so the set stays deficient but not trivially isolated.
      double q = in_u[x] ? std::max(p, 0.7) : p;
      if (rng.chance(q)) edges.push_back({x, half + j});
    }
  }
  return BipartiteInstance(Equipartition(2 * half, std::move(xs)), std::move(edges));
}

SimpleGraph k4_graph() {
  return SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

SimpleGraph k33_graph() {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 3; ++u) {
    for (Vertex v = 3; v < 6; ++v) edges.push_back({u, v});
  }
  return SimpleGraph(6, std::move(edges));
}

SimpleGraph generalized_petersen(int m, int k) {
  if (m < 3 || k < 1 || 2 * k >= m) throw PreconditionError("GP(m,k) needs m >= 3, 1 <= k < m/2");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    edges.push_back({i, (i + 1) % m});
    edges.push_back({i, m + i});
    edges.push_back({m + i, m + (i + k) % m});
  }
  return SimpleGraph(2 * m, std::move(edges));
}

SimpleGraph petersen_graph() { return generalized_petersen(5, 2); }
SimpleGraph prism_graph() { return generalized_petersen(3, 1); }

SimpleGraph random_cubic_graph(int n, Rng& rng) {
  if (n < 4 || n % 2 != 0) throw PreconditionError("cubic graphs need even n >= 4");
  std::vector<Vertex> points(3 * static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / 3);
  std::vector<bool> seen(static_cast<std::size_t>(n) * n);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    rng.shuffle(points);
    std::fill(seen.begin(), seen.end(), false);
    std::vector<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < points.size(); i += 2) {
      Vertex u = std::min(points[i], points[i + 1]);
      Vertex v = std::max(points[i], points[i + 1]);
      if (u == v || seen[static_cast<std::size_t>(u) * n + v]) {
        simple = false;
        break;
      }
      seen[static_cast<std::size_t>(u) * n + v] = true;
      edges.push_back({u, v});
    }
    if (simple) return SimpleGraph(n, std::move(edges));
  }
  throw InvariantError("pairing model kept producing non-simple graphs");
}

SimpleGraph named_cubic_graph(const std::string& name) {
  if (name == "k4") return k4_graph();
  if (name == "k33") return k33_graph();
  if (name == "prism") return prism_graph();
  if (name == "petersen") return petersen_graph();
  if (name == "mobius-kantor") return generalized_petersen(8, 3);
  if (name == "durer") return generalized_petersen(6, 2);
  if (name == "desargues") return generalized_petersen(10, 3);
  if (name.rfind("gp:", 0) == 0) {
    auto sep = name.find(':', 3);
    if (sep != std::string::npos) {
      try {
        return generalized_petersen(std::stoi(name.substr(3, sep - 3)), std::stoi(name.substr(sep + 1)));
      } catch (const std::logic_error&) {
        // fall through to the error below
      }
    }
  }
  throw PreconditionError("unknown cubic graph name: " + name);
}

}  // namespace adf
