#pragma once

// Independent reference implementations used only by the tests. None of them
// goes through equipartitions, flows or the library's binomials.

#include <boost/multiprecision/cpp_int.hpp>

#include <bit>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "adf/bipartite.hpp"
#include "adf/digraph.hpp"

namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// Pascal's triangle, row by row.
inline cpp_int binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  static std::vector<std::vector<cpp_int>> rows{{1}};
  while (static_cast<int>(rows.size()) <= n) {
    const auto& prev = rows.back();
    std::vector<cpp_int> next(prev.size() + 1);
    next.front() = next.back() = 1;
    for (std::size_t i = 1; i + 1 < next.size(); ++i) next[i] = prev[i - 1] + prev[i];
    rows.push_back(std::move(next));
  }
  return rows[n][k];
}

inline cpp_int nk(int n, int delta, int k) {
  if (k < 0 || k > n / 2) return 0;
  return 2 * binomial(delta, k) * binomial(n - delta - 1, n / 2 - k);
}

// n * sum_{k=lo}^{hi} n_k / k with hi = floor(n/4) - 1.
inline cpp_rational bound(int n, int delta, bool strong) {
  const int hi = n / 4 - 1;
  cpp_rational sum = 0;
  for (int k = std::max(2, delta - n / 2 + 1); k <= hi; ++k) {
    sum += cpp_rational(nk(n, delta, k), (strong && k == hi) ? 2 * k : k);
  }
  return sum * n;
}

// Anti-directed 2-factor by covering the vertex set with anti-directed cycles
// directly. For each vertex v, every vertex set of an anti-directed cycle
// whose least vertex is v is found by a walk DP over (visited set, end);
// covers are then assembled recursively on the uncovered set. n <= 16.
class CycleCoverOracle {
 public:
  explicit CycleCoverOracle(const adf::Digraph& d) : n_(d.order()), arc_(n_, 0) {
    for (const adf::Arc& a : d.arcs()) arc_[a.from] |= 1U << a.to;
    cycle_sets_.resize(n_);
    for (int v = 0; v < n_; ++v) collect(v);
  }

  bool has_cover() {
    if (n_ % 2 != 0) return false;
    return cover((1U << n_) - 1);
  }

 private:
  bool has(int u, int w) const { return (arc_[u] >> w) & 1U; }

  void collect(int v) {
    std::vector<std::uint32_t> found;
    for (int flip = 0; flip < 2; ++flip) {
      // reach[mask] = set of end vertices of an alternating walk from v over mask
      std::unordered_map<std::uint32_t, std::uint32_t> reach;
      std::vector<std::uint32_t> frontier{1U << v};
      reach[1U << v] = 1U << v;
      while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t mask : frontier) {
          const int index = std::popcount(mask) - 1;  // index of the next arc
          const bool forward = ((index % 2) == 0) != (flip == 1);
          for (std::uint32_t ends = reach[mask]; ends; ends &= ends - 1) {
            const int end = std::countr_zero(ends);
            if (index + 1 >= 4 && (index + 1) % 2 == 0) {
              // closing arc has odd index, so it points into v when flip = 1
              const bool closes = flip == 1 ? has(end, v) : has(v, end);
              if (closes) found.push_back(mask);
            }
            for (int w = v + 1; w < n_; ++w) {
              if ((mask >> w) & 1U) continue;
              if (!(forward ? has(end, w) : has(w, end))) continue;
              const std::uint32_t grown = mask | (1U << w);
              auto [it, fresh] = reach.try_emplace(grown, 0U);
              if (fresh) next.push_back(grown);
              it->second |= 1U << w;
            }
          }
        }
        frontier = std::move(next);
      }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    cycle_sets_[v] = std::move(found);
  }

  bool cover(std::uint32_t uncovered) {
    if (uncovered == 0) return true;
    if (auto it = memo_.find(uncovered); it != memo_.end()) return it->second;
    const int v = std::countr_zero(uncovered);
    bool ok = false;
    for (std::uint32_t c : cycle_sets_[v]) {
      if ((c & uncovered) == c && cover(uncovered & ~c)) {
        ok = true;
        break;
      }
    }
    memo_[uncovered] = ok;
    return ok;
  }

  int n_;
  std::vector<std::uint32_t> arc_;
  std::vector<std::vector<std::uint32_t>> cycle_sets_;
  std::unordered_map<std::uint32_t, bool> memo_;
};

inline bool has_anti_directed_two_factor(const adf::Digraph& d) { return CycleCoverOracle(d).has_cover(); }

// Held-Karp Hamilton cycle test on any graph given by adjacency masks. n <= 20.
inline bool hamiltonian(const std::vector<std::uint32_t>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n < 3) return false;
  std::vector<std::uint32_t> ends(1U << n, 0);
  ends[1] = 1;
  for (std::uint32_t mask = 1; mask < (1U << n); mask += 2) {
    for (std::uint32_t e = ends[mask]; e; e &= e - 1) {
      const int end = std::countr_zero(e);
      for (std::uint32_t out = adj[end] & ~mask; out; out &= out - 1) {
        const int w = std::countr_zero(out);
        ends[mask | (1U << w)] |= 1U << w;
      }
    }
  }
  const std::uint32_t all = (1U << n) - 1;
  for (std::uint32_t e = ends[all]; e; e &= e - 1) {
    if (adj[std::countr_zero(e)] & 1U) return true;
  }
  return false;
}

inline std::vector<std::uint32_t> adjacency(const adf::BipartiteInstance& g) {
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (const adf::CrossEdge& e : g.edges()) {
    adj[e.x] |= 1U << e.y;
    adj[e.y] |= 1U << e.x;
  }
  return adj;
}

// 2-factor of a bipartite graph by choosing two neighbours for every X vertex
// and requiring every Y vertex to be chosen exactly twice.
inline bool has_two_factor(const adf::BipartiteInstance& g) {
  const auto& xs = g.partition().x();
  std::vector<int> load(g.order(), 0);
  auto place = [&](auto&& self, std::size_t i) -> bool {
    if (i == xs.size()) {
      for (adf::Vertex y : g.partition().y()) {
        if (load[y] != 2) return false;
      }
      return true;
    }
    const auto nb = g.neighbors(xs[i]);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      if (load[nb[a]] == 2) continue;
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (load[nb[b]] == 2) continue;
        ++load[nb[a]];
        ++load[nb[b]];
        const bool ok = self(self, i + 1);
        --load[nb[a]];
        --load[nb[b]];
        if (ok) return true;
      }
    }
    return false;
  };
  return place(place, 0);
}

// Directed 2-factor by trying every successor assignment. n <= 8.
inline bool has_directed_two_factor(const adf::Digraph& d) {
  const int n = d.order();
  std::vector<bool> taken(n, false);
  auto assign = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (adf::Vertex w : d.out_neighbors(v)) {
      if (taken[w]) continue;
      taken[w] = true;
      if (self(self, v + 1)) return true;
      taken[w] = false;
    }
    return false;
  };
  return assign(assign, 0);
}

// Proper 3-edge-colouring by trying all 3^m assignments with pruning. m <= 24.
inline bool three_edge_colorable(const adf::SimpleGraph& g) {
  const auto& edges = g.edges();
  std::vector<int> used(g.order(), 0);
  auto go = [&](auto&& self, std::size_t i) -> bool {
    if (i == edges.size()) return true;
    for (int c = 0; c < 3; ++c) {
      const int bit = 1 << c;
      if ((used[edges[i].u] | used[edges[i].v]) & bit) continue;
      used[edges[i].u] |= bit;
      used[edges[i].v] |= bit;
      const bool ok = self(self, i + 1);
      used[edges[i].u] &= ~bit;
      used[edges[i].v] &= ~bit;
      if (ok) return true;
    }
    return false;
  };
  return go(go, 0);
}

}  // namespace oracle
