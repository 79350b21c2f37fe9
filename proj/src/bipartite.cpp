#include "adf/bipartite.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <string>

#include "adf/errors.hpp"
#include "adf/flow.hpp"

namespace adf {

Equipartition::Equipartition(int n, std::vector<Vertex> x_side)
    : side_(static_cast<std::size_t>(std::max(n, 0)), Side::y), x_(std::move(x_side)) {
  if (n < 0 || n % 2 != 0) throw PreconditionError("equipartition needs an even vertex count");
  if (static_cast<int>(x_.size()) != n / 2) {
    throw PreconditionError("X must hold exactly n/2 vertices");
  }
  for (Vertex v : x_) {
    if (v < 0 || v >= n) throw PreconditionError("X vertex out of range");
    if (side_[v] == Side::x) throw PreconditionError("X lists a vertex twice");
    side_[v] = Side::x;
  }
  std::sort(x_.begin(), x_.end());
  for (Vertex v = 0; v < n; ++v) {
    if (side_[v] == Side::y) y_.push_back(v);
  }
}

Equipartition Equipartition::from_mask(int n, std::uint64_t mask) {
  if (n > 64) throw PreconditionError("mask form supports at most 64 vertices");
  std::vector<Vertex> xs;
  for (Vertex v = 0; v < n; ++v) {
    if (mask >> v & 1U) xs.push_back(v);
  }
  return Equipartition(n, std::move(xs));
}

BipartiteInstance::BipartiteInstance(Equipartition partition, std::vector<CrossEdge> edges)
    : partition_(std::move(partition)), edges_(std::move(edges)), adj_(partition_.order()) {
  const int n = partition_.order();
  for (const CrossEdge& e : edges_) {
    if (e.x < 0 || e.x >= n || e.y < 0 || e.y >= n) throw PreconditionError("edge endpoint out of range");
    if (!partition_.in_x(e.x) || partition_.in_x(e.y)) {
      throw PreconditionError("edge (" + std::to_string(e.x) + "," + std::to_string(e.y) +
                              ") does not run from X to Y");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw PreconditionError("repeated edge");
  }
  for (const CrossEdge& e : edges_) {
    adj_[e.x].push_back(e.y);
    adj_[e.y].push_back(e.x);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool BipartiteInstance::adjacent(Vertex a, Vertex b) const {
  const auto& list = adj_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

std::vector<int> BipartiteInstance::degree_sequence() const {
  std::vector<int> seq;
  seq.reserve(adj_.size());
  for (const auto& list : adj_) seq.push_back(static_cast<int>(list.size()));
  std::sort(seq.begin(), seq.end());
  return seq;
}

BipartiteInstance BipartiteInstance::swapped() const {
  std::vector<CrossEdge> flipped;
  flipped.reserve(edges_.size());
  for (const CrossEdge& e : edges_) flipped.push_back({e.y, e.x});
  return BipartiteInstance(partition_.swapped(), std::move(flipped));
}

BipartiteInstance build_bipartite(const Digraph& d, const Equipartition& p) {
  if (p.order() != d.order()) throw PreconditionError("partition does not match digraph order");
  std::vector<CrossEdge> edges;
  for (Vertex x : p.x()) {
    for (Vertex y : d.out_neighbors(x)) {
      if (!p.in_x(y)) edges.push_back({x, y});
    }
  }
  return BipartiteInstance(p, std::move(edges));
}

BipartiteInstance parse_bipartite(std::string_view text) {
  std::string body(text);
  std::vector<Vertex> xs;
  bool have_x = false;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t end = body.find('\n', pos);
    if (end == std::string::npos) end = body.size();
    std::size_t start = body.find_first_not_of(" \t", pos);
    if (start < end && body.compare(start, 2, "X:") == 0) {
      if (have_x) throw ParseError(0, "more than one X line");
      have_x = true;
      std::istringstream fields(body.substr(start + 2, end - start - 2));
      long long v = 0;
      while (fields >> v) xs.push_back(static_cast<Vertex>(v));
      if (!fields.eof()) throw ParseError(0, "malformed X line");
      body[start] = '#';  // keep line numbering for the arc parser
    }
    pos = end + 1;
  }
  if (!have_x) throw ParseError(0, "missing X line");
  Digraph d = parse_digraph(body);
  Equipartition p(d.order(), std::move(xs));
  std::vector<CrossEdge> edges;
  for (const Arc& a : d.arcs()) edges.push_back({a.from, a.to});
  return BipartiteInstance(std::move(p), std::move(edges));
}

std::string serialize(const BipartiteInstance& g) {
  std::ostringstream out;
  out << g.order() << "\nX:";
  for (Vertex v : g.partition().x()) out << ' ' << v;
  out << '\n';
  for (const CrossEdge& e : g.edges()) out << e.x << ' ' << e.y << '\n';
  return out.str();
}

NeighborMultiset neighborhood_multiset(const BipartiteInstance& g, std::span<const Vertex> subset) {
  NeighborMultiset result;
  if (subset.empty()) return result;
  const Side side = g.partition().side(subset.front());
  std::vector<int> hits(g.order(), 0);
  std::vector<bool> member(g.order(), false);
  for (Vertex u : subset) {
    if (u < 0 || u >= g.order()) throw PreconditionError("subset vertex out of range");
    if (g.partition().side(u) != side) throw PreconditionError("subset straddles both sides");
    if (member[u]) throw PreconditionError("subset lists a vertex twice");
    member[u] = true;
    for (Vertex w : g.neighbors(u)) ++hits[w];
  }
  for (Vertex w = 0; w < g.order(); ++w) {
    if (hits[w] == 0) continue;
    int mult = std::min(hits[w], 2);
    result.entries.emplace_back(w, mult);
    result.size += mult;
  }
  return result;
}

bool is_deficient(const BipartiteInstance& g, std::span<const Vertex> subset) {
  return neighborhood_multiset(g, subset).size < 2 * static_cast<int>(subset.size());
}

namespace {

constexpr int kExhaustiveLimit = 20;

// Subsets of `pool` (|pool| <= 20) as bitmasks of pool indices, in order of
// increasing size; returns the first deficient one of size < `max_size`.
std::optional<std::vector<Vertex>> smallest_deficient_subset(const BipartiteInstance& g,
                                                             const std::vector<Vertex>& pool,
                                                             std::size_t max_size) {
  const int k = static_cast<int>(pool.size());
  const int n = g.order();
  // Neighborhood masks need n <= 64; fall back to the generic count otherwise.
  const bool fast = n <= 64;
  std::vector<std::uint64_t> nbr(k, 0);
  if (fast) {
    for (int i = 0; i < k; ++i) {
      for (Vertex w : g.neighbors(pool[i])) nbr[i] |= std::uint64_t{1} << w;
    }
  }
  std::vector<Vertex> chosen;
  for (std::size_t size = 1; size < max_size && size <= pool.size(); ++size) {
    std::uint32_t mask = (std::uint32_t{1} << size) - 1;
    const std::uint32_t limit = std::uint32_t{1} << k;
    while (mask < limit) {
      int n2 = 0;
      if (fast) {
        std::uint64_t once = 0, twice = 0;
        for (std::uint32_t m = mask; m; m &= m - 1) {
          auto bits = nbr[std::countr_zero(m)];
          twice |= once & bits;
          once |= bits;
        }
        n2 = std::popcount(once) + std::popcount(twice);
      } else {
        chosen.clear();
        for (std::uint32_t m = mask; m; m &= m - 1) chosen.push_back(pool[std::countr_zero(m)]);
        n2 = neighborhood_multiset(g, chosen).size;
      }
      if (n2 < 2 * static_cast<int>(size)) {
        std::vector<Vertex> found;
        for (std::uint32_t m = mask; m; m &= m - 1) found.push_back(pool[std::countr_zero(m)]);
        return found;
      }
      // Gosper's hack: next mask with the same popcount.
      std::uint32_t low = mask & -mask;
      std::uint32_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  return std::nullopt;
}

DeficiencyWitness make_witness(const BipartiteInstance& g, std::vector<Vertex> subset) {
  std::sort(subset.begin(), subset.end());
  int size = neighborhood_multiset(g, subset).size;
  return {std::move(subset), size};
}

// Max flow on S -> x (cap 2), x -> y (cap 1 per edge), y -> T (cap 2).
struct FactorFlow {
  FlowNetwork net;
  std::vector<int> edge_ids;
  std::int64_t value = 0;
  int source = 0;

  explicit FactorFlow(const BipartiteInstance& g) : net(g.order() + 2) {
    const int n = g.order();
    source = n;
    const int sink = n + 1;
    for (Vertex x : g.partition().x()) net.add_edge(source, x, 2);
    for (Vertex y : g.partition().y()) net.add_edge(y, sink, 2);
    edge_ids.reserve(g.edges().size());
    for (const CrossEdge& e : g.edges()) edge_ids.push_back(net.add_edge(e.x, e.y, 1));
    value = net.max_flow(source, sink);
  }
};

}  // namespace

std::vector<Vertex> minimize_deficient_set(const BipartiteInstance& g, std::vector<Vertex> subset) {
  if (!is_deficient(g, subset)) throw PreconditionError("set to minimize is not deficient");
  std::sort(subset.begin(), subset.end());
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      std::vector<Vertex> smaller = subset;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
      if (is_deficient(g, smaller)) {
        subset = std::move(smaller);
        shrunk = true;
        break;
      }
    }
  }
  // Deficiency is not monotone, so a smaller deficient subset may still hide
  // behind single deletions.
  if (subset.size() <= kExhaustiveLimit) {
    if (auto smaller = smallest_deficient_subset(g, subset, subset.size())) subset = *smaller;
  }
  std::sort(subset.begin(), subset.end());
  return subset;
}

std::optional<DeficiencyWitness> find_deficient_set(const BipartiteInstance& g,
                                                    DeficiencySearch mode) {
  const auto& xs = g.partition().x();
  if (mode == DeficiencySearch::exhaustive) {
    if (xs.size() > kExhaustiveLimit) {
      throw PreconditionError("exhaustive deficiency search limited to |X| <= 20");
    }
    auto found = smallest_deficient_subset(g, xs, xs.size() + 1);
    if (!found) return std::nullopt;
    return make_witness(g, std::move(*found));
  }

  FactorFlow flow(g);
  if (flow.value == 2 * static_cast<std::int64_t>(xs.size())) return std::nullopt;
  // A cut of capacity < 2|X| has X-part U with 2|Y cap S| + e(U, Y \ S) < 2|U|,
  // and that quantity bounds |N2(U)| from above.
  auto reach = flow.net.source_side(flow.source);
  std::vector<Vertex> subset;
  for (Vertex x : xs) {
    if (reach[x]) subset.push_back(x);
  }
  if (!is_deficient(g, subset)) throw InvariantError("min cut did not yield a deficient set");
  return make_witness(g, minimize_deficient_set(g, std::move(subset)));
}

std::optional<CycleCover> has_two_factor(const BipartiteInstance& g) {
  const int n = g.order();
  FactorFlow flow(g);
  if (flow.value != static_cast<std::int64_t>(n)) return std::nullopt;

  std::vector<std::vector<Vertex>> chosen(n);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (flow.net.flow_on(flow.edge_ids[i]) == 1) {
      const CrossEdge& e = g.edges()[i];
      chosen[e.x].push_back(e.y);
      chosen[e.y].push_back(e.x);
    }
  }
  CycleCover cover;
  cover.forward.emplace();
  std::vector<bool> used(n, false);
  for (Vertex start = 0; start < n; ++start) {
    if (used[start]) continue;
    if (chosen[start].size() != 2) throw InvariantError("flow solution is not 2-regular");
    std::vector<Vertex> cyc{start};
    used[start] = true;
    Vertex prev = start;
    Vertex cur = std::min(chosen[start][0], chosen[start][1]);
    while (cur != start) {
      if (used[cur] || chosen[cur].size() != 2) throw InvariantError("broken cycle in 2-factor");
      used[cur] = true;
      cyc.push_back(cur);
      Vertex next = chosen[cur][0] == prev ? chosen[cur][1] : chosen[cur][0];
      prev = cur;
      cur = next;
    }
    if (cyc.size() % 2 != 0 || cyc.size() < 4) throw InvariantError("2-factor cycle is not even");
    std::vector<bool> fwd(cyc.size());
    for (std::size_t i = 0; i < cyc.size(); ++i) fwd[i] = g.partition().in_x(cyc[i]);
    cover.cycles.push_back(std::move(cyc));
    cover.forward->push_back(std::move(fwd));
  }
  return cover;
}

CycleCover cover_from_cycle(const BipartiteInstance& g, std::vector<Vertex> cycle) {
  std::vector<bool> fwd(cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) fwd[i] = g.partition().in_x(cycle[i]);
  CycleCover cover;
  cover.cycles.push_back(std::move(cycle));
  cover.forward.emplace();
  cover.forward->push_back(std::move(fwd));
  return cover;
}

}  // namespace adf
