#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "adf/digraph.hpp"

namespace adf {

enum class Side : std::uint8_t { x, y };

// Split of 0..n-1 into halves X and Y of equal size. For the solvers X is the
// source side: the vertices whose cover arcs both point out.
class Equipartition {
 public:
  // Y is the complement of `x_side`. Throws PreconditionError unless n is even,
  // |X| = n/2 and the listed vertices are distinct and in range.
  Equipartition(int n, std::vector<Vertex> x_side);
  // Bit v of `mask` set means v is in X. Requires n <= 64.
  static Equipartition from_mask(int n, std::uint64_t mask);

  int order() const noexcept { return static_cast<int>(side_.size()); }
  const std::vector<Vertex>& x() const noexcept { return x_; }
  const std::vector<Vertex>& y() const noexcept { return y_; }
  Side side(Vertex v) const { return side_[v]; }
  bool in_x(Vertex v) const { return side_[v] == Side::x; }
  // X and Y exchanged.
  Equipartition swapped() const { return Equipartition(order(), y_); }

 private:
  std::vector<Side> side_;
  std::vector<Vertex> x_;
  std::vector<Vertex> y_;
};

struct CrossEdge {
  Vertex x = 0;
  Vertex y = 0;
  auto operator<=>(const CrossEdge&) const = default;
};

// Bipartite graph whose edges all join X to Y.
class BipartiteInstance {
 public:
  // Throws PreconditionError if an edge does not cross or repeats.
  BipartiteInstance(Equipartition partition, std::vector<CrossEdge> edges);

  const Equipartition& partition() const noexcept { return partition_; }
  int order() const noexcept { return partition_.order(); }
  const std::vector<CrossEdge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex a, Vertex b) const;
  // All n degrees, nondecreasing.
  std::vector<int> degree_sequence() const;
  // Same graph with the roles of X and Y exchanged.
  BipartiteInstance swapped() const;

 private:
  Equipartition partition_;
  std::vector<CrossEdge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// B(X,Y): keeps exactly the arcs of `d` that run from X to Y.
BipartiteInstance build_bipartite(const Digraph& d, const Equipartition& p);

// Serialized as the digraph format with an extra "X: v1 v2 ..." line; each
// edge line is "x y" with x in X.
BipartiteInstance parse_bipartite(std::string_view text);
std::string serialize(const BipartiteInstance& g);

struct NeighborMultiset {
  // Sum of the capped multiplicities, i.e. |N2(U)|.
  int size = 0;
  // (neighbor, multiplicity in {1,2}) sorted by neighbor.
  std::vector<std::pair<Vertex, int>> entries;
};

// N2(U): each neighbor of U counted twice if adjacent to two or more members
// of U, once if adjacent to exactly one. U must lie within one side.
NeighborMultiset neighborhood_multiset(const BipartiteInstance& g, std::span<const Vertex> subset);

struct DeficiencyWitness {
  std::vector<Vertex> subset;  // sorted, within X
  int multiset_size = 0;       // |N2(subset)| < 2|subset|
};

enum class DeficiencySearch { exhaustive, minimal };

bool is_deficient(const BipartiteInstance& g, std::span<const Vertex> subset);

// exhaustive: scans subsets of X by increasing size (|X| <= 20, else
// PreconditionError), so the result has minimum cardinality.
// minimal: extracts a deficient set from a minimum cut and shrinks it to an
// inclusion-minimal one.
std::optional<DeficiencyWitness> find_deficient_set(const BipartiteInstance& g,
                                                    DeficiencySearch mode);

// Shrinks a deficient set to an inclusion-minimal deficient subset. Sets of
// more than 20 vertices are only guaranteed minimal under single deletions.
std::vector<Vertex> minimize_deficient_set(const BipartiteInstance& g, std::vector<Vertex> subset);

// Spanning 2-regular subgraph, split into cycles and oriented X -> Y, or
// nullopt if none exists. Exact: solved as a degree-constrained subgraph
// problem by max flow. Requires |X| = |Y| (guaranteed by Equipartition).
std::optional<CycleCover> has_two_factor(const BipartiteInstance& g);

struct HamiltonResult {
  enum class Status { found, absent, unknown };
  Status status = Status::unknown;
  std::vector<Vertex> cycle;
  std::uint64_t nodes = 0;
};

// Backtracking with forced-edge pruning. `unknown` when the node budget runs
// out. Supports up to 64 vertices; intended for n <= 32.
HamiltonResult has_hamilton_cycle(const BipartiteInstance& g, std::uint64_t node_budget);

// The Hamilton cycle as a CycleCover oriented X -> Y.
CycleCover cover_from_cycle(const BipartiteInstance& g, std::vector<Vertex> cycle);

// Degree-sequence conditions on the combined nondecreasing degree sequence
// d_1 <= ... <= d_n of a bipartite graph with an equipartition (1-based).

// Some i <= n/4 has d_i <= i and d_{n/2} <= n/2 - i. Holds for every
// non-Hamiltonian balanced bipartite graph.
bool chvatal_condition_holds(std::span<const int> degseq, int n);

// n = 4s >= 12: some k <= n/4 has d_k <= k and d_{k-1} <= k-1, or
// d_{n/4-1} <= n/4-1. Holds whenever the graph has no 2-factor.
bool thm10_condition_holds(std::span<const int> degseq, int n);

// n = 4s+2 >= 14: some k <= (n-2)/4 has d_k <= k and d_{k-1} <= k-1, or
// d_{(n-2)/2} <= (n-2)/4. Holds whenever the graph has no 2-factor.
bool thm11_condition_holds(std::span<const int> degseq, int n);

}  // namespace adf
