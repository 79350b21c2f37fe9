#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace adf {

using Vertex = std::int32_t;

struct Arc {
  Vertex from = 0;
  Vertex to = 0;
  auto operator<=>(const Arc&) const = default;
};

struct Edge {
  Vertex u = 0;  // u < v
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

// Directed graph on vertices 0..n-1. No loops, no repeated arcs; the
// opposite pair (u,v),(v,u) is allowed. Immutable once built.
class Digraph {
 public:
  Digraph() = default;
  // Throws PreconditionError on a loop, duplicate arc or out-of-range endpoint.
  Digraph(int n, std::vector<Arc> arcs);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return arcs_.size(); }
  // Sorted lexicographically.
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  bool has_arc(Vertex u, Vertex v) const noexcept {
    return matrix_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }
  int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in_[v].size()); }

  // Copy with one extra arc; the arc must not already be present.
  Digraph with_arc(Arc a) const;

  bool operator==(const Digraph& other) const { return n_ == other.n_ && arcs_ == other.arcs_; }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<bool> matrix_;
};

// Simple undirected graph on 0..n-1.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  // Edges may be given with either endpoint first; they are normalized to u < v.
  SimpleGraph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool has_edge(Vertex u, Vertex v) const noexcept {
    return matrix_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool is_cubic() const;
  // Index of edge {u,v} in edges(), or nullopt.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<bool> matrix_;
};

// Vertex-disjoint cycles. When `forward` is present, forward[c][i] says the
// arc between cycles[c][i] and cycles[c][(i+1) % len] runs in that order;
// otherwise it runs backwards.
struct CycleCover {
  std::vector<std::vector<Vertex>> cycles;
  std::optional<std::vector<std::vector<bool>>> forward;

  // Arcs implied by the orientation, cycle by cycle. Requires `forward`.
  std::vector<Arc> oriented_arcs() const;
};

struct Validation {
  bool ok = true;
  std::string reason;
  explicit operator bool() const noexcept { return ok; }

  static Validation pass() { return {}; }
  static Validation fail(std::string why) { return {false, std::move(why)}; }
};

// Text format: first non-comment line is n, then one "u v" per line. Lines
// starting with '#' and blank lines are skipped.
Digraph parse_digraph(std::string_view text);
Digraph parse_digraph(std::istream& in);
std::string serialize(const Digraph& d);

// Same format, but every line must have u < v.
SimpleGraph parse_simple_graph(std::string_view text);
SimpleGraph parse_simple_graph(std::istream& in);
std::string serialize(const SimpleGraph& g);

// min over v of min(d+(v), d-(v)). Requires n >= 1.
int min_degree(const Digraph& d);

// Checks that `cover` is an anti-directed 2-factor of `d`: every vertex on
// exactly one cycle once, cycles of even length >= 4, every cover arc present
// in `d`, and at every vertex both cover arcs point out or both point in.
// Without an orientation, either alternating orientation of each cycle is
// accepted if it is realizable.
Validation validate_anti_directed_cover(const Digraph& d, const CycleCover& cover);

// Complete digraph on n vertices.
Digraph complete_digraph(int n);
// Two disjoint complete digraphs on n/2 vertices each (vertices 0..n/2-1 and n/2..n-1).
Digraph split_complete_digraph(int n);

}  // namespace adf
