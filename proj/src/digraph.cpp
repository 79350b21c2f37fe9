#include "adf/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>

#include "adf/errors.hpp"

namespace adf {

namespace {

int checked_order(int n) {
  if (n < 0) throw PreconditionError("negative vertex count");
  return n;
}

void check_endpoint(int n, Vertex v) {
  if (v < 0 || v >= n) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range 0.." +
                            std::to_string(n - 1));
  }
}

// Splits a line into whitespace-separated tokens.
std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> to_int(std::string_view tok) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

struct PairLine {
  int line;
  long long a;
  long long b;
};

// Shared reader for both formats: returns n and the raw pairs with their line numbers.
std::pair<int, std::vector<PairLine>> read_pairs(std::string_view text) {
  std::optional<int> n;
  std::vector<PairLine> pairs;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    auto toks = tokens(line);
    if (toks.empty() || toks.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (!n) {
      if (toks.size() != 1) throw ParseError(line_no, "expected vertex count");
      auto v = to_int(toks[0]);
      if (!v || *v < 1 || *v > 1'000'000) throw ParseError(line_no, "invalid vertex count");
      n = static_cast<int>(*v);
    } else {
      if (toks.size() != 2) throw ParseError(line_no, "expected \"u v\"");
      auto a = to_int(toks[0]);
      auto b = to_int(toks[1]);
      if (!a || !b) throw ParseError(line_no, "non-integer endpoint");
      pairs.push_back({line_no, *a, *b});
    }
    if (end == text.size()) break;
  }
  if (!n) throw ParseError(0, "missing vertex count");
  return {*n, std::move(pairs)};
}

void check_pair(int n, const PairLine& p) {
  if (p.a < 0 || p.a >= n || p.b < 0 || p.b >= n) throw ParseError(p.line, "endpoint out of range");
  if (p.a == p.b) throw ParseError(p.line, "self-loop");
}

std::string slurp(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

Digraph::Digraph(int n, std::vector<Arc> arcs)
    : n_(checked_order(n)), arcs_(std::move(arcs)), out_(n), in_(n),
      matrix_(static_cast<std::size_t>(n) * n) {
  for (const Arc& a : arcs_) {
    check_endpoint(n, a.from);
    check_endpoint(n, a.to);
    if (a.from == a.to) throw PreconditionError("self-loop at " + std::to_string(a.from));
    auto cell = matrix_[static_cast<std::size_t>(a.from) * n + a.to];
    if (cell) {
      throw PreconditionError("duplicate arc (" + std::to_string(a.from) + "," +
                              std::to_string(a.to) + ")");
    }
    cell = true;
  }
  std::sort(arcs_.begin(), arcs_.end());
  for (const Arc& a : arcs_) {
    out_[a.from].push_back(a.to);
    in_[a.to].push_back(a.from);
  }
  for (auto& list : in_) std::sort(list.begin(), list.end());
}

Digraph Digraph::with_arc(Arc a) const {
  auto arcs = arcs_;
  arcs.push_back(a);
  return Digraph(n_, std::move(arcs));
}

SimpleGraph::SimpleGraph(int n, std::vector<Edge> edges)
    : n_(checked_order(n)), edges_(std::move(edges)), adj_(n),
      matrix_(static_cast<std::size_t>(n) * n) {
  for (Edge& e : edges_) {
    check_endpoint(n, e.u);
    check_endpoint(n, e.v);
    if (e.u == e.v) throw PreconditionError("self-loop at " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    auto cell = matrix_[static_cast<std::size_t>(e.u) * n + e.v];
    if (cell) {
      throw PreconditionError("duplicate edge {" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + "}");
    }
    cell = true;
    matrix_[static_cast<std::size_t>(e.v) * n + e.u] = true;
  }
  std::sort(edges_.begin(), edges_.end());
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool SimpleGraph::is_cubic() const {
  for (const auto& list : adj_) {
    if (list.size() != 3) return false;
  }
  return true;
}

std::optional<std::size_t> SimpleGraph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<Arc> CycleCover::oriented_arcs() const {
  if (!forward) throw PreconditionError("cover has no orientation");
  std::vector<Arc> arcs;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    const auto& cyc = cycles[c];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Vertex a = cyc[i];
      Vertex b = cyc[(i + 1) % cyc.size()];
      arcs.push_back((*forward)[c][i] ? Arc{a, b} : Arc{b, a});
    }
  }
  return arcs;
}

Digraph parse_digraph(std::string_view text) {
  auto [n, pairs] = read_pairs(text);
  std::vector<bool> seen(static_cast<std::size_t>(n) * n);
  std::vector<Arc> arcs;
  arcs.reserve(pairs.size());
  for (const auto& p : pairs) {
    check_pair(n, p);
    auto cell = seen[static_cast<std::size_t>(p.a) * n + p.b];
    if (cell) throw ParseError(p.line, "duplicate arc");
    cell = true;
    arcs.push_back({static_cast<Vertex>(p.a), static_cast<Vertex>(p.b)});
  }
  return Digraph(n, std::move(arcs));
}

Digraph parse_digraph(std::istream& in) { return parse_digraph(slurp(in)); }

std::string serialize(const Digraph& d) {
  std::ostringstream out;
  out << d.order() << '\n';
  for (const Arc& a : d.arcs()) out << a.from << ' ' << a.to << '\n';
  return out.str();
}

SimpleGraph parse_simple_graph(std::string_view text) {
  auto [n, pairs] = read_pairs(text);
  std::vector<bool> seen(static_cast<std::size_t>(n) * n);
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& p : pairs) {
    check_pair(n, p);
    if (p.a > p.b) throw ParseError(p.line, "edge must be written with u < v");
    auto cell = seen[static_cast<std::size_t>(p.a) * n + p.b];
    if (cell) throw ParseError(p.line, "duplicate edge");
    cell = true;
    edges.push_back({static_cast<Vertex>(p.a), static_cast<Vertex>(p.b)});
  }
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph parse_simple_graph(std::istream& in) { return parse_simple_graph(slurp(in)); }

std::string serialize(const SimpleGraph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

int min_degree(const Digraph& d) {
  if (d.order() < 1) throw PreconditionError("min_degree needs at least one vertex");
  int best = d.order();
  for (Vertex v = 0; v < d.order(); ++v) {
    best = std::min({best, d.out_degree(v), d.in_degree(v)});
  }
  return best;
}

namespace {

// Orientation check for one cycle with explicit flags.
Validation check_oriented_cycle(const Digraph& d, const std::vector<Vertex>& cyc,
                                const std::vector<bool>& fwd) {
  const std::size_t len = cyc.size();
  if (fwd.size() != len) return Validation::fail("orientation length mismatch");
  for (std::size_t i = 0; i < len; ++i) {
    Vertex a = cyc[i];
    Vertex b = cyc[(i + 1) % len];
    Arc arc = fwd[i] ? Arc{a, b} : Arc{b, a};
    if (!d.has_arc(arc.from, arc.to)) {
      return Validation::fail("arc (" + std::to_string(arc.from) + "," + std::to_string(arc.to) +
                              ") not in digraph");
    }
  }
  for (std::size_t i = 0; i < len; ++i) {
    // Edge i-1 enters cyc[i] from behind, edge i leaves towards the front.
    bool prev_points_in = fwd[(i + len - 1) % len];
    bool next_points_out = fwd[i];
    // Source: prev edge points away (backward) and next points away (forward).
    bool source = !prev_points_in && next_points_out;
    bool sink = prev_points_in && !next_points_out;
    if (!source && !sink) {
      return Validation::fail("consecutive arcs form a directed path at vertex " +
                              std::to_string(cyc[i]));
    }
  }
  return Validation::pass();
}

}  // namespace

Validation validate_anti_directed_cover(const Digraph& d, const CycleCover& cover) {
  const int n = d.order();
  std::vector<int> hits(n, 0);
  if (cover.forward && cover.forward->size() != cover.cycles.size()) {
    return Validation::fail("orientation does not match cycle count");
  }
  for (const auto& cyc : cover.cycles) {
    for (Vertex v : cyc) {
      if (v < 0 || v >= n) return Validation::fail("vertex out of range");
      if (++hits[v] > 1) {
        return Validation::fail("vertex " + std::to_string(v) + " covered more than once");
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (hits[v] == 0) return Validation::fail("vertex " + std::to_string(v) + " not covered");
  }
  for (std::size_t c = 0; c < cover.cycles.size(); ++c) {
    const auto& cyc = cover.cycles[c];
    if (cyc.size() < 4 || cyc.size() % 2 != 0) {
      return Validation::fail("cycle " + std::to_string(c) + " has length " +
                              std::to_string(cyc.size()) + "; need even length >= 4");
    }
    if (cover.forward) {
      auto v = check_oriented_cycle(d, cyc, (*cover.forward)[c]);
      if (!v) return v;
      continue;
    }
    std::vector<bool> alt(cyc.size());
    for (std::size_t i = 0; i < cyc.size(); ++i) alt[i] = (i % 2 == 0);
    if (check_oriented_cycle(d, cyc, alt)) continue;
    alt.flip();
    auto v = check_oriented_cycle(d, cyc, alt);
    if (!v) return Validation::fail("cycle " + std::to_string(c) + " admits no alternating orientation");
  }
  return Validation::pass();
}

Digraph complete_digraph(int n) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) arcs.push_back({u, v});
    }
  }
  return Digraph(n, std::move(arcs));
}

Digraph split_complete_digraph(int n) {
  if (n < 2 || n % 2 != 0) throw PreconditionError("D(n) needs even n >= 2");
  const int half = n / 2;
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && (u < half) == (v < half)) arcs.push_back({u, v});
    }
  }
  return Digraph(n, std::move(arcs));
}

}  // namespace adf
