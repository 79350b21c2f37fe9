#include "adf/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

#include "adf/classical.hpp"
#include "adf/counting.hpp"
#include "adf/errors.hpp"
#include "adf/flow.hpp"
#include "adf/parallel.hpp"
#include "adf/random.hpp"
#include "combinations.hpp"

namespace adf {

std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    case Decision::unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::exhaustive: return "exhaustive";
    case Method::sampled: return "sampled";
    case Method::degree_bound: return "degree_bound";
    case Method::hall_condition: return "hall_condition";
    case Method::reduction: return "reduction";
    case Method::parity: return "parity";
  }
  return "exhaustive";
}

std::uint64_t default_sample_count(int n) {
  return std::max<std::uint64_t>(1000, 20 * static_cast<std::uint64_t>(std::max(n, 0)));
}

namespace {

constexpr std::uint64_t kChunk = 4096;
constexpr std::uint64_t kNone = ~std::uint64_t{0};

enum class Outcome { good, bad, unknown };

// Per-vertex adjacency masks for the cheap degree filter (n <= 64).
struct Masks {
  std::vector<std::uint64_t> out;
  std::vector<std::uint64_t> in;

  explicit Masks(const Digraph& d) : out(d.order(), 0), in(d.order(), 0) {
    for (const Arc& a : d.arcs()) {
      out[a.from] |= std::uint64_t{1} << a.to;
      in[a.to] |= std::uint64_t{1} << a.from;
    }
  }

  // Every vertex of B(X,Y) has degree >= 2.
  bool may_cover(std::uint64_t x_mask, int n) const {
    const std::uint64_t y_mask = detail::full_mask(n) & ~x_mask;
    for (int v = 0; v < n; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      const std::uint64_t reach = (x_mask & bit) ? (out[v] & y_mask) : (in[v] & x_mask);
      if (std::popcount(reach) < 2) return false;
    }
    return true;
  }
};

struct Inner {
  const Digraph& d;
  bool hamilton;
  std::uint64_t node_budget;

  Outcome test(const Equipartition& p, std::optional<CycleCover>* cover) const {
    const BipartiteInstance g = build_bipartite(d, p);
    if (!hamilton) {
      auto found = has_two_factor(g);
      if (!found) return Outcome::bad;
      if (cover) *cover = std::move(found);
      return Outcome::good;
    }
    HamiltonResult h = has_hamilton_cycle(g, node_budget);
    switch (h.status) {
      case HamiltonResult::Status::found:
        if (cover) *cover = cover_from_cycle(g, std::move(h.cycle));
        return Outcome::good;
      case HamiltonResult::Status::absent: return Outcome::bad;
      case HamiltonResult::Status::unknown: return Outcome::unknown;
    }
    return Outcome::unknown;
  }
};

void atomic_min(std::atomic<std::uint64_t>& target, std::uint64_t value) {
  std::uint64_t seen = target.load();
  while (value < seen && !target.compare_exchange_weak(seen, value)) {
  }
}

std::string total_string(int n) {
  if (n % 2 != 0) return "0";
  return binomial(n, n / 2).get_str();
}

Certificate with_witness(Certificate c, const Equipartition& p, std::optional<CycleCover> cover) {
  if (!cover) throw InvariantError("witness lost on re-evaluation");
  c.decision = Decision::yes;
  c.witness = Witness{p.x(), std::move(*cover)};
  return c;
}

Certificate run_exhaustive(const Digraph& d, const SearchOptions& options, bool hamilton) {
  const int n = d.order();
  if (n > options.exhaustive_limit || n > 62) {
    throw PreconditionError("exhaustive search refused for n = " + std::to_string(n) +
                            " (limit " + std::to_string(std::min(options.exhaustive_limit, 62)) + ")");
  }
  Certificate c;
  c.method = Method::exhaustive;
  c.total = total_string(n);
  const std::uint64_t total = detail::small_binomials()(n, n / 2);
  const Masks masks(d);
  const Inner inner{d, hamilton, options.node_budget};
  std::atomic<std::uint64_t> best{kNone};
  std::atomic<bool> saw_unknown{false};

  for_each_chunk(total, kChunk, options.jobs, [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t mask = detail::unrank_colex(n, n / 2, begin);
    for (std::uint64_t r = begin; r < end; ++r) {
      if (r >= best.load(std::memory_order_relaxed)) return;
      if (masks.may_cover(mask, n)) {
        const Outcome o = inner.test(Equipartition::from_mask(n, mask), nullptr);
        if (o == Outcome::good) {
          atomic_min(best, r);
          return;
        }
        if (o == Outcome::unknown) saw_unknown = true;
      }
      if (r + 1 < end) mask = detail::next_same_popcount(mask);
    }
  });

  if (best.load() != kNone) {
    const std::uint64_t r = best.load();
    const Equipartition p = Equipartition::from_mask(n, detail::unrank_colex(n, n / 2, r));
    std::optional<CycleCover> cover;
    inner.test(p, &cover);
    c.checked = r + 1;
    return with_witness(std::move(c), p, std::move(cover));
  }
  c.checked = total;
  if (saw_unknown) {
    c.decision = Decision::unknown;
    c.refutation.reset();
    return c;
  }
  c.decision = Decision::no;
  c.refutation = std::string("none of the ") + c.total + " source-set choices gives B(X,Y) a " +
                 (hamilton ? "Hamilton cycle" : "2-factor");
  return c;
}

Certificate run_sampled(const Digraph& d, const SearchOptions& options, bool hamilton) {
  const int n = d.order();
  Certificate c;
  c.method = Method::sampled;
  c.total = total_string(n);
  const std::uint64_t samples = options.samples ? options.samples : default_sample_count(n);
  const Inner inner{d, hamilton, options.node_budget};
  auto draw = [&](std::uint64_t i) {
    Rng rng(options.seed, i);
    const std::vector<int> picked = rng.sample(n, n / 2);
    return Equipartition(n, std::vector<Vertex>(picked.begin(), picked.end()));
  };
  std::atomic<std::uint64_t> best{kNone};

  for_each_chunk(samples, 256, options.jobs, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      if (i >= best.load(std::memory_order_relaxed)) return;
      if (inner.test(draw(i), nullptr) == Outcome::good) {
        atomic_min(best, i);
        return;
      }
    }
  });

  if (best.load() != kNone) {
    const Equipartition p = draw(best.load());
    std::optional<CycleCover> cover;
    inner.test(p, &cover);
    c.checked = best.load() + 1;
    return with_witness(std::move(c), p, std::move(cover));
  }
  c.decision = Decision::unknown;
  c.checked = samples;
  return c;
}

Certificate decide(const Digraph& d, const SearchOptions& options, bool hamilton) {
  const int n = d.order();
  if (n % 2 != 0) {
    Certificate c;
    c.decision = Decision::no;
    c.method = Method::parity;
    c.refutation = "odd order: every anti-directed cycle has even length";
    c.total = "0";
    return c;
  }
  switch (options.strategy) {
    case Strategy::exhaustive: return run_exhaustive(d, options, hamilton);
    case Strategy::sampled: return run_sampled(d, options, hamilton);
    case Strategy::automatic: break;
  }
  if (n <= options.auto_exhaustive_limit && n <= options.exhaustive_limit) {
    return run_exhaustive(d, options, hamilton);
  }
  Certificate c = run_sampled(d, options, hamilton);
  if (c.decision == Decision::yes) return c;
  if (auto name = degree_guarantee(n, min_degree(d), hamilton)) {
    c.decision = Decision::yes;
    c.method = Method::degree_bound;
    c.guarantee = *name;
  }
  return c;
}

}  // namespace

Certificate decide_adf(const Digraph& d, const SearchOptions& options) {
  return decide(d, options, false);
}

Certificate decide_adhc(const Digraph& d, const SearchOptions& options) {
  return decide(d, options, true);
}

Validation check_certificate(const Digraph& d, const Certificate& c, bool hamilton) {
  if (c.decision != Decision::yes) {
    if (c.witness) return Validation::fail("witness attached to a non-yes decision");
    return Validation::pass();
  }
  if (!c.witness) {
    if (c.method == Method::degree_bound && c.guarantee) return Validation::pass();
    return Validation::fail("yes without witness or guarantee");
  }
  const Witness& w = *c.witness;
  if (Validation v = validate_anti_directed_cover(d, w.cover); !v) return v;
  if (hamilton && (w.cover.cycles.size() != 1 ||
                   static_cast<int>(w.cover.cycles.front().size()) != d.order())) {
    return Validation::fail("Hamilton witness is not a single spanning cycle");
  }
  if (static_cast<int>(w.source_side.size()) * 2 != d.order()) {
    return Validation::fail("source side is not half of the vertices");
  }
  std::vector<int> out_count(d.order(), 0);
  if (w.cover.forward) {
    for (const Arc& a : w.cover.oriented_arcs()) ++out_count[a.from];
    std::vector<bool> in_x(d.order(), false);
    for (Vertex v : w.source_side) {
      if (v < 0 || v >= d.order()) return Validation::fail("source side vertex out of range");
      in_x[v] = true;
    }
    for (int v = 0; v < d.order(); ++v) {
      if ((out_count[v] == 2) != in_x[v]) {
        return Validation::fail("source side disagrees with cover orientation at vertex " +
                                std::to_string(v));
      }
    }
  }
  return Validation::pass();
}

std::optional<std::vector<Vertex>> directed_two_factor(const Digraph& d) {
  const int n = d.order();
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  FlowNetwork net(2 * n + 2);
  std::vector<std::pair<int, Arc>> ids;
  ids.reserve(d.size());
  for (int v = 0; v < n; ++v) {
    net.add_edge(source, v, 1);
    net.add_edge(n + v, sink, 1);
  }
  for (const Arc& a : d.arcs()) ids.emplace_back(net.add_edge(a.from, n + a.to, 1), a);
  if (net.max_flow(source, sink) != n) return std::nullopt;
  std::vector<Vertex> successor(n, -1);
  for (const auto& [id, a] : ids) {
    if (net.flow_on(id) > 0) successor[a.from] = a.to;
  }
  return successor;
}

bool directed_two_factor_exists(const Digraph& d) { return directed_two_factor(d).has_value(); }

bool hall_condition_exhaustive(const Digraph& d) {
  const int n = d.order();
  if (n > 20) throw PreconditionError("exhaustive Hall check limited to n <= 20");
  std::vector<std::uint32_t> out(n, 0);
  for (const Arc& a : d.arcs()) out[a.from] |= std::uint32_t{1} << a.to;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t s = 1; s < limit; ++s) {
    std::uint32_t reach = 0;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) reach |= out[std::countr_zero(rest)];
    if (std::popcount(reach) < std::popcount(s)) return false;
  }
  return true;
}

}  // namespace adf
