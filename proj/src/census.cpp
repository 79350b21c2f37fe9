#include <bit>
#include <mutex>

#include "adf/counting.hpp"
#include "adf/errors.hpp"
#include "adf/parallel.hpp"
#include "adf/random.hpp"
#include "adf/solver.hpp"
#include "combinations.hpp"

namespace adf {

std::string_view to_string(CensusTarget t) {
  return t == CensusTarget::hamilton ? "hamilton" : "two_factor";
}

std::string_view to_string(CensusMode m) {
  return m == CensusMode::sample ? "sample" : "exhaustive";
}

namespace {

struct Tally {
  std::uint64_t examined = 0, good = 0, bad = 0, unknown = 0;
  std::vector<std::vector<std::uint64_t>> histogram;

  explicit Tally(int n) : histogram(n, std::vector<std::uint64_t>(n / 2 + 1, 0)) {}

  void merge(const Tally& other) {
    examined += other.examined;
    good += other.good;
    bad += other.bad;
    unknown += other.unknown;
    for (std::size_t v = 0; v < histogram.size(); ++v) {
      for (std::size_t k = 0; k < histogram[v].size(); ++k) histogram[v][k] += other.histogram[v][k];
    }
  }
};

}  // namespace

CensusReport equipartition_census(const Digraph& d, const CensusOptions& options) {
  const int n = d.order();
  if (n % 2 != 0) throw PreconditionError("census needs an even order");
  CensusReport report;
  report.n = n;
  report.target = options.target;
  report.mode = options.mode;
  report.total = binomial(n, n / 2).get_str();

  const bool exhaustive = options.mode == CensusMode::exhaustive;
  if (exhaustive && (n > options.exhaustive_limit || n > 62)) {
    throw PreconditionError("exhaustive census refused for n = " + std::to_string(n));
  }
  const std::uint64_t count =
      exhaustive ? detail::small_binomials()(n, n / 2)
                 : (options.samples ? options.samples : default_sample_count(n));

  Tally total(n);
  std::mutex merge_lock;
  auto classify = [&](const Equipartition& p, Tally& t) {
    ++t.examined;
    const BipartiteInstance g = build_bipartite(d, p);
    bool low = false;
    for (int v = 0; v < n; ++v) {
      const int k = g.degree(v);
      ++t.histogram[v][k];
      low = low || k < 2;
    }
    if (low) {
      ++t.bad;
      return;
    }
    if (options.target == CensusTarget::two_factor) {
      has_two_factor(g) ? ++t.good : ++t.bad;
      return;
    }
    switch (has_hamilton_cycle(g, options.node_budget).status) {
      case HamiltonResult::Status::found: ++t.good; break;
      case HamiltonResult::Status::absent: ++t.bad; break;
      case HamiltonResult::Status::unknown: ++t.unknown; break;
    }
  };

  for_each_chunk(count, 1024, options.jobs, [&](std::uint64_t begin, std::uint64_t end) {
    Tally local(n);
    if (exhaustive) {
      std::uint64_t mask = detail::unrank_colex(n, n / 2, begin);
      for (std::uint64_t r = begin; r < end; ++r) {
        classify(Equipartition::from_mask(n, mask), local);
        if (r + 1 < end) mask = detail::next_same_popcount(mask);
      }
    } else {
      for (std::uint64_t i = begin; i < end; ++i) {
        Rng rng(options.seed, i);
        const std::vector<int> picked = rng.sample(n, n / 2);
        classify(Equipartition(n, std::vector<Vertex>(picked.begin(), picked.end())), local);
      }
    }
    std::lock_guard lock(merge_lock);
    total.merge(local);
  });

  if (exhaustive && total.examined != count) throw InvariantError("census lost source-set choices");
  report.examined = total.examined;
  report.good = total.good;
  report.bad = total.bad;
  report.unknown = total.unknown;
  report.degree_histogram = std::move(total.histogram);
  return report;
}

}  // namespace adf
