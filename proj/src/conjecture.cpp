#include "adf/errors.hpp"
#include "adf/generators.hpp"
#include "adf/parallel.hpp"
#include "adf/solver.hpp"

namespace adf {

namespace {

struct Trial {
  std::string family;
  std::optional<Digraph> digraph;
  Certificate certificate;
};

Trial run_trial(int n, int t, const ConjectureOptions& options) {
  Rng rng(options.seed, static_cast<std::uint64_t>(n) * 1000003 + static_cast<std::uint64_t>(t));
  Trial trial;
  switch (t % 3) {
    case 0:
      trial.family = "random_min_degree";
      trial.digraph = random_min_degree_digraph(n, n / 2, rng);
      break;
    case 1:
      trial.family = "near_extremal";
      trial.digraph = near_extremal_digraph(n, rng);
      break;
    default:
      trial.family = "uniform_degree";
      trial.digraph = uniform_degree_digraph(n, n / 2, rng);
      break;
  }
  SearchOptions search;
  search.seed = options.seed;
  if (n <= options.exhaustive_limit) {
    search.strategy = Strategy::exhaustive;
    search.exhaustive_limit = std::max(search.exhaustive_limit, n);
  } else {
    search.strategy = Strategy::automatic;
    search.auto_exhaustive_limit = options.exhaustive_limit;
  }
  trial.certificate = decide_adf(*trial.digraph, search);
  return trial;
}

}  // namespace

ConjectureReport conjecture_scan(const ConjectureOptions& options) {
  if (options.n_min < 2 || options.n_max < options.n_min) {
    throw PreconditionError("conjecture scan needs 2 <= n_min <= n_max");
  }
  if (options.trials < 0) throw PreconditionError("trials must be nonnegative");
  ConjectureReport report;
  for (int n = options.n_min + (options.n_min % 2); n <= options.n_max; n += 2) {
    std::vector<Trial> trials(options.trials);
    for_each_chunk(static_cast<std::uint64_t>(options.trials), 1, options.jobs,
                   [&](std::uint64_t begin, std::uint64_t end) {
                     for (std::uint64_t t = begin; t < end; ++t) {
                       trials[t] = run_trial(n, static_cast<int>(t), options);
                     }
                   });
    ConjectureRow row;
    row.n = n;
    row.trials = options.trials;
    for (Trial& trial : trials) {
      switch (trial.certificate.decision) {
        case Decision::yes: ++row.yes; break;
        case Decision::unknown: ++row.unknown; break;
        case Decision::no:
          ++row.no;
          report.counterexamples.push_back(Counterexample{n, trial.family, min_degree(*trial.digraph),
                                                          std::move(*trial.digraph),
                                                          std::move(trial.certificate)});
          break;
      }
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace adf
