#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "adf/classical.hpp"
#include "adf/counting.hpp"
#include "adf/errors.hpp"
#include "adf/generators.hpp"
#include "adf/reduction.hpp"
#include "adf/report_json.hpp"
#include "adf/solver.hpp"
#include "adf/threshold.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

// Unreadable input; exits 65 like a parse error.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::ostringstream text;
  if (path == "-") {
    text << std::cin.rdbuf();
    return text.str();
  }
  std::ifstream file(path);
  if (!file) throw InputError("cannot open " + path);
  text << file.rdbuf();
  return text.str();
}

int exit_code(adf::Decision d) {
  switch (d) {
    case adf::Decision::yes: return 0;
    case adf::Decision::no: return 1;
    case adf::Decision::unknown: return 2;
  }
  return 2;
}

adf::Rational parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  adf::Rational q;
  try {
    if (slash == std::string::npos) {
      q = adf::Rational(adf::BigInt(text));
    } else {
      q = adf::Rational(adf::BigInt(text.substr(0, slash)), adf::BigInt(text.substr(slash + 1)));
    }
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("p", "expected <num>/<den>, got " + text);
  }
  if (q.get_den() == 0) throw CLI::ValidationError("p", "zero denominator");
  q.canonicalize();
  return q;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n", "expected <a>..<b>, got " + text);
  }
}

struct Common {
  bool pretty = false;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
};

struct SearchArgs {
  std::string strategy = "auto";
  std::uint64_t samples = 0;
  std::uint64_t node_budget = 200000;
  int exhaustive_limit = 24;
};

adf::SearchOptions search_options(const SearchArgs& a, const Common& c) {
  adf::SearchOptions o;
  o.strategy = a.strategy == "exhaustive" ? adf::Strategy::exhaustive
               : a.strategy == "sampled"  ? adf::Strategy::sampled
                                          : adf::Strategy::automatic;
  o.samples = a.samples;
  o.seed = c.seed;
  o.jobs = c.jobs;
  o.node_budget = a.node_budget;
  o.exhaustive_limit = a.exhaustive_limit;
  return o;
}

void add_search_flags(CLI::App* cmd, SearchArgs& a) {
  cmd->add_option("--strategy", a.strategy, "exhaustive, sampled or auto")
      ->check(CLI::IsMember({"exhaustive", "sampled", "auto"}));
  cmd->add_option("--samples", a.samples, "sample count (0: max(1000, 20n))");
  cmd->add_option("--node-budget", a.node_budget, "Hamilton search nodes per source-set choice");
  cmd->add_option("--exhaustive-limit", a.exhaustive_limit, "largest order searched exhaustively");
}

int run(int argc, char** argv) {
  CLI::App app{"Anti-directed 2-factors and Hamilton cycles in digraphs"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--pretty", common.pretty, "indent JSON output");
  app.add_option("--jobs", common.jobs, "worker threads")->check(CLI::Range(1U, 256U));
  app.add_option("--seed", common.seed, "seed for every random choice (default 0)");
  app.fallthrough();

  int status = 0;
  auto emit = [&](const adf::Json& j) { std::cout << adf::dump(j, common.pretty); };

  // check
  auto* check = app.add_subcommand("check", "decide a property of a digraph");
  check->require_subcommand(1);
  check->fallthrough();
  std::string graph_path;
  SearchArgs search;
  for (const char* name : {"adf", "adhc"}) {
    const bool hamilton = std::string(name) == "adhc";
    auto* cmd = check->add_subcommand(name, hamilton ? "anti-directed Hamilton cycle"
                                                      : "anti-directed 2-factor");
    cmd->add_option("file", graph_path, "digraph file, - for stdin")->required();
    add_search_flags(cmd, search);
    cmd->fallthrough();
    cmd->callback([&, hamilton] {
      const adf::Digraph d = adf::parse_digraph(read_input(graph_path));
      const adf::SearchOptions o = search_options(search, common);
      const adf::Certificate c = hamilton ? adf::decide_adhc(d, o) : adf::decide_adf(d, o);
      if (adf::Validation v = adf::check_certificate(d, c, hamilton); !v) throw adf::InvariantError(v.reason);
      emit(adf::to_json(c));
      status = exit_code(c.decision);
    });
  }
  auto* d2f = check->add_subcommand("d2f", "directed 2-factor");
  d2f->add_option("file", graph_path, "digraph file, - for stdin")->required();
  d2f->fallthrough();
  d2f->callback([&] {
    const adf::Digraph d = adf::parse_digraph(read_input(graph_path));
    const auto successor = adf::directed_two_factor(d);
    adf::Json j{{"directed_two_factor", successor.has_value()}};
    if (successor) j["successor"] = *successor;
    emit(j);
    status = successor ? 0 : 1;
  });
  auto* classical = check->add_subcommand("classical", "sufficient degree conditions met");
  classical->add_option("file", graph_path, "digraph file, - for stdin")->required();
  classical->fallthrough();
  classical->callback([&] {
    emit(adf::to_json(adf::classical_conditions(adf::parse_digraph(read_input(graph_path)))));
  });

  // census
  auto* census = app.add_subcommand("census", "classify every source-set choice");
  std::string census_target = "two_factor";
  std::string census_mode = "exhaustive";
  std::uint64_t census_samples = 0;
  census->add_option("file", graph_path, "digraph file, - for stdin")->required();
  census->add_option("--target", census_target)->check(CLI::IsMember({"two_factor", "hamilton"}));
  census->add_option("--mode", census_mode)->check(CLI::IsMember({"exhaustive", "sample"}));
  census->add_option("--samples", census_samples, "sample count (0: max(1000, 20n))");
  census->fallthrough();
  census->callback([&] {
    adf::CensusOptions o;
    o.target = census_target == "hamilton" ? adf::CensusTarget::hamilton : adf::CensusTarget::two_factor;
    o.mode = census_mode == "sample" ? adf::CensusMode::sample : adf::CensusMode::exhaustive;
    o.samples = census_samples;
    o.seed = common.seed;
    o.jobs = common.jobs;
    emit(adf::to_json(adf::equipartition_census(adf::parse_digraph(read_input(graph_path)), o)));
  });

  // reduce
  auto* reduce = app.add_subcommand("reduce", "reductions");
  reduce->require_subcommand(1);
  reduce->fallthrough();
  auto* three = reduce->add_subcommand("3ec", "3-edge-colourability of a cubic graph");
  bool cross_validate = false;
  three->add_option("file", graph_path, "simple graph file, - for stdin")->required();
  three->add_flag("--cross-validate", cross_validate, "also run the direct colourer and compare");
  add_search_flags(three, search);
  three->fallthrough();
  three->callback([&] {
    const adf::SimpleGraph g = adf::parse_simple_graph(read_input(graph_path));
    const adf::ReductionOutcome r = adf::three_edge_colorable_via_adf(g, search_options(search, common));
    adf::Json j{{"decision", adf::to_string(r.decision)}, {"certificate", adf::to_json(r.certificate)}};
    if (r.certificate.witness) j["coloring"] = adf::to_json(adf::adf_to_coloring(g, r.certificate.witness->cover));
    status = exit_code(r.decision);
    if (cross_validate) {
      const auto direct = adf::three_edge_color_direct(g);
      adf::Json dj{{"colorable", direct.has_value()}};
      if (direct) dj["coloring"] = adf::to_json(*direct);
      j["direct"] = std::move(dj);
      const bool agree = r.decision == adf::Decision::unknown ||
                         (r.decision == adf::Decision::yes) == direct.has_value();
      j["agree"] = agree;
      if (!agree) status = kExitInternal;
    }
    emit(j);
  });

  // count
  auto* count = app.add_subcommand("count", "exact counting checks");
  count->require_subcommand(1);
  count->fallthrough();
  int count_n = 0, count_delta = 0;
  auto* verify = count->add_subcommand("verify", "N, S and the comparison N > S");
  verify->add_option("n", count_n)->required();
  verify->add_option("delta", count_delta)->required();
  verify->fallthrough();
  verify->callback([&] { emit(adf::to_json(adf::verify_inequality3(count_n, count_delta))); });

  int nmax = 1420;
  auto* scan = count->add_subcommand("scan", "N > S for every even 12 <= n < nmax at the least delta above 24n/46");
  scan->add_option("--nmax", nmax, "exclusive upper end");
  scan->fallthrough();
  scan->callback([&] {
    const adf::ScanReport r = adf::scan_corollary2(nmax, common.jobs);
    std::cout << "n,delta,N,S,holds\n";
    for (const adf::ScanRow& row : r.rows) {
      std::cout << row.n << ',' << row.delta << ',' << row.N.get_str() << ',' << row.S.get_str() << ','
                << (row.holds ? "true" : "false") << '\n';
    }
    auto list = [](const std::vector<std::pair<int, int>>& pairs) {
      std::string s = "{";
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        s += (i ? ", (" : "(") + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
      }
      return s + "}";
    };
    std::cerr << "rows: " << r.rows.size() << "\n"
              << "failures: " << list(r.failures) << "\n"
              << "failures with strengthened bound: " << list(r.strong_failures) << "\n"
              << "claimed exceptions: " << list(r.claimed_failures) << "\n"
              << (r.matches_claim() ? "computed failures match the claim\n"
                                    : "MISMATCH: computed failures differ from the claim\n");
  });

  std::string p_text;
  std::string variant = "two_factor";
  int digits = 60;
  auto* thr = count->add_subcommand("threshold", "certified integer bracket of the order threshold at p");
  thr->add_option("p", p_text, "<num>/<den> in (1/2, 3/4)")->required();
  thr->add_option("--variant", variant)->check(CLI::IsMember({"hamilton", "two_factor"}));
  thr->add_option("--digits", digits, "starting precision in decimal digits");
  thr->fallthrough();
  thr->callback([&] {
    const auto v = variant == "hamilton" ? adf::ThresholdVariant::hamilton : adf::ThresholdVariant::two_factor;
    std::cout << adf::describe(adf::threshold(parse_fraction(p_text), v, digits)) << "\n";
  });

  // gen
  auto* gen = app.add_subcommand("gen", "write a graph to stdout");
  gen->require_subcommand(1);
  gen->fallthrough();
  int gen_n = 0, gen_delta = 0;
  auto* dn = gen->add_subcommand("dn", "two disjoint complete digraphs on n/2 vertices");
  dn->add_option("n", gen_n)->required();
  dn->fallthrough();
  dn->callback([&] { std::cout << adf::serialize(adf::split_complete_digraph(gen_n)); });
  auto* complete = gen->add_subcommand("complete", "complete digraph");
  complete->add_option("n", gen_n)->required();
  complete->fallthrough();
  complete->callback([&] { std::cout << adf::serialize(adf::complete_digraph(gen_n)); });
  auto* random = gen->add_subcommand("random", "random digraph with min_degree >= delta");
  random->add_option("n", gen_n)->required();
  random->add_option("delta", gen_delta)->required();
  random->fallthrough();
  random->callback([&] {
    adf::Rng rng(common.seed);
    std::cout << adf::serialize(adf::random_min_degree_digraph(gen_n, gen_delta, rng));
  });
  std::string cubic_name;
  int cubic_n = 10;
  auto* cubic = gen->add_subcommand("cubic", "named or random cubic graph");
  cubic->add_option("name", cubic_name, "k4, k33, prism, petersen, mobius-kantor, durer, desargues, gp:m:k, random")
      ->required();
  cubic->add_option("--n", cubic_n, "order of a random cubic graph");
  cubic->fallthrough();
  cubic->callback([&] {
    if (cubic_name == "random") {
      adf::Rng rng(common.seed);
      std::cout << adf::serialize(adf::random_cubic_graph(cubic_n, rng));
    } else {
      std::cout << adf::serialize(adf::named_cubic_graph(cubic_name));
    }
  });

  // conjecture
  auto* conjecture = app.add_subcommand("conjecture", "search for digraphs with min_degree >= n/2 and no anti-directed 2-factor");
  conjecture->require_subcommand(1);
  conjecture->fallthrough();
  auto* cscan = conjecture->add_subcommand("scan", "random and structured trials per even order");
  std::string range = "8..14";
  int trials = 100;
  cscan->add_option("--n", range, "order range a..b");
  cscan->add_option("--trials", trials, "trials per order");
  cscan->fallthrough();
  cscan->callback([&] {
    adf::ConjectureOptions o;
    std::tie(o.n_min, o.n_max) = parse_range(range);
    o.trials = trials;
    o.seed = common.seed;
    o.jobs = common.jobs;
    const adf::ConjectureReport r = adf::conjecture_scan(o);
    emit(adf::to_json(r));
    status = r.counterexamples.empty() ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const adf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitData;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const adf::PreconditionError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
