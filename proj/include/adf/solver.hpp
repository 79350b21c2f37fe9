#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adf/bipartite.hpp"
#include "adf/digraph.hpp"

namespace adf {

enum class Decision { yes, no, unknown };
// parity: odd order, no enumeration needed.
enum class Method { exhaustive, sampled, degree_bound, hall_condition, reduction, parity };

std::string_view to_string(Decision d);
std::string_view to_string(Method m);

struct Witness {
  // X: the vertices whose two cover arcs both point out.
  std::vector<Vertex> source_side;
  CycleCover cover;
};

struct Certificate {
  Decision decision = Decision::unknown;
  Method method = Method::exhaustive;
  std::optional<Witness> witness;
  std::optional<std::string> refutation;
  // Name of the sufficient condition behind a degree_bound answer.
  std::optional<std::string> guarantee;
  // Source-set choices examined, in enumeration (or sample) order up to the
  // witness; all of them for a refutation.
  std::uint64_t checked = 0;
  // C(n, n/2) in decimal, "0" for odd n.
  std::string total;
};

enum class Strategy { exhaustive, sampled, automatic };

struct SearchOptions {
  Strategy strategy = Strategy::automatic;
  // 0 selects max(1000, 20n).
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  // Exhaustive enumeration is refused above this order.
  int exhaustive_limit = 24;
  // automatic enumerates exhaustively up to this order, samples above it.
  int auto_exhaustive_limit = 14;
  // Per source-set choice; Hamilton searches only.
  std::uint64_t node_budget = 200000;
};

std::uint64_t default_sample_count(int n);

// Anti-directed 2-factor: yes iff some X of size n/2 makes B(X,Y) 2-factorable.
// X and its complement are distinct choices. Sampling never answers no.
Certificate decide_adf(const Digraph& d, const SearchOptions& options = {});
// Anti-directed Hamilton cycle: same search with a Hamilton test on B(X,Y).
Certificate decide_adhc(const Digraph& d, const SearchOptions& options = {});

// Checks a certificate against its digraph: a yes with a witness must
// validate (and be a single n-cycle when `hamilton`). Returns the failure.
Validation check_certificate(const Digraph& d, const Certificate& c, bool hamilton);

// Directed 2-factor by perfect matching between out- and in-copies of the
// vertices; returns the successor of each vertex.
std::optional<std::vector<Vertex>> directed_two_factor(const Digraph& d);
bool directed_two_factor_exists(const Digraph& d);
// |N+(S)| >= |S| for every S, by enumerating all subsets. n <= 20.
bool hall_condition_exhaustive(const Digraph& d);

enum class CensusTarget { two_factor, hamilton };
enum class CensusMode { exhaustive, sample };

std::string_view to_string(CensusTarget t);
std::string_view to_string(CensusMode m);

struct CensusOptions {
  CensusMode mode = CensusMode::exhaustive;
  CensusTarget target = CensusTarget::two_factor;
  std::uint64_t samples = 0;  // 0 selects max(1000, 20n)
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::uint64_t node_budget = 200000;
  int exhaustive_limit = 16;
};

struct CensusReport {
  int n = 0;
  CensusTarget target = CensusTarget::two_factor;
  CensusMode mode = CensusMode::exhaustive;
  std::string total;  // C(n, n/2)
  std::uint64_t examined = 0;
  std::uint64_t good = 0;
  std::uint64_t bad = 0;
  std::uint64_t unknown = 0;
  // degree_histogram[v][k]: examined choices with deg(v, B(X,Y)) = k, k = 0..n/2.
  std::vector<std::vector<std::uint64_t>> degree_histogram;
};

CensusReport equipartition_census(const Digraph& d, const CensusOptions& options);

struct ConjectureOptions {
  int n_min = 8;
  int n_max = 14;
  int trials = 100;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  // Orders up to this are decided exhaustively; larger ones by sampling.
  int exhaustive_limit = 14;
};

struct ConjectureRow {
  int n = 0;
  int trials = 0;
  int yes = 0;
  int no = 0;
  int unknown = 0;
};

struct Counterexample {
  int n = 0;
  std::string family;
  int delta = 0;
  Digraph digraph;
  Certificate certificate;
};

struct ConjectureReport {
  std::vector<ConjectureRow> rows;
  std::vector<Counterexample> counterexamples;
};

// Random and structured digraphs of even order with min_degree >= n/2, each
// run through decide_adf; every "no" is reported with its exhaustive certificate.
ConjectureReport conjecture_scan(const ConjectureOptions& options);

}  // namespace adf
