#include "adf/classical.hpp"

#include <algorithm>

#include "adf/threshold.hpp"

namespace adf {

namespace {

// Minimum degree of the simple graph underlying d.
int underlying_min_degree(const Digraph& d) {
  int best = d.order();
  for (Vertex v = 0; v < d.order(); ++v) {
    std::vector<Vertex> around(d.out_neighbors(v).begin(), d.out_neighbors(v).end());
    around.insert(around.end(), d.in_neighbors(v).begin(), d.in_neighbors(v).end());
    std::sort(around.begin(), around.end());
    const auto distinct = std::unique(around.begin(), around.end()) - around.begin();
    best = std::min(best, static_cast<int>(distinct));
  }
  return best;
}

bool three_quarters(int n, int delta) { return n % 2 == 0 && 4 * delta >= 3 * n; }
bool grant(int n, int delta) { return n % 2 == 0 && n >= 2 && grant_condition_holds(n, delta); }
bool nine_sixteenths(int n, int delta) { return n % 2 == 0 && 16 * delta > 9 * n; }
bool twenty_four_forty_sixths(int n, int delta) { return n % 2 == 0 && 46 * delta > 24 * n; }

constexpr const char* kAdhc = "anti-directed Hamilton cycle";
constexpr const char* kAdf = "anti-directed 2-factor";

}  // namespace

ClassicalReport classical_conditions(const Digraph& d) {
  ClassicalReport r;
  r.n = d.order();
  r.delta = d.order() > 0 ? min_degree(d) : 0;
  const int n = r.n;
  const int delta = r.delta;
  r.conditions = {
      {"dirac_underlying", n >= 3 && 2 * underlying_min_degree(d) >= n, "Hamilton cycle in the underlying graph"},
      {"ghouila_houri", n >= 2 && 2 * delta >= n, "directed Hamilton cycle"},
      {"three_quarters", three_quarters(n, delta), kAdhc},
      {"grant", grant(n, delta), kAdhc},
      {"nine_sixteenths", nine_sixteenths(n, delta), kAdhc},
      {"twenty_four_forty_sixths", twenty_four_forty_sixths(n, delta), kAdf},
  };
  return r;
}

std::optional<std::string> degree_guarantee(int n, int delta, bool hamilton) {
  if (n % 2 != 0 || n < 2) return std::nullopt;
  if (three_quarters(n, delta)) return "three_quarters";
  if (nine_sixteenths(n, delta)) return "nine_sixteenths";
  if (grant(n, delta)) return "grant";
  if (!hamilton && twenty_four_forty_sixths(n, delta)) return "twenty_four_forty_sixths";
  return std::nullopt;
}

}  // namespace adf
