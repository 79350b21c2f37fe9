#include <algorithm>

#include "adf/bipartite.hpp"
#include "adf/errors.hpp"

namespace adf {

namespace {

void check_sequence(std::span<const int> degseq, int n) {
  if (static_cast<int>(degseq.size()) != n) {
    throw PreconditionError("degree sequence length " + std::to_string(degseq.size()) +
                            " does not match n = " + std::to_string(n));
  }
  if (!std::is_sorted(degseq.begin(), degseq.end())) {
    throw PreconditionError("degree sequence must be nondecreasing");
  }
}

// 1-based access; d_0 is vacuous (treated as 0) so that k = 1 reduces to d_1 <= 1.
int d(std::span<const int> degseq, int i) { return i == 0 ? 0 : degseq[i - 1]; }

// Some k in 1..kmax with d_k <= k and d_{k-1} <= k-1.
bool low_degree_pair(std::span<const int> degseq, int kmax) {
  for (int k = 1; k <= kmax; ++k) {
    if (d(degseq, k) <= k && d(degseq, k - 1) <= k - 1) return true;
  }
  return false;
}

}  // namespace

bool chvatal_condition_holds(std::span<const int> degseq, int n) {
  check_sequence(degseq, n);
  if (n % 2 != 0) throw PreconditionError("bipartite order must be even");
  for (int i = 1; i <= n / 4; ++i) {
    if (d(degseq, i) <= i && d(degseq, n / 2) <= n / 2 - i) return true;
  }
  return false;
}

bool thm10_condition_holds(std::span<const int> degseq, int n) {
  check_sequence(degseq, n);
  if (n % 4 != 0 || n < 12) throw PreconditionError("condition needs n = 4s >= 12");
  const int q = n / 4;
  return low_degree_pair(degseq, q) || d(degseq, q - 1) <= q - 1;
}

bool thm11_condition_holds(std::span<const int> degseq, int n) {
  check_sequence(degseq, n);
  if (n % 4 != 2 || n < 14) throw PreconditionError("condition needs n = 4s+2 >= 14");
  const int q = (n - 2) / 4;
  return low_degree_pair(degseq, q) || d(degseq, (n - 2) / 2) <= q;
}

}  // namespace adf
