#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

namespace adf {

using BigInt = mpz_class;
using Rational = mpq_class;

// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
BigInt binomial(long n, long k);

// n_k = 2 C(delta, k) C(n - delta - 1, n/2 - k): source-set choices in which
// a vertex with in- and out-degree delta has degree k in B(X,Y).
// Requires n even and 0 <= delta <= n-1; k may be any integer.
BigInt count_nk(int n, int delta, int k);

// Sum of n_k over k, checked against C(n, n/2). Throws InvariantError on
// mismatch.
BigInt total_N(int n, int delta);

// Upper bound on 2-factor-free choices:
//   S = n * sum_{k = max(2, delta - n/2 + 1)}^{floor(n/4) - 1} n_k / k.
// Requires n even and n >= 12.
Rational bound_S(int n, int delta);
// As bound_S with the denominator of the last term (k = floor(n/4) - 1) doubled.
Rational bound_S_strong(int n, int delta);

struct CountReport {
  int n = 0;
  int delta = 0;
  BigInt N;
  Rational S;
  Rational S_strong;
  std::map<int, BigInt> terms;  // k -> n_k over the support
  bool inequality3_holds = false;         // N > S
  bool inequality3_strong_holds = false;  // N > S'
};

// Exact comparison N > S. Requires n even; below n = 12 the sum is empty.
CountReport verify_inequality3(int n, int delta);

// Smallest delta with 46 delta > 24 n.
int corollary2_delta(int n);

struct ScanRow {
  int n = 0;
  int delta = 0;
  BigInt N;
  Rational S;
  bool holds = false;
  bool holds_strong = false;
};

struct ScanReport {
  std::vector<ScanRow> rows;
  std::vector<std::pair<int, int>> failures;
  std::vector<std::pair<int, int>> strong_failures;
  // Previously published exception set, kept for comparison.
  std::vector<std::pair<int, int>> claimed_failures{{48, 22}};
  bool matches_claim() const { return failures == claimed_failures; }
};

// Every even 12 <= n < n_max at delta = corollary2_delta(n). Rows are ordered by n.
ScanReport scan_corollary2(int n_max = 1420, unsigned jobs = 1);

// x(x+1)...(x+s) / (y(y+1)...(y+s)) >= ((x + s/2) / (y + s/2))^2, evaluated
// exactly. Requires x >= y > s/2 > 0 and s a positive even integer.
bool lemma5_holds(Rational x, Rational y, Rational s);

struct RatioCheck {
  // Both A_k and B_k are nonzero, so the direct ratios exist.
  bool ratios_defined = false;
  // Closed-form ratios equal direct binomial ratios (vacuous if undefined).
  bool closed_form_matches = true;
  // A_{k+1}/A_k >= ((n/4-k-1)/(n/4-k-2)) B_{k+1}/B_k, cross-multiplied.
  bool recursion_holds = false;
  bool ok() const { return closed_form_matches && recursion_holds; }
};

// With A_i = n_{delta/2 + i} and B_i = n_{n/4 - i - 1}. Requires n = 4m,
// delta even, delta > n/2, 0 <= k < n/4 - 3.
RatioCheck ratio_recursion_check(int n, int delta, int k);
// A_0 > n B_0 / (n/4 - 1). Same regime as ratio_recursion_check.
bool ratio_base_case_holds(int n, int delta);

}  // namespace adf
