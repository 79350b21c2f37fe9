#include "adf/counting.hpp"

#include "adf/errors.hpp"
#include "adf/parallel.hpp"

namespace adf {

namespace {

Rational ratio(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

void require_order(int n, int delta) {
  if (n < 2 || n % 2 != 0) throw PreconditionError("n must be even and >= 2");
  if (delta < 0 || delta > n - 1) throw PreconditionError("delta must lie in [0, n-1]");
}

// n * sum_{k=lo}^{hi} n_k / k, where hi = floor(n/4) - 1; the last term's
// denominator is doubled when `strong`.
Rational sum_bound(int n, int delta, bool strong) {
  const int lo = std::max(2, delta - n / 2 + 1);
  const int hi = n / 4 - 1;
  Rational sum = 0;
  for (int k = lo; k <= hi; ++k) {
    const BigInt nk = count_nk(n, delta, k);
    if (nk == 0) continue;
    sum += ratio(nk, (strong && k == hi) ? 2 * k : k);
  }
  sum *= n;
  return sum;
}

void require_ratio_regime(int n, int delta) {
  if (n % 4 != 0 || n < 16) throw PreconditionError("n must be a multiple of 4, at least 16");
  if (delta % 2 != 0 || delta <= n / 2 || delta > n - 1) {
    throw PreconditionError("delta must be even with n/2 < delta <= n-1");
  }
}

}  // namespace

BigInt binomial(long n, long k) {
  if (n < 0) throw PreconditionError("binomial needs n >= 0");
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt count_nk(int n, int delta, int k) {
  require_order(n, delta);
  if (k < 0 || k > n / 2) return 0;
  return 2 * binomial(delta, k) * binomial(n - delta - 1, n / 2 - k);
}

BigInt total_N(int n, int delta) {
  BigInt sum = 0;
  for (int k = 0; k <= n / 2; ++k) sum += count_nk(n, delta, k);
  if (sum != binomial(n, n / 2)) {
    throw InvariantError("sum of n_k differs from C(n, n/2) at n = " + std::to_string(n) +
                         ", delta = " + std::to_string(delta));
  }
  return sum;
}

Rational bound_S(int n, int delta) {
  require_order(n, delta);
  if (n < 12) throw PreconditionError("bound S needs n >= 12");
  return sum_bound(n, delta, false);
}

Rational bound_S_strong(int n, int delta) {
  require_order(n, delta);
  if (n < 12) throw PreconditionError("bound S needs n >= 12");
  return sum_bound(n, delta, true);
}

CountReport verify_inequality3(int n, int delta) {
  require_order(n, delta);
  CountReport r;
  r.n = n;
  r.delta = delta;
  for (int k = 0; k <= n / 2; ++k) {
    BigInt nk = count_nk(n, delta, k);
    if (nk != 0) r.terms.emplace(k, std::move(nk));
  }
  r.N = total_N(n, delta);
  r.S = sum_bound(n, delta, false);
  r.S_strong = sum_bound(n, delta, true);
  r.inequality3_holds = Rational(r.N) > r.S;
  r.inequality3_strong_holds = Rational(r.N) > r.S_strong;
  return r;
}

int corollary2_delta(int n) {
  if (n < 1) throw PreconditionError("n must be positive");
  return 24 * n / 46 + 1;
}

ScanReport scan_corollary2(int n_max, unsigned jobs) {
  ScanReport report;
  const int first = 12;
  const int count = n_max > first ? (n_max - first + 1) / 2 : 0;
  report.rows.resize(count);
  for_each_chunk(static_cast<std::uint64_t>(count), 1, jobs, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const int n = first + 2 * static_cast<int>(i);
      ScanRow& row = report.rows[i];
      row.n = n;
      row.delta = corollary2_delta(n);
      if (46 * row.delta <= 24 * n || 46 * (row.delta - 1) > 24 * n) {
        throw InvariantError("delta is not the least integer above 24n/46");
      }
      CountReport c = verify_inequality3(n, row.delta);
      row.N = std::move(c.N);
      row.S = std::move(c.S);
      row.holds = c.inequality3_holds;
      row.holds_strong = c.inequality3_strong_holds;
    }
  });
  for (const ScanRow& row : report.rows) {
    if (!row.holds) report.failures.emplace_back(row.n, row.delta);
    if (!row.holds_strong) report.strong_failures.emplace_back(row.n, row.delta);
  }
  return report;
}

bool lemma5_holds(Rational x, Rational y, Rational s) {
  x.canonicalize();
  y.canonicalize();
  s.canonicalize();
  if (s.get_den() != 1 || s <= 0 || s.get_num() % 2 != 0) {
    throw PreconditionError("s must be a positive even integer");
  }
  const Rational half = s / 2;
  if (!(x >= y && y > half)) throw PreconditionError("need x >= y > s/2");
  const long steps = s.get_num().get_si();
  Rational lhs = 1;
  for (long i = 0; i <= steps; ++i) lhs *= (x + i) / (y + i);
  const Rational mid = (x + half) / (y + half);
  return lhs >= mid * mid;
}

RatioCheck ratio_recursion_check(int n, int delta, int k) {
  require_ratio_regime(n, delta);
  const int q = n / 4;
  if (k < 0 || k >= q - 3) throw PreconditionError("k must satisfy 0 <= k < n/4 - 3");
  const int h = delta / 2;
  auto A = [&](int i) { return count_nk(n, delta, h + i); };
  auto B = [&](int i) { return count_nk(n, delta, q - i - 1); };
  const BigInt a0 = A(k), a1 = A(k + 1), b0 = B(k), b1 = B(k + 1);

  RatioCheck r;
  r.ratios_defined = a0 != 0 && b0 != 0;
  if (r.ratios_defined) {
    const Rational a_closed = ratio(BigInt(h - k) * (n / 2 - h - k), BigInt(h + k + 1) * (n / 2 - h + k));
    const Rational b_closed = ratio(BigInt(q - k - 1) * (3 * q - delta - k - 2),
                                    BigInt(delta - q + k + 2) * (q + k + 2));
    r.closed_form_matches = ratio(a1, a0) == a_closed && ratio(b1, b0) == b_closed;
  }
  r.recursion_holds = a1 * b0 * (q - k - 2) >= BigInt(q - k - 1) * b1 * a0;
  return r;
}

bool ratio_base_case_holds(int n, int delta) {
  require_ratio_regime(n, delta);
  const int q = n / 4;
  return count_nk(n, delta, delta / 2) * (q - 1) > n * count_nk(n, delta, q - 1);
}

}  // namespace adf
