#include <doctest.h>

#include "adf/counting.hpp"
#include "adf/errors.hpp"
#include "adf/random.hpp"
#include "adf/threshold.hpp"
#include "oracles.hpp"

using namespace adf;

namespace {

std::string str(const oracle::cpp_int& v) { return v.str(); }

std::string str(const oracle::cpp_rational& q) {
  const oracle::cpp_int num = boost::multiprecision::numerator(q);
  const oracle::cpp_int den = boost::multiprecision::denominator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

}  // namespace

TEST_CASE("n_k on small cases") {
  CHECK(count_nk(4, 2, 0) == 0);
  CHECK(count_nk(4, 2, 1) == 4);
  CHECK(count_nk(4, 2, 2) == 2);
  CHECK(count_nk(4, 2, 3) == 0);
  CHECK(total_N(4, 2) == 6);
  CHECK(count_nk(8, 5, -1) == 0);
  CHECK(total_N(8, 5) == 70);
  CHECK_THROWS_AS(count_nk(7, 3, 1), PreconditionError);
  CHECK_THROWS_AS(count_nk(8, 8, 1), PreconditionError);
}

TEST_CASE("binomials and n_k agree with Pascal's triangle") {
  for (int n = 0; n <= 120; ++n) {
    for (int k = -1; k <= n + 1; ++k) CHECK(binomial(n, k).get_str() == str(oracle::binomial(n, k)));
  }
  for (int n = 2; n <= 60; n += 2) {
    for (int delta = 0; delta < n; ++delta) {
      for (int k = 0; k <= n / 2 + 1; ++k) {
        CHECK(count_nk(n, delta, k).get_str() == str(oracle::nk(n, delta, k)));
      }
    }
  }
}

TEST_CASE("n_k vanishes outside its support and sums to C(n, n/2)") {
  for (int n = 2; n <= 120; n += 2) {
    for (int delta = 0; delta < n; ++delta) {
      CHECK(total_N(n, delta) == binomial(n, n / 2));
      const CountReport r = verify_inequality3(n, delta);
      for (const auto& [k, v] : r.terms) {
        CHECK(k <= n / 2);
        CHECK(k >= delta - n / 2 + 1);
        CHECK(v > 0);
      }
    }
  }
}

TEST_CASE("S and S' agree with an independent rational evaluation") {
  for (int n = 12; n <= 90; n += 2) {
    for (int delta = 0; delta < n; ++delta) {
      CHECK(bound_S(n, delta).get_str() == str(oracle::bound(n, delta, false)));
      CHECK(bound_S_strong(n, delta).get_str() == str(oracle::bound(n, delta, true)));
    }
  }
  CHECK(bound_S(16, 10) == 1280);
  CHECK(bound_S(12, 7) == 252);
  CHECK(bound_S(12, 8) == 0);
  CHECK(bound_S(14, 8) == 392);
  CHECK_THROWS_AS(bound_S(10, 6), PreconditionError);
}

TEST_CASE("the (48, 22) case") {
  const CountReport r = verify_inequality3(48, 22);
  CHECK(r.N.get_str() == "32247603683100");
  CHECK(r.S.get_str() == str(oracle::bound(48, 22, false)));
  CHECK_FALSE(r.inequality3_holds);
  CHECK_FALSE(r.inequality3_strong_holds);
}

TEST_CASE("dense digraphs satisfy N > S") {
  for (int n = 12; n <= 200; n += 2) CHECK(verify_inequality3(n, n - 1).inequality3_holds);
}

TEST_CASE("least delta above 24n/46") {
  for (int n = 1; n < 2000; ++n) {
    const int delta = corollary2_delta(n);
    CHECK(46 * delta > 24 * n);
    CHECK(46 * (delta - 1) <= 24 * n);
  }
  CHECK(corollary2_delta(46) == 25);
  CHECK(corollary2_delta(48) == 26);
}

TEST_CASE("scan below 1420") {
  const ScanReport r = scan_corollary2(1420);
  CHECK(r.rows.size() == 704);
  CHECK(r.rows.front().n == 12);
  CHECK(r.rows.back().n == 1418);
  const std::vector<std::pair<int, int>> expected{{44, 23}};
  CHECK(r.failures == expected);
  CHECK(r.strong_failures.empty());
  CHECK_FALSE(r.matches_claim());
  for (const ScanRow& row : r.rows) {
    if (row.n == 46) {
      CHECK(row.delta == 25);
      CHECK(row.holds);
    }
    if (row.n == 44) {
      CHECK(row.N.get_str() == "2104098963720");
      CHECK(row.S.get_str() == "45199691554996/21");
    }
  }
  // Row order and content do not depend on the worker count.
  const ScanReport p = scan_corollary2(200, 3);
  const ScanReport q = scan_corollary2(200, 1);
  REQUIRE(p.rows.size() == q.rows.size());
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    CHECK(p.rows[i].n == q.rows[i].n);
    CHECK(p.rows[i].S == q.rows[i].S);
  }
}

TEST_CASE("product ratio inequality") {
  CHECK(lemma5_holds(7, 7, 4));
  CHECK(lemma5_holds(10, 5, 4));
  CHECK(lemma5_holds(Rational(7, 2), Rational(3, 2), 2));
  CHECK_THROWS_AS(lemma5_holds(5, 10, 4), PreconditionError);
  CHECK_THROWS_AS(lemma5_holds(10, 2, 4), PreconditionError);
  CHECK_THROWS_AS(lemma5_holds(10, 5, 3), PreconditionError);
  CHECK_THROWS_AS(lemma5_holds(10, 5, Rational(5, 2)), PreconditionError);
  Rng rng(83);
  for (int i = 0; i < 1000; ++i) {
    const int s = 2 * static_cast<int>(1 + rng.below(6));
    const Rational y = Rational(s, 2) + Rational(static_cast<long>(1 + rng.below(400)), static_cast<long>(1 + rng.below(40)));
    const Rational x = y + Rational(static_cast<long>(rng.below(400)), static_cast<long>(1 + rng.below(40)));
    Rational xc = x, yc = y;
    xc.canonicalize();
    yc.canonicalize();
    CHECK(lemma5_holds(xc, yc, s));
  }
}

TEST_CASE("ratio recursion") {
  // Closed forms at (16, 10) for every valid k.
  for (int k = 0; k < 16 / 4 - 3; ++k) {
    const RatioCheck r = ratio_recursion_check(16, 10, k);
    CHECK(r.ratios_defined);
    CHECK(r.closed_form_matches);
  }
  for (int n : {16, 24, 32, 40, 48, 64}) {
    for (int delta = n / 2 + 1; delta < n; ++delta) {
      if (delta % 2 != 0) continue;
      for (int k = 0; k < n / 4 - 3; ++k) {
        const RatioCheck r = ratio_recursion_check(n, delta, k);
        CHECK(r.closed_form_matches);
        CHECK(r.recursion_holds);
      }
    }
  }
  CHECK_THROWS_AS(ratio_recursion_check(18, 10, 0), PreconditionError);
  CHECK_THROWS_AS(ratio_recursion_check(16, 9, 0), PreconditionError);
  CHECK_THROWS_AS(ratio_recursion_check(16, 8, 0), PreconditionError);
  CHECK_THROWS_AS(ratio_recursion_check(16, 10, 1), PreconditionError);
}

TEST_CASE("base case holds beyond the order threshold") {
  int checked = 0;
  for (int n = 16; n <= 400; n += 4) {
    for (int delta = n / 2 + 2; delta < n; delta += 2) {
      if (4 * delta >= 3 * n) break;
      const ThresholdBracket t = threshold(Rational(delta, n), ThresholdVariant::two_factor);
      if (BigInt(n) <= t.floor) continue;
      ++checked;
      CHECK_MESSAGE(ratio_base_case_holds(n, delta), "n=" << n << " delta=" << delta);
    }
  }
  CHECK(checked > 100);
}
