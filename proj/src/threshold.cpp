#include "adf/threshold.hpp"

#include <cstdio>

#include <mpfr.h>

#include <cmath>
#include <memory>

#include "adf/errors.hpp"

namespace adf {

namespace {

constexpr long kMaxBits = 1L << 20;

class Real {
 public:
  explicit Real(long bits) { mpfr_init2(v_, bits); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

struct Interval {
  Real lo;
  Real hi;
  explicit Interval(long bits) : lo(bits), hi(bits) {}
};

void set_rational(Interval& out, const Rational& q) {
  mpfr_set_q(out.lo.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi.get(), q.get_mpq_t(), MPFR_RNDU);
}

std::string format(mpfr_srcptr x, bool up) {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, up ? "%.30RUf" : "%.30RDf", x) < 0) throw InvariantError("mpfr_asprintf failed");
  std::unique_ptr<char, decltype(&mpfr_free_str)> owned(raw, &mpfr_free_str);
  return std::string(raw);
}

long bits_for_digits(int digits) {
  return static_cast<long>(std::ceil(digits * 3.3219280948873626)) + 16;
}

// Encloses the threshold at `bits` of precision. Every operand is positive,
// so each bound is computed from the matching bounds of its inputs.
void enclose(const Rational& p, ThresholdVariant variant, long bits, Interval& value) {
  const Rational t = p - Rational(1, 2);
  Rational u = (p + Rational(1, 2)) / (Rational(3, 2) - p);
  u.canonicalize();

  Interval ln4(bits), tt(bits), uu(bits), lnu(bits), prod(bits);
  mpfr_set_ui(ln4.lo.get(), 4, MPFR_RNDN);
  mpfr_log(ln4.lo.get(), ln4.lo.get(), MPFR_RNDD);
  mpfr_set_ui(ln4.hi.get(), 4, MPFR_RNDN);
  mpfr_log(ln4.hi.get(), ln4.hi.get(), MPFR_RNDU);
  set_rational(tt, t);
  set_rational(uu, u);
  mpfr_log(lnu.lo.get(), uu.lo.get(), MPFR_RNDD);
  mpfr_log(lnu.hi.get(), uu.hi.get(), MPFR_RNDU);
  mpfr_mul(prod.lo.get(), tt.lo.get(), lnu.lo.get(), MPFR_RNDD);
  mpfr_mul(prod.hi.get(), tt.hi.get(), lnu.hi.get(), MPFR_RNDU);
  mpfr_div(value.lo.get(), ln4.lo.get(), prod.hi.get(), MPFR_RNDD);
  mpfr_div(value.hi.get(), ln4.hi.get(), prod.lo.get(), MPFR_RNDU);

  if (variant == ThresholdVariant::two_factor) {
    Rational inv = 1 / t;
    inv.canonicalize();
    Interval g(bits);
    set_rational(g, inv);
    mpfr_sub(value.lo.get(), value.lo.get(), g.hi.get(), MPFR_RNDD);
    mpfr_sub(value.hi.get(), value.hi.get(), g.lo.get(), MPFR_RNDU);
  }
}

}  // namespace

ThresholdBracket threshold(const Rational& p_in, ThresholdVariant variant, int digits) {
  Rational p = p_in;
  p.canonicalize();
  if (!(p > Rational(1, 2) && p < Rational(3, 4))) throw PreconditionError("p must lie in (1/2, 3/4)");
  if (digits < 1) throw PreconditionError("precision must be positive");
  for (long bits = bits_for_digits(digits); bits <= kMaxBits; bits *= 2) {
    Interval value(bits);
    enclose(p, variant, bits, value);
    BigInt lo_floor, hi_floor;
    mpfr_get_z(lo_floor.get_mpz_t(), value.lo.get(), MPFR_RNDD);
    mpfr_get_z(hi_floor.get_mpz_t(), value.hi.get(), MPFR_RNDD);
    // The value is strictly inside (floor, floor + 1) only if the lower end
    // is not itself that integer.
    if (lo_floor != hi_floor || mpfr_integer_p(value.lo.get())) continue;
    ThresholdBracket b;
    b.floor = lo_floor;
    b.lower = format(value.lo.get(), false);
    b.upper = format(value.hi.get(), true);
    b.bits = bits;
    return b;
  }
  throw InvariantError("could not bracket the threshold between consecutive integers");
}

std::string describe(const ThresholdBracket& b) {
  return b.floor.get_str() + " < bound < " + BigInt(b.floor + 1).get_str();
}

bool grant_condition_holds(int n, int delta) {
  if (n < 1) throw PreconditionError("n must be positive");
  Rational margin = Rational(delta) - Rational(2 * n, 3);
  margin.canonicalize();
  if (n == 1) return margin >= 0;
  if (margin <= 0) return false;
  for (long bits = 128; bits <= kMaxBits; bits *= 2) {
    Interval root(bits), m(bits);
    mpfr_set_ui(root.lo.get(), static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_log(root.lo.get(), root.lo.get(), MPFR_RNDD);
    mpfr_mul_ui(root.lo.get(), root.lo.get(), static_cast<unsigned long>(n), MPFR_RNDD);
    mpfr_sqrt(root.lo.get(), root.lo.get(), MPFR_RNDD);
    mpfr_set_ui(root.hi.get(), static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_log(root.hi.get(), root.hi.get(), MPFR_RNDU);
    mpfr_mul_ui(root.hi.get(), root.hi.get(), static_cast<unsigned long>(n), MPFR_RNDU);
    mpfr_sqrt(root.hi.get(), root.hi.get(), MPFR_RNDU);
    set_rational(m, margin);
    if (mpfr_cmp(m.lo.get(), root.hi.get()) >= 0) return true;
    if (mpfr_cmp(m.hi.get(), root.lo.get()) < 0) return false;
  }
  throw InvariantError("could not decide the sqrt(n ln n) comparison");
}

}  // namespace adf
