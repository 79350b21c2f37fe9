#pragma once

#include <string>

#include "adf/counting.hpp"

namespace adf {

enum class ThresholdVariant { hamilton, two_factor };

// hamilton:   ln 4 / ((p - 1/2) ln((p + 1/2) / (3/2 - p)))
// two_factor: the same minus 1/(p - 1/2)
struct ThresholdBracket {
  BigInt floor;       // floor < value < floor + 1, certified
  std::string lower;  // decimal enclosure of the value
  std::string upper;
  long bits = 0;      // working precision that achieved the bracket
};

// Evaluated in interval arithmetic with directed rounding. Starts at `digits`
// decimal digits and doubles until the enclosure excludes every integer.
// Requires 1/2 < p < 3/4.
ThresholdBracket threshold(const Rational& p, ThresholdVariant variant, int digits = 60);

// "1420 < bound < 1421"
std::string describe(const ThresholdBracket& b);

// Certified sign of (3 delta - 2n) - 3 sqrt(n ln n) >= 0, i.e. delta >= 2n/3 + sqrt(n ln n).
bool grant_condition_holds(int n, int delta);

}  // namespace adf
