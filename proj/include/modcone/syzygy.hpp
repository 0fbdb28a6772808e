#pragma once

#include "modcone/rational.hpp"

#include <string>
#include <vector>

namespace modcone {

/// Linear series with ρ = 0: r = 2s+si+i, g = rs+s, d = rs+r.
struct SyzygyFamily {
  int s = 1;
  int i = 0;
  int r = 0;
  int g = 0;
  int d = 0;

  /// Throws DomainError unless s ≥ 1 and i ≥ 0; verifies the family invariants.
  static SyzygyFamily make(int s, int i);
};

struct BundleRanks {
  BigInt source;  // (i+1)·C(r+2, i+2)
  BigInt target;  // C(r,i)·(2d+1-g - i·d/r)
};

BundleRanks ranks(const SyzygyFamily& fam);

/// Degree-7 numerator polynomial and degree-6 denominator polynomial in s,
/// with coefficients that are polynomials in i.
BigInt slope_numerator(int s, int i);
BigInt slope_denominator(int s, int i);

/// 6 f(s,i) / ((i+2) s g(s,i)).
Rational virtual_slope(int s, int i);

/// Closed forms at i = 0, s = 2 and s = 1.
Rational quadric_slope(int s);
Rational hurwitz_slope(int i);
Rational canonical_curve_slope(int i);

struct SpecializationCheck {
  std::string name;  // "i=0", "s=2" or "s=1"
  int s = 0;
  int i = 0;
  Rational polynomial;
  Rational closed_form;
  bool ok() const { return polynomial == closed_form; }
};

/// Compares virtual_slope with each closed form for s ≤ smax and i ≤ imax.
/// Stops at the first mismatch, which is the last entry.
std::vector<SpecializationCheck> specialization_checks(int smax, int imax);

struct SlopeBound {
  Rational lower;  // 6
  Rational slope;
  Rational upper;  // 6 + 12/(g+1)
  bool ok() const { return lower < slope && slope < upper; }
};

/// Requires s ≥ 2.
SlopeBound bound_check(int s, int i);

struct FixedSlope {
  std::string label;
  Rational value;
};

std::vector<FixedSlope> fixed_slopes();

}  // namespace modcone
