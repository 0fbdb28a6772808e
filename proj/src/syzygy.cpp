#include "modcone/syzygy.hpp"

#include "modcone/slopes.hpp"

#include <array>

namespace modcone {

namespace {

// Coefficient of s^k as a polynomial in i (entry m is the coefficient of i^m).
const std::array<std::vector<int>, 8> kNumerator = {{
    {2, 2},
    {9, 18, 7},
    {41, 50, 17, 1},
    {-4, -6, 2, 2},
    {-24, -14, -1, -2, -1},
    {12, 0, -13, -7, -1},
    {-16, -16, 0, 4, 1},
    {16, 32, 24, 8, 1},
}};

const std::array<std::vector<int>, 7> kDenominator = {{
    {2, 4},
    {11, 7, 1},
    {1, 5, 4},
    {0, 5, 0, -1},
    {-2, -11, -7, -1},
    {-8, -4, 2, 1},
    {8, 12, 6, 1},
}};

template <std::size_t N>
BigInt evaluate(const std::array<std::vector<int>, N>& table, int s, int i) {
  BigInt total = 0;
  BigInt spow = 1;
  for (const auto& coeffs : table) {
    BigInt inner = 0;
    BigInt ipow = 1;
    for (int c : coeffs) {
      inner += c * ipow;
      ipow *= i;
    }
    total += inner * spow;
    spow *= s;
  }
  return total;
}

Rational q(std::int64_t p, std::int64_t d = 1) { return make_rational(p, d); }

}  // namespace

SyzygyFamily SyzygyFamily::make(int s, int i) {
  if (s < 1 || i < 0) throw DomainError("the family needs s ≥ 1 and i ≥ 0");
  if (s > 1000 || i > 1000) throw DomainError("family parameters above 1000 are not supported");
  SyzygyFamily f{s, i, 2 * s + s * i + i, 0, 0};
  f.g = f.r * s + s;
  f.d = f.r * s + f.r;
  if (f.g != s * (2 * s + s * i + i + 1) || rho(f.g, f.r, f.d) != 0 || (i * f.d) % f.r != 0) {
    throw std::logic_error("family invariants violated");
  }
  return f;
}

BundleRanks ranks(const SyzygyFamily& fam) {
  const int shift = fam.i * fam.d / fam.r;
  return {(fam.i + 1) * binomial(fam.r + 2, fam.i + 2),
          binomial(fam.r, fam.i) * BigInt(2 * fam.d + 1 - fam.g - shift)};
}

BigInt slope_numerator(int s, int i) { return evaluate(kNumerator, s, i); }

BigInt slope_denominator(int s, int i) { return evaluate(kDenominator, s, i); }

Rational virtual_slope(int s, int i) {
  SyzygyFamily::make(s, i);
  const BigInt den = BigInt(i + 2) * s * slope_denominator(s, i);
  if (den == 0) {
    throw DomainError("denominator polynomial vanishes at (s,i) = (" + std::to_string(s) + "," +
                      std::to_string(i) + ")");
  }
  return Rational(6 * slope_numerator(s, i), den);
}

Rational quadric_slope(int s) {
  const BigInt S = s;
  const BigInt num = 3 * (16 * S * S * S * S * S * S * S - 16 * S * S * S * S * S * S +
                          12 * S * S * S * S * S - 24 * S * S * S * S - 4 * S * S * S + 41 * S * S +
                          9 * S + 2);
  const BigInt den =
      S * (8 * S * S * S * S * S * S - 8 * S * S * S * S * S - 2 * S * S * S * S + S * S + 11 * S + 2);
  return Rational(num, den);
}

Rational hurwitz_slope(int i) {
  const BigInt I = i;
  return Rational(3 * (4 * I + 7) * (6 * I * I + 19 * I + 12), (12 * I * I + 31 * I + 18) * (I + 2));
}

Rational canonical_curve_slope(int i) { return q(6 * (i + 3), i + 2); }

std::vector<SpecializationCheck> specialization_checks(int smax, int imax) {
  std::vector<SpecializationCheck> out;
  auto push = [&](std::string name, int s, int i, Rational closed) {
    out.push_back({std::move(name), s, i, virtual_slope(s, i), std::move(closed)});
    return out.back().ok();
  };
  for (int s = 1; s <= smax; ++s) {
    if (!push("i=0", s, 0, quadric_slope(s))) return out;
  }
  for (int i = 0; i <= imax; ++i) {
    if (smax >= 2 && !push("s=2", 2, i, hurwitz_slope(i))) return out;
    if (smax >= 1 && !push("s=1", 1, i, canonical_curve_slope(i))) return out;
  }
  return out;
}

SlopeBound bound_check(int s, int i) {
  if (s < 2) throw DomainError("the slope sandwich is only claimed for s ≥ 2");
  const auto fam = SyzygyFamily::make(s, i);
  return {q(6), virtual_slope(s, i), brill_noether_slope(fam.g)};
}

std::vector<FixedSlope> fixed_slopes() {
  return {{"M22 quadric divisor", q(17121, 2636)}, {"M23 virtual", q(470749, 72725)}, {"K10", q(7)}};
}

}  // namespace modcone
