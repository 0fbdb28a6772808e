#pragma once

#include "modcone/picard.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace modcone {

/// Brill–Noether number g - (r+1)(g-d+r).
std::int64_t rho(std::int64_t g, std::int64_t r, std::int64_t d);

class SlopeValue {
 public:
  static SlopeValue infinite() { return SlopeValue(); }
  static SlopeValue finite(Rational v) { return SlopeValue(std::move(v)); }

  bool is_infinite() const { return !value_.has_value(); }
  const Rational& value() const { return value_.value(); }
  std::string to_string() const;

  friend bool operator==(const SlopeValue&, const SlopeValue&) = default;

 private:
  SlopeValue() = default;
  explicit SlopeValue(Rational v) : value_(std::move(v)) {}
  std::optional<Rational> value_;
};

/// a / min_{0 ≤ i ≤ ⌊g/2⌋} b_i for D = aλ - Σ b_i δ_i on M̄_g. Infinite
/// unless a ≥ 0 and every b_i > 0.
SlopeValue slope(const DivisorClass& d);

/// 6 + 12/(g+1).
Rational brill_noether_slope(int g);

/// (g+3)λ - ((g+1)/6)δ_0 - Σ i(g-i)δ_i, the Brill–Noether divisor with its
/// normalizing constant set to 1. Throws DomainError unless ρ(g,r,d) = -1.
DivisorClass brill_noether_class(int g, int r, int d);

/// 13λ - 2δ_0 - 3δ_1 - 2δ_2 - ... - 2δ_{⌊g/2⌋}.
DivisorClass canonical_class_mg(int g);

/// 13λ - (2-α)(δ_0 + δ_1 + ... + δ_{⌊g/2⌋}).
DivisorClass log_canonical_mg(int g, const Rational& alpha);

/// Fixtures: k10, hyperelliptic3, nef3a, nef3b, d22. Throws DomainError on an unknown name.
FlaggedClass named_class(const std::string& name);
std::vector<std::string> named_class_names();

/// Intersection numbers of a test curve with λ, δ_0 and δ_1..δ_{⌊g/2⌋}.
struct CurveProfile {
  std::string name;
  int genus = 0;
  Rational lambda;
  Rational delta0;
  std::vector<Rational> delta;  // delta[i-1] pairs with δ_i
};

/// Lefschetz pencil of K3 sections: λ ↦ g+1, δ_0 ↦ 6g+18.
CurveProfile k3_pencil(int g);
/// Pencil of plane cubics glued at a base point: λ ↦ 1, δ_0 ↦ 12, δ_1 ↦ -1.
CurveProfile elliptic_pencil(int g);
/// Moving the attaching point of an elliptic tail: δ_0 ↦ -(2g-2), δ_1 ↦ 1.
CurveProfile tail_curve_c0(int g);
/// Varying j-invariant of an elliptic tail: δ_1 ↦ -(2g-4).
CurveProfile tail_curve_c1(int g);
/// "B", "R", "C0" or "C1". Throws DomainError otherwise.
CurveProfile curve_profile(const std::string& name, int g);

Rational pair(const DivisorClass& d, const CurveProfile& curve);

struct K3Verdict {
  SlopeValue slope;
  Rational threshold;           // 6 + 12/(g+1)
  bool below_threshold = false; // slope < threshold, strictly
  Rational pencil_pairing;      // D · B
  bool b_dominant = false;      // b_i ≥ b_0 > 0 for all i
};

/// When below_threshold holds, D contains the locus of K3 sections.
K3Verdict k3_slope_test(const DivisorClass& d);

/// K = αD + βλ + Σ c_i δ_i with α, β > 0 and c_i ≥ 0.
struct MgCertificate {
  Rational alpha;
  Rational beta;
  std::vector<Rational> boundary;  // c_0..c_{⌊g/2⌋}
};

/// Solves for a general-type decomposition of the canonical class, with
/// β maximized first, then α and the c_i lexicographically minimized.
/// Lower-bounded boundary entries enter at their stored bound, which is
/// sound because c_i grows with b_i. Returns nullopt when infeasible.
std::optional<MgCertificate> general_type_certificate_mg(const FlaggedClass& d);

/// αD + βλ + Σ c_i δ_i using the stored coefficients of D.
DivisorClass recombine(const MgCertificate& cert, const DivisorClass& d);

/// Gap used for the strict inequalities α, β > 0 in LP form.
Rational strictness_gap();

}  // namespace modcone
