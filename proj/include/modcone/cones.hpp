#pragma once

#include "modcone/picard.hpp"

#include <optional>
#include <string>
#include <vector>

namespace modcone {

enum class FCurveFamily { EllipticTail, Middle, Pair, Quadruple };

/// One F-curve inequality on M̄_g, as a linear functional in (a, b_0..b_{⌊g/2⌋})
/// for D = aλ - Σ b_i δ_i, with b_i = b_{g-i} folded in.
struct FCurveFunctional {
  FCurveFamily family = FCurveFamily::EllipticTail;
  std::vector<int> indices;   // () | (i) | (i,j) | (i,j,k,l)
  int genus = 0;
  int a_coefficient = 0;
  std::vector<int> b_coefficients;  // size ⌊g/2⌋ + 1

  Rational evaluate(const DivisorClass& d) const;
  /// E.g. "Pair(2,3)".
  std::string tag() const;
  /// E.g. "a-12b0+b1".
  std::string formula() const;
};

/// All distinct F-curve functionals for M̄_g, g ≥ 2, in generation order
/// EllipticTail, Middle, Pair, Quadruple, keeping the first of any duplicates.
std::vector<FCurveFunctional> enumerate_fcurve_functionals(int g);

/// Set partition of {1..n} into four blocks, each sorted, blocks ordered by least element.
struct FCurvePartition {
  std::vector<std::vector<int>> blocks;
  friend bool operator==(const FCurvePartition&, const FCurvePartition&) = default;
};

std::string to_string(const FCurvePartition& p);

/// Every F-curve of M̄_{0,n}. Requires 4 ≤ n ≤ 14.
std::vector<FCurvePartition> enumerate_fcurves_0n(int n);

struct FunctionalValue {
  FCurveFunctional functional;
  Rational value;
};

struct FCheck {
  bool pass = true;
  std::vector<FunctionalValue> violations;
};

/// D·C ≥ 0 for every F-curve functional. D must live on M̄_g (n = 0, g ≥ 2).
FCheck f_nef_check(const DivisorClass& d);
/// D·C > 0 for every F-curve functional.
FCheck f_ample_check(const DivisorClass& d);

enum class NefVerdict { ProvedNef, Inconclusive };
std::string to_string(NefVerdict v);

/// Sufficient nef criterion: b_i ≥ b_0 for 1 ≤ i ≤ ⌊g/2⌋ together with F-nefness.
NefVerdict nef_sufficient(const DivisorClass& d);

struct ConeCertificate {
  std::vector<Rational> multipliers;  // one per generator, all ≥ 0
  DivisorClass residual;              // target - Σ multipliers·generators; zero
};

struct ConeMembership {
  std::optional<ConeCertificate> certificate;
  /// When not a member: a coefficient-wise functional y with y·G ≥ 0 on every
  /// generator and y·target < 0.
  std::optional<DivisorClass> separator;

  bool member() const { return certificate.has_value(); }
};

/// Coefficient-wise dot product over the (λ, ψ, δ) basis.
Rational coefficient_dot(const DivisorClass& a, const DivisorClass& b);

/// Exact LP decision of target ∈ cone(generators). On membership the
/// multipliers form the lexicographically minimal feasible vertex.
/// Throws PicardError for mixed signatures or an empty generator list
/// with nonzero target.
ConeMembership cone_member(const DivisorClass& target, const std::vector<DivisorClass>& generators);

}  // namespace modcone
