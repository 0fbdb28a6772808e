#pragma once

#include "modcone/picard.hpp"

#include <map>
#include <optional>
#include <vector>

namespace modcone {

/// 13λ + Σψ_i - 2δ_0 - 2Σδ_{i:S} - Σδ_{1:S}: every separating boundary
/// divisor with a genus-1 side gets -3, the others -2.
DivisorClass canonical_class_gn(int g, int n);
SymmetricDivisorClass canonical_class_gn_symmetric(int g, int n);

/// -λ + Σ C(a_i+1,2)ψ_i - 0·δ_0 - Σ_{i<j} C(a_i+a_j+1,2)δ_{0:{i,j}}, the
/// part of the class that is known in general; flagged incomplete when n ≥ 2.
/// For n = 1 returns the complete Weierstrass class
/// -λ + C(g+1,2)ψ - Σ_{i=1}^{g-1} C(g-i+1,2)δ_{i:{1}}.
/// Throws DomainError unless every a_i ≥ 0 and Σ a_i = g.
FlaggedClass logan_class(int g, const std::vector<int>& a);

struct MrcParams {
  int g = 3;
  int r = 1;
  int i = 0;
  int n = 0;  // (2r+1)(g-1) - 2i

  /// Throws DomainError unless g ≥ 3, r ≥ 1, 0 ≤ i ≤ g and n ≥ 1.
  static MrcParams make(int g, int r, int i);
};

struct MrcCoefficients {
  Rational prefactor;  // C(g-1,i)/(g-1)
  Rational a;
  Rational c;
  Rational b0;
  /// b_{0:s} for 0 ≤ s ≤ n.
  Rational b0s(int s) const;
  MrcParams params;
};

MrcCoefficients mrc_coefficients(const MrcParams& p);

/// prefactor·(aλ + cΣψ - b_0δ_0 - Σ b_{j:s}δ_{j:S}). Genus-0 orbits carry
/// b_{0:s} exactly. An orbit with both sides of positive genus is stored at
/// the bound max(b_{0:s}, b_{0:n-s}) and flagged lower-bounded.
FlaggedSymmetricClass mrc_class(int g, int r, int i);

/// K = Σ α_k D_k + t(bλ + aΣψ - δ_0 - Σδ_{i:S}) + E with b > 11, a > 0, t > 0, E ≥ 0.
struct GnCertificate {
  std::vector<Rational> alpha;
  Rational t;
  Rational ample_lambda;  // b
  Rational ample_psi;     // a
  Rational boundary_delta0;
  std::map<OrbitKey, Rational> boundary;
};

/// Symmetric form of an S_n-invariant flagged class; an orbit is lower-bounded
/// when any of its members is. Throws PicardError for non-invariant classes.
FlaggedSymmetricClass symmetrize(const FlaggedClass& f);

/// Searches for a general-type decomposition of the canonical class of
/// M̄_{g,n} (t maximized, remaining unknowns lexicographically minimized).
/// Lower-bounded candidate coefficients enter at their bound: e = αb + t - k
/// grows with b, so a decomposition at the bound persists for the true value.
/// Returns nullopt when the LP is infeasible (inconclusive, not a proof of
/// non-general type). Throws DomainError for incomplete or mismatched candidates.
std::optional<GnCertificate> general_type_certificate_gn(int g, int n,
                                                         const std::vector<FlaggedSymmetricClass>& candidates);

/// Σ α_k D_k + ample + E at the stored candidate coefficients.
SymmetricDivisorClass recombine(const GnCertificate& cert, int g, int n,
                                const std::vector<FlaggedSymmetricClass>& candidates);

/// Thresholds f(g), g = 4..21, beyond which M̄_{g,n} is of general type, as reported.
const std::vector<std::pair<int, int>>& mgn_table();

}  // namespace modcone
