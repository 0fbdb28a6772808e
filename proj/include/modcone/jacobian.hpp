#pragma once

#include "modcone/rational.hpp"
#include "modcone/syzygy.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

// Intersection theory on C × W^r_d(C) for a Brill–Noether general curve C of
// genus h, where dim W^r_d(C) = r. Classes are written in η (pullback of a
// point of C), γ (the mixed Künneth part of c_1 of the Poincaré bundle), θ and
// the Chern classes c_k of the dual tautological bundle on W.

namespace modcone {

struct EvalContext {
  int h = 0;  // genus of C
  int r = 0;
  int d = 0;

  /// The curve of genus g-1 carrying the family's series.
  static EvalContext for_family(const SyzygyFamily& fam);
  /// h + r - d, the offset in every Harris–Tu factorial.
  int offset() const { return h + r - d; }
  int rho() const;
};

// ---------------------------------------------------------------------------
// Exact determinants and the Harris–Tu evaluation

/// 1/k!, or 0 for k < 0.
Rational inverse_factorial(int k);

/// Fraction-exact Gaussian elimination. The matrix must be square.
Rational determinant(std::vector<std::vector<Rational>> m);

/// det(1/(a_j + l - 1)!)_{1 ≤ j,l ≤ n}, computed directly.
Rational vandermonde_direct(const std::vector<int>& a);
/// The same determinant as Π_{j>l}(a_l - a_j) / Π_j (a_j + n - 1)!; valid for a_j ≥ 0.
Rational vandermonde_closed_form(const std::vector<int>& a);

/// ∫_W x^I θ^m for an exponent tuple I over the r+1 Chern roots:
/// h!·det(1/(h+r-d+i_j-j+l)!) when |I| + m = r, else 0.
Rational harris_tu(const std::vector<int>& exponents, int theta, const EvalContext& ctx);

/// How a monomial symmetric function m_λ is evaluated through harris_tu.
enum class OrbitConvention {
  OrbitSummed,  // sum over every distinct permutation of λ
  SortedOnce,   // the descending tuple λ, counted once
};

std::string to_string(OrbitConvention c);

/// Convention fixed by calibrate_orbit_convention().
inline constexpr OrbitConvention kCalibratedConvention = OrbitConvention::OrbitSummed;

/// e_{k_1}···e_{k_m} = Σ_λ coefficient·m_λ in n variables. λ is padded with
/// zeros to length n and sorted descending.
struct MonomialTerm {
  std::vector<int> partition;
  BigInt coefficient;
};
std::vector<MonomialTerm> elementary_to_monomial(const std::vector<int>& factors, int variables);

/// ∫_W c_{k_1}···c_{k_m} θ^m with at most three Chern factors.
/// Throws DomainError for more factors.
Rational eval_chern_product(const std::vector<int>& factors, int theta, const EvalContext& ctx,
                            OrbitConvention convention = kCalibratedConvention);

/// Number of Harris–Tu determinants eval_chern_product evaluates.
std::uint64_t chern_product_orbit_count(const std::vector<int>& factors, int r,
                                        OrbitConvention convention = kCalibratedConvention);

struct LemmaIdentity {
  int number = 0;          // 1..5
  std::string statement;
  Rational lhs;            // evaluated intersection number
  Rational rhs;            // closed form
  bool ok() const { return lhs == rhs; }
};

/// The five closed-form intersection identities on W^r_d(C) for the family.
std::vector<LemmaIdentity> lemma_identities(const SyzygyFamily& fam,
                                            OrbitConvention convention = kCalibratedConvention);

struct CalibrationResult {
  OrbitConvention chosen = OrbitConvention::OrbitSummed;
  std::map<OrbitConvention, std::vector<LemmaIdentity>> at_2_0;
  std::vector<LemmaIdentity> recheck_3_0;
};

/// Tries both conventions against the identities at (s,i) = (2,0), keeps the
/// one satisfying all five, and re-verifies it at (3,0). Throws
/// std::runtime_error if no convention, or more than one, passes.
CalibrationResult calibrate_orbit_convention();

// ---------------------------------------------------------------------------
// The ring

enum class Sector { One, Eta, Gamma };

struct JacobianMonomial {
  Sector sector = Sector::One;
  int theta = 0;
  std::vector<int> chern;  // sorted, entries in 1..r+1

  /// Degree on W: θ-power plus Σ chern indices.
  int w_degree() const;
  friend auto operator<=>(const JacobianMonomial&, const JacobianMonomial&) = default;
  friend bool operator==(const JacobianMonomial&, const JacobianMonomial&) = default;
};

std::string to_string(const JacobianMonomial& m);

/// Normal-form element: relations η² = 0, γη = 0, γ² = -2ηθ; terms of
/// degree beyond dim W are dropped, as are c_k with k > r+1.
class JacobianElement {
 public:
  explicit JacobianElement(int r) : r_(r) {}

  static JacobianElement constant(int r, const Rational& c);
  static JacobianElement eta(int r);
  static JacobianElement gamma(int r);
  static JacobianElement theta(int r);
  /// c_k; c_0 = 1.
  static JacobianElement chern(int r, int k);

  int rank() const { return r_; }
  const std::map<JacobianMonomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const JacobianMonomial& m) const;
  bool is_zero() const { return terms_.empty(); }

  JacobianElement& add(const JacobianMonomial& m, const Rational& c);
  JacobianElement& operator+=(const JacobianElement& o);
  JacobianElement& operator-=(const JacobianElement& o);
  JacobianElement& operator*=(const Rational& c);

  friend JacobianElement operator*(const JacobianElement& a, const JacobianElement& b);
  friend bool operator==(const JacobianElement&, const JacobianElement&) = default;

 private:
  int r_;
  std::map<JacobianMonomial, Rational> terms_;
};

JacobianElement operator+(JacobianElement a, const JacobianElement& b);
JacobianElement operator-(JacobianElement a, const JacobianElement& b);
JacobianElement operator*(const Rational& c, JacobianElement a);

std::string to_string(const JacobianElement& e);

/// c_1 of the Poincaré bundle: dη + γ.
JacobianElement poincare_c1(const EvalContext& ctx);

/// ∫ over C × W of the η-sector terms of W-degree r, each evaluated by `chern`.
using ChernIntegrator = std::function<Rational(const std::vector<int>& factors, int theta)>;
Rational integrate(const JacobianElement& e, const ChernIntegrator& chern);
/// Harris–Tu integrator under the calibrated convention, memoized per call site.
ChernIntegrator harris_tu_integrator(const EvalContext& ctx);

enum class TestLocus { X, Y };
std::string to_string(TestLocus t);

/// [X] and [Y] in C × W; `genus` is the family genus g = h + 1.
JacobianElement class_X(const EvalContext& ctx);
JacobianElement class_Y(const EvalContext& ctx);
JacobianElement locus_class(TestLocus t, const EvalContext& ctx);

/// c_1(G_{0,j}) restricted to X or Y. For j ≥ 2 the displayed formulas; for
/// j = 1 the bundle has fibre H^0(L), so its class is -c_1.
JacobianElement c1_G0j_restricted(TestLocus t, int j, const EvalContext& ctx);

// ---------------------------------------------------------------------------
// c_1 bookkeeping for G_{i,2} and H_{i,2}

/// Σ_b coefficient_b · c_1(G_{0,b}) + g01 · c_1(G_{0,1}).
struct C1Expansion {
  std::map<int, Rational> g0b;  // b ≥ 2
  Rational g01;
  friend bool operator==(const C1Expansion&, const C1Expansion&) = default;
};

std::string to_string(const C1Expansion& e);

struct C1Expansions {
  C1Expansion g;  // c_1(G_{i,2})
  C1Expansion h;  // c_1(H_{i,2})
};

/// The displayed alternating binomial sums.
C1Expansions c1_expansions(const SyzygyFamily& fam);

/// Independent derivation from the defining exact sequences, with
/// rank G_{0,b} = bd+1-g, rank G_{0,1} = r+1, H_{0,b} = Sym^b G_{0,1}.
C1Expansions c1_expansions_by_recursion(const SyzygyFamily& fam);

/// c_1(G_{i,2} - H_{i,2}) restricted to X or Y as a ring element.
JacobianElement restricted_difference(TestLocus t, const SyzygyFamily& fam);

// ---------------------------------------------------------------------------
// Solving for the class

enum class IntersectionSource { HarrisTu, LemmaFormulas };

struct SolvedClass {
  SyzygyFamily family;
  Rational degree_X;  // (2g-4)·B1
  Rational degree_Y;  // (2g-2)·B0 - B1
  Rational A;
  Rational B0;
  Rational B1;
  Rational slope() const { return A / B0; }
};

/// Pairs c_1(G_{i,2} - H_{i,2}) with the test curves and solves the 3×3 system
/// A - 12B0 + B1 = 0, (2g-2)B0 - B1 = deg_Y, (2g-4)B1 = deg_X exactly.
/// Throws DomainError if the system is singular.
SolvedClass solve_coefficients(int s, int i, IntersectionSource source = IntersectionSource::HarrisTu);

/// Deterministic work estimate for solve_coefficients, in determinant-entry
/// operations, used for budgeting sweeps.
std::uint64_t solve_cost(int s, int i);

}  // namespace modcone
