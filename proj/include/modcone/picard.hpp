#pragma once

#include "modcone/rational.hpp"

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

// Exact linear algebra over the standard generators of Pic(M̄_{g,n}):
// the Hodge class λ, the cotangent classes ψ_1..ψ_n, the irreducible
// boundary δ_0 and the separating boundaries δ_{i:S}.
//
// For g ≤ 2 these generators satisfy relations; classes here are formal
// coefficient vectors, so equality is finer than equality in Pic.

namespace modcone {

class PicardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModuliSignature {
  int g = 0;
  int n = 0;

  /// Throws PicardError unless 2g - 2 + n > 0.
  void validate() const;
  friend bool operator==(const ModuliSignature&, const ModuliSignature&) = default;
};

std::string to_string(const ModuliSignature& sig);

enum class BoundaryKind { Irreducible, Separating };

/// δ_0 or δ_{i:S}: the node separates a genus-i component carrying the marked
/// points S from a genus-(g-i) component carrying the complement.
struct BoundaryIndex {
  BoundaryKind kind = BoundaryKind::Separating;
  int genus = 0;
  std::vector<int> labels;  // sorted, 1-based

  static BoundaryIndex irreducible() { return {BoundaryKind::Irreducible, 0, {}}; }
  static BoundaryIndex separating(int genus, std::vector<int> labels = {});

  friend auto operator<=>(const BoundaryIndex&, const BoundaryIndex&) = default;
  friend bool operator==(const BoundaryIndex&, const BoundaryIndex&) = default;
};

/// Canonical representative under δ_{i:S} = δ_{g-i:S^c}: the side with the
/// smaller genus, and on ties the side holding the lowest label. Idempotent.
/// Throws PicardError for i > g, labels outside 1..n, or a genus-0 side with
/// fewer than two marked points.
BoundaryIndex canonicalize(const BoundaryIndex& idx, const ModuliSignature& sig);

/// Every canonical separating boundary index of M̄_{g,n}, sorted. Requires n ≤ 20.
std::vector<BoundaryIndex> separating_boundary(const ModuliSignature& sig);

/// Interchange key: "0" for δ_0; "i" for δ_i when n = 0; "i:{a,b,...}" otherwise.
std::string boundary_key(const BoundaryIndex& idx, const ModuliSignature& sig);

/// Inverse of boundary_key. Rejects keys that are not in canonical form.
BoundaryIndex parse_boundary_key(std::string_view key, const ModuliSignature& sig);

class DivisorClass {
 public:
  explicit DivisorClass(ModuliSignature sig);

  /// aλ - Σ b_i δ_i on M̄_g, with b[0] the δ_0 coefficient and b[i] that of δ_i.
  static DivisorClass mg(int g, const Rational& a, const std::vector<Rational>& b);

  const ModuliSignature& signature() const { return sig_; }

  const Rational& lambda() const { return lambda_; }
  const Rational& psi(int point) const;
  const Rational& delta0() const { return delta0_; }
  Rational delta(const BoundaryIndex& idx) const;
  /// n = 0 shortcut: δ_0 for i = 0, otherwise δ_i.
  Rational delta(int i) const;
  /// n = 0 shortcut for the boundary multiplicity b_i = -coefficient(δ_i).
  Rational b(int i) const { return -delta(i); }

  const std::vector<Rational>& psis() const { return psi_; }
  const std::map<BoundaryIndex, Rational>& separating() const { return deltas_; }

  DivisorClass& set_lambda(Rational v);
  DivisorClass& set_psi(int point, Rational v);
  DivisorClass& set_delta0(Rational v);
  DivisorClass& set_delta(const BoundaryIndex& idx, Rational v);
  DivisorClass& set_delta(int i, Rational v);

  bool is_zero() const;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator*=(const Rational& c);

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  ModuliSignature sig_;
  Rational lambda_;
  std::vector<Rational> psi_;
  Rational delta0_;
  std::map<BoundaryIndex, Rational> deltas_;  // canonical keys, nonzero values only
};

DivisorClass operator+(DivisorClass a, const DivisorClass& b);
DivisorClass operator-(DivisorClass a, const DivisorClass& b);
DivisorClass operator*(const Rational& c, DivisorClass d);

/// Σ c_k D_k. Throws PicardError on an empty list or mixed signatures.
DivisorClass lincomb(const std::vector<std::pair<Rational, DivisorClass>>& terms);

/// Orbit of boundary divisors δ_{i:S} with |S| = s under S_n.
struct OrbitKey {
  int genus = 0;
  int size = 0;
  friend auto operator<=>(const OrbitKey&, const OrbitKey&) = default;
  friend bool operator==(const OrbitKey&, const OrbitKey&) = default;
};

/// Canonical orbit label: genus ≤ g - genus, and on ties size ≥ n - size.
OrbitKey canonical_orbit(int genus, int size, const ModuliSignature& sig);
std::vector<OrbitKey> boundary_orbits(const ModuliSignature& sig);
std::string orbit_key(const OrbitKey& key);
OrbitKey parse_orbit_key(std::string_view key, const ModuliSignature& sig);

/// S_n-invariant class: one ψ coefficient shared by all points and one
/// coefficient per boundary orbit. Works for any n; expansion needs n ≤ 16.
class SymmetricDivisorClass {
 public:
  explicit SymmetricDivisorClass(ModuliSignature sig);

  const ModuliSignature& signature() const { return sig_; }
  const Rational& lambda() const { return lambda_; }
  const Rational& psi() const { return psi_; }
  const Rational& delta0() const { return delta0_; }
  Rational orbit(const OrbitKey& key) const;
  const std::map<OrbitKey, Rational>& orbits() const { return orbits_; }

  SymmetricDivisorClass& set_lambda(Rational v);
  SymmetricDivisorClass& set_psi(Rational v);
  SymmetricDivisorClass& set_delta0(Rational v);
  SymmetricDivisorClass& set_orbit(const OrbitKey& key, Rational v);

  DivisorClass expand() const;
  /// Throws PicardError if `d` is not S_n-invariant.
  static SymmetricDivisorClass symmetrize(const DivisorClass& d);

  friend bool operator==(const SymmetricDivisorClass&, const SymmetricDivisorClass&) = default;

 private:
  ModuliSignature sig_;
  Rational lambda_;
  Rational psi_;
  Rational delta0_;
  std::map<OrbitKey, Rational> orbits_;
};

/// A class together with what is known about its coefficients.
/// `lower_bounded` boundary entries store a bound: the true multiplicity
/// b = -coefficient satisfies b ≥ stored b. When `complete` is false, only
/// λ, ψ and the explicitly listed boundary coefficients are known.
struct FlaggedClass {
  DivisorClass value;
  std::set<BoundaryIndex> lower_bounded;
  bool complete = true;
  std::string name;
};

struct FlaggedSymmetricClass {
  SymmetricDivisorClass value;
  std::set<OrbitKey> lower_bounded;
  bool complete = true;
  std::string name;
};

class SerializationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_json(const DivisorClass& d);
std::string to_json(const FlaggedClass& d);
std::string to_json(const FlaggedSymmetricClass& d);

using ClassDocument = std::variant<FlaggedClass, FlaggedSymmetricClass>;

/// Parses either document kind. Throws SerializationError naming the
/// offending field or key.
ClassDocument parse_document(std::string_view text);
FlaggedClass parse_class(std::string_view text);
DivisorClass from_json(std::string_view text);

}  // namespace modcone
