#pragma once

#include "modcone/rational.hpp"

#include <string>
#include <vector>

namespace modcone::lp {

struct Term {
  int var = 0;
  Rational coef;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  std::vector<Rational> values;  // one per variable, when Optimal
  /// When Infeasible: multipliers y, one per constraint, with y·A ≥ 0 on every
  /// column and y·(b - A·lower) < 0, so no x ≥ lower satisfies A x = b.
  std::vector<Rational> farkas;
};

/// Exact rational LP over equality constraints and per-variable lower bounds.
/// Solved by two-phase dense-tableau simplex with Bland's rule, so the
/// pivot sequence and the returned vertex are deterministic.
class LinearProgram {
 public:
  int add_variable(std::string name, Rational lower_bound = Rational(0));
  void add_constraint(std::vector<Term> lhs, Rational rhs);

  int variables() const { return static_cast<int>(names_.size()); }
  int constraints() const { return static_cast<int>(rhs_.size()); }
  const std::string& name(int var) const { return names_.at(static_cast<std::size_t>(var)); }

  /// Minimizes the objectives in order: each later objective is optimized
  /// over the optimal face of the earlier ones.
  Result minimize(const std::vector<std::vector<Term>>& objectives) const;

  /// Lexicographically minimal feasible point: minimize x_0, then x_1, ...
  Result lexicographic_minimum() const;

  /// Checks a Farkas certificate exactly against this program.
  bool proves_infeasible(const std::vector<Rational>& y) const;

 private:
  std::vector<std::string> names_;
  std::vector<Rational> lower_;
  std::vector<std::vector<Term>> rows_;
  std::vector<Rational> rhs_;
};

}  // namespace modcone::lp
