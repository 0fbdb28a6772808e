#include "modcone/lp.hpp"

#include <stdexcept>

namespace modcone::lp {

namespace {

// Dense simplex tableau for  min c·x  s.t.  T x = rhs, x ≥ 0, rhs ≥ 0.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs, int structural)
      : a_(std::move(rows)), rhs_(std::move(rhs)), structural_(structural) {
    cols_ = static_cast<int>(a_.empty() ? structural : a_.front().size());
    basis_.assign(a_.size(), -1);
    barred_.assign(static_cast<std::size_t>(cols_), false);
  }

  int rows() const { return static_cast<int>(a_.size()); }
  int cols() const { return cols_; }

  void set_basic(int row, int col) { basis_[static_cast<std::size_t>(row)] = col; }
  int basic(int row) const { return basis_[static_cast<std::size_t>(row)]; }
  const Rational& at(int row, int col) const {
    return a_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  }
  const Rational& rhs(int row) const { return rhs_[static_cast<std::size_t>(row)]; }

  void bar(int col) { barred_[static_cast<std::size_t>(col)] = true; }
  bool barred(int col) const { return barred_[static_cast<std::size_t>(col)]; }

  /// Reduced costs c_j - c_B B^{-1} A_j for the current basis.
  std::vector<Rational> reduced_costs(const std::vector<Rational>& cost) const {
    std::vector<Rational> rc = cost;
    for (int i = 0; i < rows(); ++i) {
      const Rational& cb = cost[static_cast<std::size_t>(basic(i))];
      if (cb == 0) continue;
      const auto& row = a_[static_cast<std::size_t>(i)];
      for (int j = 0; j < cols_; ++j) {
        if (row[static_cast<std::size_t>(j)] != 0) rc[static_cast<std::size_t>(j)] -= cb * row[static_cast<std::size_t>(j)];
      }
    }
    return rc;
  }

  Rational objective_value(const std::vector<Rational>& cost) const {
    Rational v = 0;
    for (int i = 0; i < rows(); ++i) v += cost[static_cast<std::size_t>(basic(i))] * rhs(i);
    return v;
  }

  void pivot(int row, int col, std::vector<std::vector<Rational>*> cost_rows) {
    auto& prow = a_[static_cast<std::size_t>(row)];
    const Rational inv = Rational(1) / prow[static_cast<std::size_t>(col)];
    std::vector<int> nz;
    for (int j = 0; j < cols_; ++j) {
      auto& v = prow[static_cast<std::size_t>(j)];
      if (v != 0) {
        v *= inv;
        nz.push_back(j);
      }
    }
    rhs_[static_cast<std::size_t>(row)] *= inv;
    for (int i = 0; i < rows(); ++i) {
      if (i == row) continue;
      auto& r = a_[static_cast<std::size_t>(i)];
      const Rational f = r[static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j : nz) r[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
      rhs_[static_cast<std::size_t>(i)] -= f * rhs_[static_cast<std::size_t>(row)];
    }
    for (auto* rc : cost_rows) {
      const Rational f = (*rc)[static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j : nz) (*rc)[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  /// Bland's rule to optimality. Returns false if unbounded.
  bool optimize(std::vector<Rational>& rc) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (!barred(j) && rc[static_cast<std::size_t>(j)] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < rows(); ++i) {
        const Rational& v = at(i, enter);
        if (v <= 0) continue;
        const Rational ratio = rhs(i) / v;
        if (leave < 0 || ratio < best || (ratio == best && basic(i) < basic(leave))) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter, {&rc});
    }
  }

  void drop_row(int row) {
    a_.erase(a_.begin() + row);
    rhs_.erase(rhs_.begin() + row);
    basis_.erase(basis_.begin() + row);
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(static_cast<std::size_t>(structural_), Rational(0));
    for (int i = 0; i < rows(); ++i) {
      if (basic(i) < structural_) x[static_cast<std::size_t>(basic(i))] = rhs(i);
    }
    return x;
  }

 private:
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> rhs_;
  std::vector<int> basis_;
  std::vector<bool> barred_;
  int structural_;
  int cols_;
};

}  // namespace

int LinearProgram::add_variable(std::string name, Rational lower_bound) {
  names_.push_back(std::move(name));
  lower_.push_back(std::move(lower_bound));
  return static_cast<int>(names_.size()) - 1;
}

void LinearProgram::add_constraint(std::vector<Term> lhs, Rational rhs) {
  for (const auto& t : lhs) {
    if (t.var < 0 || t.var >= variables()) throw std::out_of_range("LP term references unknown variable");
  }
  rows_.push_back(std::move(lhs));
  rhs_.push_back(std::move(rhs));
}

Result LinearProgram::minimize(const std::vector<std::vector<Term>>& objectives) const {
  const int n = variables();
  const int m = constraints();

  // Shift x = lower + x' and make every right-hand side nonnegative.
  std::vector<std::vector<Rational>> dense(static_cast<std::size_t>(m),
                                           std::vector<Rational>(static_cast<std::size_t>(n)));
  std::vector<Rational> b(static_cast<std::size_t>(m));
  std::vector<int> sign(static_cast<std::size_t>(m), 1);
  for (int i = 0; i < m; ++i) {
    auto& row = dense[static_cast<std::size_t>(i)];
    Rational shifted = rhs_[static_cast<std::size_t>(i)];
    for (const auto& t : rows_[static_cast<std::size_t>(i)]) {
      row[static_cast<std::size_t>(t.var)] += t.coef;
      shifted -= t.coef * lower_[static_cast<std::size_t>(t.var)];
    }
    if (shifted < 0) {
      sign[static_cast<std::size_t>(i)] = -1;
      for (auto& v : row) v = -v;
      shifted = -shifted;
    }
    b[static_cast<std::size_t>(i)] = shifted;
  }

  // Reuse structural unit columns as the starting basis; artificials elsewhere.
  std::vector<int> start(static_cast<std::size_t>(m), -1);
  for (int j = 0; j < n; ++j) {
    int hit = -1;
    bool unit = true;
    for (int i = 0; i < m && unit; ++i) {
      const Rational& v = dense[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v == 0) continue;
      if (v == 1 && hit < 0) {
        hit = i;
      } else {
        unit = false;
      }
    }
    if (unit && hit >= 0 && start[static_cast<std::size_t>(hit)] < 0) {
      start[static_cast<std::size_t>(hit)] = j;
    }
  }
  int artificials = 0;
  for (int i = 0; i < m; ++i) {
    if (start[static_cast<std::size_t>(i)] < 0) ++artificials;
  }
  const int cols = n + artificials;
  for (int i = 0, k = 0; i < m; ++i) {
    auto& row = dense[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(cols));
    if (start[static_cast<std::size_t>(i)] < 0) {
      row[static_cast<std::size_t>(n + k)] = 1;
      start[static_cast<std::size_t>(i)] = n + k;
      ++k;
    }
  }

  Tableau t(std::move(dense), std::move(b), n);
  for (int i = 0; i < m; ++i) t.set_basic(i, start[static_cast<std::size_t>(i)]);

  // Phase 1: minimize the sum of artificials.
  std::vector<Rational> phase1(static_cast<std::size_t>(cols));
  for (int j = n; j < cols; ++j) phase1[static_cast<std::size_t>(j)] = 1;
  std::vector<Rational> rc1 = t.reduced_costs(phase1);
  t.optimize(rc1);
  if (t.objective_value(phase1) > 0) {
    // Dual multipliers y_i = c(start_i) - rc(start_i); the Farkas vector is -y.
    Result r;
    r.status = Status::Infeasible;
    r.farkas.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      const int col = start[static_cast<std::size_t>(i)];
      const Rational y = phase1[static_cast<std::size_t>(col)] - rc1[static_cast<std::size_t>(col)];
      r.farkas[static_cast<std::size_t>(i)] = -y * sign[static_cast<std::size_t>(i)];
    }
    return r;
  }

  // Drive degenerate artificials out of the basis; drop redundant rows.
  for (int i = t.rows() - 1; i >= 0; --i) {
    if (t.basic(i) < n) continue;
    int col = -1;
    for (int j = 0; j < n && col < 0; ++j) {
      if (t.at(i, j) != 0) col = j;
    }
    if (col < 0) {
      t.drop_row(i);
    } else {
      t.pivot(i, col, {});
    }
  }
  for (int j = n; j < cols; ++j) t.bar(j);

  // Phase 2, one objective at a time over the optimal face of the previous ones.
  for (const auto& objective : objectives) {
    std::vector<Rational> cost(static_cast<std::size_t>(cols));
    for (const auto& term : objective) cost[static_cast<std::size_t>(term.var)] += term.coef;
    std::vector<Rational> rc = t.reduced_costs(cost);
    if (!t.optimize(rc)) {
      Result r;
      r.status = Status::Unbounded;
      return r;
    }
    for (int j = 0; j < n; ++j) {
      if (rc[static_cast<std::size_t>(j)] > 0) t.bar(j);
    }
  }

  Result r;
  r.status = Status::Optimal;
  r.values = t.primal();
  for (int j = 0; j < n; ++j) r.values[static_cast<std::size_t>(j)] += lower_[static_cast<std::size_t>(j)];
  return r;
}

Result LinearProgram::lexicographic_minimum() const {
  std::vector<std::vector<Term>> objectives;
  for (int j = 0; j < variables(); ++j) objectives.push_back({Term{j, Rational(1)}});
  return minimize(objectives);
}

bool LinearProgram::proves_infeasible(const std::vector<Rational>& y) const {
  if (y.size() != rhs_.size()) return false;
  std::vector<Rational> combo(static_cast<std::size_t>(variables()));
  Rational rhs = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (y[i] == 0) continue;
    for (const auto& t : rows_[i]) combo[static_cast<std::size_t>(t.var)] += y[i] * t.coef;
    rhs += y[i] * rhs_[i];
  }
  Rational at_lower = 0;
  for (int j = 0; j < variables(); ++j) {
    if (combo[static_cast<std::size_t>(j)] < 0) return false;
    at_lower += combo[static_cast<std::size_t>(j)] * lower_[static_cast<std::size_t>(j)];
  }
  return rhs < at_lower;
}

}  // namespace modcone::lp
