#include "modcone/lp.hpp"

#include <doctest.h>

using namespace modcone;
using namespace modcone::lp;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return make_rational(p, d); }

}  // namespace

TEST_CASE("feasible system returns the lexicographically minimal vertex") {
  // x + y + z = 2, x - y = 0
  LinearProgram lp;
  const int x = lp.add_variable("x");
  const int y = lp.add_variable("y");
  const int z = lp.add_variable("z");
  lp.add_constraint({{x, q(1)}, {y, q(1)}, {z, q(1)}}, q(2));
  lp.add_constraint({{x, q(1)}, {y, q(-1)}}, q(0));
  const Result r = lp.lexicographic_minimum();
  REQUIRE(r.status == Status::Optimal);
  CHECK(r.values == std::vector<Rational>{q(0), q(0), q(2)});
}

TEST_CASE("objectives and lower bounds") {
  // maximize t subject to t + u = 3, u ≥ 1/2
  LinearProgram lp;
  const int t = lp.add_variable("t");
  const int u = lp.add_variable("u", q(1, 2));
  lp.add_constraint({{t, q(1)}, {u, q(1)}}, q(3));
  const Result r = lp.minimize({{{t, q(-1)}}});
  REQUIRE(r.status == Status::Optimal);
  CHECK(r.values[0] == q(5, 2));
  CHECK(r.values[1] == q(1, 2));
}

TEST_CASE("infeasible systems produce verified Farkas certificates") {
  LinearProgram lp;
  const int x = lp.add_variable("x");
  const int y = lp.add_variable("y");
  lp.add_constraint({{x, q(1)}, {y, q(1)}}, q(-1));
  const Result r = lp.lexicographic_minimum();
  REQUIRE(r.status == Status::Infeasible);
  CHECK(lp.proves_infeasible(r.farkas));

  LinearProgram two;
  const int a = two.add_variable("a", q(2));
  two.add_constraint({{a, q(3)}}, q(5));
  const Result s = two.lexicographic_minimum();
  REQUIRE(s.status == Status::Infeasible);
  CHECK(two.proves_infeasible(s.farkas));
  CHECK(!two.proves_infeasible({q(0)}));
}

TEST_CASE("redundant rows and unbounded objectives") {
  LinearProgram lp;
  const int x = lp.add_variable("x");
  const int y = lp.add_variable("y");
  lp.add_constraint({{x, q(1)}, {y, q(-1)}}, q(1));
  lp.add_constraint({{x, q(2)}, {y, q(-2)}}, q(2));
  const Result r = lp.lexicographic_minimum();
  REQUIRE(r.status == Status::Optimal);
  CHECK(r.values == std::vector<Rational>{q(1), q(0)});
  CHECK(lp.minimize({{{x, q(-1)}}}).status == Status::Unbounded);
}

TEST_CASE("degenerate problem terminates under Bland's rule") {
  // Beale's cycling example as an equality-form LP with slacks.
  LinearProgram lp;
  std::vector<int> v;
  for (int k = 0; k < 7; ++k) v.push_back(lp.add_variable("v" + std::to_string(k)));
  lp.add_constraint({{v[0], q(1, 4)}, {v[1], q(-60)}, {v[2], q(-1, 25)}, {v[3], q(9)}, {v[4], q(1)}}, q(0));
  lp.add_constraint({{v[0], q(1, 2)}, {v[1], q(-90)}, {v[2], q(-1, 50)}, {v[3], q(3)}, {v[5], q(1)}}, q(0));
  lp.add_constraint({{v[2], q(1)}, {v[6], q(1)}}, q(1));
  const Result r = lp.minimize({{{v[0], q(-3, 4)}, {v[1], q(150)}, {v[2], q(-1, 50)}, {v[3], q(6)}}});
  REQUIRE(r.status == Status::Optimal);
  const Rational obj = q(-3, 4) * r.values[0] + q(150) * r.values[1] - q(1, 50) * r.values[2] +
                       q(6) * r.values[3];
  CHECK(obj == q(-1, 20));
}
