#include "modcone/jacobian.hpp"

#include <doctest.h>

#include <random>

using namespace modcone;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return make_rational(p, d); }

using E = JacobianElement;

// Σ_I [x^I](e_{k_1}···e_{k_m}) · harris_tu(I), expanding the product subset by subset.
Rational brute_force_chern(const std::vector<int>& factors, int theta, const EvalContext& ctx) {
  const int n = ctx.r + 1;
  std::map<std::vector<int>, long> coeffs{{std::vector<int>(static_cast<std::size_t>(n), 0), 1}};
  for (int k : factors) {
    std::map<std::vector<int>, long> next;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != k) continue;
      for (const auto& [expo, c] : coeffs) {
        auto e = expo;
        for (int v = 0; v < n; ++v) {
          if (mask & (1u << v)) ++e[static_cast<std::size_t>(v)];
        }
        next[e] += c;
      }
    }
    coeffs = std::move(next);
  }
  Rational total = 0;
  for (const auto& [expo, c] : coeffs) total += c * harris_tu(expo, theta, ctx);
  return total;
}

E random_element(std::mt19937_64& rng, int r) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  E out(r);
  const int terms = pick(1, 4);
  for (int t = 0; t < terms; ++t) {
    E m = E::constant(r, q(pick(-5, 5), pick(1, 3)));
    const int sector = pick(0, 2);
    if (sector == 1) m = m * E::eta(r);
    if (sector == 2) m = m * E::gamma(r);
    for (int k = pick(0, 2); k > 0; --k) m = m * E::theta(r);
    for (int k = pick(0, 2); k > 0; --k) m = m * E::chern(r, pick(1, r + 1));
    out += m;
  }
  return out;
}

}  // namespace

TEST_CASE("ring relations") {
  const int r = 4;
  const EvalContext ctx{9, 4, 12};
  CHECK(E::gamma(r) * E::gamma(r) == q(-2) * E::eta(r) * E::theta(r));
  CHECK((E::eta(r) * E::eta(r)).is_zero());
  CHECK((E::gamma(r) * E::eta(r)).is_zero());
  CHECK((E::gamma(r) * E::gamma(r) * E::gamma(r)).is_zero());
  CHECK(poincare_c1(ctx) * poincare_c1(ctx) == q(-2) * E::eta(r) * E::theta(r));
  CHECK(E::chern(r, 0) == E::constant(r, q(1)));
  CHECK(E::chern(r, r + 2).is_zero());

  E top = E::theta(r);
  for (int k = 1; k < r; ++k) top = top * E::theta(r);
  CHECK_FALSE(top.is_zero());
  CHECK((top * E::theta(r)).is_zero());
  CHECK_FALSE((top * E::eta(r)).is_zero());

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const E a = random_element(rng, r);
    const E b = random_element(rng, r);
    const E c = random_element(rng, r);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    const E gg = (a * E::gamma(r)) * (b * E::gamma(r));
    for (const auto& [m, v] : gg.terms()) CHECK(m.sector == Sector::Eta);
  }
}

TEST_CASE("integration sees only eta-sector top terms") {
  const EvalContext ctx{9, 4, 12};
  const auto ht = harris_tu_integrator(ctx);
  CHECK(integrate(E::chern(4, 4), ht) == 0);
  CHECK(integrate(E::gamma(4) * E::chern(4, 4), ht) == 0);
  CHECK(integrate(E::eta(4) * E::chern(4, 3), ht) == 0);
  CHECK(integrate(E::eta(4) * E::chern(4, 4), ht) == 42);
  CHECK(integrate(q(3) * E::eta(4) * E::chern(4, 3) * E::theta(4), ht) == 3 * eval_chern_product({3}, 1, ctx));
}

TEST_CASE("Harris-Tu evaluation") {
  const EvalContext ctx = EvalContext::for_family(SyzygyFamily::make(2, 0));
  CHECK(ctx.rho() == ctx.r);
  CHECK(ctx.offset() == 1);
  CHECK(eval_chern_product({4}, 0, ctx) == 42);
  CHECK(eval_chern_product({6}, 0, EvalContext::for_family(SyzygyFamily::make(3, 0))) == 1385670);
  CHECK(eval_chern_product({7}, 0, EvalContext::for_family(SyzygyFamily::make(2, 1))) == 1430);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> e(5);
    for (auto& x : e) x = std::uniform_int_distribution<int>(0, 3)(rng);
    const int theta = std::uniform_int_distribution<int>(0, 5)(rng);
    int degree = theta;
    for (int x : e) degree += x;
    if (degree != ctx.r) CHECK(harris_tu(e, theta, ctx) == 0);
  }
  CHECK_THROWS_AS(harris_tu({1, 0}, 0, ctx), DomainError);

  for (const auto& [s, i] : std::vector<std::pair<int, int>>{{2, 0}, {1, 1}, {1, 0}}) {
    const EvalContext c = EvalContext::for_family(SyzygyFamily::make(s, i));
    const int r = c.r;
    const std::vector<std::pair<std::vector<int>, int>> products{
        {{r}, 0}, {{r - 1}, 1}, {{r - 1, 1}, 0}, {{r - 2, 1}, 1}, {{1, 1, r - 2}, 0}, {{2, r - 2}, 0}, {{1}, r - 1}};
    for (const auto& [f, m] : products) {
      CHECK(eval_chern_product(f, m, c) == brute_force_chern(f, m, c));
    }
  }
  CHECK_THROWS_AS(eval_chern_product({1, 1, 1, 1}, 0, ctx), DomainError);
}

TEST_CASE("elementary to monomial expansion") {
  const auto e11 = elementary_to_monomial({1, 1}, 3);
  REQUIRE(e11.size() == 2);
  std::map<std::vector<int>, BigInt> got;
  for (const auto& t : e11) got[t.partition] = t.coefficient;
  CHECK(got.at({2, 0, 0}) == 1);
  CHECK(got.at({1, 1, 0}) == 2);
  const auto e21 = elementary_to_monomial({2, 1}, 3);
  std::map<std::vector<int>, BigInt> g21;
  for (const auto& t : e21) g21[t.partition] = t.coefficient;
  CHECK(g21.at({2, 1, 0}) == 1);
  CHECK(g21.at({1, 1, 1}) == 3);
  CHECK(elementary_to_monomial({4}, 3).empty());
}

TEST_CASE("Vandermonde closed form") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    std::vector<int> a(static_cast<std::size_t>(n));
    for (auto& x : a) x = std::uniform_int_distribution<int>(0, 12)(rng);
    CHECK(vandermonde_direct(a) == vandermonde_closed_form(a));
  }
  CHECK(determinant({{q(1), q(2)}, {q(3), q(4)}}) == -2);
  CHECK(determinant({{q(0), q(1)}, {q(1), q(0)}}) == -1);
}

TEST_CASE("calibration picks the orbit-summed convention") {
  const CalibrationResult cal = calibrate_orbit_convention();
  CHECK(cal.chosen == OrbitConvention::OrbitSummed);
  CHECK(cal.chosen == kCalibratedConvention);
  for (const auto& l : cal.at_2_0.at(OrbitConvention::OrbitSummed)) CHECK(l.ok());
  bool sorted_fails = false;
  for (const auto& l : cal.at_2_0.at(OrbitConvention::SortedOnce)) sorted_fails = sorted_fails || !l.ok();
  CHECK(sorted_fails);
  for (const auto& l : cal.recheck_3_0) CHECK(l.ok());
}

TEST_CASE("lemma identities") {
  for (const auto& [s, i] : std::vector<std::pair<int, int>>{{2, 0}, {3, 0}, {2, 1}, {1, 1}, {1, 2}}) {
    const auto ids = lemma_identities(SyzygyFamily::make(s, i));
    REQUIRE(ids.size() == 5);
    for (const auto& l : ids) CHECK_MESSAGE(l.ok(), "(", s, ",", i, ") identity ", l.number);
  }
}

TEST_CASE("test loci and G_{0,j} restrictions") {
  const EvalContext ctx = EvalContext::for_family(SyzygyFamily::make(2, 0));
  const int r = ctx.r;
  const int g = ctx.h + 1;
  const E x = class_X(ctx);
  const E y = class_Y(ctx);
  CHECK(x.coefficient({Sector::Eta, 0, {r - 1}}) == 2 * ctx.d + 2 * g - 4);
  CHECK(x.coefficient({Sector::Gamma, 0, {r - 1}}) == 2);
  CHECK(y.coefficient({Sector::Gamma, 0, {r - 1}}) == 1);
  CHECK(y.coefficient({Sector::Eta, 1, {r - 2}}) == -2);
  CHECK((x - y).coefficient({Sector::One, 0, {r}}) == 0);
  CHECK(x.coefficient({Sector::One, 0, {r}}) == 1);

  CHECK(c1_G0j_restricted(TestLocus::X, 2, ctx) ==
        q(-4) * E::theta(r) - q(2 * g - 4) * E::eta(r) - q(2) * poincare_c1(ctx));
  CHECK(c1_G0j_restricted(TestLocus::Y, 3, ctx) == q(-9) * E::theta(r) + E::eta(r));
  CHECK(c1_G0j_restricted(TestLocus::Y, 2, ctx) - c1_G0j_restricted(TestLocus::Y, 3, ctx) == q(5) * E::theta(r));
  CHECK(c1_G0j_restricted(TestLocus::X, 1, ctx) == q(-1) * E::chern(r, 1));
}

TEST_CASE("c1 expansions agree with the exact-sequence recursion") {
  const auto f20 = c1_expansions(SyzygyFamily::make(2, 0));
  CHECK(f20.g.g0b == std::map<int, Rational>{{2, q(1)}});
  CHECK(f20.g.g01 == 0);
  CHECK(f20.h.g01 == 6);

  const auto f11 = c1_expansions(SyzygyFamily::make(1, 1));
  // r = 4: l = 0 gives C(4,0)C(6,2) + C(5,1)C(6,5) = 45, l = 1 gives -C(5,0)C(7,5) = -21.
  CHECK(f11.h.g01 == 45 - 21);
  CHECK(f11.g.g0b == std::map<int, Rational>{{2, q(5)}, {3, q(-1)}});
  CHECK(f11.g.g01 == 2 * 8 + 1 - 5);

  for (int s = 1; s <= 4; ++s) {
    for (int i = 0; i <= 4; ++i) {
      const auto fam = SyzygyFamily::make(s, i);
      const auto shown = c1_expansions(fam);
      const auto derived = c1_expansions_by_recursion(fam);
      CHECK(shown.g == derived.g);
      CHECK(shown.h == derived.h);
    }
  }
}

TEST_CASE("solving for the class reproduces the virtual slope") {
  const std::vector<std::tuple<int, int, Rational>> fixtures{
      {1, 0, q(9)},         {1, 1, q(8)},          {2, 0, q(7)},           {2, 1, q(407, 61)},
      {3, 0, q(2459, 377)}, {1, 2, q(15, 2)},      {2, 2, q(1665, 256)}};
  for (const auto& [s, i, expected] : fixtures) {
    const SolvedClass c = solve_coefficients(s, i);
    CHECK(c.slope() == expected);
    CHECK(c.slope() == virtual_slope(s, i));
    CHECK(c.B1 == 12 * c.B0 - c.A);
    CHECK(c.B0 > 0);
    const int g = c.family.g;
    CHECK(c.degree_X == (2 * g - 4) * c.B1);
    CHECK(c.degree_Y == (2 * g - 2) * c.B0 - c.B1);
    const SolvedClass lemma = solve_coefficients(s, i, IntersectionSource::LemmaFormulas);
    CHECK(lemma.A == c.A);
    CHECK(lemma.B0 == c.B0);
  }
  CHECK(solve_cost(2, 2) > solve_cost(2, 0));
}
