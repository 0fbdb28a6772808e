#include "modcone/cones.hpp"
#include "modcone/slopes.hpp"

#include "../support/random_classes.hpp"

#include <doctest.h>

#include <set>

using namespace modcone;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return make_rational(p, d); }

DivisorClass all_boundary(int g, const Rational& a) {
  return DivisorClass::mg(g, a, std::vector<Rational>(static_cast<std::size_t>(g / 2 + 1), q(1)));
}

// Coefficient vectors (a, b_0..b_{g/2}) of every functional, built from unordered index loops.
std::set<std::vector<int>> oracle_functionals(int g) {
  const int half = g / 2;
  auto fold = [&](int i) { return std::min(i, g - i); };
  std::set<std::vector<int>> out;
  std::vector<int> tail(static_cast<std::size_t>(half + 2), 0);
  tail[0] = 1;
  tail[1] = -12;
  tail[2] += 1;
  out.insert(tail);
  for (int i = 1; i <= half; ++i) {
    std::vector<int> v(static_cast<std::size_t>(half + 2), 0);
    v[1] += 2;
    v[static_cast<std::size_t>(fold(i) + 1)] -= 1;
    out.insert(v);
  }
  for (int i = 1; i <= g; ++i) {
    for (int j = 1; j <= g; ++j) {
      if (i + j > g - 1) continue;
      std::vector<int> v(static_cast<std::size_t>(half + 2), 0);
      v[static_cast<std::size_t>(fold(i) + 1)] += 1;
      v[static_cast<std::size_t>(fold(j) + 1)] += 1;
      v[static_cast<std::size_t>(fold(i + j) + 1)] -= 1;
      out.insert(v);
    }
  }
  for (int i = 1; i <= g; ++i) {
    for (int j = 1; j <= g; ++j) {
      for (int k = 1; k <= g; ++k) {
        for (int l = 1; l <= g; ++l) {
          if (i + j + k + l != g) continue;
          std::vector<int> v(static_cast<std::size_t>(half + 2), 0);
          for (int x : {i, j, k, l}) v[static_cast<std::size_t>(fold(x) + 1)] += 1;
          for (int x : {i + j, i + k, i + l}) v[static_cast<std::size_t>(fold(x) + 1)] -= 1;
          out.insert(v);
        }
      }
    }
  }
  return out;
}

// Surjections {1..n} → {1..4}, divided by 4!.
long brute_force_partitions(int n) {
  long surjective = 0;
  long total = 1;
  for (int k = 0; k < n; ++k) total *= 4;
  for (long code = 0; code < total; ++code) {
    int seen = 0;
    long c = code;
    for (int k = 0; k < n; ++k, c /= 4) seen |= 1 << (c % 4);
    if (seen == 15) ++surjective;
  }
  return surjective / 24;
}

}  // namespace

TEST_CASE("F-curve functionals for small genus") {
  std::set<std::string> g3;
  for (const auto& f : enumerate_fcurve_functionals(3)) g3.insert(f.formula());
  CHECK(g3 == std::set<std::string>{"a-12b0+b1", "2b0-b1", "b1"});

  const auto g4 = enumerate_fcurve_functionals(4);
  const auto quad = std::find_if(g4.begin(), g4.end(), [](const FCurveFunctional& f) {
    return f.family == FCurveFamily::Quadruple;
  });
  REQUIRE(quad != g4.end());
  CHECK(quad->tag() == "Quadruple(1,1,1,1)");
  CHECK(quad->formula() == "4b1-3b2");
  CHECK_THROWS_AS(enumerate_fcurve_functionals(1), PicardError);
}

TEST_CASE("F-curve functionals match an unordered enumeration") {
  for (int g = 2; g <= 24; ++g) {
    std::set<std::vector<int>> ours;
    for (const auto& f : enumerate_fcurve_functionals(g)) {
      std::vector<int> v{f.a_coefficient};
      v.insert(v.end(), f.b_coefficients.begin(), f.b_coefficients.end());
      CHECK(ours.insert(v).second);
    }
    CHECK(ours == oracle_functionals(g));
  }
  CHECK(enumerate_fcurve_functionals(24).size() == 248);
  CHECK(enumerate_fcurve_functionals(10).size() == 33);
}

TEST_CASE("F-curves of M_0,n") {
  const std::vector<long> stirling{1, 10, 65, 350, 1701};
  for (int n = 4; n <= 8; ++n) {
    const auto parts = enumerate_fcurves_0n(n);
    CHECK(static_cast<long>(parts.size()) == brute_force_partitions(n));
    CHECK(static_cast<long>(parts.size()) == stirling[static_cast<std::size_t>(n - 4)]);
    std::set<std::string> distinct;
    for (const auto& p : parts) {
      REQUIRE(p.blocks.size() == 4);
      std::vector<int> all;
      int previous_least = 0;
      for (const auto& b : p.blocks) {
        REQUIRE(!b.empty());
        CHECK(std::is_sorted(b.begin(), b.end()));
        CHECK(b.front() > previous_least);
        previous_least = b.front();
        all.insert(all.end(), b.begin(), b.end());
      }
      std::sort(all.begin(), all.end());
      for (int k = 0; k < n; ++k) CHECK(all[static_cast<std::size_t>(k)] == k + 1);
      distinct.insert(to_string(p));
    }
    CHECK(distinct.size() == parts.size());
  }
  CHECK(to_string(enumerate_fcurves_0n(4).front()) == "{1}{2}{3}{4}");
  CHECK_THROWS_AS(enumerate_fcurves_0n(3), PicardError);
}

TEST_CASE("F-nef and F-ample checks") {
  const DivisorClass nef = DivisorClass::mg(4, q(10), {q(1), q(2)});
  const FCheck ok = f_nef_check(nef);
  CHECK(ok.pass);
  CHECK(enumerate_fcurve_functionals(4).front().evaluate(nef) == 0);
  CHECK(f_nef_check(DivisorClass::mg(3, q(10), {q(1), q(2)})).pass);

  // b_2 + b_2 - b_4 = -2 on M̄_5 since b_4 = b_1 = 2.
  const FCheck g5 = f_nef_check(DivisorClass::mg(5, q(10), {q(1), q(2)}));
  CHECK_FALSE(g5.pass);
  REQUIRE(g5.violations.size() == 1);
  CHECK(g5.violations[0].functional.tag() == "Pair(2,2)");
  CHECK(g5.violations[0].value == -2);

  const FCheck k = f_nef_check(canonical_class_mg(6));
  CHECK_FALSE(k.pass);
  CHECK(k.violations.front().functional.family == FCurveFamily::EllipticTail);
  CHECK(k.violations.front().value == -8);

  const DivisorClass lambda = DivisorClass::mg(5, q(1), {});
  CHECK(f_nef_check(lambda).pass);
  CHECK_FALSE(f_ample_check(lambda).pass);

  for (int g : {3, 4, 7, 12}) {
    CHECK_FALSE(f_ample_check(all_boundary(g, q(10))).pass);
    CHECK_FALSE(f_ample_check(all_boundary(g, q(11))).pass);
    CHECK(f_ample_check(all_boundary(g, q(23, 2))).pass);
    CHECK(f_ample_check(all_boundary(g, q(12))).pass);
    CHECK_FALSE(f_nef_check(all_boundary(g, q(10))).pass);
    CHECK(f_nef_check(all_boundary(g, q(11))).pass);
  }
  CHECK(enumerate_fcurve_functionals(8).front().evaluate(all_boundary(8, q(12))) == 1);

  const FCheck k10 = f_nef_check(named_class("k10").value);
  CHECK_FALSE(k10.pass);
  CHECK(enumerate_fcurve_functionals(10).front().evaluate(named_class("k10").value) == 0);

  CHECK_THROWS_AS(f_nef_check(DivisorClass(ModuliSignature{2, 1})), PicardError);
}

TEST_CASE("nef sufficiency") {
  CHECK(nef_sufficient(all_boundary(9, q(12))) == NefVerdict::ProvedNef);
  CHECK(nef_sufficient(DivisorClass::mg(4, q(10), {q(1), q(2)})) == NefVerdict::Inconclusive);
  CHECK(nef_sufficient(DivisorClass::mg(4, q(1), {})) == NefVerdict::ProvedNef);
  CHECK(to_string(NefVerdict::Inconclusive) == "Inconclusive");
}

TEST_CASE("F-checks are invariant under positive scaling") {
  testing::ClassGenerator gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int g = gen.uniform(2, 9);
    std::vector<Rational> b;
    for (int i = 0; i <= g / 2; ++i) b.push_back(gen.rational(5));
    const DivisorClass d = DivisorClass::mg(g, gen.rational(80), b);
    const DivisorClass scaled = gen.positive() * d;
    CHECK(f_nef_check(d).pass == f_nef_check(scaled).pass);
    CHECK(f_ample_check(d).pass == f_ample_check(scaled).pass);
    if (f_ample_check(d).pass) CHECK(f_nef_check(d).pass);
  }
}

TEST_CASE("cone membership") {
  const DivisorClass d0 = DivisorClass::mg(3, q(0), {q(-1), q(0)});
  const DivisorClass d1 = DivisorClass::mg(3, q(0), {q(0), q(-1)});
  const DivisorClass h = DivisorClass::mg(3, q(9), {q(1), q(3)});
  const ConeMembership m = cone_member(h, {d0, d1, h});
  REQUIRE(m.member());
  CHECK(m.certificate->multipliers == std::vector<Rational>{q(0), q(0), q(1)});
  CHECK(m.certificate->residual.is_zero());

  const DivisorClass lambda = DivisorClass::mg(3, q(1), {});
  const DivisorClass a = DivisorClass::mg(3, q(12), {q(1), q(0)});
  const DivisorClass b = DivisorClass::mg(3, q(10), {q(1), q(2)});
  const ConeMembership l = cone_member(lambda, {lambda, a, b});
  REQUIRE(l.member());
  CHECK(l.certificate->multipliers == std::vector<Rational>{q(1), q(0), q(0)});

  const ConeMembership neg = cone_member(-1 * lambda, {lambda, a, b});
  CHECK_FALSE(neg.member());
  REQUIRE(neg.separator.has_value());
  CHECK(coefficient_dot(*neg.separator, -1 * lambda) < 0);
  for (const auto& gen : {lambda, a, b}) CHECK(coefficient_dot(*neg.separator, gen) >= 0);

  CHECK(cone_member(DivisorClass(ModuliSignature{3, 0}), {}).member());
  CHECK_THROWS_AS(cone_member(lambda, {}), PicardError);
  CHECK_THROWS_AS(cone_member(lambda, {DivisorClass(ModuliSignature{3, 1})}), PicardError);
}

TEST_CASE("cone certificates recombine on random cones") {
  testing::ClassGenerator gen(5);
  for (int trial = 0; trial < 150; ++trial) {
    const ModuliSignature sig = gen.signature();
    std::vector<DivisorClass> gens;
    const int count = gen.uniform(1, 4);
    for (int k = 0; k < count; ++k) gens.push_back(gen.divisor(sig));
    DivisorClass target(sig);
    if (gen.uniform(0, 1)) {
      for (const auto& g : gens) target += gen.uniform(0, 3) * g;
    } else {
      target = gen.divisor(sig);
    }
    const ConeMembership m = cone_member(target, gens);
    if (m.member()) {
      DivisorClass sum(sig);
      for (std::size_t k = 0; k < gens.size(); ++k) {
        CHECK(m.certificate->multipliers[k] >= 0);
        sum += m.certificate->multipliers[k] * gens[k];
      }
      CHECK(sum == target);
    } else {
      CHECK(coefficient_dot(*m.separator, target) < 0);
      for (const auto& g : gens) CHECK(coefficient_dot(*m.separator, g) >= 0);
    }
  }
}
