#include "modcone/cones.hpp"
#include "modcone/jacobian.hpp"
#include "modcone/slopes.hpp"
#include "modcone/syzygy.hpp"

#include "../support/random_classes.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <set>

using namespace modcone;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return make_rational(p, d); }

struct Criterion {
  std::string id;
  std::string summary;
  std::function<std::string()> check;  // empty string on success, else the first failure
};

std::string expect(bool ok, const std::string& failure) { return ok ? std::string() : failure; }

std::string brill_noether_cross_check() {
  const DivisorClass bn = brill_noether_class(3, 1, 2);
  const DivisorClass h = named_class("hyperelliptic3").value;
  return expect(q(3, 2) * bn == h && h == DivisorClass::mg(3, q(9), {q(1), q(3)}),
                "3/2·BN(3,1,2) = " + to_json(q(3, 2) * bn));
}

std::string slope_fixtures() {
  const auto k10 = slope(named_class("k10").value);
  if (k10.is_infinite() || k10.value() != 7) return "slope(K10) = " + k10.to_string();
  const auto d22 = slope(named_class("d22").value);
  if (d22.is_infinite() || d22.value() != q(17121, 2636)) return "slope(d22) = " + d22.to_string();
  const auto fixed = fixed_slopes();
  const bool listed = std::any_of(fixed.begin(), fixed.end(),
                                  [](const FixedSlope& f) { return f.value == q(470749, 72725); });
  return expect(listed, "470749/72725 missing from the fixed table");
}

std::string k3_pairing() {
  const Rational v = pair(named_class("k10").value, k3_pencil(10));
  return expect(v == -1, "K10·B = " + to_string(v));
}

std::string log_canonical_threshold() {
  for (int g = 2; g <= 30; ++g) {
    for (int k = -20; k <= 40; ++k) {
      const Rational alpha = q(k, 11);
      const Rational v = pair(log_canonical_mg(g, alpha), elliptic_pencil(g));
      if (v != 11 * alpha - 9) return "g=" + std::to_string(g) + " α=" + to_string(alpha) + ": " + to_string(v);
      if ((v == 0) != (alpha == q(9, 11))) return "root at α=" + to_string(alpha);
    }
  }
  return {};
}

std::string cornalba_harris() {
  for (int g = 2; g <= 24; ++g) {
    for (const Rational& a : {q(10), q(11), q(23, 2), q(12)}) {
      const DivisorClass d = DivisorClass::mg(g, a, std::vector<Rational>(static_cast<std::size_t>(g / 2 + 1), q(1)));
      if (f_ample_check(d).pass != (a > 11)) return "g=" + std::to_string(g) + " a=" + to_string(a);
    }
  }
  return {};
}

std::string rank_equality() {
  int cases = 0;
  for (int s = 1; s <= 9; ++s) {
    for (int i = 0; i <= 8; ++i) {
      const auto r = ranks(SyzygyFamily::make(s, i));
      if (r.source != r.target) return "(" + std::to_string(s) + "," + std::to_string(i) + ")";
      ++cases;
    }
  }
  return expect(cases == 81, std::to_string(cases) + " cases");
}

std::string specializations() {
  for (int i = 0; i <= 20; ++i) {
    if (virtual_slope(1, i) != 6 + q(12, 2 * i + 4)) return "s=1, i=" + std::to_string(i);
    if (virtual_slope(2, i) != hurwitz_slope(i)) return "s=2, i=" + std::to_string(i);
  }
  for (int s = 1; s <= 15; ++s) {
    if (virtual_slope(s, 0) != quadric_slope(s)) return "i=0, s=" + std::to_string(s);
  }
  return {};
}

std::string sandwich() {
  for (int s = 2; s <= 10; ++s) {
    for (int i = 0; i <= 10; ++i) {
      const SlopeBound b = bound_check(s, i);
      const int g = SyzygyFamily::make(s, i).g;
      if (b.lower != 6 || b.upper != 6 + q(12, g + 1) || !b.ok()) {
        return "(" + std::to_string(s) + "," + std::to_string(i) + "): " + to_string(b.slope);
      }
    }
  }
  return {};
}

std::string lemma_oracle() {
  if (calibrate_orbit_convention().chosen != kCalibratedConvention) return "calibration disagrees";
  for (auto [s, i] : {std::pair{2, 0}, {3, 0}, {2, 1}}) {
    for (const auto& id : lemma_identities(SyzygyFamily::make(s, i))) {
      if (!id.ok()) {
        return "identity " + std::to_string(id.number) + " at (" + std::to_string(s) + "," + std::to_string(i) +
               "): " + to_string(id.lhs) + " vs " + to_string(id.rhs);
      }
    }
  }
  testing::ClassGenerator gen(0x5eed);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> a(static_cast<std::size_t>(gen.uniform(1, 5)));
    for (int& x : a) x = gen.uniform(0, 9);
    if (vandermonde_direct(a) != vandermonde_closed_form(a)) return "Vandermonde tuple " + std::to_string(trial);
  }
  return {};
}

std::string central_equivalence() {
  for (auto [s, i] : {std::pair{1, 1}, {2, 0}, {2, 1}, {3, 0}, {2, 2}}) {
    const SolvedClass c = solve_coefficients(s, i);
    const std::string at = "(" + std::to_string(s) + "," + std::to_string(i) + ")";
    if (c.slope() != virtual_slope(s, i)) return at + ": A/B0 = " + to_string(c.slope());
    if (c.B1 != 12 * c.B0 - c.A) return at + ": B1 ≠ 12B0 - A";
  }
  return expect(solve_coefficients(2, 2).slope() == q(1665, 256), "(2,2) ≠ 1665/256");
}

std::string general_type() {
  const FlaggedClass d22 = named_class("d22");
  const auto cert = general_type_certificate_mg(d22);
  if (!cert) return "d22 infeasible";
  if (cert->alpha != 2 || !(recombine(*cert, d22.value) == canonical_class_mg(22))) {
    return "d22 certificate α = " + to_string(cert->alpha);
  }
  return expect(!general_type_certificate_mg(named_class("k10")).has_value(), "K10 reported feasible");
}

std::uint64_t four_block_partitions(int n) {
  std::uint64_t surjections = 0;
  std::uint64_t maps = 1;
  for (int k = 0; k < n; ++k) maps *= 4;
  for (std::uint64_t code = 0; code < maps; ++code) {
    std::uint64_t c = code;
    std::set<std::uint64_t> labels;
    for (int k = 0; k < n; ++k, c /= 4) labels.insert(c % 4);
    if (labels.size() == 4) ++surjections;
  }
  return surjections / 24;
}

std::string combinatorics() {
  const std::uint64_t expected[] = {1, 10, 65};
  for (int n = 4; n <= 6; ++n) {
    const auto got = enumerate_fcurves_0n(n).size();
    if (got != expected[n - 4] || got != four_block_partitions(n)) {
      return "n=" + std::to_string(n) + ": " + std::to_string(got);
    }
  }
  std::set<std::string> faber;
  for (const auto& f : enumerate_fcurve_functionals(3)) faber.insert(f.formula());
  return expect(faber == std::set<std::string>{"a-12b0+b1", "2b0-b1", "b1"}, "g=3 functionals differ");
}

std::string property_suites() {
  constexpr int kCases = 1000;
  testing::ClassGenerator gen(20261017);
  for (int k = 0; k < kCases; ++k) {
    const DivisorClass d = gen.uniform(0, 1) ? gen.effective_mg(gen.uniform(2, 24))
                                             : gen.divisor(ModuliSignature{gen.uniform(2, 24), 0});
    const Rational c = gen.positive();
    if (!(slope(c * d) == slope(d))) return "slope scaling, case " + std::to_string(k);
  }
  for (int k = 0; k < kCases;) {
    const ModuliSignature sig = gen.signature();
    if (separating_boundary(sig).empty()) continue;
    const BoundaryIndex once = canonicalize(gen.boundary_index(sig), sig);
    if (!(canonicalize(once, sig) == once) || !(parse_boundary_key(boundary_key(once, sig), sig) == once)) {
      return "canonicalization, case " + std::to_string(k);
    }
    ++k;
  }
  for (int k = 0; k < kCases; ++k) {
    const DivisorClass d = gen.divisor(gen.signature());
    if (!(from_json(to_json(d)) == d)) return "serialization, case " + std::to_string(k);
  }
  for (int k = 0; k < kCases; ++k) {
    const ModuliSignature sig{gen.uniform(2, 8), gen.uniform(0, 2)};
    std::vector<DivisorClass> gens;
    for (int m = gen.uniform(1, 5); m > 0; --m) gens.push_back(gen.divisor(sig));
    DivisorClass target = gen.divisor(sig);
    const bool combine = gen.uniform(0, 1);
    if (combine) {
      target = DivisorClass(sig);
      for (const auto& g : gens) target += gen.uniform(0, 3) * g;
    }
    const ConeMembership m = cone_member(target, gens);
    if (m.member()) {
      DivisorClass sum(sig);
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (m.certificate->multipliers[j] < 0) return "negative multiplier, case " + std::to_string(k);
        sum += m.certificate->multipliers[j] * gens[j];
      }
      if (!(sum == target)) return "cone recombination, case " + std::to_string(k);
    } else {
      if (combine) return "combination reported outside the cone, case " + std::to_string(k);
      for (const auto& g : gens) {
        if (coefficient_dot(*m.separator, g) < 0) return "separator, case " + std::to_string(k);
      }
      if (coefficient_dot(*m.separator, target) >= 0) return "separator, case " + std::to_string(k);
    }
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "Brill–Noether divisor for (3,1,2) is 2/3 of 9λ-δ0-3δ1", brill_noether_cross_check},
      {"AC2", "slopes 7, 17121/2636 and 470749/72725", slope_fixtures},
      {"AC3", "K10 · B = -1", k3_pairing},
      {"AC4", "log-canonical pairing with R is 11α-9, root 9/11", log_canonical_threshold},
      {"AC5", "aλ-Σδi is F-ample iff a > 11", cornalba_harris},
      {"AC6", "bundle ranks agree on 81 families", rank_equality},
      {"AC7", "virtual slope specializations", specializations},
      {"AC8", "6 < slope < 6+12/(g+1) for s = 2..10, i = 0..10", sandwich},
      {"AC9", "intersection identities and Vandermonde determinants", lemma_oracle},
      {"AC10", "solved classes match the virtual slope, (2,2) included", central_equivalence},
      {"AC11", "general-type certificates for d22 and K10", general_type},
      {"AC12", "F-curve partition counts and g=3 functionals", combinatorics},
      {"AC13", "randomized property suites, 1000 cases each", property_suites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string failure;
    try {
      failure = c.check();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    std::cout << c.id << ' ' << (failure.empty() ? "PASS" : "FAIL") << "  " << c.summary;
    if (!failure.empty()) std::cout << "  [" << failure << ']';
    std::cout << std::endl;
    failed += failure.empty() ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
