#include "modcone/slopes.hpp"

#include "modcone/lp.hpp"

namespace modcone {

namespace {

void require_mg(const DivisorClass& d, const char* what) {
  if (d.signature().n != 0) {
    throw PicardError(std::string(what) + " is defined on M̄_g only, got " + to_string(d.signature()));
  }
}

Rational q(std::int64_t p, std::int64_t d = 1) { return make_rational(p, d); }

}  // namespace

std::int64_t rho(std::int64_t g, std::int64_t r, std::int64_t d) { return g - (r + 1) * (g - d + r); }

std::string SlopeValue::to_string() const {
  return is_infinite() ? "infinite" : modcone::to_string(*value_);
}

SlopeValue slope(const DivisorClass& d) {
  require_mg(d, "slope");
  if (d.lambda() < 0) return SlopeValue::infinite();
  std::optional<Rational> smallest;
  for (int i = 0; i <= d.signature().g / 2; ++i) {
    Rational b = d.b(i);
    if (b <= 0) return SlopeValue::infinite();
    if (!smallest || b < *smallest) smallest = std::move(b);
  }
  return SlopeValue::finite(d.lambda() / *smallest);
}

Rational brill_noether_slope(int g) { return q(6) + q(12, g + 1); }

DivisorClass brill_noether_class(int g, int r, int d) {
  if (g < 2 || r < 0 || d < 0) throw DomainError("Brill–Noether divisor needs g ≥ 2 and r, d ≥ 0");
  const auto value = rho(g, r, d);
  if (value != -1) {
    throw DomainError("ρ(" + std::to_string(g) + "," + std::to_string(r) + "," + std::to_string(d) +
                      ") = " + std::to_string(value) +
                      "; the Brill–Noether divisor exists only when ρ = -1");
  }
  std::vector<Rational> b{q(g + 1, 6)};
  for (int i = 1; i <= g / 2; ++i) b.push_back(q(i * (g - i)));
  return DivisorClass::mg(g, q(g + 3), b);
}

DivisorClass canonical_class_mg(int g) {
  if (g < 2) throw DomainError("canonical class of M̄_g needs g ≥ 2");
  std::vector<Rational> b{q(2)};
  for (int i = 1; i <= g / 2; ++i) b.push_back(q(i == 1 ? 3 : 2));
  return DivisorClass::mg(g, q(13), b);
}

DivisorClass log_canonical_mg(int g, const Rational& alpha) {
  if (g < 2) throw DomainError("M̄_g needs g ≥ 2");
  return DivisorClass::mg(g, q(13), std::vector<Rational>(static_cast<std::size_t>(g / 2 + 1), q(2) - alpha));
}

std::vector<std::string> named_class_names() { return {"k10", "hyperelliptic3", "nef3a", "nef3b", "d22"}; }

FlaggedClass named_class(const std::string& name) {
  if (name == "k10") {
    return {DivisorClass::mg(10, q(7), {q(1), q(5), q(9), q(12), q(14), q(15)}), {}, true, name};
  }
  if (name == "hyperelliptic3") return {DivisorClass::mg(3, q(9), {q(1), q(3)}), {}, true, name};
  if (name == "nef3a") return {DivisorClass::mg(3, q(12), {q(1), q(0)}), {}, true, name};
  if (name == "nef3b") return {DivisorClass::mg(3, q(10), {q(1), q(2)}), {}, true, name};
  if (name == "d22") {
    std::vector<Rational> b{q(1), q(14511, 2636)};
    FlaggedClass f{DivisorClass(ModuliSignature{22, 0}), {}, true, name};
    for (int i = 2; i <= 11; ++i) {
      b.push_back(q(1));
      f.lower_bounded.insert(BoundaryIndex::separating(i));
    }
    f.value = DivisorClass::mg(22, q(17121, 2636), b);
    return f;
  }
  std::string known;
  for (const auto& n : named_class_names()) known += (known.empty() ? "" : ", ") + n;
  throw DomainError("unknown class name '" + name + "' (known: " + known + ")");
}

CurveProfile k3_pencil(int g) {
  return {"B", g, q(g + 1), q(6 * g + 18), std::vector<Rational>(static_cast<std::size_t>(g / 2), q(0))};
}

CurveProfile elliptic_pencil(int g) {
  std::vector<Rational> delta(static_cast<std::size_t>(g / 2), q(0));
  if (!delta.empty()) delta[0] = -1;
  return {"R", g, q(1), q(12), delta};
}

CurveProfile tail_curve_c0(int g) {
  std::vector<Rational> delta(static_cast<std::size_t>(g / 2), q(0));
  if (!delta.empty()) delta[0] = 1;
  return {"C0", g, q(0), q(-(2 * g - 2)), delta};
}

CurveProfile tail_curve_c1(int g) {
  std::vector<Rational> delta(static_cast<std::size_t>(g / 2), q(0));
  if (!delta.empty()) delta[0] = -(2 * g - 4);
  return {"C1", g, q(0), q(0), delta};
}

CurveProfile curve_profile(const std::string& name, int g) {
  if (g < 2) throw DomainError("test curves live on M̄_g with g ≥ 2");
  if (name == "B") return k3_pencil(g);
  if (name == "R") return elliptic_pencil(g);
  if (name == "C0") return tail_curve_c0(g);
  if (name == "C1") return tail_curve_c1(g);
  throw DomainError("unknown test curve '" + name + "' (known: B, R, C0, C1)");
}

Rational pair(const DivisorClass& d, const CurveProfile& curve) {
  require_mg(d, "pairing with a test curve");
  if (d.signature().g != curve.genus) {
    throw PicardError("curve " + curve.name + " has genus " + std::to_string(curve.genus) +
                      " but the class lives on " + to_string(d.signature()));
  }
  Rational v = d.lambda() * curve.lambda + d.delta0() * curve.delta0;
  for (std::size_t i = 0; i < curve.delta.size(); ++i) v += d.delta(static_cast<int>(i) + 1) * curve.delta[i];
  return v;
}

K3Verdict k3_slope_test(const DivisorClass& d) {
  require_mg(d, "the K3 slope test");
  const int g = d.signature().g;
  K3Verdict v{slope(d), brill_noether_slope(g), false, pair(d, k3_pencil(g)), d.b(0) > 0};
  if (!v.slope.is_infinite()) v.below_threshold = v.slope.value() < v.threshold;
  for (int i = 1; i <= g / 2 && v.b_dominant; ++i) v.b_dominant = d.b(i) >= d.b(0);
  return v;
}

Rational strictness_gap() { return q(1, 1000000); }

std::optional<MgCertificate> general_type_certificate_mg(const FlaggedClass& f) {
  const DivisorClass& d = f.value;
  require_mg(d, "the M̄_g general-type certificate");
  if (!f.complete) throw DomainError("class '" + f.name + "' has unknown coefficients");
  const int g = d.signature().g;
  const DivisorClass k = canonical_class_mg(g);

  lp::LinearProgram lp;
  const int alpha = lp.add_variable("alpha", strictness_gap());
  const int beta = lp.add_variable("beta", strictness_gap());
  std::vector<int> c;
  for (int i = 0; i <= g / 2; ++i) c.push_back(lp.add_variable("c" + std::to_string(i)));

  lp.add_constraint({{alpha, d.lambda()}, {beta, q(1)}}, k.lambda());
  for (int i = 0; i <= g / 2; ++i) {
    lp.add_constraint({{alpha, d.delta(i)}, {c[static_cast<std::size_t>(i)], q(1)}}, k.delta(i));
  }

  std::vector<std::vector<lp::Term>> objectives{{{beta, q(-1)}}, {{alpha, q(1)}}};
  for (int ci : c) objectives.push_back({{ci, q(1)}});
  const lp::Result r = lp.minimize(objectives);
  if (r.status != lp::Status::Optimal) return std::nullopt;

  MgCertificate cert{r.values[static_cast<std::size_t>(alpha)], r.values[static_cast<std::size_t>(beta)], {}};
  for (int ci : c) cert.boundary.push_back(r.values[static_cast<std::size_t>(ci)]);
  if (!(recombine(cert, d) == k)) throw std::logic_error("general-type certificate failed to recombine");
  return cert;
}

DivisorClass recombine(const MgCertificate& cert, const DivisorClass& d) {
  DivisorClass out = cert.alpha * d;
  out.set_lambda(out.lambda() + cert.beta);
  for (std::size_t i = 0; i < cert.boundary.size(); ++i) {
    const int idx = static_cast<int>(i);
    out.set_delta(idx, out.delta(idx) + cert.boundary[i]);
  }
  return out;
}

}  // namespace modcone
