#include "modcone/pointed.hpp"

#include "modcone/lp.hpp"
#include "modcone/slopes.hpp"

#include <numeric>

namespace modcone {

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return make_rational(p, d); }

bool has_genus_one_side(int genus, int g) { return genus == 1 || g - genus == 1; }

Rational choose2(std::int64_t m) { return Rational(binomial(m, 2)); }

}  // namespace

DivisorClass canonical_class_gn(int g, int n) {
  const ModuliSignature sig{g, n};
  DivisorClass k(sig);
  k.set_lambda(q(13)).set_delta0(q(-2));
  for (int p = 1; p <= n; ++p) k.set_psi(p, q(1));
  for (const auto& idx : separating_boundary(sig)) k.set_delta(idx, q(has_genus_one_side(idx.genus, g) ? -3 : -2));
  return k;
}

SymmetricDivisorClass canonical_class_gn_symmetric(int g, int n) {
  const ModuliSignature sig{g, n};
  SymmetricDivisorClass k(sig);
  k.set_lambda(q(13)).set_psi(q(n > 0 ? 1 : 0)).set_delta0(q(-2));
  for (const auto& key : boundary_orbits(sig)) k.set_orbit(key, q(has_genus_one_side(key.genus, g) ? -3 : -2));
  return k;
}

FlaggedClass logan_class(int g, const std::vector<int>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) throw DomainError("a Logan divisor needs at least one marked point");
  for (int x : a) {
    if (x < 0) throw DomainError("Logan weights must be nonnegative");
  }
  if (std::accumulate(a.begin(), a.end(), 0) != g) throw DomainError("Logan weights must sum to g");
  const ModuliSignature sig{g, n};
  sig.validate();
  FlaggedClass f{DivisorClass(sig), {}, n == 1, "logan"};
  DivisorClass& d = f.value;
  d.set_lambda(q(-1));
  for (int p = 1; p <= n; ++p) d.set_psi(p, choose2(a[static_cast<std::size_t>(p - 1)] + 1));
  if (n == 1) {
    f.name = "weierstrass";
    for (int i = 1; i <= g - 1; ++i) d.set_delta(BoundaryIndex::separating(i, {1}), -choose2(g - i + 1));
    return f;
  }
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      d.set_delta(BoundaryIndex::separating(0, {x, y}),
                  -choose2(a[static_cast<std::size_t>(x - 1)] + a[static_cast<std::size_t>(y - 1)] + 1));
    }
  }
  return f;
}

MrcParams MrcParams::make(int g, int r, int i) {
  if (g < 3) throw DomainError("Mrc classes need g ≥ 3 (the coefficients divide by g-2)");
  if (r < 1) throw DomainError("Mrc classes need r ≥ 1");
  if (i < 0 || i > g) throw DomainError("Mrc classes need 0 ≤ i ≤ g");
  const int n = (2 * r + 1) * (g - 1) - 2 * i;
  if (n < 1) throw DomainError("n = (2r+1)(g-1) - 2i must be positive, got " + std::to_string(n));
  if ((n - (g - 1)) % 2 != 0) throw std::logic_error("parity of n differs from that of g-1");
  return {g, r, i, n};
}

Rational MrcCoefficients::b0s(int s) const {
  const auto& p = params;
  return choose2(s + 1) * (p.g - 1) + q(s * (p.r * p.g - p.r)) - q(s * p.i);
}

MrcCoefficients mrc_coefficients(const MrcParams& p) {
  const std::int64_t g = p.g;
  const std::int64_t r = p.r;
  const std::int64_t i = p.i;
  MrcCoefficients m;
  m.params = p;
  m.prefactor = Rational(binomial(g - 1, i), BigInt(g - 1));
  m.c = q(r * g + g - i - r - 1);
  m.b0 = -(choose2(r + 1) * (g - 1) * (g - 2) + q(i * (i + 1 + 2 * r - r * g - g))) / q(g - 2);
  m.a = -q((g - 1) * (g - 2) * (6 * r * r + 6 * r + 1) + i * (24 * r + 10 * i + 10 - 10 * g - 12 * r * g)) /
        q(g - 2);
  return m;
}

FlaggedSymmetricClass mrc_class(int g, int r, int i) {
  const MrcParams p = MrcParams::make(g, r, i);
  const MrcCoefficients m = mrc_coefficients(p);
  const ModuliSignature sig{g, p.n};
  FlaggedSymmetricClass f{SymmetricDivisorClass(sig), {}, true, "mrc"};
  SymmetricDivisorClass& d = f.value;
  d.set_lambda(m.prefactor * m.a).set_psi(m.prefactor * m.c).set_delta0(-m.prefactor * m.b0);
  for (const auto& key : boundary_orbits(sig)) {
    if (key.genus == 0) {
      d.set_orbit(key, -m.prefactor * m.b0s(key.size));
      continue;
    }
    const Rational a = m.b0s(key.size);
    const Rational b = m.b0s(p.n - key.size);
    d.set_orbit(key, -m.prefactor * (a < b ? b : a));
    f.lower_bounded.insert(key);
  }
  return f;
}

FlaggedSymmetricClass symmetrize(const FlaggedClass& f) {
  const ModuliSignature& sig = f.value.signature();
  FlaggedSymmetricClass out{SymmetricDivisorClass::symmetrize(f.value), {}, f.complete, f.name};
  for (const auto& idx : f.lower_bounded) {
    out.lower_bounded.insert(canonical_orbit(idx.genus, static_cast<int>(idx.labels.size()), sig));
  }
  return out;
}

std::optional<GnCertificate> general_type_certificate_gn(int g, int n,
                                                         const std::vector<FlaggedSymmetricClass>& candidates) {
  const ModuliSignature sig{g, n};
  sig.validate();
  for (const auto& c : candidates) {
    if (!(c.value.signature() == sig)) {
      throw DomainError("candidate '" + c.name + "' lives on " + to_string(c.value.signature()) +
                        ", not " + to_string(sig));
    }
    if (!c.complete) throw DomainError("candidate '" + c.name + "' has unknown boundary coefficients");
  }
  const SymmetricDivisorClass k = canonical_class_gn_symmetric(g, n);
  const auto orbits = boundary_orbits(sig);
  const Rational eps = strictness_gap();

  lp::LinearProgram lp;
  const int t = lp.add_variable("t", eps);
  const int u = lp.add_variable("u", eps);  // b·t - 11t
  const int p = n > 0 ? lp.add_variable("p", eps) : -1;
  std::vector<int> alpha;
  for (std::size_t k2 = 0; k2 < candidates.size(); ++k2) alpha.push_back(lp.add_variable("alpha" + std::to_string(k2)));
  const int e0 = lp.add_variable("e0");
  std::vector<int> e;
  for (const auto& o : orbits) e.push_back(lp.add_variable("e" + orbit_key(o)));

  auto row = [&](auto coefficient_of) {
    std::vector<lp::Term> terms;
    for (std::size_t k2 = 0; k2 < candidates.size(); ++k2) {
      Rational v = coefficient_of(candidates[k2].value);
      if (v != 0) terms.push_back({alpha[k2], std::move(v)});
    }
    return terms;
  };

  auto lambda_row = row([](const SymmetricDivisorClass& d) { return d.lambda(); });
  lambda_row.push_back({t, q(11)});
  lambda_row.push_back({u, q(1)});
  lp.add_constraint(std::move(lambda_row), k.lambda());
  if (n > 0) {
    auto psi_row = row([](const SymmetricDivisorClass& d) { return d.psi(); });
    psi_row.push_back({p, q(1)});
    lp.add_constraint(std::move(psi_row), k.psi());
  }
  auto d0_row = row([](const SymmetricDivisorClass& d) { return d.delta0(); });
  d0_row.push_back({t, q(-1)});
  d0_row.push_back({e0, q(1)});
  lp.add_constraint(std::move(d0_row), k.delta0());
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    auto orow = row([&](const SymmetricDivisorClass& d) { return d.orbit(orbits[o]); });
    orow.push_back({t, q(-1)});
    orow.push_back({e[o], q(1)});
    lp.add_constraint(std::move(orow), k.orbit(orbits[o]));
  }

  std::vector<std::vector<lp::Term>> objectives{{{t, q(-1)}}};
  for (int v = 0; v < lp.variables(); ++v) {
    if (v != t) objectives.push_back({{v, q(1)}});
  }
  const lp::Result r = lp.minimize(objectives);
  if (r.status != lp::Status::Optimal) return std::nullopt;

  auto val = [&](int v) { return r.values[static_cast<std::size_t>(v)]; };
  GnCertificate cert;
  for (int a : alpha) cert.alpha.push_back(val(a));
  cert.t = val(t);
  cert.ample_lambda = (q(11) * val(t) + val(u)) / val(t);
  cert.ample_psi = n > 0 ? val(p) / val(t) : q(0);
  cert.boundary_delta0 = val(e0);
  for (std::size_t o = 0; o < orbits.size(); ++o) cert.boundary[orbits[o]] = val(e[o]);
  if (!(recombine(cert, g, n, candidates) == k)) throw std::logic_error("M̄_{g,n} certificate failed to recombine");
  return cert;
}

SymmetricDivisorClass recombine(const GnCertificate& cert, int g, int n,
                                const std::vector<FlaggedSymmetricClass>& candidates) {
  const ModuliSignature sig{g, n};
  Rational lambda = cert.t * cert.ample_lambda;
  Rational psi = n > 0 ? cert.t * cert.ample_psi : q(0);
  Rational delta0 = -cert.t + cert.boundary_delta0;
  std::map<OrbitKey, Rational> orbit;
  for (const auto& key : boundary_orbits(sig)) {
    const auto it = cert.boundary.find(key);
    orbit[key] = -cert.t + (it == cert.boundary.end() ? q(0) : it->second);
  }
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const auto& d = candidates[k].value;
    const Rational& a = cert.alpha.at(k);
    lambda += a * d.lambda();
    psi += a * d.psi();
    delta0 += a * d.delta0();
    for (auto& [key, v] : orbit) v += a * d.orbit(key);
  }
  SymmetricDivisorClass out(sig);
  out.set_lambda(lambda).set_psi(psi).set_delta0(delta0);
  for (const auto& [key, v] : orbit) out.set_orbit(key, v);
  return out;
}

const std::vector<std::pair<int, int>>& mgn_table() {
  static const std::vector<std::pair<int, int>> table = {
      {4, 16},  {5, 15},  {6, 16},  {7, 15},  {8, 14},  {9, 13},  {10, 11}, {11, 12}, {12, 13},
      {13, 11}, {14, 10}, {15, 10}, {16, 9},  {17, 9},  {18, 9},  {19, 7},  {20, 6},  {21, 4}};
  return table;
}

}  // namespace modcone
