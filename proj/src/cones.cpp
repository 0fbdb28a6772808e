#include "modcone/cones.hpp"

#include "modcone/lp.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace modcone {

namespace {

void require_mg(const DivisorClass& d) {
  const auto& sig = d.signature();
  if (sig.n != 0 || sig.g < 2) {
    throw PicardError("F-curve checks need a class on M̄_g with g ≥ 2, got " + to_string(sig));
  }
}

class FunctionalBuilder {
 public:
  FunctionalBuilder(int g, FCurveFamily family, std::vector<int> indices) {
    f_.family = family;
    f_.indices = std::move(indices);
    f_.genus = g;
    f_.b_coefficients.assign(static_cast<std::size_t>(g / 2 + 1), 0);
  }
  FunctionalBuilder& a(int c) {
    f_.a_coefficient += c;
    return *this;
  }
  FunctionalBuilder& b(int index, int c) {
    const int folded = std::min(index, f_.genus - index);
    f_.b_coefficients[static_cast<std::size_t>(folded)] += c;
    return *this;
  }
  FCurveFunctional done() { return std::move(f_); }

 private:
  FCurveFunctional f_;
};

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(xs[k]);
  }
  return out;
}

}  // namespace

Rational FCurveFunctional::evaluate(const DivisorClass& d) const {
  require_mg(d);
  if (d.signature().g != genus) {
    throw PicardError("functional for g=" + std::to_string(genus) + " applied to " +
                      to_string(d.signature()));
  }
  Rational v = a_coefficient * d.lambda();
  for (std::size_t i = 0; i < b_coefficients.size(); ++i) {
    if (b_coefficients[i] != 0) v += b_coefficients[i] * d.b(static_cast<int>(i));
  }
  return v;
}

std::string FCurveFunctional::tag() const {
  switch (family) {
    case FCurveFamily::EllipticTail:
      return "EllipticTail";
    case FCurveFamily::Middle:
      return "Middle(" + join(indices) + ")";
    case FCurveFamily::Pair:
      return "Pair(" + join(indices) + ")";
    case FCurveFamily::Quadruple:
      return "Quadruple(" + join(indices) + ")";
  }
  return "?";
}

std::string FCurveFunctional::formula() const {
  std::string out;
  auto term = [&](int c, const std::string& sym) {
    if (c == 0) return;
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (c != 1 && c != -1) out += std::to_string(c < 0 ? -c : c);
    out += sym;
  };
  term(a_coefficient, "a");
  for (std::size_t i = 0; i < b_coefficients.size(); ++i) term(b_coefficients[i], "b" + std::to_string(i));
  return out.empty() ? "0" : out;
}

std::vector<FCurveFunctional> enumerate_fcurve_functionals(int g) {
  if (g < 2) throw PicardError("F-curve functionals need g ≥ 2");
  std::vector<FCurveFunctional> all;
  all.push_back(FunctionalBuilder(g, FCurveFamily::EllipticTail, {}).a(1).b(0, -12).b(1, 1).done());
  for (int i = 1; i <= g / 2; ++i) {
    all.push_back(FunctionalBuilder(g, FCurveFamily::Middle, {i}).b(0, 2).b(i, -1).done());
  }
  for (int i = 1; i < g; ++i) {
    for (int j = 1; i + j <= g - 1; ++j) {
      all.push_back(
          FunctionalBuilder(g, FCurveFamily::Pair, {i, j}).b(i, 1).b(j, 1).b(i + j, -1).done());
    }
  }
  for (int i = 1; i < g; ++i) {
    for (int j = 1; i + j < g; ++j) {
      for (int k = 1; i + j + k < g; ++k) {
        const int l = g - i - j - k;
        all.push_back(FunctionalBuilder(g, FCurveFamily::Quadruple, {i, j, k, l})
                          .b(i, 1)
                          .b(j, 1)
                          .b(k, 1)
                          .b(l, 1)
                          .b(i + j, -1)
                          .b(i + k, -1)
                          .b(i + l, -1)
                          .done());
      }
    }
  }
  std::vector<FCurveFunctional> unique;
  for (auto& f : all) {
    const bool seen = std::any_of(unique.begin(), unique.end(), [&](const FCurveFunctional& u) {
      return u.a_coefficient == f.a_coefficient && u.b_coefficients == f.b_coefficients;
    });
    if (!seen) unique.push_back(std::move(f));
  }
  return unique;
}

std::string to_string(const FCurvePartition& p) {
  std::string out;
  for (const auto& block : p.blocks) out += "{" + join(block) + "}";
  return out;
}

std::vector<FCurvePartition> enumerate_fcurves_0n(int n) {
  if (n < 4) throw PicardError("M̄_{0,n} has F-curves only for n ≥ 4");
  if (n > 14) throw PicardError("n > 14 is outside the supported enumeration range");
  // Restricted growth strings with exactly four distinct values.
  std::vector<FCurvePartition> out;
  std::vector<int> block(static_cast<std::size_t>(n), 0);
  auto emit = [&] {
    FCurvePartition p;
    p.blocks.assign(4, {});
    for (int e = 0; e < n; ++e) p.blocks[static_cast<std::size_t>(block[static_cast<std::size_t>(e)])].push_back(e + 1);
    out.push_back(std::move(p));
  };
  auto recurse = [&](auto&& self, int pos, int used) -> void {
    if (n - pos < 4 - used) return;
    if (pos == n) {
      if (used == 4) emit();
      return;
    }
    for (int b = 0; b < std::min(used + 1, 4); ++b) {
      block[static_cast<std::size_t>(pos)] = b;
      self(self, pos + 1, std::max(used, b + 1));
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

namespace {

FCheck run_check(const DivisorClass& d, bool strict) {
  require_mg(d);
  FCheck out;
  for (auto& f : enumerate_fcurve_functionals(d.signature().g)) {
    Rational v = f.evaluate(d);
    if (strict ? v <= 0 : v < 0) {
      out.pass = false;
      out.violations.push_back({std::move(f), std::move(v)});
    }
  }
  return out;
}

}  // namespace

FCheck f_nef_check(const DivisorClass& d) { return run_check(d, false); }

FCheck f_ample_check(const DivisorClass& d) { return run_check(d, true); }

std::string to_string(NefVerdict v) {
  return v == NefVerdict::ProvedNef ? "ProvedNef" : "Inconclusive";
}

NefVerdict nef_sufficient(const DivisorClass& d) {
  require_mg(d);
  for (int i = 1; i <= d.signature().g / 2; ++i) {
    if (d.b(i) < d.b(0)) return NefVerdict::Inconclusive;
  }
  return f_nef_check(d).pass ? NefVerdict::ProvedNef : NefVerdict::Inconclusive;
}

Rational coefficient_dot(const DivisorClass& a, const DivisorClass& b) {
  if (!(a.signature() == b.signature())) throw PicardError("signature mismatch in dot product");
  Rational v = a.lambda() * b.lambda() + a.delta0() * b.delta0();
  for (int p = 1; p <= a.signature().n; ++p) v += a.psi(p) * b.psi(p);
  for (const auto& [idx, c] : a.separating()) v += c * b.delta(idx);
  return v;
}

namespace {

// Coordinates touched by any class: 0 = λ, 1..n = ψ, n+1 = δ_0, then separating indices.
struct CoordinateSystem {
  int n = 0;
  std::vector<BoundaryIndex> boundary;

  int size() const { return n + 2 + static_cast<int>(boundary.size()); }

  Rational value(const DivisorClass& d, int c) const {
    if (c == 0) return d.lambda();
    if (c <= n) return d.psi(c);
    if (c == n + 1) return d.delta0();
    return d.delta(boundary[static_cast<std::size_t>(c - n - 2)]);
  }

  void set(DivisorClass& d, int c, Rational v) const {
    if (c == 0) {
      d.set_lambda(std::move(v));
    } else if (c <= n) {
      d.set_psi(c, std::move(v));
    } else if (c == n + 1) {
      d.set_delta0(std::move(v));
    } else {
      d.set_delta(boundary[static_cast<std::size_t>(c - n - 2)], std::move(v));
    }
  }
};

}  // namespace

ConeMembership cone_member(const DivisorClass& target, const std::vector<DivisorClass>& generators) {
  const auto& sig = target.signature();
  for (const auto& g : generators) {
    if (!(g.signature() == sig)) throw PicardError("cone generators must share the target signature");
  }
  if (generators.empty() && !target.is_zero()) {
    throw PicardError("empty generator list cannot span a nonzero target");
  }

  CoordinateSystem coords;
  coords.n = sig.n;
  std::set<BoundaryIndex> touched;
  for (const auto& [idx, v] : target.separating()) touched.insert(idx);
  for (const auto& g : generators) {
    for (const auto& [idx, v] : g.separating()) touched.insert(idx);
  }
  coords.boundary.assign(touched.begin(), touched.end());

  lp::LinearProgram lp;
  for (std::size_t k = 0; k < generators.size(); ++k) lp.add_variable("mu" + std::to_string(k));
  for (int c = 0; c < coords.size(); ++c) {
    std::vector<lp::Term> row;
    for (std::size_t k = 0; k < generators.size(); ++k) {
      Rational v = coords.value(generators[k], c);
      if (v != 0) row.push_back({static_cast<int>(k), std::move(v)});
    }
    lp.add_constraint(std::move(row), coords.value(target, c));
  }

  ConeMembership out;
  const lp::Result r = lp.lexicographic_minimum();
  if (r.status == lp::Status::Optimal) {
    ConeCertificate cert{r.values, target};
    for (std::size_t k = 0; k < generators.size(); ++k) {
      cert.residual += (-r.values[k]) * generators[k];
    }
    if (!cert.residual.is_zero()) throw std::logic_error("cone certificate failed to recombine");
    out.certificate = std::move(cert);
    return out;
  }
  if (!lp.proves_infeasible(r.farkas)) throw std::logic_error("unverified infeasibility certificate");
  DivisorClass separator(sig);
  for (int c = 0; c < coords.size(); ++c) coords.set(separator, c, r.farkas[static_cast<std::size_t>(c)]);
  out.separator = std::move(separator);
  return out;
}

}  // namespace modcone
