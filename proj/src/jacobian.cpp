#include "modcone/jacobian.hpp"

#include "modcone/slopes.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace modcone {

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return make_rational(p, d); }

// Drops c_0 factors; returns false if some factor exceeds the bundle rank.
bool normalize_factors(std::vector<int>& factors, int r) {
  std::erase(factors, 0);
  std::sort(factors.begin(), factors.end());
  for (int k : factors) {
    if (k < 0) throw DomainError("Chern class index must be nonnegative");
    if (k > r + 1) return false;
  }
  return true;
}

std::uint64_t distinct_permutations(const std::vector<int>& partition) {
  std::map<int, int> counts;
  for (int p : partition) ++counts[p];
  BigInt total = factorial(static_cast<std::int64_t>(partition.size()));
  for (const auto& [value, c] : counts) total /= factorial(c);
  return total.convert_to<std::uint64_t>();
}

}  // namespace

EvalContext EvalContext::for_family(const SyzygyFamily& fam) { return {fam.g - 1, fam.r, fam.d}; }

int EvalContext::rho() const { return h - (r + 1) * (h - d + r); }

Rational inverse_factorial(int k) {
  if (k < 0) return Rational(0);
  return Rational(BigInt(1), factorial(k));
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = Rational(1) / m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      const Rational f = m[row][col] * inv;
      for (std::size_t k = col; k < n; ++k) {
        if (m[col][k] != 0) m[row][k] -= f * m[col][k];
      }
    }
  }
  return det;
}

Rational vandermonde_direct(const std::vector<int>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<Rational>> m(a.size(), std::vector<Rational>(a.size()));
  for (int j = 0; j < n; ++j) {
    for (int l = 1; l <= n; ++l) m[static_cast<std::size_t>(j)][static_cast<std::size_t>(l - 1)] = inverse_factorial(a[static_cast<std::size_t>(j)] + l - 1);
  }
  return determinant(std::move(m));
}

Rational vandermonde_closed_form(const std::vector<int>& a) {
  const int n = static_cast<int>(a.size());
  BigInt num = 1;
  BigInt den = 1;
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < j; ++l) num *= a[static_cast<std::size_t>(l)] - a[static_cast<std::size_t>(j)];
    den *= factorial(a[static_cast<std::size_t>(j)] + n - 1);
  }
  return Rational(num, den);
}

Rational harris_tu(const std::vector<int>& exponents, int theta, const EvalContext& ctx) {
  const int n = ctx.r + 1;
  if (static_cast<int>(exponents.size()) != n) {
    throw DomainError("Harris–Tu needs " + std::to_string(n) + " exponents, got " +
                      std::to_string(exponents.size()));
  }
  int degree = theta;
  for (int e : exponents) {
    if (e < 0) throw DomainError("exponents must be nonnegative");
    degree += e;
  }
  if (theta < 0) throw DomainError("θ-power must be nonnegative");
  if (degree != ctx.r) return Rational(0);
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int j = 1; j <= n; ++j) {
    for (int l = 1; l <= n; ++l) {
      m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(l - 1)] =
          inverse_factorial(ctx.offset() + exponents[static_cast<std::size_t>(j - 1)] - j + l);
    }
  }
  return Rational(factorial(ctx.h)) * determinant(std::move(m));
}

std::string to_string(OrbitConvention c) {
  return c == OrbitConvention::OrbitSummed ? "orbit-summed" : "sorted-once";
}

std::vector<MonomialTerm> elementary_to_monomial(const std::vector<int>& factors, int variables) {
  std::vector<int> ks = factors;
  std::erase(ks, 0);
  const int total = std::accumulate(ks.begin(), ks.end(), 0);
  const int parts_max = static_cast<int>(ks.size());
  for (int k : ks) {
    if (k > variables) return {};
  }

  // Partitions of `total` with parts ≤ number of factors and length ≤ variables.
  std::vector<std::vector<int>> partitions;
  std::vector<int> current;
  auto build = [&](auto&& self, int remaining, int largest) -> void {
    if (remaining == 0) {
      partitions.push_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == variables) return;
    for (int p = std::min(largest, remaining); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  build(build, total, parts_max);

  std::vector<MonomialTerm> out;
  for (auto& lambda : partitions) {
    lambda.resize(static_cast<std::size_t>(variables), 0);
    // Count 0/1 matrices with row sums ks and column sums lambda.
    std::map<std::vector<int>, BigInt> states{{ks, BigInt(1)}};
    for (int col : lambda) {
      std::map<std::vector<int>, BigInt> next;
      for (const auto& [rem, ways] : states) {
        const int rows = static_cast<int>(rem.size());
        for (int mask = 0; mask < (1 << rows); ++mask) {
          if (std::popcount(static_cast<unsigned>(mask)) != col) continue;
          std::vector<int> after = rem;
          bool ok = true;
          for (int t = 0; t < rows && ok; ++t) {
            if (mask & (1 << t)) ok = --after[static_cast<std::size_t>(t)] >= 0;
          }
          if (ok) next[after] += ways;
        }
      }
      states = std::move(next);
    }
    const auto done = states.find(std::vector<int>(ks.size(), 0));
    if (done != states.end() && done->second != 0) out.push_back({lambda, done->second});
  }
  return out;
}

Rational eval_chern_product(const std::vector<int>& factors, int theta, const EvalContext& ctx,
                            OrbitConvention convention) {
  std::vector<int> ks = factors;
  if (!normalize_factors(ks, ctx.r)) return Rational(0);
  if (ks.size() > 3) throw DomainError("at most three Chern factors are supported");
  if (theta < 0) throw DomainError("θ-power must be nonnegative");
  const int degree = std::accumulate(ks.begin(), ks.end(), theta);
  if (degree != ctx.r) return Rational(0);

  Rational total = 0;
  for (const auto& term : elementary_to_monomial(ks, ctx.r + 1)) {
    if (convention == OrbitConvention::SortedOnce) {
      total += Rational(term.coefficient) * harris_tu(term.partition, theta, ctx);
      continue;
    }
    std::vector<int> perm = term.partition;
    std::sort(perm.begin(), perm.end());
    Rational orbit = 0;
    do {
      orbit += harris_tu(perm, theta, ctx);
    } while (std::next_permutation(perm.begin(), perm.end()));
    total += Rational(term.coefficient) * orbit;
  }
  return total;
}

std::uint64_t chern_product_orbit_count(const std::vector<int>& factors, int r, OrbitConvention convention) {
  std::vector<int> ks = factors;
  if (!normalize_factors(ks, r)) return 0;
  std::uint64_t count = 0;
  for (const auto& term : elementary_to_monomial(ks, r + 1)) {
    count += convention == OrbitConvention::SortedOnce ? 1 : distinct_permutations(term.partition);
  }
  return count;
}

std::vector<LemmaIdentity> lemma_identities(const SyzygyFamily& fam, OrbitConvention convention) {
  const EvalContext ctx = EvalContext::for_family(fam);
  const int r = fam.r;
  const int s = fam.s;
  auto eval = [&](std::vector<int> f, int m) { return eval_chern_product(f, m, ctx, convention); };
  const Rational top = eval({r}, 0);

  std::vector<LemmaIdentity> out;
  out.push_back({1, "c_{r-1}θ = r(s+1)/2 · c_r", eval({r - 1}, 1), q(r * (s + 1), 2) * top});
  out.push_back({2, "c_{r-2}θ² = r(r-1)(s+1)(s+2)/6 · c_r", eval({r - 2}, 2),
                 q(r * (r - 1) * (s + 1) * (s + 2), 6) * top});
  out.push_back({3, "c_{r-2}c_1θ = r(s+1)/2 · (1 + (r-2)(r+2)(s+2)/(3(s+r+1))) · c_r", eval({r - 2, 1}, 1),
                 q(r * (s + 1), 2) * (q(1) + q((r - 2) * (r + 2) * (s + 2), 3 * (s + r + 1))) * top});
  out.push_back({4, "c_{r-1}c_1 = (1 + (r-1)(r+2)(s+1)/(2(s+r+1))) · c_r", eval({r - 1, 1}, 0),
                 (q(1) + q((r - 1) * (r + 2) * (s + 1), 2 * (s + r + 1))) * top});
  BigInt num = factorial(r + 1);
  for (int k = 1; k <= r - 1; ++k) num *= factorial(k);
  BigInt den = factorial(s - 1);
  for (int k = s + 1; k <= s + r; ++k) den *= factorial(k);
  out.push_back({5, "c_r = 1!2!···(r-1)!(r+1)! / ((s-1)!(s+1)!···(s+r)!) · θ^{g-1}", top,
                 Rational(num, den) * Rational(factorial(ctx.h))});
  return out;
}

CalibrationResult calibrate_orbit_convention() {
  CalibrationResult result;
  const auto base = SyzygyFamily::make(2, 0);
  std::vector<OrbitConvention> passing;
  for (auto c : {OrbitConvention::OrbitSummed, OrbitConvention::SortedOnce}) {
    auto ids = lemma_identities(base, c);
    if (std::all_of(ids.begin(), ids.end(), [](const LemmaIdentity& l) { return l.ok(); })) passing.push_back(c);
    result.at_2_0[c] = std::move(ids);
  }
  if (passing.size() != 1) {
    throw std::runtime_error(passing.empty() ? "no orbit convention reproduces all five identities"
                                             : "orbit convention is not determined by the identities");
  }
  result.chosen = passing.front();
  result.recheck_3_0 = lemma_identities(SyzygyFamily::make(3, 0), result.chosen);
  for (const auto& l : result.recheck_3_0) {
    if (!l.ok()) throw std::runtime_error("calibrated convention fails identity " + std::to_string(l.number) + " at (3,0)");
  }
  return result;
}

// ---------------------------------------------------------------------------

int JacobianMonomial::w_degree() const { return theta + std::accumulate(chern.begin(), chern.end(), 0); }

std::string to_string(const JacobianMonomial& m) {
  std::string out;
  if (m.sector == Sector::Eta) out += "η";
  if (m.sector == Sector::Gamma) out += "γ";
  if (m.theta == 1) out += "θ";
  if (m.theta > 1) out += "θ^" + std::to_string(m.theta);
  for (int k : m.chern) out += "c" + std::to_string(k);
  return out.empty() ? "1" : out;
}

JacobianElement JacobianElement::constant(int r, const Rational& c) {
  JacobianElement e(r);
  return e.add({Sector::One, 0, {}}, c);
}

JacobianElement JacobianElement::eta(int r) {
  JacobianElement e(r);
  return e.add({Sector::Eta, 0, {}}, Rational(1));
}

JacobianElement JacobianElement::gamma(int r) {
  JacobianElement e(r);
  return e.add({Sector::Gamma, 0, {}}, Rational(1));
}

JacobianElement JacobianElement::theta(int r) {
  JacobianElement e(r);
  return e.add({Sector::One, 1, {}}, Rational(1));
}

JacobianElement JacobianElement::chern(int r, int k) {
  JacobianElement e(r);
  if (k == 0) return e.add({Sector::One, 0, {}}, Rational(1));
  return e.add({Sector::One, 0, {k}}, Rational(1));
}

Rational JacobianElement::coefficient(const JacobianMonomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

JacobianElement& JacobianElement::add(const JacobianMonomial& m, const Rational& c) {
  if (c == 0) return *this;
  JacobianMonomial norm = m;
  std::vector<int> chern = norm.chern;
  if (!normalize_factors(chern, r_)) return *this;
  norm.chern = std::move(chern);
  // Real degree on W: γ contributes 1, θ and each unit of Chern index 2.
  const int w_real = 2 * norm.w_degree() + (norm.sector == Sector::Gamma ? 1 : 0);
  if (w_real > 2 * r_) return *this;
  auto [it, inserted] = terms_.try_emplace(std::move(norm), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

JacobianElement& JacobianElement::operator+=(const JacobianElement& o) {
  if (o.r_ != r_) throw DomainError("ring elements from different contexts");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

JacobianElement& JacobianElement::operator-=(const JacobianElement& o) {
  if (o.r_ != r_) throw DomainError("ring elements from different contexts");
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

JacobianElement& JacobianElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

JacobianElement operator*(const JacobianElement& a, const JacobianElement& b) {
  if (a.r_ != b.r_) throw DomainError("ring elements from different contexts");
  JacobianElement out(a.r_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      JacobianMonomial m{Sector::One, ma.theta + mb.theta, ma.chern};
      m.chern.insert(m.chern.end(), mb.chern.begin(), mb.chern.end());
      Rational c = ca * cb;
      const Sector x = ma.sector;
      const Sector y = mb.sector;
      if (x == Sector::One) {
        m.sector = y;
      } else if (y == Sector::One) {
        m.sector = x;
      } else if (x == Sector::Gamma && y == Sector::Gamma) {
        m.sector = Sector::Eta;
        m.theta += 1;
        c *= -2;
      } else {
        continue;
      }
      out.add(m, c);
    }
  }
  return out;
}

JacobianElement operator+(JacobianElement a, const JacobianElement& b) { return a += b; }
JacobianElement operator-(JacobianElement a, const JacobianElement& b) { return a -= b; }
JacobianElement operator*(const Rational& c, JacobianElement a) { return a *= c; }

std::string to_string(const JacobianElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : e.terms()) {
    const bool negative = c < 0;
    if (!out.empty()) out += negative ? " - " : " + ";
    if (out.empty() && negative) out += "-";
    const Rational mag = negative ? Rational(-c) : c;
    const std::string mono = to_string(m);
    if (mono == "1") {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "·";
      out += mono;
    }
  }
  return out;
}

JacobianElement poincare_c1(const EvalContext& ctx) {
  return Rational(ctx.d) * JacobianElement::eta(ctx.r) + JacobianElement::gamma(ctx.r);
}

Rational integrate(const JacobianElement& e, const ChernIntegrator& chern) {
  Rational total = 0;
  for (const auto& [m, c] : e.terms()) {
    if (m.sector != Sector::Eta || m.w_degree() != e.rank()) continue;
    total += c * chern(m.chern, m.theta);
  }
  return total;
}

ChernIntegrator harris_tu_integrator(const EvalContext& ctx) {
  auto memo = std::make_shared<std::map<std::pair<std::vector<int>, int>, Rational>>();
  return [ctx, memo](const std::vector<int>& factors, int theta) {
    auto key = std::make_pair(factors, theta);
    const auto it = memo->find(key);
    if (it != memo->end()) return it->second;
    Rational v = eval_chern_product(factors, theta, ctx);
    memo->emplace(std::move(key), v);
    return v;
  };
}

std::string to_string(TestLocus t) { return t == TestLocus::X ? "X" : "Y"; }

JacobianElement class_X(const EvalContext& ctx) {
  const int r = ctx.r;
  const int g = ctx.h + 1;
  using E = JacobianElement;
  return E::chern(r, r) +
         E::chern(r, r - 1) * (Rational(2) * E::gamma(r) + Rational(2 * ctx.d + 2 * g - 4) * E::eta(r)) -
         Rational(6) * E::chern(r, r - 2) * E::eta(r) * E::theta(r);
}

JacobianElement class_Y(const EvalContext& ctx) {
  const int r = ctx.r;
  using E = JacobianElement;
  return E::chern(r, r) + E::chern(r, r - 1) * (E::gamma(r) + Rational(ctx.d - 1) * E::eta(r)) -
         Rational(2) * E::chern(r, r - 2) * E::eta(r) * E::theta(r);
}

JacobianElement locus_class(TestLocus t, const EvalContext& ctx) {
  return t == TestLocus::X ? class_X(ctx) : class_Y(ctx);
}

JacobianElement c1_G0j_restricted(TestLocus t, int j, const EvalContext& ctx) {
  const int r = ctx.r;
  const int g = ctx.h + 1;
  using E = JacobianElement;
  if (j < 1) throw DomainError("G_{0,j} needs j ≥ 1");
  if (j == 1) return Rational(-1) * E::chern(r, 1);
  const Rational jj(j * j);
  if (t == TestLocus::X) {
    return Rational(-1) * jj * E::theta(r) - Rational(2 * g - 4) * E::eta(r) -
           Rational(j) * poincare_c1(ctx);
  }
  return Rational(-1) * jj * E::theta(r) + E::eta(r);
}

// ---------------------------------------------------------------------------

std::string to_string(const C1Expansion& e) {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rational& c, const std::string& name) {
    if (c == 0) return;
    if (!first) os << (c < 0 ? " - " : " + ");
    if (first && c < 0) os << "-";
    os << to_string(c < 0 ? Rational(-c) : c) << "·" << name;
    first = false;
  };
  for (const auto& [b, c] : e.g0b) term(c, "c1(G_{0," + std::to_string(b) + "})");
  term(e.g01, "c1(G_{0,1})");
  if (first) os << "0";
  return os.str();
}

C1Expansions c1_expansions(const SyzygyFamily& fam) {
  const int r = fam.r;
  const int i = fam.i;
  C1Expansions out;
  for (int l = 0; l <= i; ++l) {
    const Rational sign = (l % 2 == 0) ? 1 : -1;
    const Rational cg = sign * Rational(binomial(r + 1, i - l));
    if (cg != 0) out.g.g0b[l + 2] += cg;
    out.g.g01 += sign * Rational((l + 2) * fam.d + 1 - fam.g) * Rational(binomial(r, i - l - 1));
    out.h.g01 += sign * Rational(binomial(r, i - l - 1) * binomial(r + l + 2, l + 2) +
                                 binomial(r + 1, i - l) * binomial(r + l + 2, r + 1));
  }
  std::erase_if(out.g.g0b, [](const auto& kv) { return kv.second == 0; });
  return out;
}

namespace {

// Rank and first Chern class of a formal bundle.
struct Chern1 {
  BigInt rank;
  C1Expansion c1;
};

Chern1 operator-(Chern1 a, const Chern1& b) {
  a.rank -= b.rank;
  for (const auto& [k, v] : b.c1.g0b) a.c1.g0b[k] -= v;
  a.c1.g01 -= b.c1.g01;
  return a;
}

// c_1(∧^a V ⊗ W) from rank and c_1 of V and W.
Chern1 wedge_tensor(const Chern1& v, int a, const Chern1& w) {
  const auto rv = v.rank.convert_to<std::int64_t>();
  const BigInt rank_wedge = binomial(rv, a);
  const Rational c1_wedge_factor = Rational(binomial(rv - 1, a - 1));
  Chern1 out{rank_wedge * w.rank, {}};
  // c_1(∧^a V) = C(rk V - 1, a - 1) c_1(V); c_1(A⊗B) = rk B·c_1(A) + rk A·c_1(B).
  auto accumulate = [&](const C1Expansion& e, const Rational& f) {
    for (const auto& [k, c] : e.g0b) out.c1.g0b[k] += f * c;
    out.c1.g01 += f * e.g01;
  };
  accumulate(v.c1, c1_wedge_factor * Rational(w.rank));
  accumulate(w.c1, Rational(rank_wedge));
  return out;
}

Chern1 symmetric_power(const Chern1& v, int b) {
  const auto rv = v.rank.convert_to<std::int64_t>();
  Chern1 out{binomial(rv + b - 1, b), {}};
  const Rational f(binomial(rv + b - 1, rv));
  for (const auto& [k, c] : v.c1.g0b) out.c1.g0b[k] = f * c;
  out.c1.g01 = f * v.c1.g01;
  return out;
}

void prune(C1Expansion& e) {
  std::erase_if(e.g0b, [](const auto& kv) { return kv.second == 0; });
}

}  // namespace

C1Expansions c1_expansions_by_recursion(const SyzygyFamily& fam) {
  const Chern1 g01{BigInt(fam.r + 1), {{}, Rational(1)}};
  auto g0b = [&](int b) {
    Chern1 out{BigInt(b) * fam.d + 1 - fam.g, {}};
    out.c1.g0b[b] = 1;
    return out;
  };
  // G_{a,b} = ∧^a G_{0,1} ⊗ G_{0,b} - G_{a-1,b+1}; H likewise with Sym^b G_{0,1}.
  auto g_ab = [&](auto&& self, int a, int b) -> Chern1 {
    if (a == 0) return g0b(b);
    return wedge_tensor(g01, a, g0b(b)) - self(self, a - 1, b + 1);
  };
  auto h_ab = [&](auto&& self, int a, int b) -> Chern1 {
    if (a == 0) return symmetric_power(g01, b);
    return wedge_tensor(g01, a, symmetric_power(g01, b)) - self(self, a - 1, b + 1);
  };
  C1Expansions out{g_ab(g_ab, fam.i, 2).c1, h_ab(h_ab, fam.i, 2).c1};
  prune(out.g);
  prune(out.h);
  return out;
}

JacobianElement restricted_difference(TestLocus t, const SyzygyFamily& fam) {
  const EvalContext ctx = EvalContext::for_family(fam);
  const C1Expansions ex = c1_expansions(fam);
  JacobianElement out(ctx.r);
  for (const auto& [b, c] : ex.g.g0b) out += c * c1_G0j_restricted(t, b, ctx);
  out += (ex.g.g01 - ex.h.g01) * c1_G0j_restricted(t, 1, ctx);
  return out;
}

namespace {

ChernIntegrator lemma_integrator(const SyzygyFamily& fam) {
  const auto ids = lemma_identities(fam);
  const int r = fam.r;
  struct Entry {
    std::vector<int> factors;
    int theta;
    Rational value;
  };
  const Rational top = ids[4].rhs;
  auto closed = [&](int k) { return ids[static_cast<std::size_t>(k - 1)].rhs; };
  std::vector<Entry> table = {{{r}, 0, top},
                              {{r - 1}, 1, closed(1)},
                              {{r - 2}, 2, closed(2)},
                              {{r - 2, 1}, 1, closed(3)},
                              {{r - 1, 1}, 0, closed(4)}};
  for (auto& e : table) normalize_factors(e.factors, r);
  return [table](const std::vector<int>& factors, int theta) {
    std::vector<int> f = factors;
    std::sort(f.begin(), f.end());
    for (const auto& e : table) {
      if (e.factors == f && e.theta == theta) return e.value;
    }
    throw DomainError("no closed-form identity covers this Chern product");
  };
}

}  // namespace

SolvedClass solve_coefficients(int s, int i, IntersectionSource source) {
  const auto fam = SyzygyFamily::make(s, i);
  const EvalContext ctx = EvalContext::for_family(fam);
  const ChernIntegrator chern =
      source == IntersectionSource::HarrisTu ? harris_tu_integrator(ctx) : lemma_integrator(fam);

  SolvedClass out{fam, {}, {}, {}, {}, {}};
  out.degree_X = integrate(restricted_difference(TestLocus::X, fam) * class_X(ctx), chern);
  out.degree_Y = integrate(restricted_difference(TestLocus::Y, fam) * class_Y(ctx), chern);

  // Unknown class Aλ - B0δ0 - B1δ1 paired with the test curves R, C0, C1.
  const int g = fam.g;
  std::vector<std::vector<Rational>> m;
  for (const auto& name : {"R", "C0", "C1"}) {
    const CurveProfile p = curve_profile(name, g);
    m.push_back({p.lambda, -p.delta0, -p.delta[0]});
  }
  const std::vector<Rational> rhs = {Rational(0), out.degree_Y, out.degree_X};
  const Rational det = determinant(m);
  if (det == 0) throw DomainError("singular test-curve system");
  std::vector<Rational> x;
  for (std::size_t col = 0; col < 3; ++col) {
    auto mc = m;
    for (std::size_t row = 0; row < 3; ++row) mc[row][col] = rhs[row];
    x.push_back(determinant(std::move(mc)) / det);
  }
  out.A = x[0];
  out.B0 = x[1];
  out.B1 = x[2];
  if (out.B0 == 0) throw DomainError("solved class has B0 = 0");
  return out;
}

std::uint64_t solve_cost(int s, int i) {
  const auto fam = SyzygyFamily::make(s, i);
  const int r = fam.r;
  const std::uint64_t n = static_cast<std::uint64_t>(r + 1);
  std::uint64_t orbits = 0;
  const std::vector<std::pair<std::vector<int>, int>> needed = {
      {{r}, 0}, {{r - 1}, 1}, {{r - 2}, 2}, {{r - 2, 1}, 1}, {{r - 1, 1}, 0}};
  for (const auto& [f, theta] : needed) orbits += chern_product_orbit_count(f, r);
  return orbits * n * n * n;
}

}  // namespace modcone
