#pragma once

#include "modcone/picard.hpp"

#include <random>

namespace modcone::testing {

class ClassGenerator {
 public:
  explicit ClassGenerator(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int span = 40) {
    const int p = uniform(-span, span);
    const int q = uniform(1, 12);
    return make_rational(p, q);
  }

  Rational positive(int span = 40) { return make_rational(uniform(1, span), uniform(1, 12)); }

  ModuliSignature signature() {
    for (;;) {
      ModuliSignature sig{uniform(0, 6), uniform(0, 5)};
      if (2 * sig.g - 2 + sig.n > 0) return sig;
    }
  }

  BoundaryIndex boundary_index(const ModuliSignature& sig) {
    for (;;) {
      std::vector<int> labels;
      for (int p = 1; p <= sig.n; ++p) {
        if (uniform(0, 1)) labels.push_back(p);
      }
      const int genus = uniform(0, sig.g);
      const bool unstable = (genus == 0 && labels.size() < 2) ||
                            (genus == sig.g && sig.n - static_cast<int>(labels.size()) < 2);
      if (!unstable) return BoundaryIndex::separating(genus, labels);
    }
  }

  DivisorClass divisor(const ModuliSignature& sig) {
    DivisorClass d(sig);
    d.set_lambda(rational());
    for (int p = 1; p <= sig.n; ++p) {
      if (uniform(0, 2)) d.set_psi(p, rational());
    }
    d.set_delta0(rational());
    const auto boundary = separating_boundary(sig);
    for (const auto& idx : boundary) {
      if (uniform(0, 2)) d.set_delta(idx, rational());
    }
    return d;
  }

  /// aλ - Σ b_i δ_i on M̄_g with every b_i > 0.
  DivisorClass effective_mg(int g) {
    std::vector<Rational> b;
    for (int i = 0; i <= g / 2; ++i) b.push_back(positive());
    return DivisorClass::mg(g, positive(200), b);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace modcone::testing
