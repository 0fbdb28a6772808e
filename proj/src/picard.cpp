#include "modcone/picard.hpp"

#include <algorithm>
#include <charconv>

namespace modcone {

namespace {

constexpr int kMaxExpandedPoints = 16;

std::string describe(const BoundaryIndex& idx) {
  if (idx.kind == BoundaryKind::Irreducible) return "delta_0";
  std::string s = "delta_{" + std::to_string(idx.genus) + ":{";
  for (std::size_t k = 0; k < idx.labels.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(idx.labels[k]);
  }
  return s + "}}";
}

std::vector<int> complement(const std::vector<int>& labels, int n) {
  std::vector<int> out;
  for (int p = 1; p <= n; ++p) {
    if (!std::binary_search(labels.begin(), labels.end(), p)) out.push_back(p);
  }
  return out;
}

int parse_int(std::string_view s, std::string_view context) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw PicardError("malformed integer in key '" + std::string(context) + "'");
  }
  return value;
}

void require_expandable(const ModuliSignature& sig) {
  if (sig.n > kMaxExpandedPoints) {
    throw PicardError("explicit boundary enumeration supports n <= " +
                      std::to_string(kMaxExpandedPoints) + ", got n = " + std::to_string(sig.n) +
                      "; use the symmetric form");
  }
}

}  // namespace

void ModuliSignature::validate() const {
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) {
    throw PicardError("unstable signature " + to_string(*this) + ": need 2g-2+n > 0");
  }
}

std::string to_string(const ModuliSignature& sig) {
  return "(g=" + std::to_string(sig.g) + ", n=" + std::to_string(sig.n) + ")";
}

BoundaryIndex BoundaryIndex::separating(int genus, std::vector<int> labels) {
  std::sort(labels.begin(), labels.end());
  return {BoundaryKind::Separating, genus, std::move(labels)};
}

BoundaryIndex canonicalize(const BoundaryIndex& idx, const ModuliSignature& sig) {
  sig.validate();
  if (idx.kind == BoundaryKind::Irreducible) return BoundaryIndex::irreducible();
  if (idx.genus < 0 || idx.genus > sig.g) {
    throw PicardError(describe(idx) + ": genus must lie in [0, " + std::to_string(sig.g) + "]");
  }
  std::vector<int> s = idx.labels;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw PicardError(describe(idx) + ": repeated marked point");
  }
  if (!s.empty() && (s.front() < 1 || s.back() > sig.n)) {
    throw PicardError(describe(idx) + ": marked points must lie in 1.." + std::to_string(sig.n));
  }
  std::vector<int> c = complement(s, sig.n);

  int genus = idx.genus;
  const int other = sig.g - genus;
  bool flip = genus > other;
  if (genus == other && sig.n > 0) flip = s.empty() || s.front() != 1;
  if (flip) {
    genus = other;
    std::swap(s, c);
  }
  // A genus-0 side is attached at one node and needs two marked points to be stable.
  if ((genus == 0 && s.size() < 2) || (sig.g - genus == 0 && c.size() < 2)) {
    throw PicardError(describe(idx) + ": unstable boundary divisor on M_" + to_string(sig));
  }
  return {BoundaryKind::Separating, genus, std::move(s)};
}

std::vector<BoundaryIndex> separating_boundary(const ModuliSignature& sig) {
  sig.validate();
  require_expandable(sig);
  std::vector<BoundaryIndex> out;
  for (int genus = 0; 2 * genus <= sig.g; ++genus) {
    for (unsigned mask = 0; mask < (1u << sig.n); ++mask) {
      std::vector<int> labels;
      for (int p = 0; p < sig.n; ++p) {
        if (mask & (1u << p)) labels.push_back(p + 1);
      }
      BoundaryIndex idx{BoundaryKind::Separating, genus, labels};
      try {
        if (canonicalize(idx, sig) == idx) out.push_back(std::move(idx));
      } catch (const PicardError&) {
        // unstable, not a divisor
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string boundary_key(const BoundaryIndex& idx, const ModuliSignature& sig) {
  if (idx.kind == BoundaryKind::Irreducible) return "0";
  if (sig.n == 0) return std::to_string(idx.genus);
  std::string key = std::to_string(idx.genus) + ":{";
  for (std::size_t k = 0; k < idx.labels.size(); ++k) {
    if (k) key += ",";
    key += std::to_string(idx.labels[k]);
  }
  return key + "}";
}

BoundaryIndex parse_boundary_key(std::string_view key, const ModuliSignature& sig) {
  if (key == "0") return BoundaryIndex::irreducible();
  BoundaryIndex idx;
  if (sig.n == 0) {
    idx = BoundaryIndex::separating(parse_int(key, key));
  } else {
    const auto colon = key.find(':');
    if (colon == std::string_view::npos || key.size() < colon + 3 || key[colon + 1] != '{' ||
        key.back() != '}') {
      throw PicardError("malformed boundary key '" + std::string(key) + "', expected i:{a,b,...}");
    }
    const int genus = parse_int(key.substr(0, colon), key);
    std::vector<int> labels;
    std::string_view body = key.substr(colon + 2, key.size() - colon - 3);
    while (!body.empty()) {
      const auto comma = body.find(',');
      labels.push_back(parse_int(body.substr(0, comma), key));
      body = comma == std::string_view::npos ? std::string_view() : body.substr(comma + 1);
    }
    idx = BoundaryIndex{BoundaryKind::Separating, genus, labels};
  }
  BoundaryIndex canon;
  try {
    canon = canonicalize(idx, sig);
  } catch (const PicardError& e) {
    throw PicardError("invalid boundary key '" + std::string(key) + "': " + e.what());
  }
  if (canon != idx) {
    throw PicardError("non-canonical boundary key '" + std::string(key) + "', expected '" +
                      boundary_key(canon, sig) + "'");
  }
  return canon;
}

// ---------------------------------------------------------------------------

DivisorClass::DivisorClass(ModuliSignature sig) : sig_(sig) {
  sig_.validate();
  psi_.assign(static_cast<std::size_t>(sig_.n), Rational(0));
}

DivisorClass DivisorClass::mg(int g, const Rational& a, const std::vector<Rational>& b) {
  DivisorClass d(ModuliSignature{g, 0});
  d.set_lambda(a);
  for (std::size_t i = 0; i < b.size(); ++i) d.set_delta(static_cast<int>(i), -b[i]);
  return d;
}

const Rational& DivisorClass::psi(int point) const {
  if (point < 1 || point > sig_.n) throw PicardError("psi index out of range");
  return psi_[static_cast<std::size_t>(point - 1)];
}

Rational DivisorClass::delta(const BoundaryIndex& idx) const {
  const BoundaryIndex canon = canonicalize(idx, sig_);
  if (canon.kind == BoundaryKind::Irreducible) return delta0_;
  const auto it = deltas_.find(canon);
  return it == deltas_.end() ? Rational(0) : it->second;
}

Rational DivisorClass::delta(int i) const {
  if (sig_.n != 0) throw PicardError("delta(i) shortcut requires n = 0");
  return i == 0 ? delta0_ : delta(BoundaryIndex::separating(i));
}

DivisorClass& DivisorClass::set_lambda(Rational v) {
  lambda_ = std::move(v);
  return *this;
}

DivisorClass& DivisorClass::set_psi(int point, Rational v) {
  if (point < 1 || point > sig_.n) throw PicardError("psi index out of range");
  psi_[static_cast<std::size_t>(point - 1)] = std::move(v);
  return *this;
}

DivisorClass& DivisorClass::set_delta0(Rational v) {
  delta0_ = std::move(v);
  return *this;
}

DivisorClass& DivisorClass::set_delta(const BoundaryIndex& idx, Rational v) {
  BoundaryIndex canon = canonicalize(idx, sig_);
  if (canon.kind == BoundaryKind::Irreducible) return set_delta0(std::move(v));
  if (v == 0) {
    deltas_.erase(canon);
  } else {
    deltas_[std::move(canon)] = std::move(v);
  }
  return *this;
}

DivisorClass& DivisorClass::set_delta(int i, Rational v) {
  if (sig_.n != 0) throw PicardError("set_delta(i) shortcut requires n = 0");
  if (i == 0) return set_delta0(std::move(v));
  return set_delta(BoundaryIndex::separating(i), std::move(v));
}

bool DivisorClass::is_zero() const {
  return lambda_ == 0 && delta0_ == 0 && deltas_.empty() &&
         std::all_of(psi_.begin(), psi_.end(), [](const Rational& q) { return q == 0; });
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  if (other.sig_ != sig_) {
    throw PicardError("signature mismatch: " + to_string(sig_) + " vs " + to_string(other.sig_));
  }
  lambda_ += other.lambda_;
  delta0_ += other.delta0_;
  for (std::size_t k = 0; k < psi_.size(); ++k) psi_[k] += other.psi_[k];
  for (const auto& [idx, v] : other.deltas_) {
    Rational sum = delta(idx) + v;
    if (sum == 0) {
      deltas_.erase(idx);
    } else {
      deltas_[idx] = std::move(sum);
    }
  }
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& c) {
  if (c == 0) {
    *this = DivisorClass(sig_);
    return *this;
  }
  lambda_ *= c;
  delta0_ *= c;
  for (auto& q : psi_) q *= c;
  for (auto& [idx, v] : deltas_) v *= c;
  return *this;
}

DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a += Rational(-1) * b; }
DivisorClass operator*(const Rational& c, DivisorClass d) { return d *= c; }

DivisorClass lincomb(const std::vector<std::pair<Rational, DivisorClass>>& terms) {
  if (terms.empty()) throw PicardError("lincomb of an empty list has no signature");
  DivisorClass out(terms.front().second.signature());
  for (const auto& [c, d] : terms) out += c * d;
  return out;
}

// ---------------------------------------------------------------------------

OrbitKey canonical_orbit(int genus, int size, const ModuliSignature& sig) {
  sig.validate();
  if (genus < 0 || genus > sig.g || size < 0 || size > sig.n) {
    throw PicardError("orbit (" + std::to_string(genus) + ", " + std::to_string(size) +
                      ") out of range for " + to_string(sig));
  }
  OrbitKey key{genus, size};
  const OrbitKey mirror{sig.g - genus, sig.n - size};
  if (mirror.genus < key.genus || (mirror.genus == key.genus && mirror.size > key.size)) {
    key = mirror;
  }
  if ((key.genus == 0 && key.size < 2) || (sig.g - key.genus == 0 && sig.n - key.size < 2)) {
    throw PicardError("unstable boundary orbit (" + std::to_string(genus) + ", " +
                      std::to_string(size) + ") on M_" + to_string(sig));
  }
  return key;
}

std::vector<OrbitKey> boundary_orbits(const ModuliSignature& sig) {
  sig.validate();
  std::vector<OrbitKey> out;
  for (int genus = 0; 2 * genus <= sig.g; ++genus) {
    for (int size = 0; size <= sig.n; ++size) {
      try {
        const OrbitKey key{genus, size};
        if (canonical_orbit(genus, size, sig) == key) out.push_back(key);
      } catch (const PicardError&) {
      }
    }
  }
  return out;
}

std::string orbit_key(const OrbitKey& key) {
  return std::to_string(key.genus) + ":" + std::to_string(key.size);
}

OrbitKey parse_orbit_key(std::string_view key, const ModuliSignature& sig) {
  const auto colon = key.find(':');
  if (colon == std::string_view::npos) {
    throw PicardError("malformed orbit key '" + std::string(key) + "', expected genus:size");
  }
  const OrbitKey raw{parse_int(key.substr(0, colon), key), parse_int(key.substr(colon + 1), key)};
  OrbitKey canon;
  try {
    canon = canonical_orbit(raw.genus, raw.size, sig);
  } catch (const PicardError& e) {
    throw PicardError("invalid orbit key '" + std::string(key) + "': " + e.what());
  }
  if (canon != raw) {
    throw PicardError("non-canonical orbit key '" + std::string(key) + "', expected '" +
                      orbit_key(canon) + "'");
  }
  return canon;
}

SymmetricDivisorClass::SymmetricDivisorClass(ModuliSignature sig) : sig_(sig) { sig_.validate(); }

Rational SymmetricDivisorClass::orbit(const OrbitKey& key) const {
  const auto it = orbits_.find(canonical_orbit(key.genus, key.size, sig_));
  return it == orbits_.end() ? Rational(0) : it->second;
}

SymmetricDivisorClass& SymmetricDivisorClass::set_lambda(Rational v) {
  lambda_ = std::move(v);
  return *this;
}

SymmetricDivisorClass& SymmetricDivisorClass::set_psi(Rational v) {
  psi_ = std::move(v);
  return *this;
}

SymmetricDivisorClass& SymmetricDivisorClass::set_delta0(Rational v) {
  delta0_ = std::move(v);
  return *this;
}

SymmetricDivisorClass& SymmetricDivisorClass::set_orbit(const OrbitKey& key, Rational v) {
  const OrbitKey canon = canonical_orbit(key.genus, key.size, sig_);
  if (v == 0) {
    orbits_.erase(canon);
  } else {
    orbits_[canon] = std::move(v);
  }
  return *this;
}

DivisorClass SymmetricDivisorClass::expand() const {
  DivisorClass d(sig_);
  d.set_lambda(lambda_).set_delta0(delta0_);
  for (int p = 1; p <= sig_.n; ++p) d.set_psi(p, psi_);
  for (const auto& idx : separating_boundary(sig_)) {
    d.set_delta(idx, orbit({idx.genus, static_cast<int>(idx.labels.size())}));
  }
  return d;
}

SymmetricDivisorClass SymmetricDivisorClass::symmetrize(const DivisorClass& d) {
  const auto& sig = d.signature();
  SymmetricDivisorClass out(sig);
  out.set_lambda(d.lambda()).set_delta0(d.delta0());
  if (sig.n > 0) {
    out.set_psi(d.psi(1));
    for (int p = 2; p <= sig.n; ++p) {
      if (d.psi(p) != d.psi(1)) throw PicardError("class is not S_n-invariant: psi coefficients differ");
    }
  }
  std::map<OrbitKey, Rational> seen;
  for (const auto& idx : separating_boundary(sig)) {
    const OrbitKey key = canonical_orbit(idx.genus, static_cast<int>(idx.labels.size()), sig);
    const Rational v = d.delta(idx);
    const auto [it, inserted] = seen.emplace(key, v);
    if (!inserted && it->second != v) {
      throw PicardError("class is not S_n-invariant: boundary orbit " + orbit_key(key) +
                        " has differing coefficients");
    }
  }
  for (const auto& [key, v] : seen) out.set_orbit(key, v);
  return out;
}

}  // namespace modcone
