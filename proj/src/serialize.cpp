#include "modcone/picard.hpp"

#include <json.hpp>

#include <set>

namespace modcone {

namespace {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& q) { return to_string(q); }

Rational read_rational(const Json& j, const std::string& field) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SerializationError("field '" + field + "': " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw SerializationError("field '" + field + "' must be an exact rational string \"p/q\"");
}

int read_int(const Json& doc, const char* field) {
  if (!doc.contains(field) || !doc.at(field).is_number_integer()) {
    throw SerializationError(std::string("missing or non-integer field '") + field + "'");
  }
  return doc.at(field).get<int>();
}

void reject_unknown_fields(const Json& doc) {
  static const std::set<std::string> known = {"kind",  "name",          "g",       "n",
                                              "lambda", "psi",          "delta",   "lower_bounded",
                                              "complete"};
  for (const auto& item : doc.items()) {
    if (!known.contains(item.key())) throw SerializationError("unknown field '" + item.key() + "'");
  }
}

void write_header(Json& doc, const char* kind, const std::string& name, const ModuliSignature& sig) {
  if (kind) doc["kind"] = kind;
  if (!name.empty()) doc["name"] = name;
  doc["g"] = sig.g;
  doc["n"] = sig.n;
}

Json class_json(const FlaggedClass& f) {
  const DivisorClass& d = f.value;
  const auto& sig = d.signature();
  Json doc = Json::object();
  write_header(doc, nullptr, f.name, sig);
  doc["lambda"] = rational_json(d.lambda());
  Json psi = Json::array();
  for (const auto& q : d.psis()) psi.push_back(rational_json(q));
  doc["psi"] = std::move(psi);
  Json delta = Json::object();
  delta["0"] = rational_json(d.delta0());
  for (const auto& [idx, v] : d.separating()) delta[boundary_key(idx, sig)] = rational_json(v);
  doc["delta"] = std::move(delta);
  if (!f.lower_bounded.empty()) {
    Json bounds = Json::array();
    for (const auto& idx : f.lower_bounded) bounds.push_back(boundary_key(idx, sig));
    doc["lower_bounded"] = std::move(bounds);
  }
  if (!f.complete) doc["complete"] = false;
  return doc;
}

Json symmetric_json(const FlaggedSymmetricClass& f) {
  const SymmetricDivisorClass& d = f.value;
  Json doc = Json::object();
  write_header(doc, "symmetric", f.name, d.signature());
  doc["lambda"] = rational_json(d.lambda());
  doc["psi"] = rational_json(d.psi());
  Json delta = Json::object();
  delta["0"] = rational_json(d.delta0());
  for (const auto& [key, v] : d.orbits()) delta[orbit_key(key)] = rational_json(v);
  doc["delta"] = std::move(delta);
  if (!f.lower_bounded.empty()) {
    Json bounds = Json::array();
    for (const auto& key : f.lower_bounded) bounds.push_back(orbit_key(key));
    doc["lower_bounded"] = std::move(bounds);
  }
  if (!f.complete) doc["complete"] = false;
  return doc;
}

template <class Fn>
auto as_serialization_error(Fn&& fn) {
  try {
    return fn();
  } catch (const PicardError& e) {
    throw SerializationError(std::string(e.what()));
  }
}

FlaggedClass read_class(const Json& doc, ModuliSignature sig) {
  FlaggedClass f{DivisorClass(sig), {}, true, {}};
  DivisorClass& d = f.value;
  d.set_lambda(read_rational(doc.at("lambda"), "lambda"));
  if (doc.contains("psi")) {
    const Json& psi = doc.at("psi");
    if (!psi.is_array() || psi.size() != static_cast<std::size_t>(sig.n)) {
      throw SerializationError("field 'psi' must be an array of n = " + std::to_string(sig.n) +
                               " rationals");
    }
    for (int p = 1; p <= sig.n; ++p) {
      d.set_psi(p, read_rational(psi[static_cast<std::size_t>(p - 1)], "psi"));
    }
  } else if (sig.n > 0) {
    throw SerializationError("missing field 'psi'");
  }
  if (doc.contains("delta")) {
    if (!doc.at("delta").is_object()) throw SerializationError("field 'delta' must be an object");
    for (const auto& item : doc.at("delta").items()) {
      const BoundaryIndex idx =
          as_serialization_error([&] { return parse_boundary_key(item.key(), sig); });
      d.set_delta(idx, read_rational(item.value(), "delta." + item.key()));
    }
  }
  if (doc.contains("lower_bounded")) {
    for (const auto& key : doc.at("lower_bounded")) {
      if (!key.is_string()) throw SerializationError("'lower_bounded' entries must be key strings");
      const auto text = key.get<std::string>();
      f.lower_bounded.insert(as_serialization_error([&] { return parse_boundary_key(text, sig); }));
    }
  }
  return f;
}

FlaggedSymmetricClass read_symmetric(const Json& doc, ModuliSignature sig) {
  FlaggedSymmetricClass f{SymmetricDivisorClass(sig), {}, true, {}};
  SymmetricDivisorClass& d = f.value;
  d.set_lambda(read_rational(doc.at("lambda"), "lambda"));
  if (doc.contains("psi")) d.set_psi(read_rational(doc.at("psi"), "psi"));
  if (doc.contains("delta")) {
    if (!doc.at("delta").is_object()) throw SerializationError("field 'delta' must be an object");
    for (const auto& item : doc.at("delta").items()) {
      const Rational v = read_rational(item.value(), "delta." + item.key());
      if (item.key() == "0") {
        d.set_delta0(v);
      } else {
        d.set_orbit(as_serialization_error([&] { return parse_orbit_key(item.key(), sig); }), v);
      }
    }
  }
  if (doc.contains("lower_bounded")) {
    for (const auto& key : doc.at("lower_bounded")) {
      if (!key.is_string()) throw SerializationError("'lower_bounded' entries must be key strings");
      const auto text = key.get<std::string>();
      f.lower_bounded.insert(as_serialization_error([&] { return parse_orbit_key(text, sig); }));
    }
  }
  return f;
}

}  // namespace

std::string to_json(const DivisorClass& d) { return to_json(FlaggedClass{d, {}, true, {}}); }

std::string to_json(const FlaggedClass& d) { return class_json(d).dump(2) + "\n"; }

std::string to_json(const FlaggedSymmetricClass& d) { return symmetric_json(d).dump(2) + "\n"; }

ClassDocument parse_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SerializationError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SerializationError("class document must be a JSON object");
  reject_unknown_fields(doc);
  if (!doc.contains("lambda")) throw SerializationError("missing field 'lambda'");
  const ModuliSignature sig{read_int(doc, "g"), read_int(doc, "n")};
  try {
    sig.validate();
  } catch (const PicardError& e) {
    throw SerializationError(e.what());
  }
  std::string kind = "class";
  if (doc.contains("kind")) {
    if (!doc.at("kind").is_string()) throw SerializationError("field 'kind' must be a string");
    kind = doc.at("kind").get<std::string>();
  }
  const std::string name = doc.contains("name") && doc.at("name").is_string()
                               ? doc.at("name").get<std::string>()
                               : std::string();
  bool complete = true;
  if (doc.contains("complete")) {
    if (!doc.at("complete").is_boolean()) throw SerializationError("field 'complete' must be a boolean");
    complete = doc.at("complete").get<bool>();
  }
  if (kind == "class") {
    FlaggedClass f = read_class(doc, sig);
    f.name = name;
    f.complete = complete;
    return f;
  }
  if (kind == "symmetric") {
    FlaggedSymmetricClass f = read_symmetric(doc, sig);
    f.name = name;
    f.complete = complete;
    return f;
  }
  throw SerializationError("unknown document kind '" + kind + "'");
}

FlaggedClass parse_class(std::string_view text) {
  ClassDocument doc = parse_document(text);
  if (auto* f = std::get_if<FlaggedClass>(&doc)) return std::move(*f);
  const auto& sym = std::get<FlaggedSymmetricClass>(doc);
  try {
    FlaggedClass out{sym.value.expand(), {}, sym.complete, sym.name};
    for (const auto& idx : separating_boundary(sym.value.signature())) {
      const auto key = canonical_orbit(idx.genus, static_cast<int>(idx.labels.size()),
                                       sym.value.signature());
      if (sym.lower_bounded.contains(key)) out.lower_bounded.insert(idx);
    }
    return out;
  } catch (const PicardError& e) {
    throw SerializationError(e.what());
  }
}

DivisorClass from_json(std::string_view text) { return parse_class(text).value; }

}  // namespace modcone
