#include "modcone/cli.hpp"

#include "modcone/cones.hpp"
#include "modcone/jacobian.hpp"
#include "modcone/pointed.hpp"
#include "modcone/report.hpp"
#include "modcone/slopes.hpp"
#include "modcone/syzygy.hpp"
#include "output.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace modcone::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string format = "text";
  int jobs = 1;
  double budget_seconds = 600;
};

Format parse_format(const std::string& name) {
  static const std::map<std::string, Format> formats = {
      {"text", Format::Text}, {"json", Format::Json}, {"tsv", Format::Tsv}, {"markdown", Format::Markdown}};
  return formats.at(name);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

FlaggedClass load_class(const std::string& path) {
  try {
    return parse_class(read_file(path));
  } catch (const SerializationError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

FlaggedSymmetricClass load_symmetric(const std::string& path) {
  ClassDocument doc = [&] {
    try {
      return parse_document(read_file(path));
    } catch (const SerializationError& e) {
      throw UsageError(path + ": " + e.what());
    }
  }();
  if (auto* sym = std::get_if<FlaggedSymmetricClass>(&doc)) return std::move(*sym);
  try {
    return symmetrize(std::get<FlaggedClass>(doc));
  } catch (const PicardError& e) {
    throw UsageError(path + ": candidate is not symmetric: " + e.what());
  }
}

/// Classes fed to checks must be fully known; bounds are reported as a note.
DivisorClass checked_value(const FlaggedClass& f, Output& out) {
  if (!f.complete) throw UsageError("class '" + f.name + "' has unknown coefficients");
  if (!f.lower_bounded.empty()) {
    out.notes.push_back(std::to_string(f.lower_bounded.size()) +
                        " boundary coefficient(s) are lower bounds; results refer to the stored values");
  }
  return f.value;
}

Table coefficient_table(const FlaggedClass& f) {
  const DivisorClass& d = f.value;
  const auto& sig = d.signature();
  Table t("class " + (f.name.empty() ? to_string(sig) : f.name), {"basis", "coefficient", "flag"});
  t.add({text("lambda"), number(d.lambda()), text("")});
  for (int p = 1; p <= sig.n; ++p) t.add({text("psi_" + std::to_string(p)), number(d.psi(p)), text("")});
  t.add({text("delta_0"), number(d.delta0()), text("")});
  for (const auto& [idx, v] : d.separating()) {
    t.add({text("delta_" + boundary_key(idx, sig)), number(v),
           text(f.lower_bounded.contains(idx) ? "lower-bounded" : "")});
  }
  return t;
}

Table coefficient_table(const FlaggedSymmetricClass& f) {
  const SymmetricDivisorClass& d = f.value;
  Table t("class " + (f.name.empty() ? to_string(d.signature()) : f.name), {"basis", "coefficient", "flag"});
  t.add({text("lambda"), number(d.lambda()), text("")});
  if (d.signature().n > 0) t.add({text("psi_i"), number(d.psi()), text("")});
  t.add({text("delta_0"), number(d.delta0()), text("")});
  for (const auto& [key, v] : d.orbits()) {
    t.add({text("delta_" + orbit_key(key)), number(v), text(f.lower_bounded.contains(key) ? "lower-bounded" : "")});
  }
  return t;
}

template <class Flagged>
Output class_output(const Flagged& f) {
  Output out;
  out.document = to_json(f);
  out.tables.push_back(coefficient_table(f));
  if (!f.complete) out.notes.push_back("incomplete: boundary coefficients not listed are unknown");
  return out;
}

Cell slope_cell(const SlopeValue& s) { return s.is_infinite() ? text("infinite") : number(s.value()); }

// ---------------------------------------------------------------------------

Output fcheck_output(const std::string& path, bool strict) {
  const FlaggedClass f = load_class(path);
  Output out;
  const DivisorClass d = checked_value(f, out);
  const FCheck check = strict ? f_ample_check(d) : f_nef_check(d);
  const auto count = enumerate_fcurve_functionals(d.signature().g).size();
  out.tables.push_back(Table(strict ? "F-ample check" : "F-nef check", {"class", "functionals", "violations", "pass"})
                           .add({text(f.name.empty() ? path : f.name), integer(static_cast<long long>(count)),
                                 integer(static_cast<long long>(check.violations.size())), flag(check.pass)}));
  Table v("violated functionals", {"functional", "formula", "value"});
  for (const auto& fv : check.violations) v.add({text(fv.functional.tag()), text(fv.functional.formula()), number(fv.value)});
  out.tables.push_back(std::move(v));
  out.status = check.pass ? kExitOk : kExitFailed;
  return out;
}

Output nefsuff_output(const std::string& path) {
  const FlaggedClass f = load_class(path);
  Output out;
  const NefVerdict v = nef_sufficient(checked_value(f, out));
  out.tables.push_back(Table("nef sufficiency", {"class", "verdict"}).add({text(f.name.empty() ? path : f.name), text(to_string(v))}));
  out.status = v == NefVerdict::ProvedNef ? kExitOk : kExitFailed;
  return out;
}

Output member_output(const std::string& target_path, const std::vector<std::string>& gen_paths) {
  Output out;
  const DivisorClass target = checked_value(load_class(target_path), out);
  std::vector<DivisorClass> gens;
  for (const auto& p : gen_paths) gens.push_back(checked_value(load_class(p), out));
  const ConeMembership m = cone_member(target, gens);
  out.tables.push_back(Table("cone membership", {"target", "generators", "member"})
                           .add({text(target_path), integer(static_cast<long long>(gens.size())), flag(m.member())}));
  if (m.member()) {
    Table t("multipliers", {"generator", "multiplier"});
    for (std::size_t k = 0; k < gens.size(); ++k) t.add({text(gen_paths[k]), number(m.certificate->multipliers[k])});
    out.tables.push_back(std::move(t));
    out.status = kExitOk;
  } else {
    const DivisorClass& y = *m.separator;
    Table t("separating functional", {"basis", "coefficient"});
    t.add({text("lambda"), number(y.lambda())});
    for (int p = 1; p <= y.signature().n; ++p) t.add({text("psi_" + std::to_string(p)), number(y.psi(p))});
    t.add({text("delta_0"), number(y.delta0())});
    for (const auto& [idx, v] : y.separating()) t.add({text("delta_" + boundary_key(idx, y.signature())), number(v)});
    out.tables.push_back(std::move(t));
    out.tables.push_back(Table("pairings", {"class", "value"}).add({text(target_path), number(coefficient_dot(y, target))}));
    for (std::size_t k = 0; k < gens.size(); ++k) out.tables.back().add({text(gen_paths[k]), number(coefficient_dot(y, gens[k]))});
    out.status = kExitFailed;
  }
  return out;
}

Output fcurve_output(std::optional<int> g, std::optional<int> zero_n) {
  Output out;
  if (g.has_value() == zero_n.has_value()) throw UsageError("fcurve list needs exactly one of --g and --zero-n");
  if (g) {
    Table t("F-curve functionals on M_" + std::to_string(*g), {"index", "family", "formula"});
    long long k = 0;
    for (const auto& f : enumerate_fcurve_functionals(*g)) t.add({integer(++k), text(f.tag()), text(f.formula())});
    out.tables.push_back(std::move(t));
  } else {
    Table t("F-curves on M_{0," + std::to_string(*zero_n) + "}", {"index", "partition"});
    long long k = 0;
    for (const auto& p : enumerate_fcurves_0n(*zero_n)) t.add({integer(++k), text(to_string(p))});
    out.tables.push_back(std::move(t));
  }
  return out;
}

Output slope_output(const std::string& path) {
  const FlaggedClass f = load_class(path);
  Output out;
  out.tables.push_back(Table("slope", {"class", "slope"}).add({text(f.name.empty() ? path : f.name), slope_cell(slope(checked_value(f, out)))}));
  return out;
}

Output pair_output(const std::string& path, const std::string& curve) {
  const FlaggedClass f = load_class(path);
  Output out;
  const DivisorClass d = checked_value(f, out);
  const CurveProfile c = curve_profile(curve, d.signature().g);
  out.tables.push_back(Table("pairing", {"class", "curve", "value"}).add({text(f.name.empty() ? path : f.name), text(c.name), number(pair(d, c))}));
  return out;
}

Output k3_output(const std::string& path) {
  const FlaggedClass f = load_class(path);
  Output out;
  const K3Verdict v = k3_slope_test(checked_value(f, out));
  out.tables.push_back(Table("K3 slope test", {"slope", "threshold", "below threshold", "pencil pairing", "b_i >= b_0"})
                           .add({slope_cell(v.slope), number(v.threshold), flag(v.below_threshold), number(v.pencil_pairing),
                                 flag(v.b_dominant)}));
  if (v.below_threshold) out.notes.push_back("the divisor contains the locus of curves on K3 surfaces");
  out.status = v.below_threshold ? kExitOk : kExitFailed;
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("'" + text + "' is not a comma-separated list of integers");
    }
  }
  return out;
}

Output certify_mg_output(const std::string& path) {
  const FlaggedClass f = load_class(path);
  const auto cert = general_type_certificate_mg(f);
  Output out;
  if (!cert) {
    out.tables.push_back(Table("general type certificate", {"class", "result"}).add({text(f.name.empty() ? path : f.name), text("infeasible")}));
    out.status = kExitFailed;
    return out;
  }
  out.tables.push_back(Table("general type certificate", {"class", "result", "alpha", "beta"})
                           .add({text(f.name.empty() ? path : f.name), text("feasible"), number(cert->alpha), number(cert->beta)}));
  Table b("boundary", {"delta", "c"});
  for (std::size_t i = 0; i < cert->boundary.size(); ++i) b.add({text("delta_" + std::to_string(i)), number(cert->boundary[i])});
  out.tables.push_back(std::move(b));
  if (!f.lower_bounded.empty()) out.notes.push_back("lower-bounded coefficients entered at their bound; the decomposition persists for larger values");
  return out;
}

Output certify_mgn_output(int g, int n, const std::vector<std::string>& paths) {
  std::vector<FlaggedSymmetricClass> candidates;
  for (const auto& p : paths) candidates.push_back(load_symmetric(p));
  const auto cert = general_type_certificate_gn(g, n, candidates);
  Output out;
  if (!cert) {
    out.tables.push_back(Table("general type certificate", {"signature", "result"}).add({text(to_string(ModuliSignature{g, n})), text("inconclusive")}));
    out.status = kExitFailed;
    return out;
  }
  out.tables.push_back(Table("general type certificate", {"signature", "result", "t", "ample lambda", "ample psi"})
                           .add({text(to_string(ModuliSignature{g, n})), text("feasible"), number(cert->t), number(cert->ample_lambda),
                                 number(cert->ample_psi)}));
  Table a("multipliers", {"candidate", "alpha"});
  for (std::size_t k = 0; k < paths.size(); ++k) a.add({text(paths[k]), number(cert->alpha[k])});
  out.tables.push_back(std::move(a));
  Table e("boundary", {"delta", "e"});
  e.add({text("delta_0"), number(cert->boundary_delta0)});
  for (const auto& [key, v] : cert->boundary) e.add({text("delta_" + orbit_key(key)), number(v)});
  out.tables.push_back(std::move(e));
  return out;
}

Output table_mgn_output() {
  Output out;
  Table t("M_g,n general type thresholds", {"g", "f(g)"});
  for (const auto& [g, f] : mgn_table()) t.add({integer(static_cast<long long>(g)), integer(static_cast<long long>(f))});
  out.tables.push_back(std::move(t));
  out.notes.push_back("reported values; full re-derivation out of scope");
  return out;
}

Output table_slopes_output() {
  Output out;
  Table t("fixed slopes", {"label", "slope", "below 13/2"});
  for (const auto& f : fixed_slopes()) t.add({text(f.label), number(f.value), flag(f.value < make_rational(13, 2))});
  out.tables.push_back(std::move(t));
  return out;
}

Output syzygy_output(const std::string& what, int s, int i) {
  const SyzygyFamily fam = SyzygyFamily::make(s, i);
  Output out;
  if (what == "params") {
    out.tables.push_back(Table("family", {"s", "i", "r", "g", "d", "rho"})
                             .add({integer(s), integer(i), integer(fam.r), integer(fam.g), integer(fam.d),
                                   integer(static_cast<long long>(rho(fam.g, fam.r, fam.d)))}));
  } else if (what == "ranks") {
    const BundleRanks r = ranks(fam);
    out.tables.push_back(Table("ranks", {"s", "i", "rank A", "rank B", "equal"})
                             .add({integer(s), integer(i), integer(r.source), integer(r.target), flag(r.source == r.target)}));
    out.status = r.source == r.target ? kExitOk : kExitFailed;
  } else {
    out.tables.push_back(Table("virtual slope", {"s", "i", "g", "f(s,i)", "g(s,i)", "slope"})
                             .add({integer(s), integer(i), integer(fam.g), integer(slope_numerator(s, i)),
                                   integer(slope_denominator(s, i)), number(virtual_slope(s, i))}));
  }
  return out;
}

Output syzygy_sweep_output(const SweepRange& range) {
  Output out;
  Table t("sweep", {"s", "i", "g", "slope", "upper", "sandwich", "ranks equal"});
  for (const auto& [s, i] : range.points()) {
    const SyzygyFamily fam = SyzygyFamily::make(s, i);
    const BundleRanks r = ranks(fam);
    const Rational v = virtual_slope(s, i);
    std::optional<SlopeBound> b;
    if (s >= 2) b = bound_check(s, i);
    t.add({integer(s), integer(i), integer(fam.g), number(v), number(brill_noether_slope(fam.g)),
           text(b ? (b->ok() ? "ok" : "FAIL") : "n/a"), flag(r.source == r.target)});
    if ((b && !b->ok()) || r.source != r.target) out.status = kExitFailed;
  }
  out.tables.push_back(std::move(t));
  return out;
}

Output syzygy_checks_output(int smax, int imax) {
  Output out;
  Table t("specializations", {"form", "s", "i", "polynomial", "closed form", "equal"});
  for (const auto& c : specialization_checks(smax, imax)) {
    t.add({text(c.name), integer(c.s), integer(c.i), number(c.polynomial), number(c.closed_form), flag(c.ok())});
    if (!c.ok()) out.status = kExitFailed;
  }
  out.tables.push_back(std::move(t));
  return out;
}

OrbitConvention parse_convention(const std::string& name) {
  if (name == "orbit-summed") return OrbitConvention::OrbitSummed;
  return OrbitConvention::SortedOnce;
}

Output lemma_output(int s, int i, const std::string& convention) {
  Output out;
  Table t("lemma identities (" + convention + ")", {"identity", "statement", "lhs", "rhs", "holds"});
  for (const auto& l : lemma_identities(SyzygyFamily::make(s, i), parse_convention(convention))) {
    t.add({integer(l.number), text(l.statement), number(l.lhs), number(l.rhs), flag(l.ok())});
    if (!l.ok()) out.status = kExitFailed;
  }
  out.tables.push_back(std::move(t));
  return out;
}

Output calibrate_output() {
  const CalibrationResult cal = calibrate_orbit_convention();
  Output out;
  Table t("calibration at (2,0)", {"convention", "identities holding"});
  for (const auto& [conv, ids] : cal.at_2_0) {
    long long holds = 0;
    for (const auto& l : ids) holds += l.ok() ? 1 : 0;
    t.add({text(to_string(conv)), text(std::to_string(holds) + "/" + std::to_string(ids.size()))});
  }
  out.tables.push_back(std::move(t));
  bool recheck = true;
  for (const auto& l : cal.recheck_3_0) recheck = recheck && l.ok();
  out.tables.push_back(Table("chosen", {"convention", "recheck (3,0)"}).add({text(to_string(cal.chosen)), flag(recheck)}));
  out.status = recheck ? kExitOk : kExitFailed;
  return out;
}

Output solve_output(int s, int i, const std::string& source, const Budget& budget) {
  Output out;
  const std::uint64_t cost = solve_cost(s, i);
  if (cost > budget.units) {
    out.tables.push_back(Table("solve", {"s", "i", "status", "cost", "budget"})
                             .add({integer(s), integer(i), text("SKIPPED"), integer(static_cast<long long>(cost)),
                                   integer(static_cast<long long>(budget.units))}));
    out.status = kExitFailed;
    return out;
  }
  const SolvedClass c = solve_coefficients(s, i, source == "lemma" ? IntersectionSource::LemmaFormulas : IntersectionSource::HarrisTu);
  const Rational expected = virtual_slope(s, i);
  out.tables.push_back(Table("solve", {"s", "i", "A", "B0", "B1", "deg X", "deg Y", "slope", "virtual slope", "match", "B1 = 12B0 - A"})
                           .add({integer(s), integer(i), number(c.A), number(c.B0), number(c.B1), number(c.degree_X),
                                 number(c.degree_Y), number(c.slope()), number(expected), flag(c.slope() == expected),
                                 flag(c.B1 == 12 * c.B0 - c.A)}));
  out.status = c.slope() == expected ? kExitOk : kExitFailed;
  return out;
}

Output ht_output(const std::string& exponents, int theta, int s, int i) {
  const EvalContext ctx = EvalContext::for_family(SyzygyFamily::make(s, i));
  const std::vector<int> e = parse_int_list(exponents);
  Output out;
  out.tables.push_back(Table("Harris-Tu", {"exponents", "theta", "h", "r", "d", "value"})
                           .add({text(exponents), integer(theta), integer(ctx.h), integer(ctx.r), integer(ctx.d),
                                 number(harris_tu(e, theta, ctx))}));
  return out;
}

Output report_output(const SweepRange& range, const Budget& budget, int jobs) {
  const SweepReport r = build_report(range, budget, jobs);
  Output out;
  Table t("sweep report", {"s", "i", "r", "g", "d", "ranks", "virtual slope", "sandwich", "solver slope", "status"});
  for (const auto& row : r.rows) {
    const auto& f = row.family;
    const bool ranks_ok = row.ranks.source == row.ranks.target;
    t.add({integer(f.s), integer(f.i), integer(f.r), integer(f.g), integer(f.d),
           text(ranks_ok ? row.ranks.source.str() + " = " + row.ranks.target.str() : "MISMATCH"),
           number(row.virtual_slope), text(row.bound ? (row.bound->ok() ? "ok" : "FAIL") : "n/a"),
           row.solved ? number(row.solved->slope()) : text("SKIPPED"),
           text(row.skipped() ? "SKIPPED (cost " + std::to_string(row.cost) + ")" : (row.ok() ? "ok" : "FAIL"))});
  }
  out.tables.push_back(std::move(t));
  Table fx("fixtures", {"check"});
  for (const auto& f : r.fixtures) fx.add({text(f.line())});
  out.tables.push_back(std::move(fx));
  out.status = r.ok() ? kExitOk : kExitFailed;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact divisor-class, slope and cone computations on moduli spaces of curves", "modcone"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "tsv", "markdown"}))
      ->capture_default_str();
  app.add_option("--jobs", global.jobs, "Worker threads for sweeps")->check(CLI::Range(1, 256))->capture_default_str();
  app.add_option("--budget-seconds", global.budget_seconds, "Compute allowance for solver runs")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  std::function<Output()> action;
  auto bind = [&](CLI::App* cmd, std::function<Output()> fn) { cmd->callback([&action, fn] { action = fn; }); };

  // cone
  auto* cone = app.add_subcommand("cone", "F-curve checks and cone membership")->require_subcommand(1);
  std::string class_path;
  for (const char* name : {"fnef", "fample", "nefsuff"}) {
    auto* c = cone->add_subcommand(name, std::string(name) == "nefsuff" ? "Sufficient nef criterion" : "F-curve inequalities");
    c->add_option("--class", class_path, "Class file")->required()->check(CLI::ExistingFile);
    const std::string which = name;
    bind(c, [&, which] { return which == "nefsuff" ? nefsuff_output(class_path) : fcheck_output(class_path, which == "fample"); });
  }
  std::string target_path;
  std::vector<std::string> gen_paths;
  auto* member = cone->add_subcommand("member", "Decide membership in a cone of classes");
  member->add_option("--target", target_path, "Target class file")->required()->check(CLI::ExistingFile);
  member->add_option("--gens", gen_paths, "Generator class files")->required()->check(CLI::ExistingFile);
  bind(member, [&] { return member_output(target_path, gen_paths); });

  // fcurve
  auto* fcurve = app.add_subcommand("fcurve", "F-curve enumeration")->require_subcommand(1);
  auto* fclist = fcurve->add_subcommand("list", "List F-curve functionals or partitions");
  std::optional<int> fc_g;
  std::optional<int> fc_n;
  auto* g_opt = fclist->add_option("--g", fc_g, "Genus (functionals on M_g)");
  fclist->add_option("--zero-n", fc_n, "Number of points (partitions for M_{0,n})")->excludes(g_opt);
  bind(fclist, [&] { return fcurve_output(fc_g, fc_n); });

  // slope, pair, k3
  auto* slope_cmd = app.add_subcommand("slope", "Slope of a class on M_g");
  slope_cmd->add_option("--class", class_path, "Class file")->required()->check(CLI::ExistingFile);
  bind(slope_cmd, [&] { return slope_output(class_path); });
  std::string curve;
  auto* pair_cmd = app.add_subcommand("pair", "Intersect a class with a test curve");
  pair_cmd->add_option("--class", class_path, "Class file")->required()->check(CLI::ExistingFile);
  pair_cmd->add_option("--curve", curve, "Test curve")->required()->check(CLI::IsMember({"B", "R", "C0", "C1"}));
  bind(pair_cmd, [&] { return pair_output(class_path, curve); });
  auto* k3 = app.add_subcommand("k3", "Slope test against curves on K3 surfaces");
  k3->add_option("--class", class_path, "Class file")->required()->check(CLI::ExistingFile);
  bind(k3, [&] { return k3_output(class_path); });

  // class
  auto* cls = app.add_subcommand("class", "Emit a named divisor class as JSON")->require_subcommand(1);
  int g = 0, n = 0, r = 0, d = 0, i = 0, s = 0;
  std::string name, weights;
  bool symmetric = false;
  auto* bn = cls->add_subcommand("bn", "Brill-Noether divisor (rho = -1)");
  bn->add_option("--g", g)->required();
  bn->add_option("--r", r)->required();
  bn->add_option("--d", d)->required();
  bind(bn, [&] { return class_output(FlaggedClass{brill_noether_class(g, r, d), {}, true, "bn"}); });
  auto* canon = cls->add_subcommand("canonical", "Canonical class of M_g");
  canon->add_option("--g", g)->required();
  bind(canon, [&] { return class_output(FlaggedClass{canonical_class_mg(g), {}, true, "canonical"}); });
  auto* named = cls->add_subcommand("named", "Fixture classes");
  std::string known;
  for (const auto& k : named_class_names()) known += (known.empty() ? "" : ", ") + k;
  named->add_option("--name", name, "One of: " + known)->required();
  bind(named, [&] { return class_output(named_class(name)); });
  auto* kgn = cls->add_subcommand("kgn", "Canonical class of M_{g,n}");
  kgn->add_option("--g", g)->required();
  kgn->add_option("--n", n)->required();
  kgn->add_flag("--symmetric", symmetric, "Emit the symmetric form");
  bind(kgn, [&] {
    ModuliSignature{g, n}.validate();
    if (symmetric) return class_output(FlaggedSymmetricClass{canonical_class_gn_symmetric(g, n), {}, true, "kgn"});
    return class_output(FlaggedClass{canonical_class_gn(g, n), {}, true, "kgn"});
  });
  auto* mrc = cls->add_subcommand("mrc", "Symmetric Mrc class with lower bounds");
  mrc->add_option("--g", g)->required();
  mrc->add_option("--r", r)->required();
  mrc->add_option("--i", i)->required();
  bind(mrc, [&] { return class_output(mrc_class(g, r, i)); });
  auto* logan = cls->add_subcommand("logan", "Logan class (displayed coefficients)");
  logan->add_option("--g", g)->required();
  logan->add_option("--a", weights, "Comma-separated weights summing to g")->required();
  bind(logan, [&] { return class_output(logan_class(g, parse_int_list(weights))); });

  // certify
  auto* certify = app.add_subcommand("certify", "General type certificates")->require_subcommand(1);
  auto* cmg = certify->add_subcommand("mg", "K = aD + b lambda + boundary on M_g");
  cmg->add_option("--class", class_path, "Effective class file")->required()->check(CLI::ExistingFile);
  bind(cmg, [&] { return certify_mg_output(class_path); });
  std::vector<std::string> candidates;
  auto* cmgn = certify->add_subcommand("mgn", "K = sum a_k D_k + ample + boundary on M_{g,n}");
  cmgn->add_option("--g", g)->required();
  cmgn->add_option("--n", n)->required();
  cmgn->add_option("--candidates", candidates, "Symmetric effective class files")->check(CLI::ExistingFile);
  bind(cmgn, [&] { return certify_mgn_output(g, n, candidates); });

  // table
  auto* table = app.add_subcommand("table", "Fixture tables")->require_subcommand(1);
  bind(table->add_subcommand("mgn", "Thresholds f(g) for M_{g,n}"), [] { return table_mgn_output(); });
  bind(table->add_subcommand("slopes", "Fixed slope values"), [] { return table_slopes_output(); });

  // syzygy
  auto* syz = app.add_subcommand("syzygy", "The (s,i) family and its virtual slopes")->require_subcommand(1);
  for (const char* what : {"params", "ranks", "slope"}) {
    auto* c = syz->add_subcommand(what, std::string("Family ") + what);
    c->add_option("--s", s)->required();
    c->add_option("--i", i)->required();
    const std::string w = what;
    bind(c, [&, w] { return syzygy_output(w, s, i); });
  }
  SweepRange range;
  auto add_range = [&](CLI::App* c) {
    c->add_option("--smin", range.s_min)->capture_default_str();
    c->add_option("--smax", range.s_max)->capture_default_str();
    c->add_option("--imin", range.i_min)->capture_default_str();
    c->add_option("--imax", range.i_max)->capture_default_str();
  };
  auto* sweep = syz->add_subcommand("sweep", "Virtual slopes, sandwich and rank checks over a grid");
  add_range(sweep);
  bind(sweep, [&] { return syzygy_sweep_output(range); });
  auto* checks = syz->add_subcommand("checks", "Closed-form specializations");
  int smax = 15, imax = 20;
  checks->add_option("--smax", smax)->capture_default_str();
  checks->add_option("--imax", imax)->capture_default_str();
  bind(checks, [&] { return syzygy_checks_output(smax, imax); });

  // jacobian
  auto* jac = app.add_subcommand("jacobian", "Intersection numbers on C x W and the class solve")->require_subcommand(1);
  std::string convention = "orbit-summed";
  auto* lemma = jac->add_subcommand("lemma-check", "Five closed-form identities");
  lemma->add_option("--s", s)->required();
  lemma->add_option("--i", i)->required();
  lemma->add_option("--convention", convention)->check(CLI::IsMember({"orbit-summed", "sorted-once"}))->capture_default_str();
  bind(lemma, [&] { return lemma_output(s, i, convention); });
  bind(jac->add_subcommand("calibrate", "Choose the orbit convention"), [] { return calibrate_output(); });
  std::string source = "harris-tu";
  bool json_flag = false;
  auto* solve = jac->add_subcommand("solve", "Solve for A, B0, B1");
  solve->add_option("--s", s)->required();
  solve->add_option("--i", i)->required();
  solve->add_option("--source", source)->check(CLI::IsMember({"harris-tu", "lemma"}))->capture_default_str();
  solve->add_flag("--json", json_flag, "Same as --format json");
  bind(solve, [&] { return solve_output(s, i, source, Budget::from_seconds(global.budget_seconds)); });
  std::string exponents;
  int theta = 0;
  auto* ht = jac->add_subcommand("ht", "Harris-Tu evaluation of a Chern-root monomial");
  ht->add_option("--exponents", exponents, "Comma-separated exponents, r+1 of them")->required();
  ht->add_option("--theta", theta)->capture_default_str();
  ht->add_option("--s", s)->required();
  ht->add_option("--i", i)->required();
  bind(ht, [&] { return ht_output(exponents, theta, s, i); });

  // report
  auto* report = app.add_subcommand("report", "Sweep report with solver confirmations");
  add_range(report);
  bind(report, [&] { return report_output(range, Budget::from_seconds(global.budget_seconds), global.jobs); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (json_flag) global.format = "json";

  try {
    const Output result = action();
    render(result, parse_format(global.format), out);
    return result.status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const PicardError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const SerializationError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace modcone::cli
