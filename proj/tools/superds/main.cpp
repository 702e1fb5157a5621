#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "superds/error.hpp"
#include "superds/suites.hpp"

using namespace superds;

namespace {

struct Globals {
  bool json = false;
  int depth = 3;
  int height = -1;
  std::string out;
};

std::vector<Weight> parse_weights(const std::vector<std::string>& items) {
  std::vector<Weight> out;
  for (const auto& s : items) out.push_back(parse_weight(s));
  return out;
}

Window window_of(const Globals& g) { return Window{g.depth, g.height >= 0 ? g.height : 4 * (g.depth + 1)}; }

void guard_depth(const SuperRootDatum& d, int depth) {
  if (depth < 0) throw Error(ErrorKind::WindowTooSmall, "depth must be nonnegative");
  if (depth > 5 && d.rank() > 4) throw Error(ErrorKind::WindowTooSmall, "depth > 5 refused for rank > 4 algebras");
}

// plain-text rendering: one "path: value" line per scalar
void render_text(std::ostream& os, const Json& j, const std::string& path) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) render_text(os, it.value(), path.empty() ? it.key() : path + "." + it.key());
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(os, j[i], path + "[" + std::to_string(i) + "]");
  } else if (j.is_array()) {
    os << path << ":";
    for (const auto& x : j) os << " " << (x.is_string() ? x.get<std::string>() : x.dump());
    os << "\n";
  } else {
    os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Globals& g, const Json& j) {
  std::ofstream file;
  if (!g.out.empty()) {
    file.open(g.out);
    if (!file) throw Error(ErrorKind::Parse, "cannot write " + g.out);
  }
  std::ostream& os = g.out.empty() ? std::cout : file;
  if (g.json) os << j.dump(2) << "\n";
  else render_text(os, j, "");
}

std::optional<std::string> fixture_path(const std::string& name) {
  const char* dir = std::getenv("SUPERDS_FIXTURES");
  if (!dir || !*dir) return std::nullopt;
  return std::string(dir) + "/" + name;
}

Json cmd_algebra(const std::string& spec) {
  auto d = parse_algebra(spec);
  Json j = to_json(d);
  if (!d.roots().empty()) {
    j["positive_roots"] = to_json(positive_roots(d, d.distinguished));
    j["affine_base"] = to_json(level_base(d));
    j["maximal_isotropic_set"] = to_json(maximal_isotropic_set(d));
  }
  return j;
}

Json cmd_ds(const std::string& spec, const std::vector<std::string>& s_items, const std::vector<std::string>& base_items,
            int rank, bool appendix, const std::vector<std::string>& restrict_items) {
  auto d = parse_algebra(spec);
  std::vector<Weight> S;
  Base base = d.distinguished;
  if (appendix) {
    auto ap = appendix_pair(d);
    S = ap.S;
    base = ap.base;
  } else if (!s_items.empty()) {
    S = parse_weights(s_items);
  } else {
    auto m = maximal_isotropic_set(d);
    if (rank < 0 || rank > static_cast<int>(m.size()))
      throw Error(ErrorKind::NotIsotropic, "rank must lie between 0 and the defect " + std::to_string(m.size()));
    S.assign(m.begin(), m.begin() + rank);
  }
  if (!base_items.empty()) {
    base.simple = parse_weights(base_items);
    base.affine = false;
    for (const auto& b : base.simple)
      if (sgn(b.delta_coeff()) != 0) base.affine = true;
  }
  for (const auto& b : S)
    if (!d.is_root(b)) throw Error(ErrorKind::NotIsotropic, b.to_string() + " is not a root of " + d.name);
  auto rep = ds_reduce(d, S, base);
  Json j = to_json(rep);
  j["algebra"] = d.name;
  j["table"] = ds_datum(d, S).name;
  if (appendix) j["P123"] = to_json(check_P123(d, S, base));
  if (!restrict_items.empty()) {
    Json r = Json::array();
    for (const auto& w : parse_weights(restrict_items)) r.push_back({{"weight", to_json(w)}, {"restricted", to_json(restrict_weight(w, rep))}});
    j["restrictions"] = std::move(r);
  }
  return j;
}

Json cmd_levels(const std::string& spec, const std::string& k_text, const std::vector<long>& enumerate, bool lemtt2,
                const Globals& g) {
  auto d = parse_algebra(spec);
  Json j;
  j["algebra"] = d.name;
  if (!enumerate.empty()) {
    if (enumerate.size() != 2) throw Error(ErrorKind::Parse, "--enumerate expects MAX_DEN MAX_NUM");
    Json a = Json::array();
    for (const auto& lv : enumerate_principal_admissible(d, enumerate[0], enumerate[1])) a.push_back(to_json(lv));
    j["principal_admissible"] = std::move(a);
    if (k_text.empty()) return j;
  }
  if (k_text.empty()) throw Error(ErrorKind::Parse, "--k is required");
  Rational k = parse_rational(k_text);
  auto lv = principal_admissible_level(d, k);
  j["level"] = to_json(lv);
  Base aff = level_base(d);
  j["affine_base"] = to_json(aff);
  if (lv.principal_admissible) {
    j["alpha0_prime"] = to_json(alpha0_prime(lv.u, aff));
    j["lambda0_bar"] = to_json(lambda0_bar(lv.u));
    j["mu"] = to_json(mu_weight(lv.p, lv.u, aff));
    j["r0prime_dot"] = to_json(r0prime_dot(d, k, aff, lv.u, lv.p));
    int depth = std::max<int>(static_cast<int>(3 * lv.u), 3);
    auto ir = integral_real_roots(d, k * Weight::lambda0(), aff, depth);
    if (ir.u) j["integral_roots_period"] = *ir.u;
    j["k_lambda0_admissible"] = is_admissible_weight(d, k * Weight::lambda0(), aff, depth);
    if (lemtt2) j["lemtt2"] = to_json(lemtt2_check(d, k, g.depth));
  }
  return j;
}

Json cmd_char(const std::string& spec, const std::string& k_text, const std::string& kind, bool super, const Globals& g) {
  auto d = parse_algebra(spec);
  Rational k = parse_rational(k_text);
  Base aff = level_base(d);
  Window w = window_of(g);
  Json j;
  j["algebra"] = d.name;
  j["k"] = to_json(k);
  j["kind"] = kind;
  if (kind == "vacuum") {
    j["series"] = to_json(ch_vacuum(d, aff, k, w, super));
    return j;
  }
  if (kind == "integrable") {
    if (!is_integer(k)) throw Error(ErrorKind::NegativeLevel, "integrable characters need an integral level");
    j["series"] = to_json(weyl_kac_char(d, aff, to_long(k), w));
    return j;
  }
  auto lv = principal_admissible_level(d, k);
  if (!lv.principal_admissible) throw Error(ErrorKind::NotPrincipalAdmissible, lv.reason);
  CharSeries side;
  if (d.is_lie()) {
    side = weyl_kac_char(d, aff, lv.p, w, lv.u);
  } else {
    // level-p simple module of the same algebra from the oracle, then dilated
    guard_depth(d, g.depth);
    auto A = build_structured(d);
    int side_depth = static_cast<int>((g.depth + lv.u - 1) / lv.u);
    GradedModule M(A, Rational(lv.p), side_depth);
    auto fr = make_frame(aff.simple);
    side = dilate(table_series(simple_table(M), fr, Rational(lv.p) * Weight::lambda0(), side_depth, false), aff, lv.u);
    j["integrable_side"] = "oracle";
  }
  auto ch = admissible_char(d, aff, lv, side, w);
  j["level"] = to_json(lv);
  if (kind == "admissible") {
    j["series"] = to_json(ch);
  } else if (kind == "ideal") {
    auto b = make_bundle(d, aff, lv, ch, w);
    j["series"] = to_json(b.ideal);
    // null when r0'.k Lambda0 is deeper than --depth
    auto within = [](auto&& f) -> Json {
      try {
        return f();
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::WindowTooSmall) throw;
        return nullptr;
      }
    };
    j["top_coefficient"] = within([&] { return to_json(ideal_top_coefficient(b)); });
    j["II"] = within([&] { return to_json(verify_II(b, side)); });
    j["III"] = within([&] { return to_json(verify_III(b, side)); });
  } else {
    throw Error(ErrorKind::Parse, "unknown --kind '" + kind + "' (vacuum, integrable, admissible, ideal)");
  }
  return j;
}

Json cmd_oracle(const std::string& spec, const std::string& k_text, const std::string& module,
                const std::vector<std::string>& ds_items, const std::vector<std::string>& base_items, unsigned ordering,
                bool series, bool super, const Globals& g) {
  auto d = parse_algebra(spec);
  guard_depth(d, g.depth);
  Rational k = parse_rational(k_text);
  auto A = build_structured(d);
  GradedModule M(A, k, g.depth, ordering);
  Json j;
  j["algebra"] = d.name;
  j["k"] = to_json(k);
  j["depth"] = g.depth;
  j["module"] = module;
  Base aff = level_base(d);
  if (!base_items.empty()) aff = Base{parse_weights(base_items), true};
  if (ds_items.empty()) {
    GradedTable t;
    if (module == "vac") t = vacuum_table(M);
    else if (module == "simple") t = simple_table(M);
    else if (module == "ideal") t = ideal_table(M);
    else throw Error(ErrorKind::Parse, "unknown --module '" + module + "' (vac, simple, ideal)");
    j["table"] = to_json(t);
    if (series) j["series"] = to_json(table_series(t, make_frame(aff.simple), k * Weight::lambda0(), g.depth, super));
    return j;
  }
  auto S = parse_weights(ds_items);
  auto rep = ds_reduce(d, S, aff);
  ModuleKind kind;
  if (module == "vac") kind = ModuleKind::Vacuum;
  else if (module == "simple") kind = ModuleKind::Simple;
  else throw Error(ErrorKind::Parse, "DS homology is available for --module vac or simple");
  auto H = ds_homology(M, kind, S, rep);
  long e = 0, o = 0;
  for (const auto& x : H) e += x.even, o += x.odd;
  j["S"] = to_json(S);
  j["reduced"] = rep.tag;
  j["ds_table"] = to_json(H);
  j["ds_total"] = {e, o};
  if (series)
    j["ds_series"] = to_json(table_series(H, restricted_frame(rep), restrict_weight(k * Weight::lambda0(), rep), g.depth, super));
  return j;
}

std::vector<SuiteResult> cmd_verify(const std::string& suite, const std::string& spec, const std::vector<std::string>& ks,
                                    const std::vector<std::string>& s_items, int cases, const Globals& g) {
  std::vector<Rational> levels;
  for (const auto& k : ks) levels.push_back(parse_rational(k));
  auto S = parse_weights(s_items);
  std::vector<SuiteResult> out;
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::Parse, std::string("--suite ") + suite + " needs " + what);
  };
  if (suite == "thmABC") {
    need(!spec.empty() && !levels.empty(), "--algebra and --k");
    out.push_back(suite_thmABC(spec, levels, g.depth, S));
  } else if (suite == "admissible") {
    need(!spec.empty() && levels.size() == 1, "--algebra and one --k");
    out.push_back(suite_admissible(spec, levels.front(), g.depth, S));
  } else if (suite == "sl12") {
    out.push_back(suite_sl12(g.depth, fixture_path("sl12_critical_ds.json")));
  } else if (suite == "ds-table") {
    out.push_back(suite_ds_table());
  } else if (suite == "invariants") {
    out.push_back(suite_invariants());
  } else if (suite == "ps") {
    out.push_back(suite_ps_denominators());
  } else if (suite == "appendix") {
    out.push_back(suite_appendix());
  } else if (suite == "lemtt2") {
    std::vector<std::string> algs = spec.empty() ? std::vector<std::string>{"A1", "C2"} : std::vector<std::string>{spec};
    out.push_back(suite_lemtt2(algs, 6, 12, g.depth));
  } else if (suite == "properties") {
    out.push_back(suite_ring_laws(cases));
    out.push_back(suite_ps_homomorphism(cases));
    out.push_back(suite_euler_restriction(cases));
    out.push_back(suite_reflection_invariance(cases));
    out.push_back(suite_gram_ordering(cases));
  } else {
    throw Error(ErrorKind::Parse, "unknown suite '" + suite +
                                      "' (thmABC, admissible, sl12, ds-table, invariants, ps, appendix, lemtt2, properties)");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"superds: affine Lie superalgebras and the Duflo-Serganova reduction, in exact arithmetic"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--depth", g.depth, "delta-depth window")->check(CLI::NonNegativeNumber);
  app.add_option("--height", g.height, "finite height window (default 4(depth+1))");
  app.add_option("--out", g.out, "write output to a file");

  std::string spec, k_text, kind = "vacuum", module = "simple", suite;
  std::vector<std::string> s_items, base_items, restrict_items, ks;
  std::vector<long> enumerate;
  int rank = 1, cases = 1000;
  unsigned ordering = 0;
  bool appendix = false, lemtt2 = false, super = false, series = false;

  auto* alg = app.add_subcommand("algebra", "root datum, bases, h^v, lacity, defect");
  alg->add_option("--algebra,-a", spec, "e.g. \"B(1|2)\", \"A1\", \"sl(2|1)\"")->required();

  auto* ds = app.add_subcommand("ds", "DS reduction of the root datum");
  ds->add_option("--algebra,-a", spec)->required();
  ds->add_option("--S", s_items, "isotropic roots, e.g. eps1-del1")->delimiter(',');
  ds->add_option("--base", base_items, "simple roots of the base")->delimiter(',');
  ds->add_option("--rank", rank, "use the first r roots of a maximal isotropic set when --S is absent");
  ds->add_flag("--appendix", appendix, "use appendix_pair (B/D with n > m) and report (P1)-(P3)");
  ds->add_option("--restrict", restrict_items, "weights to project to h_x*")->delimiter(',');

  auto* lv = app.add_subcommand("levels", "principal admissible levels and related weights");
  lv->add_option("--algebra,-a", spec)->required();
  lv->add_option("--k", k_text, "level p/q");
  lv->add_option("--enumerate", enumerate, "MAX_DEN MAX_NUM")->expected(2);
  lv->add_flag("--lemtt2", lemtt2, "search for admissible k Lambda0 - nu at --depth");

  auto* ch = app.add_subcommand("char", "characters as truncated series");
  ch->add_option("--algebra,-a", spec)->required();
  ch->add_option("--k", k_text)->required();
  ch->add_option("--kind", kind, "vacuum, integrable, admissible, ideal");
  ch->add_flag("--super", super, "supercharacter (vacuum only)");

  auto* orc = app.add_subcommand("oracle", "PBW vacuum module, Gram ranks, DS homology");
  orc->add_option("--algebra,-a", spec)->required();
  orc->add_option("--k", k_text)->required();
  orc->add_option("--module", module, "vac, simple, ideal");
  orc->add_option("--ds", s_items, "isotropic set for DS homology")->delimiter(',');
  orc->add_option("--base", base_items, "affine base for the DS projection and series frame")->delimiter(',');
  orc->add_option("--ordering", ordering, "PBW ordering seed (0 = natural)");
  orc->add_flag("--series", series, "also emit the (super)character series");
  orc->add_flag("--super", super, "signed series");

  auto* ver = app.add_subcommand("verify", "verification suites; nonzero exit on failure");
  ver->add_option("--suite", suite, "ds-table, invariants, ps, appendix, thmABC, admissible, sl12, lemtt2, properties")->required();
  ver->add_option("--algebra,-a", spec);
  ver->add_option("--k", ks)->delimiter(',');
  ver->add_option("--S", s_items)->delimiter(',');
  ver->add_option("--cases", cases, "cases per property suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (alg->parsed()) {
      emit(g, cmd_algebra(spec));
    } else if (ds->parsed()) {
      emit(g, cmd_ds(spec, s_items, base_items, rank, appendix, restrict_items));
    } else if (lv->parsed()) {
      emit(g, cmd_levels(spec, k_text, enumerate, lemtt2, g));
    } else if (ch->parsed()) {
      emit(g, cmd_char(spec, k_text, kind, super, g));
    } else if (orc->parsed()) {
      emit(g, cmd_oracle(spec, k_text, module, s_items, base_items, ordering, series, super, g));
    } else if (ver->parsed()) {
      auto results = cmd_verify(suite, spec, ks, s_items, cases, g);
      Json j = Json::array();
      bool ok = true;
      for (const auto& r : results) {
        j.push_back(to_json(r));
        ok = ok && r.ok;
      }
      emit(g, Json{{"suite", suite}, {"ok", ok}, {"results", j}});
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    Json err{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    if (g.json) std::cout << err.dump(2) << "\n";
    std::cerr << "superds: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    Json err{{"error", "InternalError"}, {"message", e.what()}};
    if (g.json) std::cout << err.dump(2) << "\n";
    std::cerr << "superds: internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
