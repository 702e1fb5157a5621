#include "superds/suites.hpp"

#include <chrono>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <tuple>

#include "superds/error.hpp"

namespace superds {

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  double seconds() const { return std::chrono::duration<double>(Clock::now() - t0_).count(); }

 private:
  Clock::time_point t0_ = Clock::now();
};

SuiteResult finish(SuiteResult r, const Timer& t, long checked, const std::string& first_failure) {
  r.seconds = t.seconds();
  r.data["checked"] = checked;
  r.ok = first_failure.empty();
  r.detail = r.ok ? std::to_string(checked) + " cases" : first_failure;
  return r;
}

SuiteResult named(std::string name) {
  SuiteResult r;
  r.name = std::move(name);
  return r;
}

// mpq_class(a, b) does not reduce
Rational frac(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

std::string itos(long v) { return std::to_string(v); }

Weight first_isotropic(const SuperRootDatum& d, const std::vector<Weight>& simple) {
  for (const auto& a : simple)
    if (d.is_odd_root(a) && sgn(d.norm(a)) == 0) return a;
  throw Error(ErrorKind::NotIsotropic, d.name + ": no isotropic simple root");
}

long total_dim(const GradedTable& t) {
  long s = 0;
  for (const auto& e : t) s += e.even + e.odd;
  return s;
}

struct FamilyCase {
  Family family;
  int m, n;
};

std::vector<FamilyCase> family_cases(int max_mn) {
  std::vector<FamilyCase> out;
  for (auto fam : {Family::A, Family::B, Family::D})
    for (int m = 0; m <= max_mn; ++m)
      for (int n = 0; n <= max_mn; ++n) out.push_back({fam, m, n});
  for (int n = 2; n <= max_mn; ++n) out.push_back({Family::C, 0, n});
  out.push_back({Family::F4, 0, 0});
  out.push_back({Family::G3, 0, 0});
  return out;
}

std::optional<SuperRootDatum> try_build(const FamilyCase& c) {
  try {
    return build_algebra(c.family, c.m, c.n);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UnsupportedFamily) return std::nullopt;
    throw;
  }
}

std::string diff_detail(const CharSeries& a, const CharSeries& b, const std::string& what) {
  auto nu = a.first_difference(b);
  if (!nu) return {};
  Weight w = a.anchor() - a.frame()->weight(*nu);
  return what + ": first difference at e^{" + w.to_string() + "}: " + to_string(a.coeff(*nu)) + " vs " +
         to_string(b.coeff(*nu));
}

}  // namespace

Json to_json(const SuiteResult& r) {
  return Json{{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}, {"data", r.data}};
}

std::string expected_ds_label(Family family, int m, int n, int r) {
  if (r == 0) return build_algebra(family, m, n).name;
  switch (family) {
    case Family::A: {
      int p = m + 1 - r, q = n + 1 - r;
      if (p > 0 && q > 0) return "A(" + itos(p - 1) + "|" + itos(q - 1) + ")";
      int s = std::max(p, q);
      return s >= 2 ? "A" + itos(s - 1) : "ZERO";
    }
    case Family::B: {
      int p = m - r, q = n - r;
      if (q > 0) return "B(" + itos(p) + "|" + itos(q) + ")";
      return p >= 1 ? "B(" + itos(p) + "|0)" : "ZERO";
    }
    case Family::D: {
      int p = m - r, q = n - r;
      if (q > 0) return "D(" + itos(p) + "|" + itos(q) + ")";
      if (p >= 2) return "D(" + itos(p) + "|0)";
      return p == 1 ? "GL1" : "ZERO";
    }
    case Family::C:
      return n - 2 >= 1 ? "C" + itos(n - 2) : "ZERO";
    case Family::F4:
      return "A2";
    case Family::G3:
      return "A1";
    default:
      throw Error(ErrorKind::UnsupportedFamily, "no reduction table for Lie algebras");
  }
}

SuiteResult suite_ds_table(int max_mn) {
  Timer t;
  SuiteResult r = named("ds_table");
  long checked = 0;
  std::string fail;
  for (const auto& c : family_cases(max_mn)) {
    auto d = try_build(c);
    if (!d) continue;
    auto S = maximal_isotropic_set(*d);
    if (static_cast<int>(S.size()) != defect_closed_form(*d) && fail.empty())
      fail = d->name + ": maximal isotropic set of size " + itos(static_cast<long>(S.size()));
    for (std::size_t k = 0; k <= S.size(); ++k) {
      ++checked;
      std::vector<Weight> Sr(S.begin(), S.begin() + static_cast<long>(k));
      std::string want = expected_ds_label(c.family, c.m, c.n, static_cast<int>(k));
      try {
        auto rep = ds_reduce(*d, Sr);
        if (rep.family_label != want && fail.empty())
          fail = d->name + " r=" + itos(static_cast<long>(k)) + ": got " + rep.family_label + ", table says " + want;
      } catch (const Error& e) {
        if (fail.empty()) fail = d->name + " r=" + itos(static_cast<long>(k)) + ": " + e.what();
      }
    }
  }
  return finish(r, t, checked, fail);
}

SuiteResult suite_invariants(int max_mn) {
  Timer t;
  SuiteResult r = named("invariants");
  long checked = 0;
  std::string fail;
  for (const auto& c : family_cases(max_mn)) {
    auto d = try_build(c);
    if (!d) continue;
    auto S = maximal_isotropic_set(*d);
    Weight rho = weyl_vector(*d, affinize(*d, d->distinguished));
    Rational hv = dual_coxeter(*d);
    for (std::size_t k = 1; k <= S.size(); ++k) {
      std::vector<Weight> Sr(S.begin(), S.begin() + static_cast<long>(k));
      try {
        auto rep = ds_reduce(*d, Sr);
        if (rep.degenerate()) continue;
        ++checked;
        Rational hx = dual_coxeter(rep.reduced);
        Rational n1 = d->norm(rho), n2 = rep.reduced.norm(rep.rho_x);
        if ((hx != hv || n1 != n2) && fail.empty())
          fail = d->name + " r=" + itos(static_cast<long>(k)) + ": h^v " + to_string(hv) + " vs " + to_string(hx) +
                 ", |rho|^2 " + to_string(n1) + " vs " + to_string(n2);
      } catch (const Error& e) {
        if (fail.empty()) fail = d->name + ": " + e.what();
      }
    }
  }
  return finish(r, t, checked, fail);
}

SuiteResult suite_ps_denominators(int max_mn, int depth, int height) {
  Timer t;
  SuiteResult r = named("ps_denominators");
  long checked = 0;
  std::string fail;
  Json cases = Json::array();
  for (auto fam : {Family::B, Family::D})
    for (int m = 0; m <= max_mn; ++m)
      for (int n = m + 1; n <= max_mn; ++n) {
        auto d = try_build({fam, m, n});
        if (!d) continue;
        auto ap = appendix_pair(*d);
        Base aff = affinize(*d, ap.base);
        long frac_u = 0;
        Rational frac_k;
        for (const auto& lv : enumerate_principal_admissible(*d, 6, 12))
          if (lv.u > 1) {
            frac_u = lv.u;
            frac_k = lv.k;
            break;
          }
        if (frac_u == 0) {
          if (fail.empty()) fail = d->name + ": no fractional principal admissible level found";
          continue;
        }
        for (long u : {1L, frac_u}) {
          ++checked;
          auto v = verify_PS_denominators(*d, aff, ap.S, Window{depth, height}, u);
          cases.push_back({{"algebra", d->name}, {"u", u}, {"ok", v.ok}});
          if (!v.ok && fail.empty()) fail = d->name + " u=" + itos(u) + ": " + v.detail;
        }
        cases.back()["k"] = to_string(frac_k);
      }
  r.data["cases"] = std::move(cases);
  return finish(r, t, checked, fail);
}

SuiteResult suite_appendix(int max_mn) {
  Timer t;
  SuiteResult r = named("appendix");
  long checked = 0;
  std::string fail;
  for (auto fam : {Family::B, Family::D})
    for (int m = 0; m <= max_mn; ++m)
      for (int n = m + 1; n <= max_mn; ++n) {
        auto d = try_build({fam, m, n});
        if (!d) continue;
        ++checked;
        auto ap = appendix_pair(*d);
        auto rep = check_P123(*d, ap.S, ap.base);
        if (!(rep.P1 && rep.P2 && rep.P3) && fail.empty())
          fail = d->name + ": P1=" + itos(rep.P1) + " P2=" + itos(rep.P2) + " P3=" + itos(rep.P3) + " " + rep.note;
      }
  return finish(r, t, checked, fail);
}

SuiteResult suite_thmABC(const std::string& algebra, const std::vector<Rational>& levels, int depth,
                         const std::vector<Weight>& S_in) {
  Timer t;
  SuiteResult r = named("thmABC");
  auto d = parse_algebra(algebra);
  auto A = build_structured(d);
  Base aff = level_base(d);
  std::vector<Weight> S = S_in.empty() ? std::vector<Weight>{first_isotropic(d, d.distinguished.simple)} : S_in;
  auto rep = ds_reduce(d, S, aff);
  FramePtr fr = make_frame(aff.simple);
  FramePtr fx = restricted_frame(rep);
  r.data["algebra"] = d.name;
  r.data["S"] = to_json(S);
  r.data["reduced"] = rep.tag;
  Json per = Json::array();
  std::string fail;
  long checked = 0;
  for (const auto& k : levels) {
    ++checked;
    GradedModule M(A, k, depth);
    auto H = ds_homology(M, ModuleKind::Simple, S, rep);
    Weight top = k * Weight::lambda0();
    long e = 0, o = 0;
    for (const auto& x : H) e += x.even, o += x.odd;
    per.push_back({{"k", to_string(k)}, {"total", {e, o}}, {"table", to_json(H)}});
    std::string f;
    if (rep.degenerate()) {
      GradedTable want{{0, top, 1, 0}};
      if (H != want) f = "DS(L) is not (1|0) at k Lambda0: total (" + itos(e) + "|" + itos(o) + ")";
    } else {
      try {
        if (!is_integer(k) || sgn(k) < 0) throw Error(ErrorKind::NegativeLevel, "integrable level expected");
        long kk = to_long(k);
        auto sch = table_series(simple_table(M), fr, top, depth, true);
        auto restricted = restrict_series(sch, rep);
        auto wk = weyl_kac_char(rep.reduced, rep.affine_base, kk, Window{depth, 4 * (depth + 1)}, 1, fx);
        auto ds = table_series(H, fx, restrict_weight(top, rep), depth, true);
        f = diff_detail(restricted, wk, "restricted sch L vs Weyl-Kac");
        if (f.empty()) f = diff_detail(ds, wk, "sch DS(L) vs Weyl-Kac");
      } catch (const Error& ex) {
        f = ex.what();
      }
    }
    if (!f.empty() && fail.empty()) fail = d.name + " k=" + to_string(k) + ": " + f;
  }
  r.data["levels"] = std::move(per);
  return finish(r, t, checked, fail);
}

SuiteResult suite_admissible(const std::string& algebra, const Rational& k, int depth, const std::vector<Weight>& S_in) {
  Timer t;
  SuiteResult r = named("admissible");
  auto d = parse_algebra(algebra);
  auto A = build_structured(d);
  Base aff = level_base(d);
  FramePtr fr = make_frame(aff.simple);
  auto lv = principal_admissible_level(d, k);
  if (!lv.principal_admissible) throw Error(ErrorKind::NotPrincipalAdmissible, lv.reason);
  std::vector<Weight> S = S_in.empty() ? std::vector<Weight>{first_isotropic(d, aff.simple)} : S_in;
  Window w{depth, 4 * (depth + 1)};

  // integrable side from the oracle of the same algebra at level p, dilated by u
  int side_depth = static_cast<int>((depth + lv.u - 1) / lv.u);
  GradedModule Mbar(A, Rational(lv.p), side_depth);
  auto side = dilate(table_series(simple_table(Mbar), fr, Rational(lv.p) * Weight::lambda0(), side_depth, false), aff, lv.u);

  GradedModule M(A, k, depth);
  auto ch = table_series(simple_table(M), fr, k * Weight::lambda0(), depth, false);
  auto b = make_bundle(d, aff, lv, ch, w);
  auto v2 = verify_II(b, side);
  auto ps = verify_PSIk(b, S);
  Rational top = ideal_top_coefficient(b);
  auto formula = admissible_char(d, aff, lv, side, w);
  std::string fd = diff_detail(formula, ch, "admissible formula vs oracle");

  r.data["level"] = to_json(lv);
  r.data["S"] = to_json(S);
  r.data["II"] = to_json(v2);
  r.data["PSIk"] = to_json(ps);
  r.data["top_coefficient"] = to_json(top);
  r.data["formula_matches_oracle"] = fd.empty();
  std::string fail;
  if (!v2.ok) fail = v2.detail;
  else if (!fd.empty()) fail = fd;
  else if (top != 1) fail = "dim I(k) at r0'.k Lambda0 is " + to_string(top);
  else if (!ps.ok) fail = ps.detail;
  return finish(r, t, 1, fail);
}

GradedTable sl12_table(int depth) {
  auto d = parse_algebra("A(0|1)");
  auto A = build_structured(d);
  Base b{{parse_weight("delta-eps1+del2"), parse_weight("eps1-del1"), parse_weight("del1-del2")}, true};
  std::vector<Weight> S{parse_weight("eps1-del1")};
  auto rep = ds_reduce(d, S, b);
  GradedModule M(A, -1, depth);
  return ds_homology(M, ModuleKind::Simple, S, rep);
}

SuiteResult suite_sl12(int depth, const std::optional<std::string>& fixture) {
  Timer t;
  SuiteResult r = named("sl12_counterexample");
  auto H = sl12_table(depth);
  long total = total_dim(H);
  r.data["depth"] = depth;
  r.data["total"] = total;
  r.data["table"] = to_json(H);
  std::string fail;
  if (total <= 1) fail = "DS(L(-Lambda0)) has total dimension " + itos(total);
  if (fixture && fail.empty()) {
    auto j = read_json_file(*fixture);
    auto want = table_from_json(j.at("table"));
    if (j.value("depth", depth) != depth) fail = "fixture depth differs";
    else if (want != H) {
      std::ostringstream os;
      os << "differs from fixture " << *fixture;
      for (std::size_t i = 0; i < std::max(want.size(), H.size()); ++i) {
        if (i >= want.size() || i >= H.size() || !(want[i] == H[i])) {
          os << " at entry " << i;
          if (i < H.size()) os << " (" << H[i].weight.to_string() << ")";
          break;
        }
      }
      fail = os.str();
    }
    r.data["fixture"] = *fixture;
  }
  return finish(r, t, 1, fail);
}

SuiteResult suite_lemtt2(const std::vector<std::string>& algebras, long max_den, long max_num, int depth) {
  Timer t;
  SuiteResult r = named("lemtt2");
  long checked = 0, bad_levels = 0, linked = 0;
  std::string fail;
  Json levels = Json::array();
  for (const auto& name : algebras) {
    auto d = parse_algebra(name);
    for (const auto& lv : enumerate_principal_admissible(d, max_den, max_num)) {
      ++checked;
      auto res = lemtt2_check(d, lv.k, depth);
      levels.push_back({{"algebra", d.name},
                        {"k", to_string(lv.k)},
                        {"checked", res.checked},
                        {"violations", res.violations.size()},
                        {"casimir_linked", res.linked.size()},
                        {"undecidable", res.undecidable.size()}});
      if (!res.violations.empty()) ++bad_levels;
      linked += static_cast<long>(res.linked.size());
      if (!res.violations.empty() && fail.empty())
        fail = d.name + " k=" + to_string(lv.k) + ": admissible weight " + res.violations.front().to_string() + " (" +
               itos(static_cast<long>(res.violations.size())) + " violations at this level)";
      if (!res.undecidable.empty() && fail.empty())
        fail = d.name + " k=" + to_string(lv.k) + ": undecidable " + res.undecidable.front().to_string();
    }
  }
  r.data["levels"] = std::move(levels);
  r.data["levels_with_violations"] = bad_levels;
  r.data["casimir_linked"] = linked;
  if (!fail.empty())
    fail += "; " + itos(bad_levels) + " of " + itos(checked) + " levels violate, " + itos(linked) + " Casimir-linked weights";
  return finish(r, t, checked, fail);
}

// ---------------------------------------------------------------- properties

namespace {

CharSeries random_series(std::mt19937& rng, const FramePtr& fr, const Window& w, int terms) {
  CharSeries s(fr, Weight{}, w);
  std::uniform_int_distribution<int> ex(0, 2), num(-4, 4), den(1, 3);
  for (int i = 0; i < terms; ++i) {
    Exponent nu(fr->size());
    for (auto& x : nu) x = ex(rng);
    s.add_term(nu, frac(num(rng), den(rng)));
  }
  return s;
}

}  // namespace

SuiteResult suite_ring_laws(int cases, unsigned seed) {
  Timer t;
  SuiteResult r = named("ring_laws");
  std::mt19937 rng(seed);
  std::vector<FramePtr> frames;
  for (auto name : {"A1", "A(1|0)", "B(1|1)"}) frames.push_back(make_frame(level_base(parse_algebra(name)).simple));
  std::string fail;
  for (int i = 0; i < cases && fail.empty(); ++i) {
    const auto& fr = frames[static_cast<std::size_t>(i) % frames.size()];
    Window w{2, 4};
    auto a = random_series(rng, fr, w, 4), b = random_series(rng, fr, w, 4), c = random_series(rng, fr, w, 4);
    auto one = CharSeries::one(fr, w);
    std::string f;
    if (!((a * b) * c == a * (b * c))) f = "associativity";
    else if (!(a * (b + c) == a * b + a * c)) f = "distributivity";
    else if (!(a * b == b * a)) f = "commutativity";
    else if (!(a * one == a)) f = "unit";
    else if (!(a - a == CharSeries(fr, Weight{}, w))) f = "additive inverse";
    else {
      auto a0 = a + one * Rational(1 + static_cast<int>(i % 3));
      if (sgn(a0.coeff(Exponent(fr->size(), 0))) != 0 && !(a0 * inverse(a0) == one)) f = "multiplicative inverse";
    }
    if (!f.empty()) fail = "case " + itos(i) + ": " + f;
  }
  return finish(r, t, cases, fail);
}

SuiteResult suite_ps_homomorphism(int cases, unsigned seed) {
  Timer t;
  SuiteResult r = named("ps_homomorphism");
  std::mt19937 rng(seed);
  std::vector<FramePtr> frames;
  for (auto name : {"A(1|0)", "B(1|1)", "D(2|3)"}) frames.push_back(make_frame(level_base(parse_algebra(name)).simple));
  std::string fail;
  for (int i = 0; i < cases && fail.empty(); ++i) {
    const auto& fr = frames[static_cast<std::size_t>(i) % frames.size()];
    Window w{2, 4};
    auto a = random_series(rng, fr, w, 5), b = random_series(rng, fr, w, 5);
    std::vector<Weight> S;
    for (const auto& g : fr->generators())
      if (rng() % 2) S.push_back(g);
    if (S.empty()) S.push_back(fr->generators().front());
    std::string f;
    auto pa = project_PS(a, S), pb = project_PS(b, S);
    if (!(project_PS(a * b, S) == pa * pb)) f = "P_S(ab) != P_S(a) P_S(b)";
    else if (!(project_PS(a + b, S) == pa + pb)) f = "P_S(a+b)";
    else if (!(project_PS(pa, S) == pa)) f = "P_S^2 != P_S";
    else if (!(project_PS(CharSeries::one(fr, w), S) == CharSeries::one(fr, w))) f = "P_S(1) != 1";
    if (!f.empty()) fail = "case " + itos(i) + ": " + f;
  }
  return finish(r, t, cases, fail);
}

SuiteResult suite_euler_restriction(int cases, unsigned seed) {
  Timer t;
  SuiteResult r = named("euler_restriction");
  std::mt19937 rng(seed);
  struct Setup {
    SuperRootDatum d;
    StructuredAlgebra A;
    std::vector<Weight> isotropic;
  };
  std::vector<Setup> setups;
  for (auto name : {"A(1|0)", "A(0|1)", "A(2|0)", "B(1|1)", "A(1|1)"}) {
    auto d = parse_algebra(name);
    auto A = build_structured(d);
    std::vector<Weight> iso;
    for (const auto& a : d.odd_roots)
      if (sgn(d.norm(a)) == 0) iso.push_back(a);
    setups.push_back({d, std::move(A), iso});
  }
  const std::vector<Rational> levels{Rational(1), Rational(2), Rational(-1, 2), Rational(-1), Rational(1, 3)};
  std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<GradedModule>> modules;
  std::map<std::tuple<std::size_t, std::size_t, bool, Weight>, GradedTable> unit;
  std::string fail;
  for (int i = 0; i < cases && fail.empty(); ++i) {
    std::size_t si = rng() % setups.size(), ki = rng() % levels.size();
    auto& st = setups[si];
    int depth = si == 4 ? 1 : 2;
    auto& mod = modules[{si, ki}];
    if (!mod) mod = std::make_unique<GradedModule>(st.A, levels[ki], depth);
    Weight beta = st.isotropic[rng() % st.isotropic.size()];
    std::vector<Weight> S{beta};
    if (si == 4 && rng() % 2) {
      // a second root orthogonal to the first
      for (const auto& g : st.isotropic)
        if (sgn(st.d.form(g, beta)) == 0 && g != beta && g != -beta && st.d.form(g, g) == 0 &&
            is_isotropic_set(st.d, {beta, g})) {
          S.push_back(g);
          break;
        }
    }
    bool simple = rng() % 2;
    auto kind = simple ? ModuleKind::Simple : ModuleKind::Vacuum;
    auto rep = ds_reduce(st.d, S);
    std::vector<Rational> coeffs;
    for (std::size_t j = 0; j < S.size(); ++j) coeffs.push_back(frac(static_cast<long>(rng() % 5) + 1, static_cast<long>(rng() % 3) + 1));
    auto H = ds_homology(*mod, kind, S, rep, coeffs);

    std::map<std::pair<int, Weight>, long> lhs, rhs;
    const auto table = simple ? simple_table(*mod) : vacuum_table(*mod);
    for (const auto& e : table) lhs[{e.depth, restrict_weight(e.weight, rep)}] += e.even - e.odd;
    for (const auto& e : H) rhs[{e.depth, e.weight}] += e.even - e.odd;
    for (auto it = lhs.begin(); it != lhs.end();) it = it->second == 0 ? lhs.erase(it) : std::next(it);
    for (auto it = rhs.begin(); it != rhs.end();) it = it->second == 0 ? rhs.erase(it) : std::next(it);
    std::string f;
    if (lhs != rhs) f = "signed dimensions differ on a fibre";
    if (f.empty() && S.size() == 1) {
      auto key = std::make_tuple(si * 16 + ki, static_cast<std::size_t>(0), simple, beta);
      auto it = unit.find(key);
      if (it == unit.end()) it = unit.emplace(key, ds_homology(*mod, kind, S, rep)).first;
      if (it->second != H) f = "homology depends on the scaling of x";
    }
    if (!f.empty()) fail = "case " + itos(i) + " " + st.d.name + " k=" + to_string(levels[ki]) + ": " + f;
  }
  return finish(r, t, cases, fail);
}

SuiteResult suite_reflection_invariance(int cases, unsigned seed) {
  Timer t;
  SuiteResult r = named("reflection_invariance");
  std::mt19937 rng(seed);
  std::vector<SuperRootDatum> data;
  for (auto name : {"A(1|0)", "B(1|2)", "D(2|3)", "C(3)", "F(4)", "G(3)", "A2", "B2", "A(1|1)"}) data.push_back(parse_algebra(name));
  std::uniform_int_distribution<int> small(-3, 3);
  std::string fail;
  for (int i = 0; i < cases && fail.empty(); ++i) {
    const auto& d = data[static_cast<std::size_t>(i) % data.size()];
    auto roots = d.roots();
    std::vector<Weight> real;
    for (const auto& a : roots)
      if (sgn(d.norm(a)) != 0) real.push_back(a);
    Weight alpha = real[rng() % real.size()] + Rational(small(rng)) * Weight::delta();
    auto rand_weight = [&] {
      Weight w = Rational(small(rng)) * Weight::lambda0() + Rational(small(rng)) * Weight::delta();
      for (int j = 0; j < 3; ++j) w += Rational(small(rng)) * roots[rng() % roots.size()];
      return w;
    };
    Weight l = rand_weight(), m = rand_weight();
    std::string f;
    Weight rl = reflect(d, l, alpha), rm = reflect(d, m, alpha);
    if (d.form(rl, rm) != d.form(l, m)) f = "form not preserved by r_" + alpha.to_string();
    else if (reflect(d, rl, alpha) != l) f = "reflection is not an involution";
    else if (!d.is_lie()) {
      // odd reflections keep a base and the form on it
      const Base& b = d.distinguished;
      std::vector<Weight> iso;
      for (const auto& a : b.simple)
        if (d.is_odd_root(a) && sgn(d.norm(a)) == 0) iso.push_back(a);
      if (!iso.empty()) {
        Base nb = odd_reflect(d, b, iso[rng() % iso.size()]);
        try {
          validate_base(d, nb);
          if (positive_roots(d, nb).size() != positive_roots(d, b).size()) f = "odd reflection changes |Delta^+|";
        } catch (const Error& e) {
          f = std::string("odd reflection: ") + e.what();
        }
      }
    }
    if (!f.empty()) fail = "case " + itos(i) + " " + d.name + ": " + f;
  }
  return finish(r, t, cases, fail);
}

SuiteResult suite_gram_ordering(int cases, unsigned seed) {
  Timer t;
  SuiteResult r = named("gram_ordering");
  std::mt19937 rng(seed);
  std::vector<std::pair<SuperRootDatum, StructuredAlgebra>> algs;
  for (auto name : {"A1", "A(1|0)", "A(0|1)", "B(0|1)", "B(1|1)"}) {
    auto d = parse_algebra(name);
    algs.emplace_back(d, build_structured(d));
  }
  const std::vector<Rational> levels{Rational(0), Rational(1), Rational(2), Rational(-1, 2), Rational(-1), Rational(2, 3)};
  std::map<std::tuple<std::size_t, std::size_t, int>, GradedTable> reference;
  std::string fail;
  for (int i = 0; i < cases && fail.empty(); ++i) {
    std::size_t ai = rng() % algs.size(), ki = rng() % levels.size();
    int depth = 1 + static_cast<int>(rng() % 2);
    if (ai == 4) depth = 1;
    const auto& A = algs[ai].second;
    auto key = std::make_tuple(ai, ki, depth);
    auto it = reference.find(key);
    if (it == reference.end()) {
      GradedModule m0(A, levels[ki], depth);
      it = reference.emplace(key, simple_table(m0)).first;
    }
    unsigned ordering = static_cast<unsigned>(rng() % 100000) + 1;
    GradedModule m(A, levels[ki], depth, ordering);
    if (simple_table(m) != it->second)
      fail = "case " + itos(i) + " " + algs[ai].first.name + " k=" + to_string(levels[ki]) + " ordering " +
             itos(ordering) + ": Gram ranks differ";
  }
  return finish(r, t, cases, fail);
}

}  // namespace superds
