#include "superds/serialize.hpp"

#include <fstream>

#include "superds/error.hpp"

namespace superds {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Weight& w) { return w.is_zero() ? std::string("0") : w.to_string(); }

Json to_json(const std::vector<Weight>& ws) {
  Json a = Json::array();
  for (const auto& w : ws) a.push_back(to_json(w));
  return a;
}

Json to_json(const Base& b) { return Json{{"affine", b.affine}, {"simple", to_json(b.simple)}}; }

Json to_json(const SuperRootDatum& d) {
  Json j;
  j["name"] = d.name;
  j["convention"] = d.convention;
  j["dim"] = {d.dim_even(), d.dim_odd()};
  j["rank"] = d.rank();
  j["cartan_dim"] = d.cartan_dim;
  j["center"] = d.center;
  j["even_roots"] = d.even_roots.size();
  j["odd_roots"] = d.odd_roots.size();
  if (!d.roots().empty()) {
    j["theta"] = to_json(d.theta);
    j["distinguished"] = to_json(d.distinguished);
    if (!d.standard.simple.empty()) j["standard"] = to_json(d.standard);
    j["dual_coxeter"] = to_json(dual_coxeter(d));
    j["lacity"] = lacity(d);
    j["defect"] = defect(d);
    j["weyl_vector"] = to_json(weyl_vector(d, d.distinguished));
  }
  return j;
}

Json to_json(const DSReport& r) {
  Json j;
  j["S"] = to_json(r.S);
  j["tag"] = r.tag;
  if (!r.family_label.empty()) j["family_label"] = r.family_label;
  j["degenerate"] = r.degenerate();
  j["reduced_dim"] = {r.reduced.dim_even(), r.reduced.dim_odd()};
  j["finite_base"] = to_json(r.finite_base);
  j["affine_base"] = to_json(r.affine_base);
  j["rho_x"] = to_json(r.rho_x);
  j["complement"] = to_json(r.complement);
  return j;
}

Json to_json(const P123Report& r) {
  return Json{{"P1", r.P1},
              {"P2", r.P2},
              {"P3", r.P3},
              {"extreme_rays", to_json(r.extreme_rays)},
              {"failing_rays", to_json(r.failing_rays)},
              {"note", r.note}};
}

Json to_json(const LevelDatum& l) {
  Json j;
  j["k"] = to_json(l.k);
  j["dual_coxeter"] = to_json(l.hv);
  j["lacity"] = l.lacity;
  j["principal_admissible"] = l.principal_admissible;
  if (l.principal_admissible) {
    j["p"] = l.p;
    j["u"] = l.u;
  } else {
    j["reason"] = l.reason;
  }
  return j;
}

Json to_json(const CharSeries& s) {
  Json j;
  j["frame"] = s.frame() ? to_json(s.frame()->generators()) : Json::array();
  j["anchor"] = to_json(s.anchor());
  j["window"] = {{"depth", s.window().depth}, {"height", s.window().height}};
  Json terms = Json::array();
  for (const auto& [nu, c] : s.sorted())
    terms.push_back({{"nu", nu}, {"weight", to_json(s.anchor() - s.frame()->weight(nu))}, {"coeff", to_json(c)}});
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const GradedTable& t) {
  Json a = Json::array();
  for (const auto& e : t) a.push_back({{"depth", e.depth}, {"weight", to_json(e.weight)}, {"even", e.even}, {"odd", e.odd}});
  return a;
}

Json to_json(const Verdict& v) { return Json{{"ok", v.ok}, {"detail", v.detail}}; }

Json to_json(const Lemtt2Result& r) {
  return Json{{"checked", r.checked},
              {"violations", to_json(r.violations)},
              {"casimir_linked", to_json(r.linked)},
              {"undecidable", to_json(r.undecidable)}};
}

std::vector<Weight> weights_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "expected an array of weights");
  std::vector<Weight> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw Error(ErrorKind::Parse, "weight entries must be strings");
    out.push_back(parse_weight(x.get<std::string>()));
  }
  return out;
}

GradedTable table_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "graded table must be an array");
  GradedTable t;
  for (const auto& e : j) {
    try {
      t.push_back({e.at("depth").get<int>(), parse_weight(e.at("weight").get<std::string>()), e.at("even").get<long>(),
                   e.at("odd").get<long>()});
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorKind::Parse, std::string("graded table entry: ") + ex.what());
    }
  }
  return t;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

}  // namespace superds
