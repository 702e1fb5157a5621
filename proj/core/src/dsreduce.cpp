#include "superds/dsreduce.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "superds/error.hpp"

namespace superds {

namespace {

std::string itos(int v) { return std::to_string(v); }

bool contains(const std::vector<Weight>& v, const Weight& w) { return std::find(v.begin(), v.end(), w) != v.end(); }

Weight coord_weight(const SuperRootDatum& d, const Vector& x) {
  Weight w;
  for (std::size_t i = 0; i < d.coords.size(); ++i)
    if (sgn(x[i]) != 0) w.add(d.coords[i], x[i]);
  return w;
}

// Coordinate vectors x with (x, g) = 0 for every g.
std::vector<Weight> orthogonal_complement(const SuperRootDatum& d, const std::vector<Weight>& gens) {
  const std::size_t n = d.coords.size();
  Matrix m(gens.size(), n);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d.form(gens[i], Weight::unit(d.coords[j]));
  std::vector<Weight> out;
  if (gens.empty()) {
    for (const auto& s : d.coords) out.push_back(Weight::unit(s));
    return out;
  }
  for (const auto& v : nullspace(m)) out.push_back(coord_weight(d, v));
  return out;
}

std::vector<Weight> span_basis(const SuperRootDatum& d, const std::vector<Weight>& ws) {
  if (ws.empty()) return {};
  Matrix m(d.coords.size(), ws.size());
  for (std::size_t j = 0; j < ws.size(); ++j)
    for (std::size_t i = 0; i < d.coords.size(); ++i) m(i, j) = ws[j][d.coords[i]];
  std::vector<Weight> out;
  for (auto j : independent_columns(m)) out.push_back(ws[j]);
  return out;
}

// S' with (S_i, S'_j) = delta_ij inside W ∩ U^perp; roots preferred, isotropic and mutually orthogonal first.
std::vector<Weight> find_complement(const SuperRootDatum& d, const std::vector<Weight>& S,
                                    const std::vector<Weight>& roots_x, const std::vector<Weight>& wperp) {
  const std::size_t r = S.size();
  if (r == 0) return {};
  std::vector<Weight> cands;
  auto consider = [&](const std::vector<Weight>& pool) {
    for (const auto& g : pool) {
      if (contains(S, g) || contains(S, -g)) continue;
      bool ok = true;
      for (const auto& a : roots_x)
        if (sgn(d.form(g, a)) != 0) {
          ok = false;
          break;
        }
      if (ok) cands.push_back(g);
    }
  };
  consider(d.odd_roots);
  consider(d.even_roots);

  for (int strict = 1; strict >= 0; --strict) {
    std::vector<Weight> chosen;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
      if (i == r) return true;
      for (const auto& g : cands) {
        bool ok = sgn(d.form(g, S[i])) != 0;
        for (std::size_t j = 0; j < r && ok; ++j)
          if (j != i && sgn(d.form(g, S[j])) != 0) ok = false;
        if (!ok) continue;
        Weight scaled = (Rational(1) / d.form(g, S[i])) * g;
        if (strict) {
          if (sgn(d.norm(g)) != 0) continue;
          bool orth = true;
          for (const auto& c : chosen)
            if (sgn(d.form(c, scaled)) != 0) orth = false;
          if (!orth) continue;
        }
        chosen.push_back(scaled);
        if (rec(i + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (rec(0)) return chosen;
  }

  // linear fallback: x ⊥ roots_x, x ⊥ W^perp, (x, S_j) = delta_ij
  std::vector<Weight> rows = span_basis(d, roots_x);
  rows.insert(rows.end(), wperp.begin(), wperp.end());
  std::vector<Weight> out;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Weight> all = rows;
    all.insert(all.end(), S.begin(), S.end());
    Matrix m(all.size(), d.coords.size());
    Vector rhs(all.size());
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t j = 0; j < d.coords.size(); ++j) m(a, j) = d.form(all[a], Weight::unit(d.coords[j]));
    rhs[rows.size() + i] = 1;
    auto x = solve(m, rhs);
    if (!x) throw Error(ErrorKind::Internal, "no complement to the isotropic set");
    out.push_back(coord_weight(d, *x));
  }
  return out;
}

std::vector<Weight> indecomposables(const std::vector<Weight>& pos) {
  std::set<Weight> ps(pos.begin(), pos.end());
  std::vector<Weight> out;
  for (const auto& a : pos) {
    bool dec = false;
    for (const auto& b : pos)
      if (b != a && ps.count(a - b)) {
        dec = true;
        break;
      }
    if (!dec) out.push_back(a);
  }
  return out;
}

std::vector<Rational> sorted_norms(const SuperRootDatum& d) {
  std::vector<Rational> v;
  for (const auto& r : d.roots()) v.push_back(d.norm(r));
  std::sort(v.begin(), v.end());
  return v;
}

bool proportional_norms(const SuperRootDatum& a, const SuperRootDatum& b) {
  auto na = sorted_norms(a), nb = sorted_norms(b);
  if (na.size() != nb.size()) return false;
  if (std::none_of(na.begin(), na.end(), [](const Rational& x) { return sgn(x) != 0; })) return na == nb;
  // equal up to a nonzero (possibly negative) scalar
  std::set<Rational> ratios;
  for (const auto& x : na)
    for (const auto& y : nb)
      if (sgn(x) != 0 && sgn(y) != 0) ratios.insert(y / x);
  for (const auto& s : ratios) {
    std::vector<Rational> scaled;
    for (const auto& x : na) scaled.push_back(x * s);
    std::sort(scaled.begin(), scaled.end());
    if (scaled == nb) return true;
  }
  return false;
}

}  // namespace

std::vector<Weight> ds_roots(const SuperRootDatum& d, const std::vector<Weight>& S) {
  if (!is_isotropic_set(d, S)) throw Error(ErrorKind::NotIsotropic, "S is not an isotropic set of roots");
  std::vector<Weight> out;
  for (const auto& r : d.roots()) {
    if (contains(S, r) || contains(S, -r)) continue;
    bool orth = true;
    for (const auto& b : S)
      if (sgn(d.form(r, b)) != 0) {
        orth = false;
        break;
      }
    if (orth) out.push_back(r);
  }
  return out;
}

SuperRootDatum ds_predict(const SuperRootDatum& d, int r) {
  if (r == 0) return d;
  switch (d.kind) {
    case AlgebraKind::SL:
    case AlgebraKind::OSPOdd:
    case AlgebraKind::OSPEven:
      if (r > std::min(d.p, d.q)) throw Error(ErrorKind::NotIsotropic, "isotropic set larger than the defect");
      return make_algebra(d.kind, d.p - r, d.q - r);
    case AlgebraKind::F4:
      if (r != 1) throw Error(ErrorKind::NotIsotropic, "F(4) has defect 1");
      return make_algebra(AlgebraKind::SL, 3, 0);
    case AlgebraKind::G3:
      if (r != 1) throw Error(ErrorKind::NotIsotropic, "G(3) has defect 1");
      return make_algebra(AlgebraKind::SL, 2, 0);
    default:
      throw Error(ErrorKind::UnsupportedFamily, "no reduction table for " + d.name);
  }
}

DSReport ds_reduce(const SuperRootDatum& d, const std::vector<Weight>& S) { return ds_reduce(d, S, d.distinguished); }

DSReport ds_reduce(const SuperRootDatum& d, const std::vector<Weight>& S, const Base& base) {
  DSReport rep;
  rep.S = S;
  auto roots_x = ds_roots(d, S);
  const int r = static_cast<int>(S.size());
  rep.predicted = ds_predict(d, r);
  rep.tag = rep.predicted.name;

  const int pr = d.p - r, qr = d.q - r;
  if (rep.predicted.kind != AlgebraKind::Zero && !(rep.tag == "GL1")) {
    if (d.kind == AlgebraKind::SL && d.p > 0 && d.q > 0 && pr > 0 && qr > 0)
      rep.family_label = "A(" + itos(pr - 1) + "|" + itos(qr - 1) + ")";
    else if (d.kind == AlgebraKind::OSPOdd && d.q > 0)
      rep.family_label = "B(" + itos(pr) + "|" + itos(qr) + ")";
    else if (d.kind == AlgebraKind::OSPEven && d.p >= 2 && d.q > 0)
      rep.family_label = "D(" + itos(pr) + "|" + itos(qr) + ")";
  }
  if (rep.family_label.empty()) rep.family_label = rep.tag;

  // W^perp: directions of the coordinate space outside the dual Cartan
  std::vector<Weight> wperp;
  if (static_cast<int>(d.coords.size()) != d.cartan_dim) wperp = orthogonal_complement(d, d.hstar);

  rep.complement = find_complement(d, S, roots_x, wperp);
  rep.killed = S;
  rep.killed.insert(rep.killed.end(), rep.complement.begin(), rep.complement.end());
  rep.killed.insert(rep.killed.end(), wperp.begin(), wperp.end());
  Matrix g(rep.killed.size(), rep.killed.size());
  for (std::size_t i = 0; i < rep.killed.size(); ++i)
    for (std::size_t j = 0; j < rep.killed.size(); ++j) g(i, j) = d.form(rep.killed[i], rep.killed[j]);
  auto ginv = inverse(g);
  if (!ginv) throw Error(ErrorKind::Internal, "degenerate complement to the isotropic set");
  rep.killed_gram_inverse = *ginv;

  // reduced datum inside h*
  SuperRootDatum& x = rep.reduced;
  x.kind = AlgebraKind::Reduced;
  x.p = rep.predicted.p;
  x.q = rep.predicted.q;
  x.name = rep.tag;
  x.convention = rep.predicted.convention;
  x.coords = d.coords;
  x.gram = d.gram;
  x.scale = d.scale;
  x.center = rep.predicted.center;
  for (const auto& a : roots_x) (d.is_odd_root(a) ? x.odd_roots : x.even_roots).push_back(a);
  x.hstar = orthogonal_complement(d, rep.killed);
  x.cartan_dim = static_cast<int>(x.hstar.size());
  if (x.cartan_dim != d.cartan_dim - 2 * r)
    throw Error(ErrorKind::Internal, "reduced Cartan has dimension " + itos(x.cartan_dim));

  Base fin{base.finite_part(), false};
  std::vector<Weight> pos_x;
  if (!roots_x.empty()) {
    for (const auto& a : positive_roots(d, fin))
      if (contains(roots_x, a)) pos_x.push_back(a);
    rep.finite_base = Base{indecomposables(pos_x), false};
    auto check = positive_roots(x, rep.finite_base);
    std::set<Weight> s1(check.begin(), check.end()), s2(pos_x.begin(), pos_x.end());
    if (s1 != s2) throw Error(ErrorKind::InvalidBase, "Delta^+ ∩ Delta_x is not the positive system of a base");
  }
  for (const auto& a : pos_x)
    if (!x.is_odd_root(a)) x.even_positive.push_back(a);
  x.distinguished = x.standard = rep.finite_base;
  if (!roots_x.empty()) {
    Frame fr(rep.finite_base.simple);
    Rational best = -1;
    for (const auto& a : x.even_positive) {
      if (sgn(x.norm(a)) <= 0) continue;
      Rational h = 0;
      auto co = fr.coords(a);
      for (const auto& c : *co) h += c;
      if (h > best) {
        best = h;
        x.theta = a;
      }
    }
  }

  if (roots_x.empty()) {
    rep.affine_base = Base{{}, true};
    if (rep.tag == "GL1") rep.affine_base.simple.push_back(Weight::delta());
  } else {
    auto mx = maximal_roots(x, rep.finite_base);
    if (mx.size() > 1 && rep.tag != "D2")
      throw Error(ErrorKind::InvalidBase, "disconnected reduced base outside the D2 case");
    rep.affine_base = affinize(x, rep.finite_base);
  }
  rep.rho_x = weyl_vector(x, rep.affine_base);

  // the realised image must match the family table
  const auto& p = rep.predicted;
  bool match = x.even_roots.size() == p.even_roots.size() && x.odd_roots.size() == p.odd_roots.size() &&
               x.cartan_dim == p.cartan_dim && defect(x) == defect(p) && proportional_norms(x, p);
  if (!match) throw Error(ErrorKind::Internal, "reduced roots of " + d.name + " do not match " + p.name);
  return rep;
}

SuperRootDatum ds_datum(const SuperRootDatum& d, const std::vector<Weight>& S) { return ds_reduce(d, S).predicted; }

Base ds_base(const SuperRootDatum& d, const Base& base, const std::vector<Weight>& S) {
  return ds_reduce(d, S, base).affine_base;
}

Weight restrict_weight(const Weight& lambda, const DSReport& report) {
  const auto& k = report.killed;
  if (k.empty()) return lambda;
  Weight f = lambda.finite_part();
  Vector b(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) b[i] = report.reduced.form(f, k[i]);
  Vector c = report.killed_gram_inverse * b;
  Weight out = lambda;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (sgn(c[i]) != 0) out -= c[i] * k[i];
  return out;
}

// ---------------------------------------------------------------- (S, base) pairs, n > m

AppendixPair appendix_pair(const SuperRootDatum& d) {
  const int m = d.p, n = d.q;
  int a = 0;
  if (d.kind == AlgebraKind::OSPOdd && n > m && n >= 1) a = 1;
  else if (d.kind == AlgebraKind::OSPEven && m >= 2 && n > m) a = 2;
  else throw Error(ErrorKind::NoConstruction, "no explicit pair is given for " + d.name);
  AppendixPair out;
  for (int i = 1; i <= m; ++i) {
    out.S.push_back(Weight::eps(i) - Weight::del(i + 1));
    out.base.simple.push_back(Weight::del(i) - Weight::eps(i));
    out.base.simple.push_back(Weight::eps(i) - Weight::del(i + 1));
  }
  for (int j = m + 1; j < n; ++j) out.base.simple.push_back(Weight::del(j) - Weight::del(j + 1));
  out.base.simple.push_back(Rational(a) * Weight::del(n));
  validate_base(d, out.base);
  return out;
}

std::vector<Vector> cone_extreme_rays(const Matrix& A) {
  const std::size_t N = A.cols();
  std::vector<Vector> rays;
  if (A.rows() == 0) {
    for (std::size_t j = 0; j < N; ++j) {
      Vector e(N);
      e[j] = 1;
      rays.push_back(e);
    }
    return rays;
  }
  const std::size_t rk = rank(A);
  std::set<Vector> seen;
  std::vector<std::size_t> support;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!support.empty()) {
      Matrix sub(A.rows(), support.size());
      for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < support.size(); ++j) sub(i, j) = A(i, support[j]);
      auto ker = nullspace(sub);
      if (ker.size() == 1) {
        const Vector& v = ker.front();
        int sign = 0;
        bool ok = true;
        for (const auto& c : v) {
          int s = sgn(c);
          if (s == 0 || (sign != 0 && s != sign)) {
            ok = false;
            break;
          }
          sign = s;
        }
        if (ok) {
          // normalise to a primitive nonnegative vector
          Vector full(N);
          Integer den = 1;
          for (std::size_t j = 0; j < support.size(); ++j) full[support[j]] = sign * v[j];
          for (const auto& c : full) den = lcm(den, Integer(c.get_den()));
          Integer g = 0;
          for (auto& c : full) {
            c *= den;
            g = gcd(g, Integer(c.get_num()));
          }
          for (auto& c : full) c /= g;
          if (seen.insert(full).second) rays.push_back(full);
        }
      }
    }
    if (support.size() == rk + 1) return;
    for (std::size_t j = start; j < N; ++j) {
      support.push_back(j);
      rec(j + 1);
      support.pop_back();
    }
  };
  rec(0);
  return rays;
}

bool in_cone(const Weight& v, const std::vector<Weight>& free, const std::vector<Weight>& gens) {
  const std::size_t n = gens.size();
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
    std::vector<Weight> cols = free;
    for (auto j : chosen) cols.push_back(gens[j]);
    std::optional<Frame> fr;
    try {
      fr.emplace(cols);
    } catch (const Error&) {
      return false;  // dependent columns: a smaller subset covers this case
    }
    auto c = fr->coords(v);
    if (c) {
      bool ok = true;
      for (std::size_t i = free.size(); i < c->size(); ++i)
        if (sgn((*c)[i]) < 0) ok = false;
      if (ok) return true;
    }
    for (std::size_t j = start; j < n; ++j) {
      chosen.push_back(j);
      if (rec(j + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (v.is_zero()) return true;
  return rec(0);
}

P123Report check_P123(const SuperRootDatum& d, const std::vector<Weight>& S, const Base& finite_base) {
  P123Report rep;
  rep.P1 = std::all_of(S.begin(), S.end(), [&](const Weight& b) { return contains(finite_base.simple, b); });
  auto mx = maximal_roots(d, finite_base);
  if (mx.size() == 1) {
    const Weight& t = mx.front();
    rep.P2 = !d.is_odd_root(t) && sgn(d.norm(t)) > 0 &&
             std::all_of(S.begin(), S.end(), [&](const Weight& b) { return sgn(d.form(t, b)) == 0; });
  }
  Base sigma = affinize(d, finite_base);
  DSReport ds;
  try {
    ds = ds_reduce(d, S, sigma);
  } catch (const Error& e) {
    rep.note = std::string("reduction failed: ") + e.what();
    return rep;
  }
  Matrix A(S.size(), sigma.simple.size());
  for (std::size_t j = 0; j < S.size(); ++j)
    for (std::size_t i = 0; i < sigma.simple.size(); ++i) A(j, i) = d.form(sigma.simple[i], S[j]);
  rep.P3 = true;
  for (const auto& c : cone_extreme_rays(A)) {
    Weight v;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (sgn(c[i]) != 0) v += c[i] * sigma.simple[i];
    rep.extreme_rays.push_back(v);
    if (!in_cone(v, S, ds.affine_base.simple)) {
      rep.P3 = false;
      rep.failing_rays.push_back(v);
    }
  }
  return rep;
}

}  // namespace superds
