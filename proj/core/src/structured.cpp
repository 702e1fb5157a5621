#include "superds/structured.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "superds/error.hpp"

namespace superds {

namespace {

struct NaturalModule {
  std::vector<Weight> wt;
  std::vector<bool> odd;
  std::vector<Symbol> sym;
  std::vector<int> sign;
};

Matrix commutator(const Matrix& x, bool px, const Matrix& y, bool py) {
  Matrix a = x * y, b = y * x;
  Matrix out(a.rows(), a.cols());
  const Rational s = (px && py) ? 1 : -1;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + s * b(i, j);
  return out;
}

Rational supertrace(const Matrix& m, const std::vector<bool>& vodd) {
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += vodd[i] ? Rational(-m(i, i)) : Rational(m(i, i));
  return t;
}

void add_to(Element& e, int idx, const Rational& c) {
  if (sgn(c) == 0) return;
  for (auto& [i, x] : e) {
    if (i == idx) {
      x += c;
      return;
    }
  }
  e.emplace_back(idx, c);
}

Element clean(Element e) {
  e.erase(std::remove_if(e.begin(), e.end(), [](const auto& t) { return sgn(t.second) == 0; }), e.end());
  std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return e;
}

}  // namespace

Rational StructuredAlgebra::eval(const Weight& lambda, int h) const {
  const auto& diag = cartan_eval_[static_cast<std::size_t>(h)];
  Rational v = 0;
  for (std::size_t a = 0; a < diag.size(); ++a) {
    if (vweight_sign_[a] <= 0) continue;
    Rational c = lambda[vweight_sym_[a]];
    if (sgn(c) != 0) v += c * diag[a];
  }
  return v;
}

int StructuredAlgebra::index_of(const Weight& root) const {
  for (int a = 0; a < dim; ++a)
    if (!weight[a].is_zero() && weight[a] == root) return a;
  return -1;
}

Element StructuredAlgebra::bracket(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      for (const auto& [c, cc] : bracket(a, b)) add_to(out, c, ca * cb * cc);
  return clean(out);
}

Rational StructuredAlgebra::pair(const Element& x, const Element& y) const {
  Rational v = 0;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) v += ca * cb * form(a, b);
  return v;
}

Element StructuredAlgebra::apply_sigma(const Element& x) const {
  Element out;
  for (const auto& [a, ca] : x) add_to(out, sigma[a].first, ca * sigma[a].second);
  return clean(out);
}

std::string StructuredAlgebra::label(int a) const {
  if (weight[a].is_zero()) return "h" + std::to_string(std::find(cartan.begin(), cartan.end(), a) - cartan.begin() + 1);
  return "e[" + weight[a].to_string() + "]";
}

std::string StructuredAlgebra::validate() const {
  auto sgn_of = [](bool a, bool b) { return Rational((a && b) ? -1 : 1); };
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      // grading
      for (const auto& [c, x] : bracket(a, b)) {
        if (weight[c] != weight[a] + weight[b] || odd[c] != (odd[a] != odd[b]))
          return "grading fails for [" + label(a) + ", " + label(b) + "]";
      }
      // super antisymmetry
      Element ab = bracket(a, b), ba = bracket(b, a);
      for (auto& t : ba) t.second *= -sgn_of(odd[a], odd[b]);
      if (clean(ab) != clean(ba)) return "antisymmetry fails for " + label(a) + ", " + label(b);
      // form: invariant, supersymmetric, sigma-compatible
      if (form(a, b) != sgn_of(odd[a], odd[b]) * form(b, a)) return "form is not supersymmetric";
      Element sa = apply_sigma({{a, 1}}), sb = apply_sigma({{b, 1}});
      if (pair(sa, sb) != form(b, a)) return "sigma does not preserve the form on " + label(a) + ", " + label(b);
      Element lhs = apply_sigma(bracket(a, b));
      Element rhs = bracket(sb, sa);
      if (lhs != rhs) return "sigma is not an anti-automorphism on " + label(a) + ", " + label(b);
    }
  }
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c) {
        Element bc = bracket(b, c);
        // invariance ([a,b] | c) = (a | [b,c])
        if (pair(bracket(a, b), {{c, 1}}) != pair({{a, 1}}, bc)) return "form is not invariant";
        Element x = {{a, 1}}, y = {{b, 1}}, z = {{c, 1}};
        Element t1 = bracket(x, bc), t2 = bracket(y, bracket(c, a)), t3 = bracket(z, bracket(a, b));
        Element sum;
        for (const auto& [i, v] : t1) add_to(sum, i, sgn_of(odd[a], odd[c]) * v);
        for (const auto& [i, v] : t2) add_to(sum, i, sgn_of(odd[b], odd[a]) * v);
        for (const auto& [i, v] : t3) add_to(sum, i, sgn_of(odd[c], odd[b]) * v);
        if (!clean(sum).empty())
          return "super-Jacobi fails on " + label(a) + ", " + label(b) + ", " + label(c);
      }
  return {};
}

StructuredAlgebra build_structured(const SuperRootDatum& d) {
  if (d.kind != AlgebraKind::SL && d.kind != AlgebraKind::OSPOdd && d.kind != AlgebraKind::OSPEven)
    throw Error(ErrorKind::UnsupportedFamily, "no matrix realisation for " + d.name);
  NaturalModule V;
  auto push = [&](Symbol s, int sign, bool o) {
    V.wt.push_back(sign == 0 ? Weight{} : Weight::unit(s, Rational(sign)));
    V.odd.push_back(o);
    V.sym.push_back(s);
    V.sign.push_back(sign);
  };
  const int p = d.p, q = d.q;
  if (d.kind == AlgebraKind::SL) {
    for (int i = 1; i <= p; ++i) push(Symbol::eps(i), 1, false);
    for (int j = 1; j <= q; ++j) push(Symbol::del(j), 1, true);
  } else {
    for (int i = 1; i <= p; ++i) push(Symbol::eps(i), 1, false);
    for (int i = 1; i <= p; ++i) push(Symbol::eps(i), -1, false);
    if (d.kind == AlgebraKind::OSPOdd) push(Symbol::eps(0), 0, false);
    for (int j = 1; j <= q; ++j) push(Symbol::del(j), 1, true);
    for (int j = 1; j <= q; ++j) push(Symbol::del(j), -1, true);
  }
  const std::size_t N = V.wt.size();
  if (N < 2) throw Error(ErrorKind::UnsupportedFamily, "no matrix realisation for " + d.name);

  // invariant form on the natural module (orthosymplectic case)
  Matrix B(N, N);
  if (d.kind != AlgebraKind::SL) {
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) {
        if (V.sym[a] != V.sym[b] || V.sign[a] != -V.sign[b]) continue;
        if (V.sign[a] == 0) B(a, b) = 1;
        else if (!V.odd[a]) B(a, b) = 1;
        else B(a, b) = V.sign[a] > 0 ? 1 : -1;
      }
  }

  // solve for the algebra elements supported on the matrix units of a given weight and parity
  auto solve_space = [&](const Weight& w, bool o) {
    std::vector<std::pair<std::size_t, std::size_t>> units;
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b)
        if (V.wt[a] - V.wt[b] == w && (V.odd[a] != V.odd[b]) == o) units.emplace_back(a, b);
    std::vector<Matrix> out;
    if (units.empty()) return out;
    std::vector<Vector> rows;
    if (d.kind == AlgebraKind::SL) {
      if (w.is_zero() && !d.center) {
        Vector r(units.size());
        for (std::size_t u = 0; u < units.size(); ++u)
          r[u] = units[u].first == units[u].second ? (V.odd[units[u].first] ? Rational(-1) : Rational(1)) : Rational(0);
        rows.push_back(r);
      }
    } else {
      // B(Xc, e) + (-1)^{|X||c|} B(c, Xe) = 0
      for (std::size_t c = 0; c < N; ++c)
        for (std::size_t e = 0; e < N; ++e) {
          Vector r(units.size());
          bool any = false;
          for (std::size_t u = 0; u < units.size(); ++u) {
            auto [a, b] = units[u];
            Rational v = 0;
            if (b == c) v += B(a, e);
            if (b == e) v += ((o && V.odd[c]) ? Rational(-1) : Rational(1)) * B(c, a);
            if (sgn(v) != 0) any = true;
            r[u] = v;
          }
          if (any) rows.push_back(r);
        }
    }
    std::vector<Vector> basis;
    if (rows.empty()) {
      for (std::size_t u = 0; u < units.size(); ++u) {
        Vector v(units.size());
        v[u] = 1;
        basis.push_back(v);
      }
    } else {
      basis = nullspace(Matrix::from_rows(rows, units.size()));
    }
    for (const auto& v : basis) {
      Matrix m(N, N);
      for (std::size_t u = 0; u < units.size(); ++u) m(units[u].first, units[u].second) = v[u];
      out.push_back(m);
    }
    return out;
  };

  StructuredAlgebra A;
  A.datum = d;
  A.vodd = V.odd;
  A.vweight_sym_ = V.sym;
  A.vweight_sign_ = V.sign;
  // root vectors: positive then negative, in the order of the datum
  std::vector<Weight> roots;
  for (const auto& r : d.even_roots) roots.push_back(r);
  for (const auto& r : d.odd_roots) roots.push_back(r);
  std::sort(roots.begin(), roots.end());
  for (const auto& r : roots) {
    bool o = d.is_odd_root(r);
    auto sp = solve_space(r, o);
    if (sp.size() != 1)
      throw Error(ErrorKind::Internal, "root space of " + r.to_string() + " has dimension " + std::to_string(sp.size()));
    A.weight.push_back(r);
    A.odd.push_back(o);
    A.matrix.push_back(sp[0]);
  }
  auto cart = solve_space(Weight{}, false);
  if (static_cast<int>(cart.size()) != d.cartan_dim)
    throw Error(ErrorKind::Internal, "Cartan subalgebra has dimension " + std::to_string(cart.size()));
  for (const auto& h : cart) {
    A.cartan.push_back(static_cast<int>(A.matrix.size()));
    A.weight.push_back(Weight{});
    A.odd.push_back(false);
    A.matrix.push_back(h);
    std::vector<Rational> diag(N);
    for (std::size_t a = 0; a < N; ++a) diag[a] = h(a, a);
    A.cartan_eval_.push_back(diag);
  }
  A.dim = static_cast<int>(A.matrix.size());

  // check the weights against the realisation: [h, e_a] = weight(h) e_a
  for (int a = 0; a < A.dim; ++a) {
    if (A.weight[a].is_zero()) continue;
    for (std::size_t hi = 0; hi < A.cartan.size(); ++hi) {
      Matrix c = commutator(A.matrix[A.cartan[hi]], false, A.matrix[a], A.odd[a]);
      Rational ev = A.eval(A.weight[a], static_cast<int>(hi));
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
          if (c(i, j) != ev * A.matrix[a](i, j)) throw Error(ErrorKind::Internal, "weight mismatch for " + A.label(a));
    }
  }

  // structure constants
  std::map<Weight, int> by_weight;
  for (int a = 0; a < A.dim; ++a)
    if (!A.weight[a].is_zero()) by_weight[A.weight[a]] = a;
  Matrix hcols(N, A.cartan.size());
  for (std::size_t hi = 0; hi < A.cartan.size(); ++hi)
    for (std::size_t i = 0; i < N; ++i) hcols(i, hi) = A.matrix[A.cartan[hi]](i, i);
  A.bracket_.assign(static_cast<std::size_t>(A.dim) * A.dim, {});
  for (int a = 0; a < A.dim; ++a)
    for (int b = 0; b < A.dim; ++b) {
      Matrix c = commutator(A.matrix[a], A.odd[a], A.matrix[b], A.odd[b]);
      if (c.is_zero()) continue;
      Weight w = A.weight[a] + A.weight[b];
      Element e;
      if (w.is_zero()) {
        Vector diag(N);
        for (std::size_t i = 0; i < N; ++i) diag[i] = c(i, i);
        auto sol = solve(hcols, diag);
        if (!sol) throw Error(ErrorKind::Internal, "bracket leaves the Cartan subalgebra");
        for (std::size_t hi = 0; hi < sol->size(); ++hi)
          if (sgn((*sol)[hi]) != 0) e.emplace_back(A.cartan[hi], (*sol)[hi]);
      } else {
        auto it = by_weight.find(w);
        if (it == by_weight.end()) throw Error(ErrorKind::Internal, "bracket of weight " + w.to_string() + " is nonzero");
        const Matrix& m = A.matrix[it->second];
        std::optional<Rational> ratio;
        for (std::size_t i = 0; i < N && !ratio; ++i)
          for (std::size_t j = 0; j < N && !ratio; ++j)
            if (sgn(m(i, j)) != 0) ratio = c(i, j) / m(i, j);
        e.emplace_back(it->second, *ratio);
      }
      A.bracket_[static_cast<std::size_t>(a) * A.dim + b] = clean(e);
    }

  // form: s str(XY), normalised against the datum on theta
  Matrix F(A.dim, A.dim);
  for (int a = 0; a < A.dim; ++a)
    for (int b = 0; b < A.dim; ++b) F(a, b) = supertrace(A.matrix[a] * A.matrix[b], V.odd);
  {
    // dual form on h*: (lambda, mu) = lambda(H) Fh^-1 mu(H)
    Matrix Fh(A.cartan.size(), A.cartan.size());
    for (std::size_t i = 0; i < A.cartan.size(); ++i)
      for (std::size_t j = 0; j < A.cartan.size(); ++j) Fh(i, j) = F(A.cartan[i], A.cartan[j]);
    auto Fi = inverse(Fh);
    if (!Fi) throw Error(ErrorKind::Internal, "supertrace form is degenerate on the Cartan subalgebra");
    auto dual = [&](const Weight& x, const Weight& y) {
      Vector vx(A.cartan.size()), vy(A.cartan.size());
      for (std::size_t i = 0; i < A.cartan.size(); ++i) {
        vx[i] = A.eval(x, static_cast<int>(i));
        vy[i] = A.eval(y, static_cast<int>(i));
      }
      Vector t = *Fi * vy;
      Rational s = 0;
      for (std::size_t i = 0; i < vx.size(); ++i) s += vx[i] * t[i];
      return s;
    };
    Rational s1 = dual(d.theta, d.theta);
    Rational s = s1 / d.norm(d.theta);  // (x|y)_s = s str(xy) scales the dual form by 1/s
    for (int a = 0; a < A.dim; ++a)
      for (int b = 0; b < A.dim; ++b) F(a, b) *= s;
    for (const auto& x : roots)
      for (const auto& y : roots)
        if (dual(x, y) / s != d.form(x, y))
          throw Error(ErrorKind::Internal, "invariant form does not match the root datum on " + x.to_string());
  }
  A.form = F;

  // sigma: e_alpha <-> e_-alpha on simple roots, extended by sigma[x,y] = [sigma y, sigma x]
  A.sigma.assign(A.dim, {-1, 0});
  for (int h : A.cartan) A.sigma[h] = {h, 1};
  const Base& base = d.distinguished;
  std::deque<int> done;
  for (const auto& al : base.simple) {
    int e = A.index_of(al), f = A.index_of(-al);
    A.sigma[e] = {f, 1};
    A.sigma[f] = {e, 1};
    done.push_back(e);
    done.push_back(f);
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (int x : std::vector<int>(done.begin(), done.end())) {
      for (const auto& al : base.simple) {
        for (int sgnr : {1, -1}) {
          int s = A.index_of(Rational(sgnr) * al);
          const Element& br = A.bracket(s, x);
          if (br.size() != 1) continue;
          auto [t, c] = br.front();
          if (A.weight[t].is_zero() || A.sigma[t].first >= 0) continue;
          // sigma(e_t) = [sigma x, sigma s] / c
          Element sx = A.apply_sigma({{x, 1}}), ss = A.apply_sigma({{s, 1}});
          Element img = A.bracket(sx, ss);
          if (img.size() != 1) throw Error(ErrorKind::Internal, "sigma image is not a root vector");
          A.sigma[t] = {img.front().first, img.front().second / c};
          done.push_back(t);
          progress = true;
        }
      }
    }
  }
  for (int a = 0; a < A.dim; ++a)
    if (A.sigma[a].first < 0) throw Error(ErrorKind::Internal, "sigma undefined on " + A.label(a));

  if (auto err = A.validate(); !err.empty()) throw Error(ErrorKind::Internal, "realisation of " + d.name + ": " + err);
  return A;
}

}  // namespace superds
