#include "superds/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>

#include "superds/error.hpp"

namespace superds {

// ---------------------------------------------------------------- Frame

Frame::Frame(std::vector<Weight> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) return;
  std::set<Symbol> support;
  for (const auto& g : generators_)
    for (const auto& [s, c] : g.terms()) support.insert(s);
  std::vector<Symbol> symbols(support.begin(), support.end());
  // rows = symbols, columns = generators; pick independent rows via the transpose.
  Matrix mt(generators_.size(), symbols.size());
  for (std::size_t j = 0; j < generators_.size(); ++j)
    for (std::size_t i = 0; i < symbols.size(); ++i) mt(j, i) = generators_[j][symbols[i]];
  auto rows = independent_columns(mt);
  if (rows.size() != generators_.size())
    throw Error(ErrorKind::InvalidBase, "frame generators are linearly dependent");
  Matrix square(rows.size(), rows.size());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    rows_.push_back(symbols[rows[a]]);
    for (std::size_t j = 0; j < generators_.size(); ++j) square(a, j) = mt(j, rows[a]);
  }
  auto inv = inverse(square);
  if (!inv) throw Error(ErrorKind::Internal, "frame square system is singular");
  inverse_ = *inv;
}

std::optional<Vector> Frame::coords(const Weight& w) const {
  Vector rhs(rows_.size());
  for (std::size_t a = 0; a < rows_.size(); ++a) rhs[a] = w[rows_[a]];
  Vector c = generators_.empty() ? Vector{} : inverse_ * rhs;
  if (combine(c) != w) return std::nullopt;
  return c;
}

std::optional<std::vector<long>> Frame::int_coords(const Weight& w) const {
  auto c = coords(w);
  if (!c) return std::nullopt;
  std::vector<long> out;
  out.reserve(c->size());
  for (const auto& x : *c) {
    if (!is_integer(x)) return std::nullopt;
    out.push_back(to_long(x));
  }
  return out;
}

Weight Frame::combine(const Vector& c) const {
  Weight w;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) != 0) w += c[i] * generators_[i];
  return w;
}

Weight Frame::combine(const std::vector<long>& c) const {
  Weight w;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) w += Rational(c[i]) * generators_[i];
  return w;
}

// ---------------------------------------------------------------- Base

std::vector<Weight> Base::finite_part() const {
  std::vector<Weight> out;
  for (const auto& a : simple)
    if (sgn(a.delta_coeff()) == 0) out.push_back(a);
  return out;
}

std::vector<Weight> Base::affine_roots() const {
  std::vector<Weight> out;
  for (const auto& a : simple)
    if (sgn(a.delta_coeff()) != 0) out.push_back(a);
  return out;
}

// ---------------------------------------------------------------- datum

std::vector<Weight> SuperRootDatum::roots() const {
  std::vector<Weight> out = even_roots;
  out.insert(out.end(), odd_roots.begin(), odd_roots.end());
  return out;
}

bool SuperRootDatum::is_root(const Weight& w) const {
  return std::find(even_roots.begin(), even_roots.end(), w) != even_roots.end() || is_odd_root(w);
}

bool SuperRootDatum::is_odd_root(const Weight& w) const {
  return std::find(odd_roots.begin(), odd_roots.end(), w) != odd_roots.end();
}

int SuperRootDatum::rank() const {
  auto r = roots();
  if (r.empty()) return 0;
  Matrix m(coords.size(), r.size());
  for (std::size_t j = 0; j < r.size(); ++j)
    for (std::size_t i = 0; i < coords.size(); ++i) m(i, j) = r[j][coords[i]];
  return static_cast<int>(superds::rank(m));
}

Rational SuperRootDatum::form(const Weight& a, const Weight& b) const {
  auto index_of = [&](Symbol s) -> std::size_t {
    auto it = std::lower_bound(coords.begin(), coords.end(), s);
    if (it == coords.end() || *it != s)
      throw Error(ErrorKind::SymbolMismatch, "symbol " + s.name() + " is not a coordinate of " + name);
    return static_cast<std::size_t>(it - coords.begin());
  };
  Rational v = 0;
  std::vector<std::pair<std::size_t, Rational>> fb;
  for (const auto& [s, c] : b.terms())
    if (s.finite()) fb.emplace_back(index_of(s), c);
  for (const auto& [s, c] : a.terms()) {
    if (!s.finite()) continue;
    std::size_t i = index_of(s);
    for (const auto& [j, cb] : fb) v += c * cb * gram(i, j);
  }
  v += a.level() * b.delta_coeff() + a.delta_coeff() * b.level();
  return v;
}

Rational bilinear(const SuperRootDatum& d, const Weight& a, const Weight& b) { return d.form(a, b); }

// ---------------------------------------------------------------- construction helpers

namespace {

using Functional = std::map<Symbol, Rational>;

Rational apply(const Functional& f, const Weight& w) {
  Rational v = 0;
  for (const auto& [s, c] : w.terms()) {
    auto it = f.find(s);
    if (it != f.end()) v += c * it->second;
  }
  return v;
}

void add_pm(std::vector<Weight>& out, const Weight& w) {
  out.push_back(w);
  out.push_back(-w);
}

// Simple roots of the positive system {alpha : f(alpha) > 0}.
Base base_from_functional(const SuperRootDatum& d, const Functional& f) {
  std::vector<Weight> pos;
  for (const auto& r : d.roots()) {
    auto v = apply(f, r);
    if (sgn(v) == 0) throw Error(ErrorKind::Internal, "functional is not generic on " + r.to_string());
    if (sgn(v) > 0) pos.push_back(r);
  }
  std::set<Weight> posset(pos.begin(), pos.end());
  std::vector<Weight> simple;
  for (const auto& a : pos) {
    bool decomposable = false;
    for (const auto& b : pos) {
      if (apply(f, b) >= apply(f, a)) continue;
      if (posset.count(a - b)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(a);
  }
  // order by the largest f-value among symbols entering with positive coefficient
  auto key = [&](const Weight& w) {
    Rational best = 0;
    bool first = true;
    for (const auto& [s, c] : w.terms()) {
      if (sgn(c) <= 0) continue;
      auto it = f.find(s);
      Rational v = it == f.end() ? Rational(0) : it->second;
      if (first || v > best) best = v;
      first = false;
    }
    return best;
  };
  std::stable_sort(simple.begin(), simple.end(), [&](const Weight& a, const Weight& b) {
    auto ka = key(a), kb = key(b);
    if (ka != kb) return ka > kb;
    return apply(f, a) < apply(f, b) || (apply(f, a) == apply(f, b) && a < b);
  });
  return Base{simple, false};
}

std::string itos(int v) { return std::to_string(v); }

// Candidate functionals; the first one is the distinguished choice.
std::vector<Functional> candidate_functionals(const SuperRootDatum& d) {
  std::vector<Functional> out;
  const int p = d.p, q = d.q;
  switch (d.kind) {
    case AlgebraKind::SL:
    case AlgebraKind::OSPOdd:
    case AlgebraKind::OSPEven: {
      // interleavings of eps_1 > ... > eps_p and del_1 > ... > del_q
      const int n = p + q;
      bool eps_first = d.kind == AlgebraKind::SL || (d.kind == AlgebraKind::OSPEven && p == 1);
      std::vector<int> pattern(n);  // 0 = eps, 1 = del
      std::vector<std::vector<int>> patterns;
      std::function<void(int, int, int)> rec = [&](int pos, int e, int dl) {
        if (pos == n) {
          patterns.push_back(pattern);
          return;
        }
        if (e < p) {
          pattern[pos] = 0;
          rec(pos + 1, e + 1, dl);
        }
        if (dl < q) {
          pattern[pos] = 1;
          rec(pos + 1, e, dl + 1);
        }
      };
      rec(0, 0, 0);
      std::vector<int> dist(n);
      for (int i = 0; i < n; ++i) dist[i] = eps_first ? (i < p ? 0 : 1) : (i < q ? 1 : 0);
      std::stable_partition(patterns.begin(), patterns.end(), [&](const auto& pt) { return pt == dist; });
      for (const auto& pt : patterns) {
        Functional f;
        int e = 0, dl = 0;
        for (int i = 0; i < n; ++i) {
          Rational v = n - i;
          if (pt[i] == 0) f[Symbol::eps(++e)] = v;
          else f[Symbol::del(++dl)] = v;
        }
        out.push_back(std::move(f));
      }
      break;
    }
    case AlgebraKind::F4:
      for (int t : {16, 12, 8, 4, 1}) {
        Functional f{{Symbol::eps(1), 8}, {Symbol::eps(2), 4}, {Symbol::eps(3), 2}, {Symbol::del(1), t}};
        out.push_back(std::move(f));
      }
      break;
    case AlgebraKind::G3:
      for (Rational t : {Rational(4), Rational(5, 2), Rational(3, 2), Rational(1, 2)}) {
        // f(eps3) = -3 through eps3 = -eps1 - eps2
        Functional f{{Symbol::eps(1), 2}, {Symbol::eps(2), 1}, {Symbol::del(1), t}};
        out.push_back(std::move(f));
      }
      break;
    case AlgebraKind::Zero:
    case AlgebraKind::Reduced:
      out.push_back(Functional{});
      break;
  }
  return out;
}

void finalize(SuperRootDatum& d) {
  // dual Cartan: root span when it has the right dimension, otherwise every coordinate
  std::vector<Weight> all = d.roots();
  std::vector<Weight> span_basis;
  if (!all.empty()) {
    Matrix m(d.coords.size(), all.size());
    for (std::size_t j = 0; j < all.size(); ++j)
      for (std::size_t i = 0; i < d.coords.size(); ++i) m(i, j) = all[j][d.coords[i]];
    for (auto j : independent_columns(m)) span_basis.push_back(all[j]);
  }
  if (static_cast<int>(span_basis.size()) == d.cartan_dim) {
    d.hstar = span_basis;
  } else {
    d.hstar.clear();
    for (const auto& s : d.coords) d.hstar.push_back(Weight::unit(s));
    if (static_cast<int>(d.hstar.size()) != d.cartan_dim)
      throw Error(ErrorKind::Internal, "cartan dimension mismatch for " + d.name);
  }

  auto cands = candidate_functionals(d);
  const Functional& f0 = cands.front();
  d.even_positive.clear();
  for (const auto& r : d.even_roots)
    if (sgn(apply(f0, r)) > 0) d.even_positive.push_back(r);

  d.theta = Weight{};
  Rational best = 0;
  for (const auto& r : d.even_positive) {
    if (sgn(d.norm(r)) <= 0) continue;
    auto v = apply(f0, r);
    if (d.theta.is_zero() || v > best) {
      best = v;
      d.theta = r;
    }
  }
  d.distinguished = base_from_functional(d, f0);
  d.standard = d.distinguished;
  if (d.theta.is_zero()) return;
  for (const auto& f : cands) {
    bool same_even = true;
    for (const auto& r : d.even_positive)
      if (sgn(apply(f, r)) <= 0) same_even = false;
    if (!same_even) continue;
    Base b = base_from_functional(d, f);
    auto mx = maximal_roots(d, b);
    if (mx.size() == 1 && mx.front() == d.theta) {
      d.standard = b;
      break;
    }
  }
}

SuperRootDatum make_eps_del(AlgebraKind kind, int p, int q, const Rational& c) {
  SuperRootDatum d;
  d.kind = kind;
  d.p = p;
  d.q = q;
  d.scale = c;
  for (int i = 1; i <= p; ++i) d.coords.push_back(Symbol::eps(i));
  for (int j = 1; j <= q; ++j) d.coords.push_back(Symbol::del(j));
  d.gram = Matrix(p + q, p + q);
  for (int i = 0; i < p; ++i) d.gram(i, i) = c;
  for (int j = 0; j < q; ++j) d.gram(p + j, p + j) = -c;
  return d;
}

SuperRootDatum make_sl(int p, int q) {
  if (p < 0 || q < 0 || p + q < 2) throw Error(ErrorKind::UnsupportedFamily, "sl(" + itos(p) + "|" + itos(q) + ") is degenerate");
  SuperRootDatum d = make_eps_del(AlgebraKind::SL, p, q, p >= q ? 1 : -1);
  std::vector<Weight> e;
  for (int i = 1; i <= p; ++i) e.push_back(Weight::eps(i));
  for (int j = 1; j <= q; ++j) e.push_back(Weight::del(j));
  for (int i = 0; i < p + q; ++i)
    for (int j = i + 1; j < p + q; ++j) {
      bool odd = (i < p) != (j < p);
      add_pm(odd ? d.odd_roots : d.even_roots, e[i] - e[j]);
    }
  d.center = (p == q);
  d.cartan_dim = d.center ? p + q : p + q - 1;
  if (q == 0) {
    d.name = "A" + itos(p - 1);
    d.convention = "sl(" + itos(p) + ")";
  } else if (p == 0) {
    d.name = "A" + itos(q - 1);
    d.convention = "sl(0|" + itos(q) + ")";
  } else {
    d.name = "A(" + itos(p - 1) + "|" + itos(q - 1) + ")";
    d.convention = (p == q ? "gl(" : "sl(") + itos(p) + "|" + itos(q) + ")";
  }
  return d;
}

void osp_common_roots(SuperRootDatum& d) {
  const int p = d.p, q = d.q;
  for (int i = 1; i <= p; ++i)
    for (int j = i + 1; j <= p; ++j) {
      add_pm(d.even_roots, Weight::eps(i) - Weight::eps(j));
      add_pm(d.even_roots, Weight::eps(i) + Weight::eps(j));
    }
  for (int i = 1; i <= q; ++i) {
    for (int j = i + 1; j <= q; ++j) {
      add_pm(d.even_roots, Weight::del(i) - Weight::del(j));
      add_pm(d.even_roots, Weight::del(i) + Weight::del(j));
    }
    add_pm(d.even_roots, Rational(2) * Weight::del(i));
  }
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= q; ++j) {
      add_pm(d.odd_roots, Weight::eps(i) - Weight::del(j));
      add_pm(d.odd_roots, Weight::eps(i) + Weight::del(j));
    }
  d.cartan_dim = p + q;
}

SuperRootDatum make_osp_odd(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1) throw Error(ErrorKind::UnsupportedFamily, "osp(1|0) is degenerate");
  Rational c;
  if (q == 0) c = (p == 1) ? 2 : 1;
  else if (p > q) c = 1;
  else c = Rational(-1, 2);
  SuperRootDatum d = make_eps_del(AlgebraKind::OSPOdd, p, q, c);
  osp_common_roots(d);
  for (int i = 1; i <= p; ++i) add_pm(d.even_roots, Weight::eps(i));
  for (int j = 1; j <= q; ++j) add_pm(d.odd_roots, Weight::del(j));
  d.name = q == 0 ? "B" + itos(p) : "B(" + itos(p) + "|" + itos(q) + ")";
  d.convention = "osp(" + itos(2 * p + 1) + "|" + itos(2 * q) + ")";
  return d;
}

SuperRootDatum make_osp_even(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1) throw Error(ErrorKind::UnsupportedFamily, "osp(0|0) is degenerate");
  Rational c;
  if (q == 0) c = 1;
  else if (p == 0) c = Rational(-1, 2);
  else c = p > q ? Rational(1) : Rational(-1, 2);
  SuperRootDatum d = make_eps_del(AlgebraKind::OSPEven, p, q, c);
  osp_common_roots(d);
  if (q == 0) d.name = p == 1 ? "GL1" : "D" + itos(p);
  else if (p == 0) d.name = "C" + itos(q);
  else if (p == 1) d.name = "C(" + itos(q + 1) + ")";
  else d.name = "D(" + itos(p) + "|" + itos(q) + ")";
  d.convention = (p == 1 && q == 0) ? "so(2)" : "osp(" + itos(2 * p) + "|" + itos(2 * q) + ")";
  return d;
}

SuperRootDatum make_f4() {
  SuperRootDatum d;
  d.kind = AlgebraKind::F4;
  d.p = 3;
  d.q = 1;
  d.name = "F(4)";
  d.convention = "F(4): eps1..eps3 with (eps,eps)=1, del1 with (del1,del1)=-3";
  for (int i = 1; i <= 3; ++i) d.coords.push_back(Symbol::eps(i));
  d.coords.push_back(Symbol::del(1));
  d.gram = Matrix(4, 4);
  for (int i = 0; i < 3; ++i) d.gram(i, i) = 1;
  d.gram(3, 3) = -3;
  for (int i = 1; i <= 3; ++i) {
    add_pm(d.even_roots, Weight::eps(i));
    for (int j = i + 1; j <= 3; ++j) {
      add_pm(d.even_roots, Weight::eps(i) - Weight::eps(j));
      add_pm(d.even_roots, Weight::eps(i) + Weight::eps(j));
    }
  }
  add_pm(d.even_roots, Weight::del(1));
  for (int s = 0; s < 16; ++s) {
    Weight w;
    for (int i = 0; i < 3; ++i) w += Rational((s >> i) & 1 ? -1 : 1, 2) * Weight::eps(i + 1);
    w += Rational((s >> 3) & 1 ? -1 : 1, 2) * Weight::del(1);
    d.odd_roots.push_back(w);
  }
  d.cartan_dim = 4;
  return d;
}

SuperRootDatum make_g3() {
  SuperRootDatum d;
  d.kind = AlgebraKind::G3;
  d.p = 2;
  d.q = 1;
  d.name = "G(3)";
  d.convention = "G(3): eps1,eps2 with eps3=-eps1-eps2, (eps_i,eps_j)=[[2/3,-1/3],[-1/3,2/3]], (del1,del1)=-2/3";
  d.coords = {Symbol::eps(1), Symbol::eps(2), Symbol::del(1)};
  d.gram = Matrix(3, 3);
  d.gram(0, 0) = d.gram(1, 1) = Rational(2, 3);
  d.gram(0, 1) = d.gram(1, 0) = Rational(-1, 3);
  d.gram(2, 2) = Rational(-2, 3);
  std::vector<Weight> e = {Weight::eps(1), Weight::eps(2), -Weight::eps(1) - Weight::eps(2)};
  for (int i = 0; i < 3; ++i) {
    add_pm(d.even_roots, e[i]);
    for (int j = i + 1; j < 3; ++j) add_pm(d.even_roots, e[i] - e[j]);
    add_pm(d.odd_roots, e[i] + Weight::del(1));
    add_pm(d.odd_roots, e[i] - Weight::del(1));
  }
  add_pm(d.even_roots, Rational(2) * Weight::del(1));
  add_pm(d.odd_roots, Weight::del(1));
  d.cartan_dim = 3;
  return d;
}

}  // namespace

SuperRootDatum make_algebra(AlgebraKind kind, int p, int q) {
  SuperRootDatum d;
  switch (kind) {
    case AlgebraKind::SL:
      if (p >= 0 && q >= 0 && p + q < 2) kind = AlgebraKind::Zero;
      else d = make_sl(p, q);
      break;
    case AlgebraKind::OSPOdd:
      if (p == 0 && q == 0) kind = AlgebraKind::Zero;
      else d = make_osp_odd(p, q);
      break;
    case AlgebraKind::OSPEven:
      if (p == 0 && q == 0) kind = AlgebraKind::Zero;
      else d = make_osp_even(p, q);
      break;
    case AlgebraKind::F4: d = make_f4(); break;
    case AlgebraKind::G3: d = make_g3(); break;
    case AlgebraKind::Zero: break;
    case AlgebraKind::Reduced: throw Error(ErrorKind::UnsupportedFamily, "reduced data are built by the DS reduction");
  }
  if (kind == AlgebraKind::Zero) {
    d = SuperRootDatum{};
    d.name = "ZERO";
    d.convention = "0";
    return d;
  }
  finalize(d);
  return d;
}

SuperRootDatum build_algebra(Family family, int m, int n) {
  auto bad = [&](const std::string& why) {
    return Error(ErrorKind::UnsupportedFamily, why);
  };
  switch (family) {
    case Family::A:
      if (m < 0 || n < 0) throw bad("A(m|n) needs m,n >= 0");
      return make_algebra(AlgebraKind::SL, m + 1, n + 1);
    case Family::B:
      if (m < 0 || n < 1) throw bad("B(m|n) needs m >= 0, n >= 1");
      return make_algebra(AlgebraKind::OSPOdd, m, n);
    case Family::C:
      if (n < 2) throw bad("C(n) needs n >= 2");
      return make_algebra(AlgebraKind::OSPEven, 1, n - 1);
    case Family::D:
      if (m < 2 || n < 1) throw bad("D(m|n) needs m >= 2, n >= 1");
      if (m == 2 && n == 1) throw bad("D(2|1) is the D(2|1,a) family, which is excluded");
      return make_algebra(AlgebraKind::OSPEven, m, n);
    case Family::F4: return make_algebra(AlgebraKind::F4, 3, 1);
    case Family::G3: return make_algebra(AlgebraKind::G3, 2, 1);
    case Family::LieA:
      if (n < 1) throw bad("A_n needs n >= 1");
      return make_algebra(AlgebraKind::SL, n + 1, 0);
    case Family::LieB:
      if (n < 1) throw bad("B_n needs n >= 1");
      return make_algebra(AlgebraKind::OSPOdd, n, 0);
    case Family::LieC:
      if (n < 1) throw bad("C_n needs n >= 1");
      return make_algebra(AlgebraKind::OSPEven, 0, n);
    case Family::LieD:
      if (n < 2) throw bad("D_n needs n >= 2");
      return make_algebra(AlgebraKind::OSPEven, n, 0);
  }
  throw bad("unknown family");
}

SuperRootDatum parse_algebra(std::string_view spec) {
  std::string s;
  for (char ch : spec)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  auto fail = [&](std::size_t pos, const std::string& why) {
    return Error(ErrorKind::Parse, "algebra '" + std::string(spec) + "' at " + std::to_string(pos) + ": " + why);
  };
  std::size_t pos = 0;
  auto read_int = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw fail(pos, "expected integer");
    return std::stoi(s.substr(start, pos - start));
  };
  auto expect = [&](char ch) {
    if (pos >= s.size() || s[pos] != ch) throw fail(pos, std::string("expected '") + ch + "'");
    ++pos;
  };
  auto done = [&]() {
    if (pos != s.size()) throw fail(pos, "trailing characters");
  };
  if (s.rfind("D(2|1,", 0) == 0 || s.rfind("D(2|1;", 0) == 0)
    throw Error(ErrorKind::UnsupportedFamily, "D(2|1,a) is excluded");
  if (s.rfind("sl(", 0) == 0 || s.rfind("gl(", 0) == 0 || s.rfind("osp(", 0) == 0) {
    bool osp = s[0] == 'o';
    pos = osp ? 4 : 3;
    int a = read_int();
    int b = 0;
    if (pos < s.size() && s[pos] == '|') {
      ++pos;
      b = read_int();
    }
    expect(')');
    done();
    if (!osp) return make_algebra(AlgebraKind::SL, a, b);
    if (b % 2) throw fail(pos, "osp(M|N) needs even N");
    return make_algebra(a % 2 ? AlgebraKind::OSPOdd : AlgebraKind::OSPEven, a / 2, b / 2);
  }
  if (s.empty()) throw fail(0, "empty");
  char fam = s[0];
  pos = 1;
  if (pos < s.size() && s[pos] == '(') {
    ++pos;
    int a = read_int();
    if (fam == 'F' || fam == 'G' || fam == 'C') {
      expect(')');
      done();
      if (fam == 'F') {
        if (a != 4) throw fail(2, "only F(4)");
        return build_algebra(Family::F4, 0, 0);
      }
      if (fam == 'G') {
        if (a != 3) throw fail(2, "only G(3)");
        return build_algebra(Family::G3, 0, 0);
      }
      return build_algebra(Family::C, 0, a);
    }
    expect('|');
    int b = read_int();
    expect(')');
    done();
    switch (fam) {
      case 'A': return build_algebra(Family::A, a, b);
      case 'B': return build_algebra(Family::B, a, b);
      case 'D': return build_algebra(Family::D, a, b);
      default: throw fail(0, "unknown family");
    }
  }
  int r = read_int();
  done();
  switch (fam) {
    case 'A': return build_algebra(Family::LieA, 0, r);
    case 'B': return build_algebra(Family::LieB, 0, r);
    case 'C': return build_algebra(Family::LieC, 0, r);
    case 'D': return build_algebra(Family::LieD, 0, r);
    default: throw fail(0, "unknown family");
  }
}

// ---------------------------------------------------------------- bases

std::vector<Weight> positive_roots(const SuperRootDatum& d, const Base& finite_base) {
  Frame fr(finite_base.simple);
  std::vector<Weight> out;
  for (const auto& r : d.roots()) {
    auto c = fr.coords(r);
    if (!c) throw Error(ErrorKind::InvalidBase, "root " + r.to_string() + " is outside the span of the base");
    bool nonneg = std::all_of(c->begin(), c->end(), [](const Rational& x) { return sgn(x) >= 0; });
    if (nonneg) out.push_back(r);
  }
  return out;
}

void validate_base(const SuperRootDatum& d, const Base& finite_base) {
  Frame fr(finite_base.simple);
  if (static_cast<int>(finite_base.simple.size()) != d.rank())
    throw Error(ErrorKind::InvalidBase, "base size differs from the rank");
  for (const auto& a : finite_base.simple)
    if (!d.is_root(a)) throw Error(ErrorKind::InvalidBase, a.to_string() + " is not a root");
  for (const auto& r : d.roots()) {
    auto c = fr.int_coords(r);
    if (!c) throw Error(ErrorKind::InvalidBase, "root " + r.to_string() + " has non-integral coordinates");
    bool pos = std::all_of(c->begin(), c->end(), [](long x) { return x >= 0; });
    bool neg = std::all_of(c->begin(), c->end(), [](long x) { return x <= 0; });
    if (!pos && !neg) throw Error(ErrorKind::InvalidBase, "root " + r.to_string() + " has mixed signs");
  }
}

std::vector<Weight> maximal_roots(const SuperRootDatum& d, const Base& finite_base) {
  Frame fr(finite_base.simple);
  auto pos = positive_roots(d, finite_base);
  std::vector<Vector> co;
  for (const auto& r : pos) co.push_back(*fr.coords(r));
  std::vector<Weight> out;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pos.size() && !dominated; ++j) {
      if (i == j) continue;
      bool ge = true;
      for (std::size_t t = 0; t < co[i].size(); ++t)
        if (co[j][t] < co[i][t]) ge = false;
      if (ge) dominated = true;
    }
    if (!dominated) out.push_back(pos[i]);
  }
  return out;
}

Base affinize(const SuperRootDatum& d, const Base& finite_base) {
  Base b{finite_base.simple, true};
  for (const auto& t : maximal_roots(d, finite_base)) b.simple.push_back(Weight::delta() - t);
  return b;
}

Weight weyl_vector(const SuperRootDatum& d, const Base& base) {
  Base fin{base.finite_part(), false};
  Weight rho;
  if (!fin.simple.empty() || !d.roots().empty()) {
    for (const auto& r : positive_roots(d, fin)) {
      if (d.is_odd_root(r)) rho -= Rational(1, 2) * r;
      else rho += Rational(1, 2) * r;
    }
  }
  if (base.affine) rho += dual_coxeter(d) * Weight::lambda0();
  return rho;
}

std::optional<Rational> dual_coxeter_trace(const SuperRootDatum& d) {
  std::optional<Weight> lambda;
  if (!d.theta.is_zero()) lambda = d.theta;
  else
    for (const auto& r : d.roots())
      if (sgn(d.norm(r)) != 0) {
        lambda = r;
        break;
      }
  if (!lambda) return std::nullopt;
  Rational s = 0;
  for (const auto& r : d.even_roots) {
    Rational v = d.form(*lambda, r);
    s += v * v;
  }
  for (const auto& r : d.odd_roots) {
    Rational v = d.form(*lambda, r);
    s -= v * v;
  }
  return s / (2 * d.norm(*lambda));
}

Rational dual_coxeter(const SuperRootDatum& d) {
  if (d.roots().empty()) return 0;
  Weight rho = weyl_vector(d, d.distinguished);
  std::optional<Rational> h;
  for (const auto& t : maximal_roots(d, d.distinguished)) {
    Rational v = d.form(rho, t) + d.norm(t) / 2;
    if (h && *h != v) throw Error(ErrorKind::Internal, "maximal roots give different dual Coxeter numbers");
    h = v;
  }
  auto tr = dual_coxeter_trace(d);
  if (tr && *tr != *h)
    throw Error(ErrorKind::Internal, "dual Coxeter mismatch for " + d.name + ": " + to_string(*h) + " vs trace " + to_string(*tr));
  return *h;
}

int lacity(const SuperRootDatum& d) {
  std::optional<Rational> shortest;
  for (const auto& r : d.roots()) {
    Rational n = abs(d.norm(r));
    if (sgn(n) == 0) continue;
    if (!shortest || n < *shortest) shortest = n;
  }
  if (!shortest) return 1;
  Rational r = Rational(2) / *shortest;
  if (!is_integer(r)) throw Error(ErrorKind::Internal, "non-integral lacity for " + d.name);
  return static_cast<int>(to_long(r));
}

bool is_isotropic_set(const SuperRootDatum& d, const std::vector<Weight>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!d.is_odd_root(s[i])) return false;
    for (std::size_t j = i; j < s.size(); ++j)
      if (sgn(d.form(s[i], s[j])) != 0) return false;
  }
  if (s.empty()) return true;
  Matrix m(d.coords.size(), s.size());
  for (std::size_t j = 0; j < s.size(); ++j)
    for (std::size_t i = 0; i < d.coords.size(); ++i) m(i, j) = s[j][d.coords[i]];
  return superds::rank(m) == s.size();
}

std::vector<Weight> maximal_isotropic_set(const SuperRootDatum& d) {
  if (d.odd_roots.empty()) return {};
  // Witt index of the form on the dual Cartan bounds the answer
  Matrix g(d.hstar.size(), d.hstar.size());
  for (std::size_t i = 0; i < d.hstar.size(); ++i)
    for (std::size_t j = 0; j < d.hstar.size(); ++j) g(i, j) = d.form(d.hstar[i], d.hstar[j]);
  auto in = inertia(g);
  std::size_t bound = std::min(in.positive, in.negative) + in.zero;

  std::vector<Weight> iso;
  std::set<Weight> seen;
  for (const auto& r : d.odd_roots)
    if (sgn(d.norm(r)) == 0 && !seen.count(-r)) {
      iso.push_back(r);
      seen.insert(r);
    }
  std::vector<Weight> best, cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() > best.size()) best = cur;
    if (best.size() >= bound) return;
    for (std::size_t i = start; i < iso.size(); ++i) {
      cur.push_back(iso[i]);
      if (is_isotropic_set(d, cur)) rec(i + 1);
      cur.pop_back();
      if (best.size() >= bound) return;
    }
  };
  rec(0);
  return best;
}

int defect(const SuperRootDatum& d) { return static_cast<int>(maximal_isotropic_set(d).size()); }

int defect_closed_form(const SuperRootDatum& d) {
  if (d.odd_roots.empty()) return 0;
  switch (d.kind) {
    case AlgebraKind::SL:
    case AlgebraKind::OSPOdd:
    case AlgebraKind::OSPEven: return std::min(d.p, d.q);
    case AlgebraKind::F4:
    case AlgebraKind::G3: return 1;
    case AlgebraKind::Zero: return 0;
    case AlgebraKind::Reduced: return defect(d);
  }
  return 0;
}

Weight reflect(const SuperRootDatum& d, const Weight& w, const Weight& alpha) {
  Rational n = d.norm(alpha);
  if (sgn(n) == 0) throw Error(ErrorKind::IsotropicReflection, "cannot reflect in isotropic " + alpha.to_string());
  return w - (2 * d.form(w, alpha) / n) * alpha;
}

Base odd_reflect(const SuperRootDatum& d, const Base& base, const Weight& beta) {
  if (std::find(base.simple.begin(), base.simple.end(), beta) == base.simple.end())
    throw Error(ErrorKind::NotSimple, beta.to_string() + " is not a simple root of the base");
  if (!d.is_odd_root(beta.finite_part()) || sgn(d.norm(beta)) != 0)
    throw Error(ErrorKind::NotIsotropic, beta.to_string() + " is not an isotropic odd root");
  Base out{{}, base.affine};
  for (const auto& a : base.simple) {
    if (a == beta) out.simple.push_back(-beta);
    else if (sgn(d.form(a, beta)) != 0) out.simple.push_back(a + beta);
    else out.simple.push_back(a);
  }
  return out;
}

Rational casimir_eigenvalue(const SuperRootDatum& d, const Weight& lambda, const Base& affine_base) {
  if (!affine_base.affine) throw Error(ErrorKind::InvalidBase, "casimir eigenvalue needs an affine base");
  Weight rho = weyl_vector(d, affine_base);
  return d.form(lambda + Rational(2) * rho, lambda);
}

}  // namespace superds
