#include "superds/levels.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "superds/error.hpp"

namespace superds {

namespace {

bool nonneg(const Vector& c) {
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return sgn(x) >= 0; });
}

}  // namespace

Base level_base(const SuperRootDatum& d) {
  return affinize(d, d.standard.simple.empty() ? d.distinguished : d.standard);
}

std::vector<Weight> real_positive_roots(const SuperRootDatum& d, const Base& affine_base, int depth) {
  Frame fr(affine_base.simple);
  std::vector<Weight> out;
  std::set<Weight> seen;
  const auto roots = d.roots();
  for (int j = 0; j <= depth; ++j) {
    for (const auto& a : roots) {
      Weight w = a + Rational(j) * Weight::delta();
      auto c = fr.coords(w);
      if (!c || !nonneg(*c)) continue;
      if (seen.insert(w).second) out.push_back(w);
    }
  }
  return out;
}

namespace {

// real positive roots of a window with everything the integrality tests need
struct RootWindow {
  const SuperRootDatum& d;
  Base aff;
  Frame fr;
  Weight rho;
  Rational r;
  int depth;
  struct Item {
    Weight root;
    Weight test;  // the root itself, or its odd half
    Rational norm;
    Vector coords;
    long j;
    bool odd;
  };
  std::vector<Item> items;

  RootWindow(const SuperRootDatum& dd, const Base& a, int D)
      : d(dd), aff(a), fr(a.simple), rho(weyl_vector(dd, a)), r(lacity(dd)), depth(D) {
    for (const auto& w : real_positive_roots(d, aff, D)) {
      Weight half = Rational(1, 2) * w;
      bool h = d.is_odd_root(half.finite_part()) && is_integer(half.delta_coeff());
      Weight t = h ? half : w;
      items.push_back({w, t, d.norm(t), *fr.coords(w), to_long(w.delta_coeff()), d.is_odd_root(w.finite_part())});
    }
  }

  std::vector<const Item*> integral(const Weight& lambda) const {
    Weight lr = lambda + rho;
    if (sgn(d.form(lr, Weight::delta())) == 0)
      throw Error(ErrorKind::CriticalLevel, "level is critical: (lambda+rho, delta) = 0");
    std::vector<const Item*> out;
    for (const auto& it : items) {
      Rational f = d.form(lr, it.test);
      Rational t = sgn(it.norm) != 0 ? Rational(2 * f / it.norm) : Rational(r * f);
      if (is_integer(t)) out.push_back(&it);
    }
    return out;
  }

  bool admissible(const Weight& lambda) const {
    auto roots = integral(lambda);
    const std::size_t n = fr.size();
    {
      std::vector<Vector> rows;
      for (const auto* it : roots) rows.push_back(it->coords);
      if (rows.empty() || rank(Matrix::from_rows(rows, n)) < n) return false;
    }
    auto c = fr.coords(lambda.level() * Weight::lambda0() - lambda);
    if (!c || !nonneg(*c) || std::any_of(c->begin(), c->end(), [](const Rational& x) { return !is_integer(x); }))
      throw Error(ErrorKind::Undecidable, "lambda is outside k Lambda0 - Z>=0 Sigma");
    // simple roots of Delta_re(lambda)^+: indecomposable modulo imaginary roots
    std::set<Weight> set;
    for (const auto* it : roots) set.insert(it->root);
    std::vector<const Item*> simple;
    for (const auto* g : roots) {
      bool dec = false;
      for (const auto* a : roots) {
        if (a == g || a->j > g->j) continue;
        Weight rest = g->root - a->root;
        if (set.count(rest) || (rest.finite_part().is_zero() && sgn(rest.delta_coeff()) > 0)) {
          dec = true;
          break;
        }
      }
      if (!dec) simple.push_back(g);
    }
    {
      std::vector<Vector> rows;
      for (const auto* it : simple) rows.push_back(it->coords);
      if (simple.size() != n || rank(Matrix::from_rows(rows, n)) != n)
        throw Error(ErrorKind::Undecidable, "simple roots of the integral system are not a basis in the window");
    }
    const Weight lr = lambda + rho;
    for (const auto* b : simple) {
      Rational nb = d.norm(b->root);
      if (sgn(nb) == 0) continue;
      Rational t = Rational(2) * d.form(lr, b->root) / nb;  // (lambda + rho - rho_bar, b^v) + 1
      if (!is_integer(t) || sgn(t) <= 0) return false;
      if (b->odd && to_long(t) % 2 == 0) return false;
    }
    return true;
  }
};

}  // namespace

IntegralRoots integral_real_roots(const SuperRootDatum& d, const Weight& lambda, const Base& affine_base, int depth) {
  RootWindow rw(d, affine_base, depth);
  IntegralRoots out;
  out.depth = depth;
  for (const auto* it : rw.integral(lambda)) out.roots.push_back(it->root);
  // fit Delta-dot + Z u delta
  long u0 = 0;
  for (const auto& a : out.roots) {
    long j = to_long(a.delta_coeff());
    if (j > 0 && (u0 == 0 || j < u0)) u0 = j;
  }
  if (u0 > 0 && depth >= 3 * u0) {
    std::set<Weight> got(out.roots.begin(), out.roots.end()), want;
    for (const auto& it : rw.items)
      if (it.j % u0 == 0) want.insert(it.root);
    if (got == want) out.u = u0;
  }
  return out;
}

LevelDatum principal_admissible_level(const SuperRootDatum& d, const Rational& k) {
  LevelDatum L;
  L.k = k;
  L.hv = dual_coxeter(d);
  L.lacity = lacity(d);
  const Rational x = k + L.hv;
  if (sgn(x) == 0) {
    L.reason = "critical level";
    return L;
  }
  if (sgn(x) < 0) {
    L.reason = "k + h^v < 0";
    return L;
  }
  const Integer r = L.lacity;
  const long umax = 4 * to_long(Rational(x.get_den())) * L.lacity;
  for (long u = 1; u <= umax; ++u) {
    Rational ph = Rational(u) * x;  // p + h^v
    Rational p = ph - L.hv;
    if (!is_integer(p) || sgn(p) < 0) continue;
    bool ok;
    if (d.is_lie()) {
      ok = is_integer(ph) && gcd(ph.get_num(), Integer(u)) == 1 && gcd(Integer(u), r) == 1;
    } else {
      Rational rp = Rational(L.lacity) * ph;
      ok = is_integer(rp) && gcd(rp.get_num(), Integer(u)) == 1;
    }
    if (ok) {
      L.principal_admissible = true;
      L.p = to_long(p);
      L.u = u;
      return L;
    }
  }
  L.reason = "no (p,u) with p >= 0 satisfies the coprimality conditions";
  return L;
}

std::vector<LevelDatum> enumerate_principal_admissible(const SuperRootDatum& d, long max_den, long max_num) {
  std::set<Rational> ks;
  for (long b = 1; b <= max_den; ++b)
    for (long a = -max_num; a <= max_num; ++a) {
      Rational k(a, b);
      k.canonicalize();
      ks.insert(k);
    }
  std::vector<LevelDatum> out;
  for (const auto& k : ks) {
    auto L = principal_admissible_level(d, k);
    if (L.principal_admissible) out.push_back(L);
  }
  return out;
}

Weight affine_simple_root(const Base& affine_base) {
  std::optional<Weight> a0;
  for (const auto& a : affine_base.simple) {
    if (sgn(a.delta_coeff()) > 0) {
      if (a0) throw Error(ErrorKind::InvalidBase, "base has several affine simple roots");
      a0 = a;
    }
  }
  if (!a0) throw Error(ErrorKind::InvalidBase, "base has no affine simple root");
  return *a0;
}

Weight alpha0_prime(long u, const Base& affine_base) {
  if (u < 1) throw Error(ErrorKind::InconsistentTriple, "u must be positive");
  return affine_simple_root(affine_base) + Rational(u - 1) * Weight::delta();
}

Weight lambda0_bar(long u) { return Rational(1, u) * Weight::lambda0(); }

Weight mu_weight(long p, long u, const Base& affine_base) {
  return Rational(p) * lambda0_bar(u) - Rational(p + 1) * alpha0_prime(u, affine_base);
}

Weight r0prime_dot(const SuperRootDatum& d, const Rational& k, const Base& affine_base, long u, long p) {
  const Rational hv = dual_coxeter(d);
  if (k + hv != Rational(p) / Rational(u) + hv / Rational(u) || p < 0)
    throw Error(ErrorKind::InconsistentTriple, "k + h^v != (p + h^v)/u");
  Weight a0p = alpha0_prime(u, affine_base);
  Weight kL = k * Weight::lambda0();
  Weight closed = kL - Rational(p + 1) * a0p;
  if (sgn(d.norm(a0p)) == 0) throw Error(ErrorKind::InconsistentTriple, "alpha0' is isotropic");
  Weight rho = weyl_vector(d, affine_base);
  Weight dot = reflect(d, kL + rho, a0p) - rho;
  if (dot != closed)
    throw Error(ErrorKind::InconsistentTriple,
                "dot action gives " + dot.to_string() + " but the closed form gives " + closed.to_string());
  return closed;
}

bool is_admissible_weight(const SuperRootDatum& d, const Weight& lambda, const Base& affine_base, int depth) {
  const Rational x = lambda.level() + dual_coxeter(d);
  if (sgn(x) == 0) throw Error(ErrorKind::CriticalLevel, "critical level");
  // integrality of alpha + n delta is periodic in n with period dividing den(k + h^v)
  const long period = to_long(Rational(x.get_den()));
  return RootWindow(d, affine_base, static_cast<int>(std::max<long>(depth, 3 * period))).admissible(lambda);
}

Lemtt2Result lemtt2_check(const SuperRootDatum& d, const Rational& k, int depth, int box) {
  if (defect(d) != 0) throw Error(ErrorKind::NotZeroDefect, d.name + " has nonzero defect");
  auto L = principal_admissible_level(d, k);
  if (!L.principal_admissible)
    throw Error(ErrorKind::NotPrincipalAdmissible, to_string(k) + " is not principal admissible: " + L.reason);
  if (box < 0) box = 2 * depth + 2;
  Base aff = level_base(d);
  const std::size_t n = aff.simple.size();
  std::vector<int> dep(n);
  for (std::size_t i = 0; i < n; ++i) dep[i] = static_cast<int>(to_long(aff.simple[i].delta_coeff()));
  const int wdepth = static_cast<int>(std::max<long>(3 * L.u, 3));
  const Weight kL = k * Weight::lambda0();
  const Rational cas = casimir_eigenvalue(d, kL, aff);
  const RootWindow rw(d, aff, wdepth);
  Lemtt2Result res;
  std::vector<long> nu(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
    if (i == n) {
      Weight v;
      for (std::size_t j = 0; j < n; ++j)
        if (nu[j]) v += Rational(nu[j]) * aff.simple[j];
      if (v.finite_part().is_zero()) return;  // nu in Z delta
      ++res.checked;
      Weight lam = kL - v;
      try {
        if (rw.admissible(lam)) {
          res.violations.push_back(lam);
          if (casimir_eigenvalue(d, lam, aff) == cas) res.linked.push_back(lam);
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Undecidable) throw;
        res.undecidable.push_back(lam);
      }
      return;
    }
    int cap = dep[i] > 0 ? (depth - used) / dep[i] : box;
    for (int c = 0; c <= cap; ++c) {
      nu[i] = c;
      rec(i + 1, used + c * dep[i]);
    }
    nu[i] = 0;
  };
  rec(0, 0);
  return res;
}

}  // namespace superds
