#include "superds/charformulas.hpp"

#include <deque>
#include <set>

#include "superds/error.hpp"

namespace superds {

namespace {

FramePtr frame_or(const FramePtr& f, const Base& b) { return f ? f : make_frame(b.simple); }

std::string describe(const CharSeries& a, const CharSeries& b, const std::string& what) {
  auto e = a.first_difference(b);
  if (!e) return {};
  const auto& fr = *a.frame();
  Weight w = a.anchor() - fr.weight(*e);
  return what + ": first difference at e^{" + w.to_string() + "} (depth " + std::to_string(fr.depth(*e)) +
         "): " + to_string(a.coeff(*e)) + " vs " + to_string(b.coeff(*e));
}

Weight rho_bar(const SuperRootDatum& d, const Base& aff, long u) {
  Rational hv = dual_coxeter(d);
  return weyl_vector(d, aff) - hv * Weight::lambda0() + (hv / Rational(u)) * Weight::lambda0();
}

// e^{-p Lambda-bar_0} ch I-bar(p) with anchor 0
CharSeries bar_ideal(const SuperRootDatum& d, const CharSeries& lbar0, long u) {
  CharSeries v = CharSeries::one(lbar0.frame(), lbar0.window());
  apply_denominator(v, d, DenominatorKind::Bar, static_cast<int>(u), -1, false, true);
  return v - lbar0;
}

}  // namespace

CharSeries ch_vacuum(const SuperRootDatum& d, const Base& affine_base, const Rational& k, const Window& w, bool super,
                     FramePtr frame) {
  CharSeries s = CharSeries::one(frame_or(frame, affine_base), w, k * Weight::lambda0());
  apply_denominator(s, d, DenominatorKind::Full, 1, -1, super, true);
  return s;
}

CharSeries weyl_kac_numerator(const SuperRootDatum& d, const Base& affine_base, long p, const Window& w, long u,
                              FramePtr frame) {
  FramePtr fr = frame_or(frame, affine_base);
  const Weight a0 = affine_simple_root(affine_base);
  const Weight a0p = alpha0_prime(u, affine_base);
  std::vector<Weight> sbar;
  for (const auto& b : affine_base.simple) sbar.push_back(b == a0 ? a0p : b);
  const Weight top = Rational(p) * lambda0_bar(u) + rho_bar(d, affine_base, u);

  CharSeries out(fr, Weight{}, w);
  std::set<Weight> seen{top};
  std::deque<std::pair<Weight, int>> queue{{top, 1}};
  out.add_term(Exponent(fr->size(), 0), 1);
  while (!queue.empty()) {
    auto [mu, sign] = queue.front();
    queue.pop_front();
    for (const auto& b : sbar) {
      Rational c = Rational(2) * d.form(mu, b) / d.norm(b);
      if (sgn(c) <= 0) continue;
      if (!is_integer(c)) throw Error(ErrorKind::Internal, "non-integral Weyl orbit at " + mu.to_string());
      Weight next = mu - c * b;
      if (seen.count(next)) continue;
      auto e = fr->exponent(top - next);
      if (!e) throw Error(ErrorKind::Internal, "Weyl orbit left the positive cone at " + next.to_string());
      if (!out.in_window(*e)) continue;
      seen.insert(next);
      out.add_term(*e, -sign);
      queue.emplace_back(next, -sign);
    }
  }
  return out;
}

CharSeries weyl_kac_char(const SuperRootDatum& d, const Base& affine_base, long p, const Window& w, long u,
                         FramePtr frame) {
  if (!d.is_lie()) throw Error(ErrorKind::NotZeroDefect, d.name + " is not a Lie algebra");
  if (p < 0) throw Error(ErrorKind::NegativeLevel, "level p must be nonnegative");
  CharSeries n = weyl_kac_numerator(d, affine_base, p, w, u, frame);
  apply_denominator(n, d, DenominatorKind::Bar, static_cast<int>(u), -1);
  return n.shifted(Rational(p) * lambda0_bar(u));
}

CharSeries dilate(const CharSeries& s, const Base& affine_base, long u) {
  (void)affine_base;
  if (s.window().height >= 0) throw Error(ErrorKind::WindowTooSmall, "dilation needs an unbounded height");
  auto phi = [u](const Weight& x) {
    Weight y = x.finite_part();
    y += (x.delta_coeff() * Rational(u)) * Weight::delta();
    y += (x.level() / Rational(u)) * Weight::lambda0();
    return y;
  };
  const auto& fr = s.frame();
  CharSeries out(fr, phi(s.anchor()), Window{s.window().depth * static_cast<int>(u), -1});
  for (const auto& [e, c] : s.terms()) {
    auto ne = fr->exponent(phi(fr->weight(e)));
    if (!ne) throw Error(ErrorKind::Internal, "dilation left the positive cone");
    out.add_term(*ne, c);
  }
  return out;
}

CharSeries admissible_char(const SuperRootDatum& d, const Base& affine_base, const LevelDatum& level,
                           const CharSeries& integrable_side, const Window& w) {
  if (!level.principal_admissible)
    throw Error(ErrorKind::NotPrincipalAdmissible, to_string(level.k) + " is not principal admissible");
  const int u = static_cast<int>(level.u);
  CharSeries t = integrable_side.truncated(w);
  apply_denominator(t, d, DenominatorKind::Bar, u, 1, false, true);
  apply_denominator(t, d, DenominatorKind::Full, 1, -1, false, true);
  t = t.shifted(rho_bar(d, affine_base, u) - weyl_vector(d, affine_base));
  if (t.anchor() != level.k * Weight::lambda0())
    throw Error(ErrorKind::InconsistentTriple, "integrable side has anchor " + integrable_side.anchor().to_string() +
                                                   ", expected p Lambda-bar_0");
  return t;
}

CharacterBundle make_bundle(const SuperRootDatum& d, const Base& affine_base, const LevelDatum& level,
                            const CharSeries& simple, const Window& w) {
  CharacterBundle b;
  b.datum = &d;
  b.base = affine_base;
  b.level = level;
  b.window = Window::meet(w, simple.window());
  b.vacuum = ch_vacuum(d, affine_base, level.k, b.window, false, simple.frame());
  b.simple = simple.truncated(b.window);
  b.ideal = b.vacuum - b.simple;
  return b;
}

CharSeries ideal_char(const CharacterBundle& b) { return b.vacuum - b.simple; }

Verdict verify_II(const CharacterBundle& b, const CharSeries& integrable_side) {
  const auto& d = *b.datum;
  const int u = static_cast<int>(b.level.u);
  CharSeries lhs = b.ideal.shifted(-(b.level.k * Weight::lambda0()));
  apply_denominator(lhs, d, DenominatorKind::Full, 1, 1);

  CharSeries lbar = integrable_side.shifted(-integrable_side.anchor()).truncated(b.window);
  CharSeries rl = lbar;
  apply_denominator(rl, d, DenominatorKind::Bar, u, 1);
  CharSeries rdot = CharSeries::one(lbar.frame(), lbar.window());
  apply_denominator(rdot, d, DenominatorKind::Finite, 1, 1);
  CharSeries mid = rdot - rl;

  CharSeries rhs = bar_ideal(d, lbar, u);
  apply_denominator(rhs, d, DenominatorKind::Bar, u, 1);

  if (auto s = describe(lhs, mid, "R e^{-k Lambda0} ch I(k) vs R-dot - R-bar e^{-p Lambda-bar_0} ch L-bar"); !s.empty())
    return {false, s};
  if (auto s = describe(mid, rhs, "R-dot - R-bar e^{-p Lambda-bar_0} ch L-bar vs R-bar e^{-p Lambda-bar_0} ch I-bar"); !s.empty())
    return {false, s};
  return {true, "(II) holds through depth " + std::to_string(Window::meet(lhs.window(), rhs.window()).depth)};
}

Verdict verify_III(const CharacterBundle& b, const CharSeries& integrable_side) {
  const auto& d = *b.datum;
  const int u = static_cast<int>(b.level.u);
  Weight r0 = r0prime_dot(d, b.level.k, b.base, b.level.u, b.level.p);
  Weight mu = mu_weight(b.level.p, b.level.u, b.base);
  try {
    CharSeries lhs = b.ideal.reanchored(r0).shifted(-r0);
    apply_denominator(lhs, d, DenominatorKind::Full, 1, 1);
    CharSeries lbar = integrable_side.shifted(-integrable_side.anchor()).truncated(b.window);
    // e^{-mu} ch I-bar = e^{-(mu - p Lambda-bar_0)} (e^{-p Lambda-bar_0} ch I-bar)
    Weight pl = Rational(b.level.p) * lambda0_bar(b.level.u);
    CharSeries rhs = bar_ideal(d, lbar, u).shifted(pl).reanchored(mu).shifted(-mu);
    apply_denominator(rhs, d, DenominatorKind::Bar, u, 1);
    if (auto s = describe(lhs, rhs, "R e^{-r0'.k Lambda0} ch I(k) vs R-bar e^{-mu} ch I-bar(p)"); !s.empty())
      return {false, s};
    return {true, "(III) holds through depth " + std::to_string(Window::meet(lhs.window(), rhs.window()).depth)};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::OutsideFrame) return {false, e.what()};
    throw;
  }
}

Verdict verify_PSIk(const CharacterBundle& b, const std::vector<Weight>& S) {
  Weight r0 = r0prime_dot(*b.datum, b.level.k, b.base, b.level.u, b.level.p);
  auto off = b.ideal.frame()->exponent(b.level.k * Weight::lambda0() - r0);
  if (!off) throw Error(ErrorKind::Internal, "r0'.k Lambda0 is not below k Lambda0");
  if (!b.ideal.in_window(*off)) throw Error(ErrorKind::WindowTooSmall, "r0'.k Lambda0 lies outside the window");
  // read the coefficients on r0' - Z>=0 S only
  CharSeries part(b.ideal.frame(), r0, Window{b.window.depth - b.ideal.frame()->depth(*off), -1});
  std::vector<bool> on(b.ideal.frame()->size(), false);
  for (const auto& s : S) {
    auto i = b.ideal.frame()->index_of(s);
    if (!i) throw Error(ErrorKind::SNotInBase, s.to_string() + " is not a simple root of the base");
    on[*i] = true;
  }
  for (const auto& [e, c] : b.ideal.terms()) {
    Exponent nu(e.size());
    bool ok = true;
    for (std::size_t i = 0; i < e.size() && ok; ++i) {
      nu[i] = e[i] - (*off)[i];
      if (nu[i] < 0 || (!on[i] && nu[i] != 0)) ok = false;
    }
    if (ok) part.add_term(nu, c);
  }
  CharSeries P = project_PS(part.shifted(-r0), S);
  CharSeries one = CharSeries::one(P.frame(), P.window());
  if (auto s = describe(P, one, "P_S(e^{-r0'.k Lambda0} ch I(k)) vs 1"); !s.empty()) return {false, s};
  return {true, "P_S(e^{-r0'.k Lambda0} ch I(k)) = 1"};
}

Verdict verify_PS_denominators(const SuperRootDatum& d, const Base& affine_base, const std::vector<Weight>& S,
                               const Window& w, long u) {
  FramePtr fr = make_frame(affine_base.simple);
  auto R = project_PS(weyl_denominator(d, affine_base, fr, w, DenominatorKind::Full), S);
  auto Rd = project_PS(weyl_denominator(d, affine_base, fr, w, DenominatorKind::Finite), S);
  auto Rb = project_PS(weyl_denominator(d, affine_base, fr, w, DenominatorKind::Bar, static_cast<int>(u)), S);
  if (auto s = describe(R, Rd, "P_S(R) vs P_S(R-dot)"); !s.empty()) return {false, s};
  if (auto s = describe(Rd, Rb, "P_S(R-dot) vs P_S(R-bar)"); !s.empty()) return {false, s};
  return {true, "P_S(R) = P_S(R-dot) = P_S(R-bar) (" + std::to_string(R.size()) + " terms)"};
}

Rational ideal_top_coefficient(const CharacterBundle& b) {
  Weight r0 = r0prime_dot(*b.datum, b.level.k, b.base, b.level.u, b.level.p);
  auto off = b.ideal.frame()->exponent(b.ideal.anchor() - r0);
  if (!off || !b.ideal.in_window(*off)) throw Error(ErrorKind::WindowTooSmall, "r0'.k Lambda0 lies outside the window");
  return b.ideal.coeff(*off);
}

Verdict check_positive_integral(const CharSeries& s) {
  for (const auto& [e, c] : s.sorted()) {
    if (!is_integer(c) || sgn(c) < 0)
      return {false, "coefficient " + to_string(c) + " at e^{" + (s.anchor() - s.frame()->weight(e)).to_string() + "}"};
  }
  return {true, "all coefficients are nonnegative integers"};
}

}  // namespace superds
