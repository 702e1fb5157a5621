#include "superds/charseries.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "superds/error.hpp"

namespace superds {

std::size_t ExponentHash::operator()(const Exponent& e) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : e) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------- frame

SeriesFrame::SeriesFrame(std::vector<Weight> generators) : frame_(std::move(generators)) {
  for (const auto& g : frame_.generators()) {
    Rational d = g.delta_coeff();
    if (!is_integer(d) || sgn(d) < 0)
      throw Error(ErrorKind::InvalidBase, "frame generator " + g.to_string() + " has a negative or fractional delta coefficient");
    depth_.push_back(static_cast<int>(to_long(d)));
  }
}

std::optional<Exponent> SeriesFrame::exponent(const Weight& nu) const {
  auto c = frame_.int_coords(nu);
  if (!c) return std::nullopt;
  Exponent e(c->size());
  for (std::size_t i = 0; i < c->size(); ++i) {
    if ((*c)[i] < 0) return std::nullopt;
    e[i] = static_cast<int>((*c)[i]);
  }
  return e;
}

Weight SeriesFrame::weight(const Exponent& e) const {
  Weight w;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) w += Rational(e[i]) * frame_.generators()[i];
  return w;
}

int SeriesFrame::depth(const Exponent& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * depth_[i];
  return d;
}

int SeriesFrame::height(const Exponent& e) const {
  int h = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (depth_[i] == 0) h += e[i];
  return h;
}

std::optional<std::size_t> SeriesFrame::index_of(const Weight& g) const {
  const auto& gens = frame_.generators();
  auto it = std::find(gens.begin(), gens.end(), g);
  if (it == gens.end()) return std::nullopt;
  return static_cast<std::size_t>(it - gens.begin());
}

FramePtr make_frame(std::vector<Weight> generators) { return std::make_shared<const SeriesFrame>(std::move(generators)); }

Window Window::meet(const Window& a, const Window& b) {
  Window w;
  w.depth = std::min(a.depth, b.depth);
  if (a.height < 0) w.height = b.height;
  else if (b.height < 0) w.height = a.height;
  else w.height = std::min(a.height, b.height);
  return w;
}

// ---------------------------------------------------------------- series

CharSeries::CharSeries(FramePtr frame, Weight anchor, Window window)
    : frame_(std::move(frame)), anchor_(std::move(anchor)), window_(window) {}

CharSeries CharSeries::one(FramePtr frame, Window window, Weight anchor) {
  CharSeries s(frame, std::move(anchor), window);
  s.terms_[Exponent(frame->size(), 0)] = 1;
  return s;
}

CharSeries CharSeries::monomial(FramePtr frame, Window window, const Exponent& nu, const Rational& c, Weight anchor) {
  CharSeries s(std::move(frame), std::move(anchor), window);
  s.add_term(nu, c);
  return s;
}

bool CharSeries::in_window(const Exponent& nu) const {
  return window_.contains(frame_->depth(nu), frame_->height(nu));
}

Rational CharSeries::coeff(const Exponent& nu) const {
  auto it = terms_.find(nu);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational CharSeries::coeff_at(const Weight& w) const {
  auto e = frame_->exponent(anchor_ - w);
  return e ? coeff(*e) : Rational(0);
}

void CharSeries::add_term(const Exponent& nu, const Rational& c) {
  if (sgn(c) == 0 || !in_window(nu)) return;
  auto [it, inserted] = terms_.try_emplace(nu, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::vector<std::pair<Exponent, Rational>> CharSeries::sorted() const {
  std::vector<std::pair<Exponent, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void CharSeries::check_compatible(const CharSeries& o) const {
  if (frame_ != o.frame_ && !(*frame_ == *o.frame_))
    throw Error(ErrorKind::SymbolMismatch, "series live in different frames");
}

CharSeries& CharSeries::operator+=(const CharSeries& o) {
  check_compatible(o);
  if (anchor_ != o.anchor_) throw Error(ErrorKind::SymbolMismatch, "adding series with different anchors");
  window_ = Window::meet(window_, o.window_);
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (!in_window(it->first)) it = terms_.erase(it);
    else ++it;
  }
  for (const auto& [nu, c] : o.terms_) add_term(nu, c);
  return *this;
}

CharSeries& CharSeries::operator-=(const CharSeries& o) {
  CharSeries neg = o;
  neg *= Rational(-1);
  return *this += neg;
}

CharSeries& CharSeries::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [nu, x] : terms_) x *= c;
  return *this;
}

CharSeries operator*(const CharSeries& a, const CharSeries& b) {
  a.check_compatible(b);
  CharSeries out(a.frame_, a.anchor_ + b.anchor_, Window::meet(a.window_, b.window_));
  struct Item {
    const Exponent* nu;
    const Rational* c;
    int d, h;
  };
  auto items = [&](const CharSeries& s) {
    std::vector<Item> v;
    v.reserve(s.terms_.size());
    for (const auto& [nu, c] : s.terms_) v.push_back({&nu, &c, s.frame_->depth(nu), s.frame_->height(nu)});
    std::sort(v.begin(), v.end(), [](const Item& x, const Item& y) { return x.d < y.d; });
    return v;
  };
  auto ia = items(a), ib = items(b);
  const Window& w = out.window_;
  Exponent nu(a.frame_->size());
  Rational prod;
  for (const auto& x : ia) {
    if (x.d > w.depth) break;
    for (const auto& y : ib) {
      if (x.d + y.d > w.depth) break;
      if (w.height >= 0 && x.h + y.h > w.height) continue;
      for (std::size_t i = 0; i < nu.size(); ++i) nu[i] = (*x.nu)[i] + (*y.nu)[i];
      prod = *x.c * *y.c;
      auto [it, inserted] = out.terms_.try_emplace(nu, prod);
      if (!inserted) it->second += prod;
    }
  }
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    if (sgn(it->second) == 0) it = out.terms_.erase(it);
    else ++it;
  }
  return out;
}

CharSeries CharSeries::shifted(const Weight& w) const {
  CharSeries s = *this;
  s.anchor_ += w;
  return s;
}

CharSeries CharSeries::reanchored(const Weight& a) const {
  if (auto up = frame_->exponent(a - anchor_)) {
    Window w = window_;
    w.depth += frame_->depth(*up);
    if (w.height >= 0) w.height += frame_->height(*up);
    CharSeries s(frame_, a, w);
    Exponent nu(frame_->size());
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < nu.size(); ++i) nu[i] = e[i] + (*up)[i];
      s.add_term(nu, c);
    }
    return s;
  }
  auto down = frame_->exponent(anchor_ - a);
  if (!down) throw Error(ErrorKind::OutsideFrame, "cannot re-anchor " + anchor_.to_string() + " at " + a.to_string());
  Window w = window_;
  w.depth -= frame_->depth(*down);
  if (w.height >= 0) w.height -= frame_->height(*down);
  if (w.depth < 0 || (window_.height >= 0 && w.height < 0))
    throw Error(ErrorKind::WindowTooSmall, "re-anchoring at " + a.to_string() + " leaves an empty window");
  CharSeries s(frame_, a, w);
  Exponent nu(frame_->size());
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nu.size(); ++i) {
      nu[i] = e[i] - (*down)[i];
      if (nu[i] < 0)
        throw Error(ErrorKind::OutsideFrame, "term " + frame_->weight(e).to_string() + " lies above the new anchor " + a.to_string());
    }
    s.add_term(nu, c);
  }
  return s;
}

CharSeries CharSeries::truncated(const Window& w) const {
  CharSeries s(frame_, anchor_, Window::meet(window_, w));
  for (const auto& [e, c] : terms_) s.add_term(e, c);
  return s;
}

bool operator==(const CharSeries& a, const CharSeries& b) { return !a.first_difference(b).has_value(); }

std::optional<Exponent> CharSeries::first_difference(const CharSeries& o) const {
  check_compatible(o);
  if (anchor_ != o.anchor_) {
    // compare on weights: lift the lower anchor
    if (frame_->exponent(anchor_ - o.anchor_)) return first_difference(o.reanchored(anchor_));
    if (frame_->exponent(o.anchor_ - anchor_)) return reanchored(o.anchor_).first_difference(o);
    throw Error(ErrorKind::OutsideFrame, "series anchors are not comparable");
  }
  Window w = Window::meet(window_, o.window_);
  std::optional<Exponent> best;
  auto consider = [&](const Exponent& e) {
    if (!w.contains(frame_->depth(e), frame_->height(e))) return;
    if (coeff(e) != o.coeff(e) && (!best || e < *best)) best = e;
  };
  for (const auto& [e, c] : terms_) consider(e);
  for (const auto& [e, c] : o.terms_) consider(e);
  return best;
}

void CharSeries::mul_one_minus(const Exponent& alpha, int power) {
  for (int p = 0; p < power; ++p) {
    std::vector<std::pair<Exponent, Rational>> snap(terms_.begin(), terms_.end());
    Exponent nu(alpha.size());
    for (const auto& [e, c] : snap) {
      for (std::size_t i = 0; i < nu.size(); ++i) nu[i] = e[i] + alpha[i];
      add_term(nu, -c);
    }
  }
}

void CharSeries::mul_one_plus(const Exponent& alpha, int power) {
  for (int p = 0; p < power; ++p) {
    std::vector<std::pair<Exponent, Rational>> snap(terms_.begin(), terms_.end());
    Exponent nu(alpha.size());
    for (const auto& [e, c] : snap) {
      for (std::size_t i = 0; i < nu.size(); ++i) nu[i] = e[i] + alpha[i];
      add_term(nu, c);
    }
  }
}

void CharSeries::geometric(const Exponent& alpha, const Rational& ratio) {
  std::vector<std::pair<Exponent, Rational>> snap(terms_.begin(), terms_.end());
  const int da = frame_->depth(alpha), ha = frame_->height(alpha);
  if (da == 0 && ha == 0) throw Error(ErrorKind::NonInvertible, "geometric series in the trivial exponent");
  if (da == 0 && window_.height < 0) throw Error(ErrorKind::WindowTooSmall, "geometric series needs a bounded height");
  Exponent nu(alpha.size());
  for (const auto& [e, c] : snap) {
    nu = e;
    Rational coef = c;
    while (true) {
      for (std::size_t i = 0; i < nu.size(); ++i) nu[i] += alpha[i];
      if (!in_window(nu)) break;
      coef *= ratio;
      add_term(nu, coef);
    }
  }
}

void CharSeries::div_one_minus(const Exponent& alpha, int power) {
  for (int p = 0; p < power; ++p) geometric(alpha, 1);
}

void CharSeries::div_one_plus(const Exponent& alpha, int power) {
  for (int p = 0; p < power; ++p) geometric(alpha, -1);
}

CharSeries inverse(const CharSeries& a) {
  const Exponent zero(a.frame()->size(), 0);
  Rational c0 = a.coeff(zero);
  if (sgn(c0) == 0) throw Error(ErrorKind::NonInvertible, "constant term vanishes");
  // b = c0^-1 sum_k t^k with t = 1 - a/c0
  CharSeries t(a.frame(), Weight{}, a.window());
  for (const auto& [e, c] : a.terms())
    if (e != zero) t.add_term(e, -c / c0);
  if (a.window().height < 0)
    for (const auto& [e, c] : t.terms())
      if (a.frame()->depth(e) == 0) throw Error(ErrorKind::WindowTooSmall, "inverse needs a bounded height");
  CharSeries result = CharSeries::one(a.frame(), a.window());
  CharSeries power = result;
  while (true) {
    power = power * t;
    if (power.terms().empty()) break;
    result += power;
  }
  result *= Rational(1) / c0;
  return result.shifted(-a.anchor());
}

// ---------------------------------------------------------------- denominators

std::vector<PositiveRoot> positive_roots_in_window(const SuperRootDatum& d, const FramePtr& frame, const Window& w,
                                                   int delta_step, bool finite_only) {
  std::vector<PositiveRoot> out;
  auto consider = [&](const Weight& root, bool odd, int mult) {
    auto e = frame->exponent(root);
    if (!e) return;
    if (!w.contains(frame->depth(*e), frame->height(*e))) return;
    out.push_back({root, *e, odd, mult});
  };
  const int jmax = finite_only ? 0 : w.depth;
  for (int j = 0; j <= jmax; ++j) {
    if (j > 0 && j % delta_step != 0) continue;
    Weight jd = Rational(j) * Weight::delta();
    for (const auto& a : d.even_roots) consider(a + jd, false, 1);
    for (const auto& a : d.odd_roots) consider(a + jd, true, 1);
    if (j > 0 && d.cartan_dim > 0) consider(jd, false, d.cartan_dim);
  }
  return out;
}

CharSeries weyl_denominator(const SuperRootDatum& d, const Base& base, const Window& w, DenominatorKind kind, int u,
                            bool super) {
  return weyl_denominator(d, base, make_frame(base.simple), w, kind, u, super);
}

CharSeries weyl_denominator(const SuperRootDatum& d, const Base& base, const FramePtr& frame, const Window& w,
                            DenominatorKind kind, int u, bool super) {
  (void)base;
  CharSeries s = CharSeries::one(frame, w);
  apply_denominator(s, d, kind, u, 1, super);
  return s;
}

void apply_denominator(CharSeries& s, const SuperRootDatum& d, DenominatorKind kind, int u, int power, bool super,
                       bool skip_finite) {
  if (u < 1) throw Error(ErrorKind::InvalidBase, "delta step must be positive");
  auto roots = positive_roots_in_window(d, s.frame(), s.window(), kind == DenominatorKind::Bar ? u : 1,
                                        kind == DenominatorKind::Finite);
  for (const auto& r : roots) {
    if (skip_finite && s.frame()->depth(r.nu) == 0) continue;
    for (int t = 0; t < std::abs(power); ++t) {
      bool numer = (power > 0) != r.odd;  // even factors sit in the numerator of R
      if (numer) {
        if (r.odd && !super) s.mul_one_plus(r.nu, r.multiplicity);
        else s.mul_one_minus(r.nu, r.multiplicity);
      } else {
        if (r.odd && !super) s.div_one_plus(r.nu, r.multiplicity);
        else s.div_one_minus(r.nu, r.multiplicity);
      }
    }
  }
}

// ---------------------------------------------------------------- projections

CharSeries project_PS(const CharSeries& s, const std::vector<Weight>& S) {
  std::vector<bool> keep(s.frame()->size(), false);
  for (const auto& b : S) {
    auto i = s.frame()->index_of(b);
    if (!i) throw Error(ErrorKind::SNotInBase, b.to_string() + " is not a generator of the series frame");
    keep[*i] = true;
  }
  CharSeries out(s.frame(), s.anchor(), s.window());
  for (const auto& [e, c] : s.terms()) {
    bool ok = true;
    for (std::size_t i = 0; i < e.size() && ok; ++i)
      if (!keep[i] && e[i] != 0) ok = false;
    if (ok) out.add_term(e, c);
  }
  return out;
}

FramePtr restricted_frame(const DSReport& report) {
  std::vector<Weight> gens = report.affine_base.simple;
  bool has_delta = false;
  if (!gens.empty()) {
    Frame fr(gens);
    has_delta = fr.coords(Weight::delta()).has_value();
  }
  if (!has_delta) gens.push_back(Weight::delta());
  return make_frame(gens);
}

CharSeries restrict_series(const CharSeries& s, const DSReport& report) {
  FramePtr fr = restricted_frame(report);
  Weight anchor = restrict_weight(s.anchor(), report);
  CharSeries out(fr, anchor, Window{s.window().depth, -1});
  // individual terms may leave the frame and cancel afterwards
  std::map<Weight, Rational> acc;
  for (const auto& [e, c] : s.terms()) acc[restrict_weight(s.frame()->weight(e), report)] += c;
  for (const auto& [nu, c] : acc) {
    if (sgn(c) == 0) continue;
    auto ex = fr->exponent(nu);
    if (!ex) throw Error(ErrorKind::OutsideFrame, "restricted weight " + nu.to_string() + " is outside Z>=0 Sigma_x");
    out.add_term(*ex, c);
  }
  return out;
}

}  // namespace superds
