#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "superds/dsreduce.hpp"
#include "superds/rootdata.hpp"

namespace superds {

/// Exponent vector nu over the generators of a series frame.
using Exponent = std::vector<int>;

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept;
};

/// Grading frame: generators with their delta coefficients (nonnegative integers).
class SeriesFrame {
 public:
  explicit SeriesFrame(std::vector<Weight> generators);

  const std::vector<Weight>& generators() const { return frame_.generators(); }
  std::size_t size() const { return frame_.size(); }
  int depth_of(std::size_t i) const { return depth_[i]; }
  bool is_finite(std::size_t i) const { return depth_[i] == 0; }

  /// Exponent of a weight in Z>=0 frame, nullopt when outside.
  std::optional<Exponent> exponent(const Weight& nu) const;
  Weight weight(const Exponent& e) const;
  int depth(const Exponent& e) const;
  int height(const Exponent& e) const;  ///< sum over generators without delta
  std::optional<std::size_t> index_of(const Weight& g) const;

  bool operator==(const SeriesFrame& o) const { return generators() == o.generators(); }

 private:
  Frame frame_;
  std::vector<int> depth_;
};

using FramePtr = std::shared_ptr<const SeriesFrame>;
FramePtr make_frame(std::vector<Weight> generators);

/// Window: delta-depth <= depth and finite height <= height (unbounded when height < 0).
struct Window {
  int depth = 0;
  int height = -1;
  bool contains(int d, int h) const { return d <= depth && (height < 0 || h <= height); }
  static Window meet(const Window& a, const Window& b);
  friend bool operator==(const Window&, const Window&) = default;
};

/// Truncated formal sum sum_nu a_nu e^{anchor - nu}, nu in Z>=0 frame.
class CharSeries {
 public:
  using Terms = std::unordered_map<Exponent, Rational, ExponentHash>;

  CharSeries() = default;
  CharSeries(FramePtr frame, Weight anchor, Window window);

  static CharSeries one(FramePtr frame, Window window, Weight anchor = {});
  /// c e^{anchor - nu}
  static CharSeries monomial(FramePtr frame, Window window, const Exponent& nu, const Rational& c = 1, Weight anchor = {});

  const FramePtr& frame() const { return frame_; }
  const Weight& anchor() const { return anchor_; }
  const Window& window() const { return window_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const Exponent& nu) const;
  /// Coefficient of e^{w}; zero when w is not anchor - Z>=0 frame.
  Rational coeff_at(const Weight& w) const;
  void add_term(const Exponent& nu, const Rational& c);  ///< dropped when outside the window
  bool in_window(const Exponent& nu) const;

  /// Terms sorted lexicographically by nu.
  std::vector<std::pair<Exponent, Rational>> sorted() const;

  CharSeries& operator+=(const CharSeries& o);
  CharSeries& operator-=(const CharSeries& o);
  CharSeries& operator*=(const Rational& c);
  friend CharSeries operator+(CharSeries a, const CharSeries& b) { return a += b; }
  friend CharSeries operator-(CharSeries a, const CharSeries& b) { return a -= b; }
  friend CharSeries operator*(const CharSeries& a, const CharSeries& b);
  friend CharSeries operator*(CharSeries a, const Rational& c) { return a *= c; }

  /// Same terms with anchor moved by w (multiplication by e^{w}).
  CharSeries shifted(const Weight& w) const;
  /// Same sum written with anchor a. Raising (a - anchor in Z>=0 frame) always works; lowering
  /// throws OutsideFrame when a term lies above a. The window moves with the anchor.
  CharSeries reanchored(const Weight& a) const;
  CharSeries truncated(const Window& w) const;

  /// Equality of coefficients inside the common window (anchors must agree).
  friend bool operator==(const CharSeries& a, const CharSeries& b);

  /// First nu (lexicographic) where the coefficients differ, for diagnostics.
  std::optional<Exponent> first_difference(const CharSeries& o) const;

  // in-place factor operations with the exponent of a positive root
  void mul_one_minus(const Exponent& alpha, int power = 1);   ///< *(1 - e^{-alpha})^power
  void mul_one_plus(const Exponent& alpha, int power = 1);    ///< *(1 + e^{-alpha})^power
  void div_one_minus(const Exponent& alpha, int power = 1);   ///< /(1 - e^{-alpha})^power
  void div_one_plus(const Exponent& alpha, int power = 1);    ///< /(1 + e^{-alpha})^power

 private:
  void check_compatible(const CharSeries& o) const;
  void geometric(const Exponent& alpha, const Rational& ratio);

  FramePtr frame_;
  Weight anchor_;
  Window window_;
  Terms terms_;
};

CharSeries inverse(const CharSeries& a);

/// Positive roots of an affine (or finite) base inside a window, with multiplicities.
struct PositiveRoot {
  Weight root;
  Exponent nu;
  bool odd = false;
  int multiplicity = 1;
};
/// Positive roots alpha + j delta (0 <= j <= depth) of the datum's affinization that lie in
/// Z>=0 frame; with delta_step = u only j divisible by u are kept (the principal admissible
/// subsystem); finite_only keeps j = 0.
std::vector<PositiveRoot> positive_roots_in_window(const SuperRootDatum& d, const FramePtr& frame, const Window& w,
                                                   int delta_step = 1, bool finite_only = false);

enum class DenominatorKind { Full, Finite, Bar };

/// R (Full), R-dot (Finite) or R-bar (Bar, imaginary and affine roots re-indexed by u delta),
/// expanded in the frame of `base`. Odd factors are (1 + e^-a)^-1, or (1 - e^-a)^-1 with super.
CharSeries weyl_denominator(const SuperRootDatum& d, const Base& base, const Window& w,
                            DenominatorKind kind = DenominatorKind::Full, int u = 1, bool super = false);
CharSeries weyl_denominator(const SuperRootDatum& d, const Base& base, const FramePtr& frame, const Window& w,
                            DenominatorKind kind = DenominatorKind::Full, int u = 1, bool super = false);
/// s *= R^power (power may be negative), factor by factor; skip_finite leaves out the roots of
/// delta-depth 0 (they cancel in R-dot/R and R-bar/R).
void apply_denominator(CharSeries& s, const SuperRootDatum& d, DenominatorKind kind, int u, int power,
                       bool super = false, bool skip_finite = false);

/// Keeps the terms with nu in Z>=0 S. Throws SNotInBase when S is not among the generators.
CharSeries project_PS(const CharSeries& s, const std::vector<Weight>& S);

/// Frame of the reduced affine base (delta appended when it is not in the span).
FramePtr restricted_frame(const DSReport& report);
/// Pushforward along the projection; the result has unbounded height.
CharSeries restrict_series(const CharSeries& s, const DSReport& report);

}  // namespace superds
