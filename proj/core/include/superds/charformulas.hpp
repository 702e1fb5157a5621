#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superds/charseries.hpp"
#include "superds/levels.hpp"

namespace superds {

/// e^{k Lambda0} R-dot R^-1 in the frame of `affine_base` (supercharacter with super).
CharSeries ch_vacuum(const SuperRootDatum& d, const Base& affine_base, const Rational& k, const Window& w,
                     bool super = false, FramePtr frame = nullptr);

/// sum over w of eps(w) e^{w(Lambda+rho) - (Lambda+rho)} for Lambda = p Lambda-bar_0 and the
/// u delta subsystem; breadth-first over reduced words, pruned at the window.
CharSeries weyl_kac_numerator(const SuperRootDatum& d, const Base& affine_base, long p, const Window& w, long u = 1,
                              FramePtr frame = nullptr);

/// ch L(p Lambda-bar_0) of the u delta subsystem (u = 1: the affine Lie algebra itself).
/// Throws NotZeroDefect (odd roots present), NegativeLevel.
CharSeries weyl_kac_char(const SuperRootDatum& d, const Base& affine_base, long p, const Window& w, long u = 1,
                         FramePtr frame = nullptr);

/// Image of a level-p series of the affine algebra under alpha0 -> alpha0', delta -> u delta,
/// Lambda0 -> Lambda-bar_0 (needs an unbounded height).
CharSeries dilate(const CharSeries& s, const Base& affine_base, long u);

/// ch L(k Lambda0) = R^-1 e^-rho R-bar e^rho-bar ch L-bar(p Lambda-bar_0). Throws NotPrincipalAdmissible.
CharSeries admissible_char(const SuperRootDatum& d, const Base& affine_base, const LevelDatum& level,
                           const CharSeries& integrable_side, const Window& w);

struct CharacterBundle {
  const SuperRootDatum* datum = nullptr;
  Base base;
  LevelDatum level;
  Window window;
  CharSeries vacuum;
  CharSeries simple;
  CharSeries ideal;
};

/// Vacuum from the formula, ideal = vacuum - simple.
CharacterBundle make_bundle(const SuperRootDatum& d, const Base& affine_base, const LevelDatum& level,
                            const CharSeries& simple, const Window& w);

CharSeries ideal_char(const CharacterBundle& b);

/// Outcome of an identity check; `detail` names the first differing coefficient.
struct Verdict {
  bool ok = false;
  std::string detail;
};

/// (II): R e^{-k Lambda0} ch I(k) = R-dot - R-bar e^{-p Lambda-bar_0} ch L-bar = R-bar e^{-p Lambda-bar_0} ch I-bar(p).
Verdict verify_II(const CharacterBundle& b, const CharSeries& integrable_side);
/// (III): R e^{-r0'.k Lambda0} ch I(k) = R-bar e^{-mu} ch I-bar(p).
Verdict verify_III(const CharacterBundle& b, const CharSeries& integrable_side);
/// P_S(e^{-r0'.k Lambda0} ch I(k)) = 1; only the coefficients on r0'.k Lambda0 - Z>=0 S are read.
Verdict verify_PSIk(const CharacterBundle& b, const std::vector<Weight>& S);
/// P_S(R) = P_S(R-dot) = P_S(R-bar).
Verdict verify_PS_denominators(const SuperRootDatum& d, const Base& affine_base, const std::vector<Weight>& S,
                               const Window& w, long u);

/// Coefficient of ch I(k) at r0'.k Lambda0 (expected 1). Throws WindowTooSmall when it is not in the window.
Rational ideal_top_coefficient(const CharacterBundle& b);

/// Checks that every coefficient is a nonnegative integer.
Verdict check_positive_integral(const CharSeries& s);

}  // namespace superds
