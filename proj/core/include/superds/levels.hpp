#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superds/rootdata.hpp"

namespace superds {

/// Level k with its principal admissible decomposition k + h^v = (p + h^v)/u when one exists.
struct LevelDatum {
  Rational k;
  Rational hv;
  int lacity = 1;
  bool principal_admissible = false;
  long p = 0;
  long u = 0;
  std::string reason;  ///< why the level is not principal admissible
};

/// Positive real roots alpha + j delta with j <= depth that pass the integrality test.
struct IntegralRoots {
  std::vector<Weight> roots;
  std::optional<long> u;  ///< fitted pattern Delta-dot + Z u delta
  int depth = 0;
};

/// Affinization of the standard base (distinguished when no standard base exists).
Base level_base(const SuperRootDatum& d);

/// Positive real roots of the affinization (relative to an affine base) up to delta-depth D.
std::vector<Weight> real_positive_roots(const SuperRootDatum& d, const Base& affine_base, int depth);

/// Delta_re(lambda): non-isotropic alpha with 2(lambda+rho,alpha)/(alpha,alpha) in Z, isotropic
/// alpha with r(lambda+rho,alpha) in Z (r the lacity); an even 2g with g odd is kept iff g is.
/// Throws CriticalLevel.
IntegralRoots integral_real_roots(const SuperRootDatum& d, const Weight& lambda, const Base& affine_base, int depth);

LevelDatum principal_admissible_level(const SuperRootDatum& d, const Rational& k);
/// Principal admissible levels k = a/b with 1 <= b <= max_den and |a| <= max_num, sorted by value.
std::vector<LevelDatum> enumerate_principal_admissible(const SuperRootDatum& d, long max_den, long max_num);

/// The simple root of an affine base with positive delta coefficient (throws InvalidBase if not unique).
Weight affine_simple_root(const Base& affine_base);

Weight alpha0_prime(long u, const Base& affine_base);
/// Lambda-bar_0 = Lambda0 / u: the fundamental weight of the u-delta subsystem.
Weight lambda0_bar(long u);
/// mu = p Lambda-bar_0 - (p+1) alpha0'.
Weight mu_weight(long p, long u, const Base& affine_base);
/// k Lambda0 - (p+1) alpha0', checked against r_{alpha0'}(k Lambda0 + rho) - rho. Throws InconsistentTriple.
Weight r0prime_dot(const SuperRootDatum& d, const Rational& k, const Base& affine_base, long u, long p);

/// Admissibility of lambda: full rank of Delta_re(lambda) plus dominance of lambda + rho - rho-bar
/// on the non-isotropic simple roots of Delta_re(lambda)^+. The root window is at least `depth` and at
/// least three periods of the integrality pattern. Throws CriticalLevel, Undecidable.
bool is_admissible_weight(const SuperRootDatum& d, const Weight& lambda, const Base& affine_base, int depth);

struct Lemtt2Result {
  std::vector<Weight> violations;
  std::vector<Weight> linked;  ///< violations with the Casimir eigenvalue of k Lambda0
  std::vector<Weight> undecidable;
  long checked = 0;
};

/// Enumerates lambda = k Lambda0 - nu, nu in Z>=0 Sigma outside Z delta, with delta-depth <= depth and every
/// finite coefficient <= box, and reports the admissible ones (expected: none).
/// Requires zero defect (NotZeroDefect) and a principal admissible k (NotPrincipalAdmissible).
Lemtt2Result lemtt2_check(const SuperRootDatum& d, const Rational& k, int depth, int box = -1);

}  // namespace superds
