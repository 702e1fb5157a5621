#pragma once

#include <string>
#include <vector>

#include "superds/rootdata.hpp"

namespace superds {

/// Result of reducing a root datum along an isotropic set S.
struct DSReport {
  std::vector<Weight> S;
  std::string tag;           ///< name of the reduced algebra: "B1", "C2", "ZERO", "GL1", "D2", ...
  std::string family_label;  ///< super notation of the image when the source is an A/B/D family, e.g. "B(1|0)"
  SuperRootDatum predicted;  ///< reduced algebra built from the family table (own coordinates)
  SuperRootDatum reduced;    ///< reduced root datum realised inside the source dual Cartan

  std::vector<Weight> complement;  ///< S' with (S_i, S'_j) = delta_ij, orthogonal to the reduced roots
  Base finite_base;                ///< simple roots of Delta^+ ∩ reduced roots
  Base affine_base;                ///< Sigma_x
  Weight rho_x;                    ///< Weyl vector of Sigma_x

  // projection data: pi(lambda) = lambda - sum c_i g_i, c = gram^-1 ((lambda, g_i))
  std::vector<Weight> killed;  ///< S ∪ S' plus the radical directions outside the dual Cartan
  Matrix killed_gram_inverse;

  bool degenerate() const { return reduced.roots().empty(); }
};

/// (S^perp ∩ roots) minus ±S. Throws NotIsotropic when S is not an isotropic set.
std::vector<Weight> ds_roots(const SuperRootDatum& d, const std::vector<Weight>& S);

/// Reduced datum together with the projection; the positive system comes from `base`
/// (finite or affine; the distinguished base is used when omitted).
DSReport ds_reduce(const SuperRootDatum& d, const std::vector<Weight>& S, const Base& base);
DSReport ds_reduce(const SuperRootDatum& d, const std::vector<Weight>& S);

/// Classified image from the family table (ZERO / GL1 degenerate tags included).
SuperRootDatum ds_datum(const SuperRootDatum& d, const std::vector<Weight>& S);

/// Sigma_x for an affine (or finite) base of the source.
Base ds_base(const SuperRootDatum& d, const Base& base, const std::vector<Weight>& S);

/// Projection h* -> h_x*: linear, kills S, identity on h_x*, fixes Lambda0 and delta.
Weight restrict_weight(const Weight& lambda, const DSReport& report);

/// Family table prediction for |S| = r without looking at roots.
SuperRootDatum ds_predict(const SuperRootDatum& d, int r);

struct AppendixPair {
  std::vector<Weight> S;
  Base base;  ///< finite base
};

/// S = {eps_i - del_{i+1}} and the displayed base for B(m|n), D(m|n) with n > m.
/// Throws NoConstruction for every other family.
AppendixPair appendix_pair(const SuperRootDatum& d);

struct P123Report {
  bool P1 = false;
  bool P2 = false;
  bool P3 = false;
  std::vector<Weight> extreme_rays;  ///< rays of Q>=0 Sigma ∩ S^perp
  std::vector<Weight> failing_rays;  ///< rays outside QS + Q>=0 Sigma_x
  std::string note;
};

/// Exact check of S ⊂ base, theta in Delta^# with (theta,S) = 0, and the cone inclusion
/// (Q>=0 Sigma ∩ S^perp) ⊂ (QS + Q>=0 Sigma_x).
P123Report check_P123(const SuperRootDatum& d, const std::vector<Weight>& S, const Base& finite_base);

/// Generators of the cone {c >= 0, A c = 0} (extreme rays as coefficient vectors).
std::vector<Vector> cone_extreme_rays(const Matrix& A);

/// Whether v = sum a_i free_i + sum b_j gens_j with b >= 0 has a rational solution.
bool in_cone(const Weight& v, const std::vector<Weight>& free, const std::vector<Weight>& gens);

}  // namespace superds
