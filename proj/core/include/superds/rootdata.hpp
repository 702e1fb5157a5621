#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superds/linalg.hpp"
#include "superds/weight.hpp"

namespace superds {

/// Coordinates of weights with respect to a linearly independent family of weights.
class Frame {
 public:
  Frame() = default;
  explicit Frame(std::vector<Weight> generators);

  const std::vector<Weight>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }

  /// Coefficients c with w = sum c_i g_i, or nullopt when w is outside the span.
  std::optional<Vector> coords(const Weight& w) const;
  /// Integer coordinates when w lies in the Z-span, nullopt otherwise.
  std::optional<std::vector<long>> int_coords(const Weight& w) const;
  Weight combine(const Vector& c) const;
  Weight combine(const std::vector<long>& c) const;

 private:
  std::vector<Weight> generators_;
  std::vector<Symbol> rows_;  // symbols picked to make the square system invertible
  Matrix inverse_;
};

/// Realised family of a basic classical Lie superalgebra (or its degenerations).
enum class AlgebraKind {
  SL,      ///< sl(p|q); gl(p|p) when p == q
  OSPOdd,  ///< osp(2p+1|2q), i.e. B(p|q)
  OSPEven, ///< osp(2p|2q): D(p|q), C(q+1) when p == 1, sp(2q) when p == 0
  F4,
  G3,
  Zero,    ///< the zero algebra (degenerate DS image)
  Reduced, ///< DS image realised inside the dual Cartan of a larger datum
};

/// Ordered set of simple roots; affine bases contain roots with nonzero delta coefficient.
struct Base {
  std::vector<Weight> simple;
  bool affine = false;

  std::vector<Weight> finite_part() const;
  std::vector<Weight> affine_roots() const;
  friend bool operator==(const Base&, const Base&) = default;
};

/// Root datum of a finite-dimensional basic classical Lie superalgebra with the normalised form.
class SuperRootDatum {
 public:
  AlgebraKind kind = AlgebraKind::Zero;
  int p = 0;  ///< size parameters of the realisation (see AlgebraKind)
  int q = 0;
  std::string name;        ///< e.g. "A(1|0)", "B(0|2)", "C(3)", "A1", "ZERO", "GL1"
  std::string convention;  ///< matrix realisation, e.g. "sl(2|1)", "osp(2|4)"

  std::vector<Symbol> coords;  ///< finite coordinate symbols
  Matrix gram;                 ///< form on the finite coordinates
  Rational scale = 1;          ///< c with (eps_i,eps_i) = c, (del_j,del_j) = -c (eps/del families)

  std::vector<Weight> even_roots;  ///< all even roots (both signs)
  std::vector<Weight> odd_roots;   ///< all odd roots (both signs)
  std::vector<Weight> hstar;       ///< basis of the dual Cartan inside the coordinate span
  int cartan_dim = 0;
  bool center = false;  ///< gl(p|p): the realisation keeps the identity in the Cartan

  std::vector<Weight> even_positive;  ///< distinguished even positive system
  Weight theta;                       ///< highest root of the positive-norm even subsystem
  Base distinguished;                 ///< distinguished finite base
  Base standard;                      ///< finite base whose maximal root is theta (when one exists)

  std::vector<Weight> roots() const;
  bool is_root(const Weight& w) const;
  bool is_odd_root(const Weight& w) const;
  bool is_lie() const { return odd_roots.empty(); }
  int rank() const;

  /// Bilinear form on h* including (Lambda0, delta) = 1. Throws SymbolMismatch for foreign symbols.
  Rational form(const Weight& a, const Weight& b) const;
  Rational norm(const Weight& a) const { return form(a, a); }

  int dim_even() const { return static_cast<int>(even_roots.size()) + cartan_dim; }
  int dim_odd() const { return static_cast<int>(odd_roots.size()); }
};

/// User facing family tags.
enum class Family { A, B, C, D, F4, G3, LieA, LieB, LieC, LieD };

/// build_algebra(A,m,n) = sl(m+1|n+1); B(m|n) = osp(2m+1|2n); C(n) = osp(2|2n-2) (m ignored);
/// D(m|n) = osp(2m|2n); Lie families take their rank in n.
SuperRootDatum build_algebra(Family family, int m, int n);

/// Direct constructors on realisation sizes (used for DS images).
SuperRootDatum make_algebra(AlgebraKind kind, int p, int q);

/// Parses "A(1|0)", "B(0|3)", "C(3)", "D(3|1)", "F(4)", "G(3)", "A1", "C2", "sl(2|1)", "osp(3|2)".
SuperRootDatum parse_algebra(std::string_view spec);

Rational bilinear(const SuperRootDatum& d, const Weight& a, const Weight& b);

/// Roots of the datum that are nonnegative integer combinations of a finite base.
std::vector<Weight> positive_roots(const SuperRootDatum& d, const Base& finite_base);

/// Positive roots of maximal height in Delta^+(base) (one root unless the base is disconnected).
std::vector<Weight> maximal_roots(const SuperRootDatum& d, const Base& finite_base);

/// Checks that a finite base is linearly independent and that every root has
/// coordinates of one sign. Throws InvalidBase otherwise.
void validate_base(const SuperRootDatum& d, const Base& finite_base);

/// Sigma = base ∪ {delta - theta_i} for every maximal root theta_i.
Base affinize(const SuperRootDatum& d, const Base& finite_base);

/// Half-sum of even positives minus half-sum of odd positives; affine bases add h^v Lambda0.
Weight weyl_vector(const SuperRootDatum& d, const Base& base);

/// h^v = (rho, theta) + (theta, theta)/2 for the maximal root of the distinguished base;
/// cross-checked against dual_coxeter_trace.
Rational dual_coxeter(const SuperRootDatum& d);

/// h^v from the Killing form on h: sum over even minus odd roots of (lambda, alpha)^2 = 2 h^v (lambda, lambda).
std::optional<Rational> dual_coxeter_trace(const SuperRootDatum& d);

int lacity(const SuperRootDatum& d);

/// Maximal isotropic set found by search, certified against the Witt index of the form.
std::vector<Weight> maximal_isotropic_set(const SuperRootDatum& d);
int defect(const SuperRootDatum& d);
/// Closed form: min(p,q) for sl/osp families, 1 for C, F(4), G(3), 0 for Lie algebras.
int defect_closed_form(const SuperRootDatum& d);

Weight reflect(const SuperRootDatum& d, const Weight& w, const Weight& alpha);
Base odd_reflect(const SuperRootDatum& d, const Base& base, const Weight& beta);

/// (lambda + 2 rho, lambda) for an affine base.
Rational casimir_eigenvalue(const SuperRootDatum& d, const Weight& lambda, const Base& affine_base);

/// Checks that the listed weights are mutually orthogonal, isotropic, odd, linearly independent.
bool is_isotropic_set(const SuperRootDatum& d, const std::vector<Weight>& s);

}  // namespace superds
