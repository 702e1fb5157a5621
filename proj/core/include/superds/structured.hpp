#pragma once

#include <string>
#include <utility>
#include <vector>

#include "superds/rootdata.hpp"

namespace superds {

/// Sparse element of the algebra: (basis index, coefficient).
using Element = std::vector<std::pair<int, Rational>>;

/// Matrix realisation of sl(p|q), gl(p|p) or osp(M|2n) with a basis of root vectors and a Cartan basis.
class StructuredAlgebra {
 public:
  SuperRootDatum datum;
  int dim = 0;
  std::vector<Weight> weight;  ///< root of each basis vector (zero for the Cartan part)
  std::vector<bool> odd;
  std::vector<int> cartan;     ///< indices of the Cartan basis
  std::vector<Matrix> matrix;  ///< realisation on the natural module
  std::vector<bool> vodd;      ///< parity of the natural module basis
  Matrix form;                 ///< invariant supersymmetric form (x_a | x_b)
  std::vector<std::pair<int, Rational>> sigma;  ///< sigma(x_a) = c x_b

  const Element& bracket(int a, int b) const { return bracket_[static_cast<std::size_t>(a) * dim + b]; }
  /// lambda(h) for a Cartan basis index h.
  Rational eval(const Weight& lambda, int h) const;
  int index_of(const Weight& root) const;  ///< -1 when not a root
  Element bracket(const Element& x, const Element& y) const;
  Rational pair(const Element& x, const Element& y) const;
  Element apply_sigma(const Element& x) const;
  std::string label(int a) const;

  /// Super-Jacobi on all triples, grading, antisymmetry and the sigma / form compatibilities.
  /// Returns a description of the first failure, or an empty string.
  std::string validate() const;

 private:
  friend StructuredAlgebra build_structured(const SuperRootDatum& d);
  std::vector<Element> bracket_;
  std::vector<std::vector<Rational>> cartan_eval_;  // per Cartan basis vector: diagonal entries
  std::vector<Symbol> vweight_sym_;                 // symbol carrying the weight of each natural basis vector
  std::vector<int> vweight_sign_;
};

/// Builds and validates the realisation. Throws UnsupportedFamily for F(4), G(3), degenerate and
/// reduced data, Internal when validation fails.
StructuredAlgebra build_structured(const SuperRootDatum& d);

}  // namespace superds
