#pragma once

#include <map>
#include <optional>
#include <vector>

#include "superds/charseries.hpp"
#include "superds/dsreduce.hpp"
#include "superds/structured.hpp"

namespace superds {

/// PBW monomial: generator ids (x_a t^-n has id a + dim (n-1)), nondecreasing in the ordering key.
using Monomial = std::vector<int>;
/// Vector of the vacuum module in the monomial basis.
using ModVec = std::map<Monomial, Rational>;

struct WeightSpace {
  int depth = 0;
  Weight weight;  ///< k Lambda0 + finite part - depth delta
  std::vector<Monomial> basis;
  std::vector<bool> parity;
  long even = 0;
  long odd = 0;
  // filled by GradedModule::gram
  bool has_gram = false;
  Matrix gram;
  std::vector<std::size_t> quotient;  ///< basis indices whose images span the simple quotient
  long rank_even = 0;
  long rank_odd = 0;
};

/// Vac^k truncated at delta-depth D, with the contravariant form <vac, vac> = 1.
class GradedModule {
 public:
  /// ordering = 0 uses the natural generator order; other values shuffle it deterministically.
  GradedModule(const StructuredAlgebra& alg, const Rational& k, int depth, unsigned ordering = 0);

  const StructuredAlgebra& algebra() const { return *alg_; }
  const Rational& level() const { return k_; }
  int depth() const { return depth_; }
  std::vector<WeightSpace>& spaces() { return spaces_; }
  const std::vector<WeightSpace>& spaces() const { return spaces_; }
  /// Index of the weight space, or -1.
  int find(const Weight& weight) const;

  Weight weight_of(const Monomial& m) const;
  int depth_of(const Monomial& m) const;
  bool parity_of(const Monomial& m) const;

  /// x_a t^mode applied to m vac (any integer mode).
  ModVec act(int a, int mode, const Monomial& m);
  ModVec act(const Element& x, int mode, const ModVec& v);
  /// <left vac, right vac>.
  Rational pairing(const Monomial& left, const Monomial& right);

  /// Gram matrix, ranks and quotient basis of one weight space.
  const WeightSpace& gram(std::size_t space);
  void all_grams();

  /// Coordinates of a vector of weight space s in the quotient basis.
  Vector quotient_coords(std::size_t s, const ModVec& v);

 private:
  int gen_a(int id) const { return id % alg_->dim; }
  int gen_n(int id) const { return id / alg_->dim + 1; }
  int id_of(int a, int n) const { return a + alg_->dim * (n - 1); }
  bool before(int g, int h) const { return key_[g] < key_[h]; }
  ModVec insert(int a, int n, const Monomial& m);
  ModVec annihilate(int a, int m, const Monomial& mono);
  void prepend_into(ModVec& out, int g, const ModVec& v, const Rational& c);

  const StructuredAlgebra* alg_;
  Rational k_;
  int depth_;
  std::vector<int> key_;
  std::vector<int> cartan_pos_;  // basis index -> position in the Cartan list, or -1
  std::vector<WeightSpace> spaces_;
  std::map<Weight, int> index_;
  std::map<Monomial, std::pair<int, std::size_t>> locate_;
  std::vector<std::optional<Matrix>> quotient_inverse_;
  std::map<std::pair<std::pair<int, int>, Monomial>, ModVec> memo_;
};

/// Graded dimensions (even, odd) per weight.
struct GradedEntry {
  int depth = 0;
  Weight weight;
  long even = 0;
  long odd = 0;
  friend bool operator==(const GradedEntry&, const GradedEntry&) = default;
};
using GradedTable = std::vector<GradedEntry>;

enum class ModuleKind { Vacuum, Simple };

GradedTable vacuum_table(const GradedModule& m);
/// Ranks of the Gram matrices: the graded dimensions of L(k Lambda0).
GradedTable simple_table(GradedModule& m);
/// Radical dimensions: I(k).
GradedTable ideal_table(GradedModule& m);

/// Ker x / Im x per restricted weight, x = sum c_i e_{S_i} (c_i = 1 by default).
/// Throws NotSquareZero when [x, x] != 0, NotIsotropic when S is not an isotropic set.
GradedTable ds_homology(GradedModule& m, ModuleKind kind, const std::vector<Weight>& S, const DSReport& report,
                        const std::vector<Rational>& coeffs = {});

/// sum (even -/+ odd) e^{weight} in the frame with the given anchor; unbounded height.
/// Throws OutsideFrame when a weight is not anchor - Z>=0 frame.
CharSeries table_series(const GradedTable& t, const FramePtr& frame, const Weight& anchor, int depth, bool super = true);

}  // namespace superds
