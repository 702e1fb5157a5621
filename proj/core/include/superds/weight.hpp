#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superds/rational.hpp"

namespace superds {

/// Basis symbols of h*: eps_i, del_j (finite part), Lambda0 and the imaginary root delta.
struct Symbol {
  enum class Kind : unsigned char { Eps = 0, Del = 1, Lambda0 = 2, Delta = 3 };
  Kind kind = Kind::Eps;
  int index = 0;  ///< 1-based for Eps/Del, 0 otherwise

  static Symbol eps(int i) { return {Kind::Eps, i}; }
  static Symbol del(int j) { return {Kind::Del, j}; }
  static Symbol lambda0() { return {Kind::Lambda0, 0}; }
  static Symbol delta() { return {Kind::Delta, 0}; }

  bool finite() const { return kind == Kind::Eps || kind == Kind::Del; }
  std::string name() const;

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Parses "eps3", "del1", "Lambda0", "delta".
Symbol parse_symbol(std::string_view name);

/// Element of h* with exact rational coefficients and finite support.
class Weight {
 public:
  using Term = std::pair<Symbol, Rational>;

  Weight() = default;
  Weight(std::initializer_list<Term> terms);

  static Weight unit(Symbol s, const Rational& c = 1);
  static Weight eps(int i) { return unit(Symbol::eps(i)); }
  static Weight del(int j) { return unit(Symbol::del(j)); }
  static Weight lambda0() { return unit(Symbol::lambda0()); }
  static Weight delta() { return unit(Symbol::delta()); }

  Rational operator[](Symbol s) const;
  void set(Symbol s, const Rational& c);
  void add(Symbol s, const Rational& c);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Projection onto the eps/del span (drops Lambda0 and delta).
  Weight finite_part() const;
  Rational delta_coeff() const { return (*this)[Symbol::delta()]; }
  Rational level() const { return (*this)[Symbol::lambda0()]; }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(const Rational& c);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& c, Weight a) { return a *= c; }
  friend Weight operator*(Weight a, const Rational& c) { return a *= c; }
  Weight operator-() const { return Rational(-1) * *this; }

  friend bool operator==(const Weight& a, const Weight& b);
  friend bool operator<(const Weight& a, const Weight& b);

  /// Human readable form, e.g. "eps1-del1+1/2*delta"; parses back with parse_weight.
  std::string to_string() const;
  std::size_t hash() const;

 private:
  std::vector<Term> terms_;  // sorted by symbol, no zero coefficients
};

/// Parses linear expressions such as "eps1-del1", "delta-eps1+del2", "2*del1", "1/2*eps1+Lambda0", "0".
Weight parse_weight(std::string_view text);

struct WeightHash {
  std::size_t operator()(const Weight& w) const { return w.hash(); }
};

}  // namespace superds
