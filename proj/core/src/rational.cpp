#include "superds/rational.hpp"

#include <cctype>

#include "superds/error.hpp"

namespace superds {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::SymbolMismatch: return "SymbolMismatch";
    case ErrorKind::IsotropicReflection: return "IsotropicReflection";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::NotIsotropic: return "NotIsotropic";
    case ErrorKind::NoConstruction: return "NoConstruction";
    case ErrorKind::NonInvertible: return "NonInvertible";
    case ErrorKind::SNotInBase: return "SNotInBase";
    case ErrorKind::OutsideFrame: return "OutsideFrame";
    case ErrorKind::CriticalLevel: return "CriticalLevel";
    case ErrorKind::InconsistentTriple: return "InconsistentTriple";
    case ErrorKind::NotPrincipalAdmissible: return "NotPrincipalAdmissible";
    case ErrorKind::NotZeroDefect: return "NotZeroDefect";
    case ErrorKind::NegativeLevel: return "NegativeLevel";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::Undecidable: return "Undecidable";
    case ErrorKind::NotSquareZero: return "NotSquareZero";
    case ErrorKind::InvalidBase: return "InvalidBase";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Internal: return "InternalError";
  }
  return "Unknown";
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  }
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  Integer d{std::string(den)};
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational q{Integer{n}, d};
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

long to_long(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p()) {
    throw Error(ErrorKind::Internal, "rational " + to_string(q) + " is not a machine integer");
  }
  return q.get_num().get_si();
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace superds
