#include "superds/weight.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "superds/error.hpp"

namespace superds {

std::string Symbol::name() const {
  switch (kind) {
    case Kind::Eps: return "eps" + std::to_string(index);
    case Kind::Del: return "del" + std::to_string(index);
    case Kind::Lambda0: return "Lambda0";
    case Kind::Delta: return "delta";
  }
  return "?";
}

Symbol parse_symbol(std::string_view name) {
  if (name == "Lambda0" || name == "L0") return Symbol::lambda0();
  if (name == "delta") return Symbol::delta();
  auto indexed = [&](std::string_view prefix, Symbol::Kind kind) -> std::optional<Symbol> {
    if (name.substr(0, prefix.size()) != prefix || name.size() == prefix.size()) return std::nullopt;
    int idx = 0;
    for (char ch : name.substr(prefix.size())) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
      idx = idx * 10 + (ch - '0');
    }
    if (idx <= 0) return std::nullopt;
    return Symbol{kind, idx};
  };
  if (auto s = indexed("eps", Symbol::Kind::Eps)) return *s;
  if (auto s = indexed("del", Symbol::Kind::Del)) return *s;
  throw Error(ErrorKind::Parse, "unknown symbol '" + std::string(name) + "'");
}

Weight::Weight(std::initializer_list<Term> terms) {
  for (const auto& [s, c] : terms) add(s, c);
}

Weight Weight::unit(Symbol s, const Rational& c) {
  Weight w;
  w.set(s, c);
  return w;
}

Rational Weight::operator[](Symbol s) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                             [](const Term& t, Symbol k) { return t.first < k; });
  if (it != terms_.end() && it->first == s) return it->second;
  return 0;
}

void Weight::set(Symbol s, const Rational& c) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                             [](const Term& t, Symbol k) { return t.first < k; });
  if (it != terms_.end() && it->first == s) {
    if (c == 0) {
      terms_.erase(it);
    } else {
      it->second = c;
    }
  } else if (c != 0) {
    terms_.insert(it, Term{s, c});
  }
}

void Weight::add(Symbol s, const Rational& c) {
  if (c == 0) return;
  set(s, (*this)[s] + c);
}

Weight Weight::finite_part() const {
  Weight w;
  for (const auto& t : terms_) {
    if (t.first.finite()) w.terms_.push_back(t);
  }
  return w;
}

Weight& Weight::operator+=(const Weight& o) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) out.emplace_back(a->first, c);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Weight& Weight::operator-=(const Weight& o) { return *this += -o; }

Weight& Weight::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

bool operator==(const Weight& a, const Weight& b) { return a.terms_ == b.terms_; }

bool operator<(const Weight& a, const Weight& b) {
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const Weight::Term& x, const Weight::Term& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

std::string Weight::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    Rational a = abs(c);
    if (c < 0) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    if (a != 1) out += superds::to_string(a) + "*";
    out += s.name();
    first = false;
  }
  return out;
}

std::size_t Weight::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [s, c] : terms_) {
    std::size_t x = (static_cast<std::size_t>(s.kind) << 16) ^ static_cast<std::size_t>(s.index);
    x ^= mpz_get_si(c.get_num_mpz_t()) * 1000003ULL + mpz_get_si(c.get_den_mpz_t());
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Weight parse_weight(std::string_view text) {
  Weight w;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorKind::Parse, msg + " at position " + std::to_string(i) + " in '" + std::string(text) + "'");
  };
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (text.substr(i) == "0") return w;
  bool any = false;
  while (true) {
    skip();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (any) {
      fail("expected '+' or '-'");
    }
    Rational coeff = 1;
    std::size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
    if (i > start) {
      coeff = parse_rational(text.substr(start, i - start));
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
    }
    start = i;
    while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail("expected symbol");
    std::string name(text.substr(start, i - start));
    Symbol s;
    try {
      s = parse_symbol(name);
    } catch (const Error&) {
      i = start;
      fail("unknown symbol '" + name + "'");
    }
    w.add(s, coeff * sign);
    any = true;
  }
  if (!any) fail("empty weight expression");
  return w;
}

}  // namespace superds
