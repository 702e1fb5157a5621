#pragma once

#include <string>

#include "superds/error.hpp"
#include "superds/weight.hpp"

namespace test {

inline superds::Weight W(const std::string& s) { return superds::parse_weight(s); }
inline superds::Rational Q(const std::string& s) { return superds::parse_rational(s); }

template <class F>
superds::ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const superds::Error& e) {
    return e.kind();
  }
  return superds::ErrorKind::Internal;
}

}  // namespace test
