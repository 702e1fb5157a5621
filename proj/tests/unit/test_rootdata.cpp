#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "superds/rootdata.hpp"

using namespace superds;
using test::Q;
using test::W;

namespace {

bool same_set(std::vector<Weight> a, std::vector<Weight> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

TEST_CASE("family constructors") {
  auto sl21 = build_algebra(Family::A, 1, 0);
  CHECK(sl21.name == "A(1|0)");
  CHECK(sl21.convention == "sl(2|1)");
  CHECK(sl21.dim_even() == 4);
  CHECK(sl21.dim_odd() == 4);
  CHECK(defect(sl21) == 1);

  auto c3 = build_algebra(Family::C, 0, 3);
  CHECK(defect(c3) == 1);
  CHECK(c3.convention == "osp(2|4)");

  auto osp32 = build_algebra(Family::B, 1, 1);
  CHECK(osp32.dim_even() == 3 + 3);
  CHECK(osp32.dim_odd() == 6);

  CHECK(build_algebra(Family::F4, 0, 0).dim_even() == 24);
  CHECK(build_algebra(Family::F4, 0, 0).dim_odd() == 16);
  CHECK(build_algebra(Family::G3, 0, 0).dim_even() == 17);
  CHECK(build_algebra(Family::G3, 0, 0).dim_odd() == 14);

  CHECK(test::error_kind([] { build_algebra(Family::D, 2, 1); }) == ErrorKind::UnsupportedFamily);
  CHECK(test::error_kind([] { build_algebra(Family::C, 0, 1); }) == ErrorKind::UnsupportedFamily);
  CHECK(test::error_kind([] { build_algebra(Family::A, -1, 0); }) == ErrorKind::UnsupportedFamily);
  CHECK(test::error_kind([] { parse_algebra("D(2|1;a)"); }) != ErrorKind::Internal);
}

TEST_CASE("parse_algebra accepts both notations") {
  CHECK(parse_algebra("sl(2|1)").name == "A(1|0)");
  CHECK(parse_algebra("osp(3|2)").name == "B(1|1)");
  CHECK(parse_algebra("C2").is_lie());
  CHECK(parse_algebra("A1").rank() == 1);
}

TEST_CASE("bilinear form") {
  auto d = parse_algebra("A(1|0)");
  CHECK(bilinear(d, Weight::delta(), Weight::delta()) == 0);
  CHECK(bilinear(d, Weight::lambda0(), Weight::delta()) == 1);
  CHECK(bilinear(d, Weight::lambda0(), Weight::lambda0()) == 0);
  CHECK(d.norm(d.theta) == 2);
  CHECK(bilinear(d, W("eps1-del1"), W("eps1-del1")) == 0);
  CHECK(test::error_kind([&] { bilinear(d, W("eps7"), W("eps7")); }) == ErrorKind::SymbolMismatch);

  auto a1 = parse_algebra("A1");
  CHECK(test::error_kind([&] { bilinear(a1, W("del1"), W("eps1")); }) == ErrorKind::SymbolMismatch);
}

TEST_CASE("theta has norm 2 in every family") {
  for (auto s : {"A(2|1)", "A(0|2)", "B(1|2)", "B(2|1)", "C(4)", "D(2|2)", "D(3|1)", "F(4)", "G(3)", "A3", "B2", "C3", "D4"}) {
    auto d = parse_algebra(s);
    CAPTURE(s);
    CHECK(d.norm(d.theta) == 2);
  }
  auto b02 = parse_algebra("B(0|2)");
  CHECK(lacity(b02) == 4);
}

TEST_CASE("Weyl vector") {
  auto a1 = parse_algebra("A1");
  CHECK(weyl_vector(a1, a1.distinguished) == Q("1/2") * a1.distinguished.simple[0]);

  auto d = parse_algebra("A(1|0)");
  Base b{{W("eps1-del1"), W("del1-eps2")}, false};
  validate_base(d, b);
  auto rho = weyl_vector(d, b);
  for (const auto& beta : b.simple) CHECK(d.form(rho, beta) == 0);

  auto aff = affinize(a1, a1.distinguished);
  CHECK(a1.form(weyl_vector(a1, aff), Weight::delta()) == 2);
}

TEST_CASE("(rho, alpha) = |alpha|^2/2 on even simple roots") {
  for (auto s : {"A(2|1)", "B(1|2)", "B(2|1)", "C(3)", "D(3|2)", "F(4)", "G(3)", "B3", "C3"}) {
    auto d = parse_algebra(s);
    CAPTURE(s);
    auto rho = weyl_vector(d, d.distinguished);
    for (const auto& a : d.distinguished.simple)
      if (!d.is_odd_root(a)) CHECK(d.form(rho, a) * 2 == d.norm(a));
  }
}

TEST_CASE("dual Coxeter number") {
  CHECK(dual_coxeter(parse_algebra("B(1|2)")) == Q("3/2"));
  CHECK(dual_coxeter(parse_algebra("A(1|0)")) == 1);
  CHECK(dual_coxeter(parse_algebra("A1")) == 2);
  CHECK(dual_coxeter(parse_algebra("A(1|1)")) == 0);
  for (auto s : {"A(3|1)", "B(2|3)", "C(4)", "D(4|2)", "F(4)", "G(3)", "B3", "D5"}) {
    CAPTURE(s);
    auto d = parse_algebra(s);
    auto tr = dual_coxeter_trace(d);
    REQUIRE(tr);
    CHECK(*tr == dual_coxeter(d));
  }
}

TEST_CASE("lacity and defect") {
  CHECK(lacity(parse_algebra("A(2|1)")) == 1);
  CHECK(lacity(parse_algebra("B(0|2)")) == 4);
  // 2/|(a,a)| over the shortest root after normalisation; D(3|1) comes out simply laced
  CHECK(lacity(parse_algebra("D(3|1)")) == 1);
  CHECK(lacity(parse_algebra("B2")) == 2);
  CHECK(defect(parse_algebra("B(2|2)")) == 2);
  CHECK(defect(parse_algebra("G(3)")) == 1);
  CHECK(defect(parse_algebra("A1")) == 0);
}

TEST_CASE("defect search agrees with the closed form, m,n <= 6") {
  for (auto fam : {Family::A, Family::B, Family::D})
    for (int m = 0; m <= 6; ++m)
      for (int n = 0; n <= 6; ++n) {
        SuperRootDatum d;
        try {
          d = build_algebra(fam, m, n);
        } catch (const Error&) {
          continue;
        }
        CAPTURE(d.name);
        CHECK(defect(d) == defect_closed_form(d));
        CHECK(is_isotropic_set(d, maximal_isotropic_set(d)));
      }
  for (int n = 2; n <= 6; ++n) CHECK(defect(build_algebra(Family::C, 0, n)) == 1);
}

TEST_CASE("reflections") {
  auto a1 = parse_algebra("A1");
  Weight alpha = a1.distinguished.simple[0];
  CHECK(reflect(a1, alpha, alpha) == -alpha);
  Weight a0 = Weight::delta() - alpha;
  CHECK(reflect(a1, Weight::lambda0(), a0) == Weight::lambda0() - Weight::delta() + alpha);

  auto d = parse_algebra("A(1|0)");
  CHECK(test::error_kind([&] { reflect(d, W("eps1"), W("eps1-del1")); }) == ErrorKind::IsotropicReflection);

  Base b = d.distinguished;
  for (const auto& beta : b.simple) {
    if (!d.is_odd_root(beta) || d.norm(beta) != 0) continue;
    Base r = odd_reflect(d, b, beta);
    CHECK(r != b);
    CHECK(odd_reflect(d, r, -beta) == b);
    auto before = positive_roots(d, b);
    auto after = positive_roots(d, r);
    std::vector<Weight> expect;
    for (const auto& x : before)
      if (x != beta) expect.push_back(x);
    expect.push_back(-beta);
    CHECK(same_set(after, expect));
  }
  CHECK(test::error_kind([&] { odd_reflect(d, b, W("eps1-del1")); }) == ErrorKind::NotSimple);
}

TEST_CASE("reflections preserve the form") {
  auto d = parse_algebra("B(1|2)");
  auto aff = affinize(d, d.distinguished);
  std::vector<Weight> probes{W("eps1"), W("del1+1/2*del2"), Weight::lambda0(), W("Lambda0-delta+del2")};
  for (const auto& a : aff.simple) {
    if (d.norm(a) == 0) continue;
    for (const auto& u : probes)
      for (const auto& v : probes) CHECK(d.form(reflect(d, u, a), reflect(d, v, a)) == d.form(u, v));
  }
}

TEST_CASE("Casimir eigenvalue") {
  for (auto s : {"A1", "A(1|0)", "B(1|2)", "D(3|1)"}) {
    auto d = parse_algebra(s);
    CAPTURE(s);
    auto aff = affinize(d, d.standard.simple.empty() ? d.distinguished : d.standard);
    CHECK(casimir_eigenvalue(d, Weight{}, aff) == 0);
    CHECK(casimir_eigenvalue(d, Rational(3) * Weight::lambda0(), aff) == 0);
    CHECK(casimir_eigenvalue(d, d.theta, aff) == 2 * dual_coxeter(d));
  }
}

TEST_CASE("affine base ends with delta - theta") {
  auto d = parse_algebra("A(2|1)");
  auto aff = affinize(d, d.distinguished);
  CHECK(aff.affine);
  REQUIRE(aff.affine_roots().size() == 1);
  CHECK(aff.affine_roots()[0] == Weight::delta() - maximal_roots(d, d.distinguished)[0]);
  CHECK(test::error_kind([&] { validate_base(d, Base{{W("eps1-eps2"), W("eps1-eps3")}, false}); }) ==
        ErrorKind::InvalidBase);
}
