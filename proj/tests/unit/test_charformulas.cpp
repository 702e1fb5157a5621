#include <doctest.h>

#include "helpers.hpp"
#include "superds/charformulas.hpp"
#include "superds/dsreduce.hpp"
#include "superds/structured.hpp"
#include "superds/vacuum.hpp"

using namespace superds;
using test::Q;
using test::W;

namespace {

long partitions(long n) {
  if (n < 0) return 0;
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (long part = 1; part <= n; ++part)
    for (long m = part; m <= n; ++m) p[m] += p[m - part];
  return p[n];
}

}  // namespace

TEST_CASE("vacuum character") {
  for (auto s : {"A1", "A(1|0)", "B(1|1)"}) {
    CAPTURE(s);
    auto d = parse_algebra(s);
    Base aff = level_base(d);
    Rational k = Q("3/2");
    Window w{1, 8};
    auto ch = ch_vacuum(d, aff, k, w);
    CHECK(ch.anchor() == k * Weight::lambda0());
    Rational depth0 = 0, depth1 = 0, sdepth1 = 0;
    for (const auto& [nu, c] : ch.terms()) {
      int dd = ch.frame()->depth(nu);
      if (dd == 0) depth0 += c;
      if (dd == 1) depth1 += c;
    }
    auto sch = ch_vacuum(d, aff, k, w, true);
    for (const auto& [nu, c] : sch.terms())
      if (sch.frame()->depth(nu) == 1) sdepth1 += c;
    CHECK(depth0 == 1);
    CHECK(ch.coeff_at(k * Weight::lambda0()) == 1);
    CHECK(depth1 == d.dim_even() + d.dim_odd());
    CHECK(sdepth1 == d.dim_even() - d.dim_odd());
  }
}

TEST_CASE("Weyl-Kac character") {
  auto a1 = parse_algebra("A1");
  Base aff = level_base(a1);
  auto triv = weyl_kac_char(a1, aff, 0, Window{3, 10});
  CHECK(triv.size() == 1);
  CHECK(triv.coeff_at(Weight{}) == 1);

  // basic representation: coefficient at Lambda0 + m alpha - b delta is p(b - m^2)
  const int D = 4, H = 20;
  auto ch = weyl_kac_char(a1, aff, 1, Window{D, H});
  REQUIRE(ch.frame()->generators().size() == 2);
  Weight alpha = a1.theta;
  for (int b = 0; b <= D; ++b)
    for (int m = -3; m <= 3; ++m) {
      Weight wt = Weight::lambda0() + Rational(m) * alpha - Rational(b) * Weight::delta();
      CAPTURE(b);
      CAPTURE(m);
      CHECK(ch.coeff_at(wt) == partitions(b - m * m));
    }
  CHECK(check_positive_integral(ch).ok);

  // finite Weyl group invariance
  auto c2 = parse_algebra("C2");
  Base caff = level_base(c2);
  auto cc = weyl_kac_char(c2, caff, 2, Window{2, 12});
  for (const auto& [nu, c] : cc.terms()) {
    Weight wt = cc.anchor() - cc.frame()->weight(nu);
    for (const auto& a : c2.distinguished.simple) {
      Weight r = reflect(c2, wt, a);
      if (cc.frame()->exponent(cc.anchor() - r)) CHECK(cc.coeff_at(r) == c);
    }
  }

  CHECK(test::error_kind([&] { weyl_kac_char(parse_algebra("A(1|0)"), level_base(parse_algebra("A(1|0)")), 1, Window{1, 4}); }) ==
        ErrorKind::NotZeroDefect);
  CHECK(test::error_kind([&] { weyl_kac_char(a1, aff, -1, Window{1, 4}); }) == ErrorKind::NegativeLevel);
}

TEST_CASE("integrable level: ideal generated in depth k+1") {
  auto a1 = parse_algebra("A1");
  Base aff = level_base(a1);
  Weight a0 = affine_simple_root(aff);
  for (long k = 0; k <= 2; ++k) {
    CAPTURE(k);
    Window w{3, 12};
    auto lv = principal_admissible_level(a1, Rational(k));
    auto simple = weyl_kac_char(a1, aff, k, w);
    auto b = make_bundle(a1, aff, lv, simple, w);
    auto I = ideal_char(b);
    CHECK(I.coeff_at(Rational(k) * Weight::lambda0() - Rational(k + 1) * a0) == 1);
    for (const auto& [nu, c] : I.terms()) CHECK(I.frame()->depth(nu) >= k + 1);
    CHECK(ideal_top_coefficient(b) == 1);
    CHECK(admissible_char(a1, aff, lv, simple, w) == simple);
    CHECK(verify_II(b, simple).ok);
    CHECK(verify_III(b, simple).ok);
  }
}

TEST_CASE("A1 at k = -1/2 against the oracle") {
  auto a1 = parse_algebra("A1");
  Base aff = level_base(a1);
  auto lv = principal_admissible_level(a1, Q("-1/2"));
  REQUIRE(lv.u == 2);
  const int D = 4;  // r0'.k Lambda0 sits at depth 4
  Window w{D, 4 * (D + 1)};
  REQUIRE(lv.p == 1);
  // level-1 side from the string functions, unbounded height
  auto fr = make_frame(aff.simple);
  const int Dp = (D + 1) / 2;
  CharSeries basic(fr, Weight::lambda0(), Window{Dp, -1});
  for (int b = 0; b <= Dp; ++b)
    for (int m = -2; m <= 2; ++m) {
      auto nu = fr->exponent(Rational(b) * Weight::delta() - Rational(m) * a1.theta);
      if (nu && partitions(b - m * m)) basic.add_term(*nu, partitions(b - m * m));
    }
  auto side = dilate(basic, aff, lv.u);
  auto formula = admissible_char(a1, aff, lv, side, w);
  CHECK(check_positive_integral(formula).ok);

  auto A = build_structured(a1);
  GradedModule M(A, lv.k, D);
  auto oracle = table_series(simple_table(M), fr, lv.k * Weight::lambda0(), D, false);
  CHECK(formula == oracle);

  auto b = make_bundle(a1, aff, lv, formula, w);
  CHECK(verify_II(b, side).ok);
  CHECK(verify_III(b, side).ok);
  CHECK(ideal_top_coefficient(b) == 1);
  auto small = make_bundle(a1, aff, lv, formula.truncated(Window{3, 16}), Window{3, 16});
  CHECK(test::error_kind([&] { ideal_top_coefficient(small); }) == ErrorKind::WindowTooSmall);
}

TEST_CASE("P_S identities on the B(1|2) appendix_pair") {
  auto d = parse_algebra("B(1|2)");
  auto pr = appendix_pair(d);
  Base aff = affinize(d, pr.base);
  for (long u : {1, 3}) CHECK(verify_PS_denominators(d, aff, pr.S, Window{4, 10}, u).ok);

  // k = 0: L is trivial
  auto lv = principal_admissible_level(d, Rational(0));
  Window w{4, 10};
  auto fr = make_frame(aff.simple);
  auto b = make_bundle(d, aff, lv, CharSeries::one(fr, w), w);
  CHECK(verify_PSIk(b, pr.S).ok);
  CHECK(ideal_top_coefficient(b) == 1);
}

TEST_CASE("positivity check reports the offending term") {
  auto fr = make_frame({W("eps1-eps2")});
  Window w{0, 4};
  auto s = CharSeries::one(fr, w) - CharSeries::monomial(fr, w, {2});
  auto v = check_positive_integral(s);
  CHECK(!v.ok);
  CHECK(!v.detail.empty());
  CHECK(!check_positive_integral(CharSeries::one(fr, w) * Q("1/2")).ok);
}

TEST_CASE("non-admissible level is rejected") {
  auto a1 = parse_algebra("A1");
  Base aff = level_base(a1);
  auto lv = principal_admissible_level(a1, Q("-3/2"));
  Window w{1, 4};
  auto one = CharSeries::one(make_frame(aff.simple), w);
  CHECK(test::error_kind([&] { admissible_char(a1, aff, lv, one, w); }) == ErrorKind::NotPrincipalAdmissible);
}
