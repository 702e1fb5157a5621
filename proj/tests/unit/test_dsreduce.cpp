#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "superds/dsreduce.hpp"

using namespace superds;
using test::Q;
using test::W;

namespace {

bool same_set(std::vector<Weight> a, std::vector<Weight> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::vector<Weight> ws(std::initializer_list<const char*> xs) {
  std::vector<Weight> out;
  for (auto x : xs) out.push_back(W(x));
  return out;
}

}  // namespace

TEST_CASE("ds_roots") {
  auto a1 = parse_algebra("A1");
  CHECK(same_set(ds_roots(a1, {}), a1.roots()));

  auto b11 = parse_algebra("B(1|1)");
  CHECK(ds_roots(b11, maximal_isotropic_set(b11)).empty());

  auto b21 = parse_algebra("B(2|1)");
  auto x = ds_roots(b21, ws({"eps1-del1"}));
  CHECK(same_set(x, ws({"eps2", "-eps2"})));

  CHECK(test::error_kind([&] { ds_roots(b21, ws({"eps1"})); }) == ErrorKind::NotIsotropic);
  CHECK(test::error_kind([&] { ds_roots(b21, ws({"eps1-del1", "eps2-del1"})); }) == ErrorKind::NotIsotropic);
}

TEST_CASE("family table") {
  auto b21 = parse_algebra("B(2|1)");
  auto rep = ds_reduce(b21, ws({"eps1-del1"}));
  CHECK(rep.family_label == "B(1|0)");
  CHECK(rep.reduced.roots().size() == 2);

  CHECK(ds_predict(parse_algebra("C(4)"), 1).is_lie());
  CHECK(ds_predict(parse_algebra("C(4)"), 1).name == "C2");
  CHECK(ds_datum(parse_algebra("C(4)"), ws({"eps1-del1"})).name == "C2");
  CHECK(ds_predict(parse_algebra("D(3|2)"), 2).name == "GL1");
  CHECK(ds_predict(parse_algebra("G(3)"), 1).name == "A1");
  CHECK(ds_predict(parse_algebra("F(4)"), 1).name == "A2");
  CHECK(ds_predict(parse_algebra("A(1|1)"), 2).name == "ZERO");
  CHECK(ds_predict(parse_algebra("A(2|1)"), 2).name == "ZERO");
}

TEST_CASE("reduced affine base and Weyl vector, D(3|1)") {
  auto d = parse_algebra("D(3|1)");
  Base fin{ws({"eps1-eps2", "eps2-del1", "del1-eps3", "del1+eps3"}), false};
  validate_base(d, fin);
  auto aff = affinize(d, fin);
  auto S = ws({"eps2-del1"});
  auto rep = ds_reduce(d, S, aff);
  CHECK(same_set(rep.affine_base.simple, ws({"eps1-eps3", "eps1+eps3", "delta-eps1+eps3", "delta-eps1-eps3"})));
  CHECK(rep.rho_x == W("2*Lambda0+eps1"));
  CHECK(same_set(ds_base(d, aff, S).simple, rep.affine_base.simple));

  CHECK(restrict_weight(S[0], rep).is_zero());
  CHECK(restrict_weight(W("3*Lambda0"), rep) == W("3*Lambda0"));
  CHECK(restrict_weight(W("eps1"), rep) == W("eps1"));
  CHECK(restrict_weight(Weight::delta(), rep) == Weight::delta());
}

TEST_CASE("degenerate GL1 image keeps only delta") {
  auto d = parse_algebra("D(3|2)");
  auto S = maximal_isotropic_set(d);
  REQUIRE(S.size() == 2);
  auto rep = ds_reduce(d, S, affinize(d, d.distinguished));
  CHECK(rep.tag == "GL1");
  CHECK(rep.degenerate());
  CHECK(rep.affine_base.simple == std::vector<Weight>{Weight::delta()});
}

TEST_CASE("restriction is linear, kills S, and is idempotent") {
  for (auto s : {"A(2|1)", "B(2|2)", "D(3|1)", "C(3)", "G(3)", "F(4)"}) {
    CAPTURE(s);
    auto d = parse_algebra(s);
    auto S = maximal_isotropic_set(d);
    auto rep = ds_reduce(d, S);
    std::vector<Weight> probes = d.distinguished.simple;
    probes.push_back(W("Lambda0"));
    probes.push_back(W("delta"));
    for (const auto& b : S) CHECK(restrict_weight(b, rep).is_zero());
    for (const auto& u : probes) {
      auto pu = restrict_weight(u, rep);
      CHECK(restrict_weight(pu, rep) == pu);
      for (const auto& v : probes)
        CHECK(restrict_weight(u + Rational(2) * v, rep) == pu + Rational(2) * restrict_weight(v, rep));
    }
    for (const auto& a : rep.reduced.roots()) CHECK(restrict_weight(a, rep) == a);
  }
}

TEST_CASE("appendix_pair construction") {
  auto b12 = parse_algebra("B(1|2)");
  auto pr = appendix_pair(b12);
  CHECK(pr.S == ws({"eps1-del2"}));
  CHECK(pr.base.simple == ws({"del1-eps1", "eps1-del2", "del2"}));
  CHECK(maximal_roots(b12, pr.base) == ws({"2*del1"}));
  auto rep = check_P123(b12, pr.S, pr.base);
  CHECK(rep.P1);
  CHECK(rep.P2);
  CHECK(rep.P3);

  auto d23 = parse_algebra("D(2|3)");
  auto p23 = appendix_pair(d23);
  CHECK(p23.S == ws({"eps1-del2", "eps2-del3"}));
  auto x1 = ds_reduce(d23, p23.S, p23.base);
  CHECK(x1.tag == "C1");
  CHECK(x1.finite_base.simple == ws({"2*del1"}));
  auto b23 = parse_algebra("B(2|3)");
  auto p2 = appendix_pair(b23);
  auto x2 = ds_reduce(b23, p2.S, p2.base);
  CHECK(x2.tag == "B(0|1)");
  CHECK(x2.finite_base.simple == ws({"del1"}));

  CHECK(test::error_kind([] { appendix_pair(parse_algebra("A(2|3)")); }) == ErrorKind::NoConstruction);
  CHECK(test::error_kind([] { appendix_pair(parse_algebra("B(2|1)")); }) == ErrorKind::NoConstruction);
}

TEST_CASE("P1 fails when S is not in the base") {
  auto d = parse_algebra("A(1|0)");
  auto base = d.standard.simple.empty() ? d.distinguished : d.standard;
  auto rep = check_P123(d, ws({"eps1+del1"}), base);
  CHECK(!rep.P1);
}

TEST_CASE("D(3|1) pair of the reduced-base example: cone test runs") {
  auto d = parse_algebra("D(3|1)");
  Base fin{ws({"eps1-eps2", "eps2-del1", "del1-eps3", "del1+eps3"}), false};
  auto rep = check_P123(d, ws({"eps2-del1"}), fin);
  CHECK(rep.P1);
  CHECK(!rep.extreme_rays.empty());
  MESSAGE("D(3|1): P2=" << rep.P2 << " P3=" << rep.P3);
}

TEST_CASE("cone helpers") {
  // {c >= 0 : c1 - c2 = 0} is the ray (1,1,0) plus (0,0,1)
  auto rays = cone_extreme_rays(Matrix::from_rows({{1, -1, 0}}, 3));
  CHECK(rays.size() == 2);
  CHECK(in_cone(W("eps1"), {}, ws({"eps1", "eps2"})));
  CHECK(!in_cone(W("-eps1"), {}, ws({"eps1", "eps2"})));
  CHECK(in_cone(W("-eps1"), ws({"eps1"}), ws({"eps2"})));
}
