#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "helpers.hpp"
#include "superds/dsreduce.hpp"
#include "superds/levels.hpp"
#include "superds/serialize.hpp"
#include "superds/suites.hpp"

using namespace superds;
using test::Q;
using test::W;

TEST_CASE("scalars and weights") {
  CHECK(to_json(Q("-6/4")) == "-3/2");
  CHECK(to_json(Weight{}) == "0");
  CHECK(to_json(W("del1-eps1+1/2*delta")).get<std::string>() == W("del1-eps1+1/2*delta").to_string());
  std::vector<Weight> ws{W("eps1-del1"), W("Lambda0"), W("0")};
  CHECK(weights_from_json(to_json(ws)) == ws);
  CHECK(test::error_kind([] { weights_from_json(Json::parse(R"([1, 2])")); }) == ErrorKind::Parse);
  CHECK(test::error_kind([] { weights_from_json(Json::parse(R"({"a": 1})")); }) == ErrorKind::Parse);
}

TEST_CASE("datum carries the convention") {
  auto j = to_json(parse_algebra("C(3)"));
  CHECK(j["name"] == "C(3)");
  CHECK(j["convention"] == "osp(2|4)");
  CHECK(j["defect"] == 1);
  CHECK(j["dual_coxeter"] == to_string(dual_coxeter(parse_algebra("C(3)"))));
  CHECK(j["dim"] == Json::array({11, 8}));  // so(2) + sp(4)
}

TEST_CASE("reports") {
  auto d = parse_algebra("B(2|1)");
  auto j = to_json(ds_reduce(d, {W("eps1-del1")}));
  CHECK(j["family_label"] == "B(1|0)");
  CHECK(j["degenerate"] == false);
  auto l = to_json(principal_admissible_level(parse_algebra("A1"), Q("-1/2")));
  CHECK(l["p"] == 1);
  CHECK(l["u"] == 2);
  CHECK(l["k"] == "-1/2");
  auto bad = to_json(principal_admissible_level(parse_algebra("A1"), Q("-2")));
  CHECK(bad["principal_admissible"] == false);
  CHECK(bad.contains("reason"));
}

TEST_CASE("graded tables round trip") {
  GradedTable t{{0, W("-Lambda0"), 1, 0}, {2, W("-Lambda0-2*delta"), 1, 3}};
  CHECK(table_from_json(to_json(t)) == t);
  CHECK(test::error_kind([] { table_from_json(Json::parse(R"([{"depth": 0}])")); }) == ErrorKind::Parse);
  CHECK(test::error_kind([] { table_from_json(Json::object()); }) == ErrorKind::Parse);
}

TEST_CASE("series") {
  auto fr = make_frame({W("eps1-eps2")});
  auto s = CharSeries::monomial(fr, Window{0, 3}, {2}, Q("1/2"), W("eps1"));
  auto j = to_json(s);
  CHECK(j["anchor"] == "eps1");
  REQUIRE(j["terms"].size() == 1);
  CHECK(j["terms"][0]["coeff"] == "1/2");
  CHECK(parse_weight(j["terms"][0]["weight"].get<std::string>()) == W("-eps1+2*eps2"));
}

TEST_CASE("json files") {
  CHECK(test::error_kind([] { read_json_file("/nonexistent/x.json"); }) == ErrorKind::Parse);
  std::string path = "serialize_test_tmp.json";
  {
    std::ofstream o(path);
    o << "{ not json";
  }
  CHECK(test::error_kind([&] { read_json_file(path); }) == ErrorKind::Parse);
  std::remove(path.c_str());
}

TEST_CASE("suite results omit timings") {
  auto r = suite_ds_table(2);
  CHECK(r.ok);
  auto j = to_json(r);
  CHECK(!j.contains("seconds"));
  CHECK(j.dump() == to_json(suite_ds_table(2)).dump());
}
