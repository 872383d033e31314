#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>

#include "doctest.h"
#include "kms/io.hpp"

using namespace kms;

TEST_CASE("GCM input") {
  auto d = io::load_datum(R"({"cartan": [[2,-1],[-1,2]], "labels": ["x","y"]})");
  CHECK(d.rank() == 2);
  CHECK(d.labels == std::vector<std::string>{"x", "y"});
  CHECK(io::load_datum("[[2]]").rank() == 1);
  CHECK_THROWS_AS(io::load_datum("[[2,"), Error);
  CHECK_THROWS_AS(io::load_datum(R"({"matrix": [[2]]})"), Error);

  const std::string path = "test_io_gcm.json";
  std::ofstream(path) << R"({"cartan": [[2,-2],[-2,2]]})";
  CHECK(io::load_datum(path).classification.all(Kind::Affine));
}

TEST_CASE("flag parsing") {
  CHECK(io::parse_int_list("1, -2,3") == std::vector<std::int64_t>{1, -2, 3});
  CHECK_THROWS_AS(io::parse_int_list("1,x"), Error);
  auto chain = io::parse_chain("2,4,6", 1);
  CHECK(chain.size() == 3);
  CHECK(chain[2].pairings == std::vector<std::int64_t>{6});
  auto chain2 = io::parse_chain("2,2;3,3", 2);
  CHECK(chain2.size() == 2);
  CHECK_THROWS_AS(io::parse_chain("2,2;3", 2), Error);
  CHECK_FALSE(io::parse_q("formal").has_value());
  CHECK(*io::parse_q("5/1") == Rational(5));
  CHECK_THROWS_AS(io::parse_q("two"), Error);
}

TEST_CASE("census JSON orders keys by descending mu") {
  auto c = padic::spherical_census(1, 4, 2);
  CHECK(io::to_json(c).dump() == R"({"q":2,"lambda":1,"precision":4,"census":{"1":1,"0":1,"-1":4},"total":6})");
}

TEST_CASE("series JSON") {
  auto s = satake_normalized(RootDatum::from_matrix({{2}}), BaseCoweight{{2}, ""});
  CHECK(io::to_json(s, Rational(2)).dump() ==
        R"({"base":{"pairings":[2]},"depth":2,"terms":[{"offset":[0],"coeff":"1"},{"offset":[1],"coeff":"1/2"},{"offset":[2],"coeff":"1"}],"exact":true,"omitted_factors":[]})");
  auto formal = io::to_json(s, std::nullopt);
  CHECK(formal["terms"][1]["coeff"].dump() == R"({"min_power":0,"coeff":[1,-1]})");
}

TEST_CASE("ball and root rows") {
  WeylGroup w(CartanMatrix::validate({{2}}));
  CHECK(io::to_json(w.from_word({0})).dump() == R"({"word":[0],"length":1,"offset":[1]})");
  auto t = roots_up_to_height(CartanMatrix::validate({{2, -1}, {-1, 2}}), 2);
  CHECK(io::to_json(t).dump() ==
        R"([{"root":[1,0],"mult":1,"real":true},{"root":[0,1],"mult":1,"real":true},{"root":[1,1],"mult":1,"real":true}])");
}
