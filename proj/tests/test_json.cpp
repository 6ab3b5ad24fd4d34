#include <doctest.h>

#include "asepk/json_io.hpp"
#include "test_util.hpp"

using namespace asepk;

TEST_CASE("sparse operator round trip") {
  ModelSpec s;
  s.n = 2;
  s.r = 1;
  SparseMatrix<Rational> L = generator_from_blocks(s);
  Json j = sparse_to_json(L);
  CHECK(j["dim"] == 9);
  CHECK(sparse_from_json(j) == L);
  CHECK(sparse_from_json(Json::parse(j.dump())) == L);
  Json bad = j;
  bad["entries"][0]["r"] = 99;
  CHECK_THROWS_AS(sparse_from_json(bad), Error);
}

TEST_CASE("polynomial round trip") {
  LaurentPoly<Rational> p({"x1", "x2"});
  p.add_term({1, -2}, make_rational(3, 4));
  p.add_term({0, 0}, make_rational(-5, 1));
  Json j = poly_to_json(p);
  CHECK(j["vars"] == Json::array({"x1", "x2"}));
  CHECK(j["terms"][1]["num"] == "3");
  CHECK(j["terms"][1]["den"] == "4");
  CHECK(poly_from_json(j) == p);
}

TEST_CASE("rationals on the wire") {
  CHECK(rational_json(make_rational(6, 4)) == "3/2");
  CHECK(rational_json(make_rational(-4, 2)) == "-2");
  Json t;
  coefficient_fields(t, UniRatFun(make_rational(2, 3)));
  CHECK(t["num"] == "2");
  coefficient_fields(t, UniRatFun::variable());
  CHECK(t["num"] == "q");
}
