#include <random>

#include "cremona/io.hpp"
#include "cremona/polygcd.hpp"
#include "doctest.h"

using namespace cremona;

TEST_SUITE_BEGIN("io");

TEST_CASE("polynomial round trips") {
  const CoeffDomain q3{Field::rationals(), false};
  for (std::string s : {"0", "1", "-1", "x0", "-x0", "2/3*x0^2*x1 - x2 + 5",
                        "x0^2 - x1^2", "-3*x1*x2 + 1/2"}) {
    MultiPoly f = parse_poly(s, q3, 3);
    CHECK(parse_poly(poly_str(f), q3, 3) == f);
  }
  const CoeffDomain qt{Field::rationals(), true};
  for (std::string s : {"t", "-t^2*x0", "(t^2 - 1)*x0 + t*x1", "(2*t + 3)*x0*x1",
                        "(t^3 - t)*x0 - 7*x1"}) {
    MultiPoly f = parse_poly(s, qt, 2);
    CHECK(parse_poly(poly_str(f), qt, 2) == f);
  }
  CHECK(poly_str(parse_poly("x1 + x0 + x0^2", q3, 3)) == "x0^2 + x0 + x1");
}

TEST_CASE("random polynomial print/parse round trips") {
  std::mt19937 rng(17);
  const CoeffDomain qt{Field::rationals(), true};
  std::uniform_int_distribution<long> cd(-9, 9);
  std::uniform_int_distribution<std::uint32_t> ed(0, 3);
  std::uniform_int_distribution<int> td(0, 2);
  for (int k = 0; k < 100; ++k) {
    MultiPoly f(qt, 3);
    for (int j = 0; j < 5; ++j) {
      ExpVec ev{std::vector<std::uint32_t>(3, 0)};
      for (auto& e : ev.e) e = ed(rng);
      f.add_term(ev, TPoly::monomial(Scalar::from_int(Field::rationals(), cd(rng)),
                                     static_cast<std::size_t>(td(rng))));
    }
    CHECK(parse_poly(poly_str(f), qt, 3) == f);
  }
}

TEST_CASE("parse errors") {
  const CoeffDomain q3{Field::rationals(), false};
  CHECK_THROWS_AS(parse_poly("x3", q3, 3), ValidationError);
  CHECK_THROWS_AS(parse_poly("t", q3, 3), ValidationError);
  CHECK_THROWS_AS(parse_poly("x0 +", q3, 3), ValidationError);
  CHECK_THROWS_AS(parse_poly("(x0", q3, 3), ValidationError);
  CHECK_THROWS_AS(parse_poly("x0 x1", q3, 3), ValidationError);
}

TEST_CASE("tuple and map literals") {
  const CoeffDomain q3{Field::rationals(), false};
  auto m = parse_map_text("[x1*x2 : x0*x2 : x0*x1] ;; inverse=[x1*x2 : x0*x2 : x0*x1]",
                          q3, 3);
  CHECK(m.components.size() == 3);
  CHECK(m.inverse.size() == 3);
  CHECK(tuple_str(m.components) == "[x1*x2 : x0*x2 : x0*x1]");
  CHECK_THROWS_AS(parse_map_text("[x0 : x1] ;; inv=[x0 : x1]", q3, 2), ValidationError);
}

TEST_CASE("points and matrices") {
  Field q = Field::rationals();
  Point p = parse_point("[2 : -4 : 6]", q);
  CHECK(point_str(p) == "[1 : -2 : 3]");
  Point r = parse_point("[-1 : 0 : 1/2]", q);
  CHECK(point_str(r) == "[2 : 0 : -1]");
  CHECK_THROWS_AS(parse_point("[0 : 0 : 0]", q), ValidationError);

  Matrix m = parse_matrix("1,0;1/2,-3", q);
  CHECK(m.at(1, 0) == Scalar::parse(q, "1/2"));
  CHECK(matrix_str(m) == "1,0;1/2,-3");
  CHECK_THROWS_AS(parse_matrix("1,0;1", q), ValidationError);

  Field f5 = Field::prime(5);
  Point pf = parse_point("[2 : 4]", f5);
  CHECK(point_str(pf) == "[1 : 2]");
}

TEST_SUITE_END();
