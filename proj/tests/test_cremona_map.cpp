#include <random>

#include "cremona/cremona_map.hpp"
#include "cremona/io.hpp"
#include "doctest.h"

using namespace cremona;

namespace {

const Field Q = Field::rationals();
const CoeffDomain Q3{Q, false};

CremonaMap sigma2() { return CremonaMap::standard_involution(Q, 2); }

Point pt(std::string_view s) { return parse_point(s, Q); }

CremonaMap rnd_linear(std::mt19937& rng, int n) {
  std::uniform_int_distribution<long> d(-4, 4);
  while (true) {
    Matrix m(Q, n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) m.at(i, j) = Scalar::from_int(Q, d(rng));
    if (!m.det().is_zero()) return CremonaMap::linear(ProjMatrix(m));
  }
}

}  // namespace

TEST_SUITE_BEGIN("cremona-map");

TEST_CASE("normalize examples") {
  auto comps = parse_tuple("[x0^2*x1*x2 : x0*x1^2*x2 : x0*x1*x2^2]", Q3, 3);
  CremonaMap m = CremonaMap::normalize(comps);
  CHECK(m == CremonaMap::identity(Q, 2));
  CHECK(m.degree() == 1);

  CremonaMap s = CremonaMap::normalize(parse_tuple("[2*x0 : 2*x1 : 2*x2]", Q3, 3));
  CHECK(s == CremonaMap::identity(Q, 2));

  CremonaMap idem = CremonaMap::normalize(m.components());
  CHECK(idem == m);

  CHECK_THROWS_AS(CremonaMap::normalize(parse_tuple("[x0 : x0 + x1^2 : x2]", Q3, 3)),
                  ValidationError);
}

TEST_CASE("normalize is idempotent on random tuples") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> cd(-5, 5);
  std::uniform_int_distribution<int> pick(0, 2);
  int done = 0;
  while (done < 500) {
    // random homogeneous degree-2 tuples, occasionally with a common factor
    std::vector<MultiPoly> comps;
    for (int i = 0; i < 3; ++i) {
      MultiPoly c(Q3, 3);
      for (int a = 0; a < 3; ++a)
        for (int b = a; b < 3; ++b) {
          ExpVec ev{std::vector<std::uint32_t>(3, 0)};
          ev.e[static_cast<std::size_t>(a)] += 1;
          ev.e[static_cast<std::size_t>(b)] += 1;
          c.add_term(ev, TPoly::constant(Scalar::from_int(Q, cd(rng))));
        }
      comps.push_back(std::move(c));
    }
    if (std::all_of(comps.begin(), comps.end(),
                    [](const MultiPoly& c) { return c.is_zero(); }))
      continue;
    if (pick(rng) == 0) {
      MultiPoly common = MultiPoly::variable(Q3, 3, pick(rng));
      for (auto& c : comps) c = c * common;
    }
    CremonaMap m = CremonaMap::normalize(comps);
    CHECK(CremonaMap::normalize(m.components()) == m);
    ++done;
  }
}

TEST_CASE("sigma composition and certificate") {
  CremonaMap s = sigma2();
  CHECK(s.degree() == 2);
  CHECK(verify_certificate(s));
  CremonaMap ss = compose(s, s);
  CHECK(ss == CremonaMap::identity(Q, 2));
  CHECK(ss.is_certified());
  CHECK(compose(s, CremonaMap::identity(Q, 2)) == s);
}

TEST_CASE("conjugation identity from the linear-subgroup lemma") {
  // h . g_a . h^-1 = [x0 : a*x1 : x2 : x3] exactly, a in {2,3}, n = 3
  for (long a : {2L, 3L}) {
    CremonaMap h = CremonaMap::dejonquieres(Q, 3);
    CremonaMap ga = CremonaMap::scaling_map(Scalar::from_int(Q, a), 3);
    CremonaMap conj = compose(compose(h, ga), h.inverse_map());
    std::string expected = "[x0 : " + std::to_string(a) + "*x1 : x2 : x3]";
    CHECK(conj == CremonaMap::normalize(parse_tuple(expected, CoeffDomain{Q, false}, 4)));
    CHECK(conj.is_certified());
  }
}

TEST_CASE("composition is associative on certified triples") {
  std::mt19937 rng(5);
  for (int k = 0; k < 12; ++k) {
    CremonaMap a = rnd_linear(rng, 2);
    CremonaMap b = k % 2 ? sigma2() : CremonaMap::two_fixed_point_gadget(
                                          Scalar::from_int(Q, 2 + k % 3), 2);
    CremonaMap c = rnd_linear(rng, 2);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("verify_certificate rejects wrong inverses") {
  auto comps = parse_tuple("[x0^2 : x1^2 : x2^2]", Q3, 3);
  for (std::string claimed : {"[x0 : x1 : x2]", "[x1*x2 : x0*x2 : x0*x1]",
                              "[x0^2 : x1^2 : x2^2]"}) {
    CremonaMap m = CremonaMap::with_claimed_inverse(
        comps, parse_tuple(claimed, Q3, 3));
    CHECK_FALSE(verify_certificate(m));
  }
  CremonaMap id2 = CremonaMap::identity(Q, 2);
  CHECK(verify_certificate(id2));
  CHECK_THROWS_AS(verify_certificate(CremonaMap::normalize(comps)), ValidationError);
}

TEST_CASE("evaluate") {
  CremonaMap s = sigma2();
  CHECK(*evaluate(s, pt("[1 : 1 : 1]")) == pt("[1 : 1 : 1]"));
  CHECK_FALSE(evaluate(s, pt("[0 : 0 : 1]")).has_value());
  CremonaMap id = CremonaMap::identity(Q, 2);
  for (auto p : {"[1 : 2 : 3]", "[0 : 1 : -4]", "[5 : 0 : 0]"})
    CHECK(*evaluate(id, pt(p)) == pt(p));
  // evaluate respects composition away from indeterminacy
  CremonaMap g = CremonaMap::two_fixed_point_gadget(Scalar::from_int(Q, 2), 2);
  Point p = pt("[1 : 2 : 3]");
  auto gp = evaluate(g, p);
  REQUIRE(gp.has_value());
  CHECK(*evaluate(compose(s, g), p) == *evaluate(s, *gp));
}

TEST_CASE("derivative at the gadget's two fixed points") {
  // the two linear parts displayed in the connectedness example
  for (long l : {2L, 3L, 5L}) {
    for (int n : {2, 3}) {
      CremonaMap g = CremonaMap::two_fixed_point_gadget(Scalar::from_int(Q, l), n);
      std::vector<Scalar> c1(static_cast<std::size_t>(n + 1), Scalar::zero(Q));
      c1[1] = Scalar::one(Q);
      Point p1 = Point::make(Q, c1);
      std::vector<Scalar> c2(static_cast<std::size_t>(n + 1), Scalar::zero(Q));
      c2[2] = Scalar::one(Q);
      Point p2 = Point::make(Q, c2);
      CHECK(*evaluate(g, p1) == p1);
      CHECK(*evaluate(g, p2) == p2);

      auto d1 = derivative_at_fixed_point(g, p1);
      REQUIRE(d1.has_value());
      Matrix e1 = Matrix::identity(Q, n + 1);
      e1.at(0, 2) = Scalar::one(Q);  // [x0+x2 : x1 : x2 : ...]
      CHECK(*d1 == ProjMatrix(e1));

      auto d2 = derivative_at_fixed_point(g, p2);
      REQUIRE(d2.has_value());
      Matrix e2 = Matrix::identity(Q, n + 1);
      e2.at(0, 0) = Scalar::from_int(Q, l);
      e2.at(0, 1) = Scalar::one(Q);  // [l*x0+x1 : x1 : x2 : ...]
      CHECK(*d2 == ProjMatrix(e2));
    }
  }
}

TEST_CASE("derivative of the identity and error paths") {
  CremonaMap id = CremonaMap::identity(Q, 2);
  for (auto p : {"[1 : 0 : 0]", "[1 : 1 : 1]", "[0 : 2 : 5]"}) {
    auto d = derivative_at_fixed_point(id, pt(p));
    REQUIRE(d.has_value());
    CHECK(*d == ProjMatrix::identity(Q, 3));
  }
  CremonaMap s = sigma2();
  CHECK_THROWS_AS(derivative_at_fixed_point(s, pt("[1 : 2 : 3]")), ValidationError);
  CHECK_THROWS_AS(derivative_at_fixed_point(s, pt("[1 : 0 : 0]")), ValidationError);
}

TEST_CASE("derivative chain rule at a common fixed point") {
  std::mt19937 rng(23);
  Point p = pt("[1 : 0 : 0]");
  std::uniform_int_distribution<long> d(-3, 3);
  // invertible linear maps fixing [1:0:0]
  auto mk_linear = [&]() {
    while (true) {
      Matrix m = Matrix::identity(Q, 3);
      m.at(0, 1) = Scalar::from_int(Q, d(rng));
      m.at(0, 2) = Scalar::from_int(Q, d(rng));
      m.at(1, 1) = Scalar::from_int(Q, d(rng));
      m.at(1, 2) = Scalar::from_int(Q, d(rng));
      m.at(2, 1) = Scalar::from_int(Q, d(rng));
      m.at(2, 2) = Scalar::from_int(Q, d(rng));
      if (!m.det().is_zero()) return CremonaMap::linear(ProjMatrix(m));
    }
  };
  // unipotent quadratic (x1, x2) -> (x1, x2 + x1^2), fixes [1:0:0]
  CremonaMap shear = CremonaMap::certified(
      parse_tuple("[x0^2 : x0*x1 : x0*x2 + x1^2]", Q3, 3),
      parse_tuple("[x0^2 : x0*x1 : x0*x2 - x1^2]", Q3, 3));
  for (int k = 0; k < 20; ++k) {
    CremonaMap f = mk_linear();
    CremonaMap g = k % 2 ? mk_linear() : shear;
    auto df = derivative_at_fixed_point(f, p);
    auto dg = derivative_at_fixed_point(g, p);
    REQUIRE(df.has_value());
    REQUIRE(dg.has_value());
    auto dfg = derivative_at_fixed_point(compose(f, g), p);
    REQUIRE(dfg.has_value());
    CHECK(*dfg == (*df) * (*dg));
  }
}

TEST_CASE("local isomorphism tests") {
  CremonaMap s = sigma2();
  CHECK(is_local_iso_at(s, pt("[1 : 1 : 1]")));
  CHECK_FALSE(is_local_iso_at(s, pt("[1 : 1 : 0]")));  // image indeterminate for s
  CHECK_FALSE(is_local_iso_at(s, pt("[1 : 0 : 0]")));
  CremonaMap id = CremonaMap::identity(Q, 2);
  for (auto p : {"[1 : 0 : 0]", "[1 : 1 : 1]", "[2 : -1 : 7]"})
    CHECK(is_local_iso_at(id, pt(p)));
  CHECK_THROWS_AS(is_local_iso_at(CremonaMap::normalize(s.components()), pt("[1 : 1 : 1]")),
                  ValidationError);
}

TEST_CASE("gadget fixes its two points and has degree 2") {
  for (long l : {2L, 3L, 5L}) {
    CremonaMap g = CremonaMap::two_fixed_point_gadget(Scalar::from_int(Q, l), 2);
    CHECK(g.degree() == 2);
    CHECK(g.is_certified());
    CHECK(tuple_str(g.components()) ==
          "[x0*x1 + " + std::to_string(l) + "*x0*x2 + x1*x2 : x1^2 + x1*x2 : x1*x2 + x2^2]");
  }
  CHECK_THROWS_AS(CremonaMap::two_fixed_point_gadget(Scalar::zero(Q), 2),
                  ValidationError);
  CHECK_THROWS_AS(CremonaMap::two_fixed_point_gadget(Scalar::one(Q), 1),
                  ValidationError);
}

TEST_CASE("constructors validate and certify") {
  CHECK(CremonaMap::linear(ProjMatrix::identity(Q, 3)) == CremonaMap::identity(Q, 2));
  CHECK_THROWS_AS(CremonaMap::scaling_map(Scalar::from_int(Q, 2), 2), ValidationError);
  CHECK_THROWS_AS(CremonaMap::dejonquieres(Q, 2), ValidationError);
  CremonaMap h = CremonaMap::dejonquieres(Q, 3);
  CHECK(h.degree() == 2);
  CHECK(tuple_str(h.components()) == "[x0^2 : x0*x1 : x1*x2 : x0*x3]");
  CHECK(verify_certificate(h));
  // standard involution on P^3
  CremonaMap s3 = CremonaMap::standard_involution(Q, 3);
  CHECK(compose(s3, s3) == CremonaMap::identity(Q, 3));
}

TEST_CASE("linear matrix round trip") {
  std::mt19937 rng(9);
  for (int k = 0; k < 20; ++k) {
    CremonaMap f = rnd_linear(rng, 2);
    CHECK(CremonaMap::linear(f.linear_matrix()) == f);
  }
}

TEST_SUITE_END();
