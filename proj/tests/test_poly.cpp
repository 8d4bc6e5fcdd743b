#include <random>

#include "cremona/io.hpp"
#include "cremona/multipoly.hpp"
#include "doctest.h"

using namespace cremona;

namespace {

const CoeffDomain Q3{Field::rationals(), false};  // Q, three variables in tests below

MultiPoly P(std::string_view s, int nvars = 3) { return parse_poly(s, Q3, nvars); }

MultiPoly rnd_poly(std::mt19937& rng, const CoeffDomain& dom, int nvars, int maxdeg,
                   int nterms) {
  MultiPoly f(dom, nvars);
  std::uniform_int_distribution<long> cd(-6, 6);
  std::uniform_int_distribution<std::uint32_t> ed(0, static_cast<std::uint32_t>(maxdeg));
  for (int k = 0; k < nterms; ++k) {
    ExpVec ev{std::vector<std::uint32_t>(static_cast<std::size_t>(nvars), 0)};
    for (auto& e : ev.e) e = ed(rng);
    f.add_term(ev, TPoly::constant(Scalar::from_int(dom.base, cd(rng))));
  }
  return f;
}

}  // namespace

TEST_SUITE_BEGIN("poly");

TEST_CASE("arithmetic examples") {
  CHECK(P("(x0+x1)*(x0-x1)") == P("x0^2 - x1^2"));
  MultiPoly f = P("2*x0^2*x1 - x2 + 1/2");
  CHECK(f * P("1") == f);
  MultiPoly h2 = P("x0^2 + x1*x2");
  MultiPoly h3 = P("x0^3 - x2^3");
  CHECK(h2.homogeneous_degree() == 2);
  CHECK(h3.homogeneous_degree() == 3);
  CHECK((h2 * h3).homogeneous_degree() == 5);
  CHECK_FALSE(f.homogeneous_degree().has_value());
  CHECK((f - f).is_zero());
}

TEST_CASE("domain mismatch is rejected") {
  CoeffDomain f5{Field::prime(5), false};
  MultiPoly a = P("x0");
  MultiPoly b = parse_poly("x0", f5, 3);
  CHECK_THROWS_AS(a + b, ValidationError);
  CHECK_THROWS_AS(a * parse_poly("x0", Q3, 2), ValidationError);
}

TEST_CASE("substitution examples") {
  std::vector<MultiPoly> swap01 = {P("x1"), P("x0"), P("x2")};
  CHECK(P("x0*x1").substitute(swap01) == P("x0*x1"));
  std::vector<MultiPoly> sq = {P("x1*x2"), P("x0*x2"), P("x0*x1")};
  CHECK(P("x0^2").substitute(sq) == P("x1^2*x2^2"));
  std::vector<MultiPoly> id = {P("x0"), P("x1"), P("x2")};
  MultiPoly f = P("x0^3 - 2*x1*x2 + 7");
  CHECK(f.substitute(id) == f);
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937 rng(99);
  for (int k = 0; k < 40; ++k) {
    MultiPoly f = rnd_poly(rng, Q3, 3, 3, 4);
    MultiPoly g = rnd_poly(rng, Q3, 3, 3, 4);
    std::vector<MultiPoly> images = {rnd_poly(rng, Q3, 3, 2, 3),
                                     rnd_poly(rng, Q3, 3, 2, 3),
                                     rnd_poly(rng, Q3, 3, 2, 3)};
    CHECK((f * g).substitute(images) == f.substitute(images) * g.substitute(images));
    CHECK((f + g).substitute(images) == f.substitute(images) + g.substitute(images));
  }
}

TEST_CASE("partial derivative") {
  CHECK(P("x0^2*x1").derivative(0) == P("2*x0*x1"));
  CHECK(P("5/3").derivative(1).is_zero());
  CoeffDomain f2{Field::prime(2), false};
  CHECK(parse_poly("x0^2", f2, 3).derivative(0).is_zero());
}

TEST_CASE("derivative satisfies the Leibniz rule") {
  std::mt19937 rng(3);
  for (int k = 0; k < 50; ++k) {
    MultiPoly f = rnd_poly(rng, Q3, 3, 4, 5);
    MultiPoly g = rnd_poly(rng, Q3, 3, 4, 5);
    for (int i = 0; i < 3; ++i)
      CHECK((f * g).derivative(i) == f.derivative(i) * g + f * g.derivative(i));
  }
}

TEST_CASE("graded components") {
  MultiPoly f = P("1 + x1 + x1*x2");
  CHECK(f.graded_component(2) == P("x1*x2"));
  CHECK(f.graded_component(7).is_zero());
  std::mt19937 rng(4);
  for (int k = 0; k < 20; ++k) {
    MultiPoly g = rnd_poly(rng, Q3, 3, 5, 6);
    MultiPoly sum = MultiPoly::zero(Q3, 3);
    for (int j = 0; j <= g.degree(); ++j) sum = sum + g.graded_component(j);
    CHECK(sum == g);
  }
}

TEST_CASE("parameter domain basics") {
  CoeffDomain qt{Field::rationals(), true};
  MultiPoly f = parse_poly("(t^2 - 1)*x0 + t*x1", qt, 2);
  CHECK(f.t_degree() == 2);
  CHECK(f.specialize_parameter(Scalar::from_int(Field::rationals(), 1)) ==
        parse_poly("x1", CoeffDomain{Field::rationals(), false}, 2));
  CHECK(f.t_valuation() == 0);
  MultiPoly tf = parse_poly("t^2*x0 + t^3*x1", qt, 2);
  CHECK(tf.t_valuation() == 2);
  CHECK(tf.t_shifted_down(2) == parse_poly("x0 + t*x1", qt, 2));
}

TEST_SUITE_END();
