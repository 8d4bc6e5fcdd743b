#include <random>

#include "cremona/family.hpp"
#include "cremona/io.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace cremona;

namespace {

const Field Q = Field::rationals();

Scalar qs(long v) { return Scalar::from_int(Q, v); }

Point coordinate_point(int n, int idx) {
  std::vector<Scalar> c(static_cast<std::size_t>(n + 1), Scalar::zero(Q));
  c[static_cast<std::size_t>(idx)] = Scalar::one(Q);
  return Point::make(Q, c);
}

// Direct numeric conjugation nu(a)^-1 . g . nu(a) for g fixing [1:0:...:0],
// built entirely from CremonaMap composition; independent of the t-path.
CremonaMap conjugate_numeric(const CremonaMap& g, const Scalar& a) {
  int n = g.n();
  Matrix m = Matrix::identity(Q, n + 1);
  for (int i = 1; i <= n; ++i) m.at(i, i) = a;
  CremonaMap nu = CremonaMap::linear(ProjMatrix(m));
  return compose(compose(nu.inverse_map(), g), nu);
}

}  // namespace

TEST_SUITE_BEGIN("family");

TEST_CASE("constant families specialize to their map") {
  CremonaMap s = CremonaMap::standard_involution(Q, 2);
  Family f = Family::constant(s);
  for (long a : {0L, 1L, -1L, 2L, 7L}) CHECK(specialize(f, qs(a)) == s);
  CHECK(f.x_degree() == 2);
  CHECK(f.t_degree() == 0);
}

TEST_CASE("conj_limit of the gadget at its fixed points") {
  for (long l : {2L, 3L}) {
    CremonaMap g = CremonaMap::two_fixed_point_gadget(qs(l), 2);
    Point p1 = coordinate_point(2, 1), p2 = coordinate_point(2, 2);

    Family r1 = conj_limit(g, p1);
    CHECK(specialize(r1, qs(1)) == g);
    auto d1 = derivative_at_fixed_point(g, p1);
    CHECK(specialize(r1, qs(0)) == CremonaMap::linear(*d1));
    const CoeffDomain q3{Q, false};
    CHECK(specialize(r1, qs(0)) ==
          CremonaMap::normalize(parse_tuple("[x0 + x2 : x1 : x2]", q3, 3)));

    Family r2 = conj_limit(g, p2);
    CHECK(specialize(r2, qs(1)) == g);
    std::string rho20 = "[" + std::to_string(l) + "*x0 + x1 : x1 : x2]";
    CHECK(specialize(r2, qs(0)) == CremonaMap::normalize(parse_tuple(rho20, q3, 3)));
  }
}

TEST_CASE("conj_limit of the identity is the constant identity family") {
  CremonaMap id = CremonaMap::identity(Q, 2);
  for (auto pstr : {"[1 : 0 : 0]", "[0 : 1 : 0]", "[1 : 1 : 1]", "[2 : -1 : 3]"}) {
    Family f = conj_limit(id, parse_point(pstr, Q));
    CHECK(f == Family::constant(id));
  }
}

TEST_CASE("conj_limit with trivial tangent action has identity limit") {
  // affine (x1, x2) -> (x1, x2 + x1^2): derivative at the origin is trivial
  const CoeffDomain q3{Q, false};
  CremonaMap g = CremonaMap::certified(
      parse_tuple("[x0^2 : x0*x1 : x0*x2 + x1^2]", q3, 3),
      parse_tuple("[x0^2 : x0*x1 : x0*x2 - x1^2]", q3, 3));
  Point p = coordinate_point(2, 0);
  Family r = conj_limit(g, p);
  CHECK(specialize(r, qs(0)) == CremonaMap::identity(Q, 2));
  CHECK(specialize(r, qs(1)) == g);
}

TEST_CASE("conj_limit rejects bad points") {
  CremonaMap g = CremonaMap::two_fixed_point_gadget(qs(2), 2);
  CHECK_THROWS_AS(conj_limit(g, parse_point("[1 : 2 : 3]", Q)), ValidationError);
  // [1:0:0] is indeterminate for the gadget
  CHECK_THROWS_AS(conj_limit(g, parse_point("[1 : 0 : 0]", Q)), ValidationError);
}

TEST_CASE("conj_limit matches direct numeric conjugation") {
  std::mt19937 rng(2024);
  Point p0 = coordinate_point(2, 0);
  for (int k = 0; k < 8; ++k) {
    CremonaMap g = testgen::triangular_map(rng, Q, 2);
    Family r = conj_limit(g, p0);
    for (long a : {2L, 3L})
      CHECK(specialize(r, qs(a)) == conjugate_numeric(g, qs(a)));
  }
}

TEST_CASE("conj_limit agrees with the graded-component display") {
  std::mt19937 rng(515);
  Point p0 = coordinate_point(2, 0);
  CoeffDomain dt{Q, true};
  int done = 0;
  while (done < 20) {
    CremonaMap g = testgen::triangular_map(rng, Q, 2);
    int n = g.n(), d = g.degree();
    Family r = conj_limit(g, p0);
    // the chart display: numerator rows i>=1 carry t^(j-1) on the degree-j
    // graded piece, the denominator row i=0 carries t^j
    std::vector<MultiPoly> expected;
    for (int i = 0; i <= n; ++i) {
      MultiPoly affine = g.components()[static_cast<std::size_t>(i)].dehomogenize_at0();
      MultiPoly comp(dt, n + 1);
      for (int j = 0; j <= d; ++j) {
        MultiPoly gj = affine.graded_component(j);
        if (gj.is_zero()) continue;
        int tp = i == 0 ? j : j - 1;
        REQUIRE(tp >= 0);
        for (const auto& [ev, c] : gj.terms()) {
          ExpVec ne{std::vector<std::uint32_t>(static_cast<std::size_t>(n + 1), 0)};
          ne.e[0] = static_cast<std::uint32_t>(d - j);
          for (int v = 0; v < n; ++v) ne.e[static_cast<std::size_t>(v + 1)] = ev.e[static_cast<std::size_t>(v)];
          comp.add_term(ne, c * TPoly::monomial(Scalar::one(Q),
                                                static_cast<std::size_t>(tp)));
        }
      }
      expected.push_back(std::move(comp));
    }
    CHECK(tuples_projectively_equal(r.components(), expected));
    ++done;
  }
}

TEST_CASE("family product and inverse") {
  CremonaMap s = CremonaMap::standard_involution(Q, 2);
  CremonaMap g = CremonaMap::two_fixed_point_gadget(qs(2), 2);
  Family fs = Family::constant(s);
  Family fid = Family::constant(CremonaMap::identity(Q, 2));

  CHECK(family_product(fs, fid) == fs);
  CHECK(family_product(fs, Family::constant(g)) == Family::constant(compose(s, g)));
  CHECK(family_inverse(fs) == fs);  // sigma is an involution
  CHECK(family_inverse(fid) == fid);

  Family r1 = conj_limit(g, coordinate_point(2, 1));
  Family r2 = conj_limit(g, coordinate_point(2, 2));
  Family prod = family_product(r1, r2);
  for (long a : {0L, 1L, 2L, -1L}) {
    CHECK(specialize(prod, qs(a)) ==
          compose(specialize(r1, qs(a)), specialize(r2, qs(a))));
  }
  Family cancel = family_product(r1, family_inverse(r1));
  for (long a : {0L, 1L, 2L})
    CHECK(specialize(cancel, qs(a)) == CremonaMap::identity(Q, 2));
}

TEST_CASE("specialization commutes with products on random families") {
  std::mt19937 rng(77);
  Point p0 = coordinate_point(2, 0);
  std::vector<Family> pool;
  pool.push_back(Family::constant(CremonaMap::standard_involution(Q, 2)));
  pool.push_back(conj_limit(CremonaMap::two_fixed_point_gadget(qs(2), 2),
                            coordinate_point(2, 1)));
  for (int k = 0; k < 4; ++k)
    pool.push_back(conj_limit(testgen::triangular_map(rng, Q, 2), p0));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int k = 0; k < 25; ++k) {
    const Family& a = pool[pick(rng)];
    const Family& b = pool[pick(rng)];
    Family ab = family_product(a, b);
    for (long t : {0L, 1L, 3L}) {
      CHECK(specialize(ab, qs(t)) ==
            compose(specialize(a, qs(t)), specialize(b, qs(t))));
    }
    Family ainv = family_inverse(a);
    for (long t : {0L, 1L, 3L})
      CHECK(specialize(ainv, qs(t)) == specialize(a, qs(t)).inverse_map());
  }
}

TEST_CASE("verify_family") {
  CremonaMap s = CremonaMap::standard_involution(Q, 2);
  Family fs = Family::constant(s);
  std::vector<Scalar> samples{qs(0), qs(1), qs(2)};
  FamilyReport rep = verify_family(fs, samples);
  CHECK(rep.all_ok);
  for (const auto& sc : rep.samples) CHECK(sc.degree == 2);
  Family updated = record_checked(fs, rep);
  CHECK(updated.sample_checked().size() == 3);  // 0 and 1 already recorded

  CremonaMap g = CremonaMap::two_fixed_point_gadget(qs(2), 2);
  Family r2 = conj_limit(g, coordinate_point(2, 2));
  std::vector<Scalar> samples2{qs(0), qs(1), qs(-1), Scalar::parse(Q, "1/2")};
  FamilyReport rep2 = verify_family(r2, samples2);
  CHECK(rep2.all_ok);
  CHECK(rep2.samples[0].degree == 1);
  for (std::size_t i = 1; i < rep2.samples.size(); ++i)
    CHECK(rep2.samples[i].degree == 2);
}

TEST_CASE("corrupted family fails verification") {
  CremonaMap s = CremonaMap::standard_involution(Q, 2);
  Family fs = Family::constant(s);
  // perturb one coefficient by t*(t-1)*x0^2 so the endpoints stay intact
  std::vector<MultiPoly> comps = fs.components();
  CoeffDomain dt{Q, true};
  MultiPoly bump =
      MultiPoly::variable(dt, 3, 0).pow(2).scaled(TPoly::monomial(Scalar::one(Q), 1) -
                                                  TPoly::monomial(Scalar::one(Q), 2));
  comps[0] = comps[0] - bump;
  Family corrupted = Family::from_certified_parts(comps, fs.inverse_components());
  std::vector<Scalar> samples{qs(0), qs(1), qs(2), qs(5)};
  FamilyReport rep = verify_family(corrupted, samples);
  CHECK_FALSE(rep.all_ok);
  CHECK(rep.samples[0].ok);
  CHECK(rep.samples[1].ok);
  CHECK_FALSE(rep.samples[2].ok);
  // and the honest constructor refuses it outright
  CHECK_THROWS_AS(Family::certified(comps, fs.inverse_components()), ValidationError);
}

TEST_SUITE_END();
