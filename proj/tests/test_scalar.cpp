#include <random>

#include "cremona/scalar.hpp"
#include "doctest.h"

using namespace cremona;

namespace {

Scalar rnd_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 12);
  return Scalar::rational(mpq_class(num(rng), den(rng)));
}

Scalar rnd_residue(const Field& f, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(0, f.characteristic() - 1);
  return Scalar::from_int(f, d(rng));
}

}  // namespace

TEST_SUITE_BEGIN("scalar");

TEST_CASE("field descriptors") {
  CHECK(Field::rationals().characteristic() == 0);
  CHECK(Field::prime(7).characteristic() == 7);
  CHECK_THROWS_AS(Field::prime(6), ValidationError);
  CHECK_THROWS_AS(Field::prime(1), ValidationError);
  CHECK(Field::prime(2147483647).characteristic() == 2147483647);  // 2^31 - 1
  CHECK(Field::parse("q") == Field::rationals());
  CHECK(Field::parse("fp:5") == Field::prime(5));
  CHECK_THROWS_AS(Field::parse("fp:10"), ValidationError);
  CHECK_THROWS_AS(Field::parse("r"), ValidationError);
}

TEST_CASE("rational arithmetic examples") {
  Field q = Field::rationals();
  Scalar a = Scalar::parse(q, "2/3");
  Scalar b = Scalar::parse(q, "1/6");
  CHECK((a + b).str() == "5/6");
  CHECK((a + Scalar::zero(q)) == a);
  CHECK((a * a.inverse()).is_one());
  CHECK(Scalar::parse(q, "-4/6").str() == "-2/3");
  CHECK_THROWS_AS(Scalar::zero(q).inverse(), ValidationError);
}

TEST_CASE("prime field arithmetic examples") {
  Field f5 = Field::prime(5);
  CHECK(Scalar::from_int(f5, 2).inverse() == Scalar::from_int(f5, 3));
  CHECK((Scalar::from_int(f5, 4) + Scalar::from_int(f5, 3)) == Scalar::from_int(f5, 2));
  CHECK((-Scalar::from_int(f5, 2)) == Scalar::from_int(f5, 3));
  CHECK(Scalar::from_int(f5, -7) == Scalar::from_int(f5, 3));
  Field q = Field::rationals();
  CHECK_THROWS_AS(Scalar::one(q) + Scalar::one(f5), ValidationError);
}

TEST_CASE("field axioms on random pairs") {
  std::mt19937 rng(20240811);
  Field q = Field::rationals();
  Field f7 = Field::prime(7);
  for (int i = 0; i < 1000; ++i) {
    Scalar a = rnd_rational(rng), b = rnd_rational(rng), c = rnd_rational(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    Scalar x = rnd_residue(f7, rng), y = rnd_residue(f7, rng), z = rnd_residue(f7, rng);
    CHECK(x + y == y + x);
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
  }
}

TEST_CASE("nth power class over the rationals") {
  Field q = Field::rationals();
  auto r = nth_power_class(Scalar::from_int(q, 8), 3);
  CHECK(r.is_nth_power);
  CHECK(*r.witness == Scalar::from_int(q, 2));

  for (std::uint64_t n = 1; n <= 7; ++n) {
    auto one = nth_power_class(Scalar::one(q), n);
    CHECK(one.is_nth_power);
    CHECK(one.witness->is_one());
  }

  CHECK_FALSE(nth_power_class(Scalar::from_int(q, 2), 2).is_nth_power);
  CHECK_FALSE(nth_power_class(Scalar::from_int(q, -4), 2).is_nth_power);
  auto neg = nth_power_class(Scalar::from_int(q, -27), 3);
  CHECK(neg.is_nth_power);
  CHECK(*neg.witness == Scalar::from_int(q, -3));
  auto frac = nth_power_class(Scalar::parse(q, "4/9"), 2);
  CHECK(frac.is_nth_power);
  CHECK(*frac.witness == Scalar::parse(q, "2/3"));
  CHECK_FALSE(nth_power_class(Scalar::parse(q, "4/3"), 2).is_nth_power);
  CHECK_THROWS_AS(nth_power_class(Scalar::zero(q), 2), ValidationError);

  // Large heights stay decidable.
  mpz_class big(1);
  for (int i = 0; i < 40; ++i) big *= 10000019;  // prime beyond 10^6
  auto huge = nth_power_class(Scalar::rational(mpq_class(big * big)), 2);
  CHECK(huge.is_nth_power);
  CHECK(*huge.witness == Scalar::rational(mpq_class(big)));
  // big * 10000019 carries an odd power of the prime, so it is not a square.
  CHECK_FALSE(nth_power_class(Scalar::rational(mpq_class(big * 10000019)), 2).is_nth_power);
}

TEST_CASE("nth power class roundtrip on random values") {
  std::mt19937 rng(7);
  Field q = Field::rationals();
  for (int i = 0; i < 200; ++i) {
    Scalar a = rnd_rational(rng);
    if (a.is_zero()) continue;
    std::uniform_int_distribution<std::uint64_t> nd(1, 6);
    std::uint64_t n = nd(rng);
    Scalar an = a.pow(static_cast<long>(n));
    auto r = nth_power_class(an, n);
    CHECK(r.is_nth_power);
    CHECK(r.witness->pow(static_cast<long>(n)) == an);
  }
}

TEST_CASE("fp power class example and exhaustive agreement") {
  Field f7 = Field::prime(7);
  CHECK_FALSE(nth_power_class(Scalar::from_int(f7, 2), 3).is_nth_power);
  auto cube6 = nth_power_class(Scalar::from_int(f7, 6), 3);
  CHECK(cube6.is_nth_power);
  CHECK(cube6.witness->pow(3) == Scalar::from_int(f7, 6));

  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 31u, 61u, 97u, 101u}) {
    Field f = Field::prime(p);
    for (std::uint64_t n = 1; n <= 6; ++n) {
      for (std::uint32_t a = 1; a < p; ++a) {
        bool brute = false;
        for (std::uint32_t w = 1; w < p && !brute; ++w)
          brute = Scalar::from_int(f, w).pow(static_cast<long>(n)) ==
                  Scalar::from_int(f, a);
        auto got = nth_power_class(Scalar::from_int(f, a), n);
        CHECK(got.is_nth_power == brute);
        if (got.is_nth_power)
          CHECK(got.witness->pow(static_cast<long>(n)) == Scalar::from_int(f, a));
      }
    }
  }
}

TEST_CASE("fp power class with a large prime") {
  Field f = Field::prime(2147483647);
  Scalar a = Scalar::from_int(f, 1234567);
  Scalar sq = a * a;
  auto r = nth_power_class(sq, 2);
  CHECK(r.is_nth_power);
  CHECK(*r.witness * *r.witness == sq);
  // -1 is not a square mod p for p = 3 mod 4.
  CHECK_FALSE(nth_power_class(-Scalar::one(f), 2).is_nth_power);
}

TEST_SUITE_END();
