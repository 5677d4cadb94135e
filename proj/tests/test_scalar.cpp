#include "doctest.h"

#include "helpers.hpp"
#include "ybx/scalar.hpp"

using namespace ybx;
using ybx::testing::random_nonzero_scalar;
using ybx::testing::random_scalar;

TEST_CASE("rational arithmetic examples") {
  CHECK(Scalar::rational(1, 2) + Scalar::rational(1, 3) == Scalar::rational(5, 6));
  CHECK(Scalar::rational(-3, 4) * Scalar::rational(-4, 3) == Scalar::rational(1));
  CHECK(Scalar::rational(-3, 4).str() == "-3/4");
  CHECK(Scalar::rational(7).str() == "7");
}

TEST_CASE("prime field examples") {
  Field f5 = Field::mod(5);
  CHECK(Scalar::residue(f5, 2).inverse() == Scalar::residue(f5, 3));
  CHECK(Scalar::residue(f5, -1) == Scalar::residue(f5, 4));
  CHECK((Scalar::residue(f5, 4) + Scalar::residue(f5, 3)) == Scalar::residue(f5, 2));
}

TEST_CASE("field construction rejects non-primes") {
  CHECK_THROWS_AS(Field::mod(1), NonPrimeModulus);
  CHECK_THROWS_AS(Field::mod(4), NonPrimeModulus);
  CHECK_THROWS_AS(Field::mod(91), NonPrimeModulus);  // 7 * 13
  CHECK_NOTHROW(Field::mod(2));
  CHECK_NOTHROW(Field::mod(65521));
}

TEST_CASE("no cross-field arithmetic") {
  Field f5 = Field::mod(5);
  CHECK_THROWS_AS(Scalar::rational(1, 2) + Scalar::residue(f5, 1), FieldMismatch);
  CHECK_THROWS_AS(Scalar::residue(Field::mod(3), 1) * Scalar::residue(f5, 1),
                  FieldMismatch);
}

TEST_CASE("inversion of zero fails") {
  CHECK_THROWS_AS(Scalar::rational(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Scalar::residue(Field::mod(7), 0).inverse(), DivisionByZero);
}

TEST_CASE("normalization is canonical") {
  CHECK(Scalar::rational(2, 4).str() == "1/2");
  CHECK(Scalar::rational(3, -6).str() == "-1/2");
  CHECK(Scalar::rational(-2, -2) == Scalar::rational(1));
  CHECK(Scalar::parse(Field::rationals(), "4/8") == Scalar::rational(1, 2));
  Field f7 = Field::mod(7);
  CHECK(Scalar::parse(f7, "-1") == Scalar::residue(f7, 6));
}

TEST_CASE("field axioms hold on random triples") {
  const Field fields[] = {Field::rationals(), Field::mod(2), Field::mod(5),
                          Field::mod(65521)};
  for (const Field& f : fields) {
    for (int iter = 0; iter < 300; ++iter) {
      Scalar a = random_scalar(f), b = random_scalar(f), c = random_scalar(f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + Scalar::zero(f) == a);
      CHECK(a * Scalar::one(f) == a);
      CHECK(a + (-a) == Scalar::zero(f));
      Scalar nz = random_nonzero_scalar(f);
      CHECK(nz * nz.inverse() == Scalar::one(f));
      CHECK(a / nz * nz == a);
    }
  }
}

TEST_CASE("parse round-trips str") {
  const Field fields[] = {Field::rationals(), Field::mod(13)};
  for (const Field& f : fields)
    for (int iter = 0; iter < 200; ++iter) {
      Scalar a = random_scalar(f);
      CHECK(Scalar::parse(f, a.str()) == a);
    }
}
