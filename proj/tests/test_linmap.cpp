#include "doctest.h"

#include "helpers.hpp"
#include "ybx/linmap.hpp"

using namespace ybx;
using namespace ybx::testing;

TEST_CASE("compose against the schoolbook oracle") {
  const Field fields[] = {Field::rationals(), Field::mod(5)};
  for (const Field& f : fields)
    for (int iter = 0; iter < 50; ++iter) {
      LinMap a = random_linmap(f, 2, 2), b = random_linmap(f, 2, 2);
      auto expected = dense_product(a, b);
      LinMap got = compose(a, b);
      for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j) CHECK(got.at(i, j) == expected[i][j]);
    }
}

TEST_CASE("compose identity and flip") {
  Field q = Field::rationals();
  LinMap f = random_linmap(q, 3, 3);
  CHECK(compose(LinMap::identity(q, 3), f) == f);
  CHECK(compose(f, LinMap::identity(q, 3)) == f);
  CHECK(compose(LinMap::flip(q, 2, 2), LinMap::flip(q, 2, 2)) ==
        LinMap::identity(q, 4));
}

TEST_CASE("compose rejects dimension mismatch") {
  Field q = Field::rationals();
  CHECK_THROWS_AS(compose(LinMap::identity(q, 3), LinMap::identity(q, 4)),
                  DimensionMismatch);
}

TEST_CASE("tensor on basis pairs is the defining property") {
  const Field fields[] = {Field::rationals(), Field::mod(3)};
  for (const Field& F : fields) {
    LinMap f = random_linmap(F, 2, 3), g = random_linmap(F, 3, 2);
    LinMap t = tensor(f, g);
    CHECK(t.dom() == 6);
    CHECK(t.cod() == 6);
    for (long i = 0; i < f.dom(); ++i)
      for (long j = 0; j < g.dom(); ++j)
        for (long a = 0; a < f.cod(); ++a)
          for (long b = 0; b < g.cod(); ++b)
            CHECK(t.at(a * g.cod() + b, i * g.dom() + j) == f.at(a, i) * g.at(b, j));
  }
}

TEST_CASE("tensor of identities") {
  Field q = Field::rationals();
  CHECK(tensor(LinMap::identity(q, 2), LinMap::identity(q, 3)) ==
        LinMap::identity(q, 6));
}

TEST_CASE("interchange law") {
  const Field fields[] = {Field::rationals(), Field::mod(7)};
  for (const Field& F : fields)
    for (int iter = 0; iter < 40; ++iter) {
      LinMap a = random_linmap(F, 2, 2), b = random_linmap(F, 2, 2);
      LinMap c = random_linmap(F, 2, 2), d = random_linmap(F, 2, 2);
      CHECK(tensor(compose(a, b), compose(c, d)) ==
            compose(tensor(a, c), tensor(b, d)));
    }
}

TEST_CASE("flip index arithmetic and symmetry") {
  Field q = Field::rationals();
  CHECK(LinMap::flip(q, 1, 4) == LinMap::identity(q, 4));
  CHECK(LinMap::flip(q, 4, 1) == LinMap::identity(q, 4));
  // e_0 (x) e_1 at index 1 goes to e_1 (x) e_0 at index 2
  CHECK(LinMap::flip(q, 2, 2).at(2, 1) == Scalar::one(q));
  for (long m = 1; m <= 4; ++m)
    for (long n = 1; n <= 4; ++n)
      CHECK(compose(LinMap::flip(q, n, m), LinMap::flip(q, m, n)) ==
            LinMap::identity(q, m * n));
}

TEST_CASE("naturality of flip") {
  const Field fields[] = {Field::rationals(), Field::mod(5)};
  for (const Field& F : fields)
    for (int iter = 0; iter < 40; ++iter) {
      LinMap f = random_linmap(F, 2, 3), g = random_linmap(F, 3, 2);
      CHECK(compose(LinMap::flip(F, f.cod(), g.cod()), tensor(f, g)) ==
            compose(tensor(g, f), LinMap::flip(F, f.dom(), g.dom())));
    }
}

TEST_CASE("tensor flattening is strictly associative") {
  const Field fields[] = {Field::rationals(), Field::mod(3)};
  for (const Field& F : fields)
    for (int iter = 0; iter < 20; ++iter) {
      LinMap f = random_linmap(F, 2, 2), g = random_linmap(F, 3, 2),
             h = random_linmap(F, 2, 3);
      CHECK(tensor(tensor(f, g), h) == tensor(f, tensor(g, h)));
    }
}

TEST_CASE("invert basics") {
  Field q = Field::rationals();
  CHECK(invert(LinMap::identity(q, 5)) == LinMap::identity(q, 5));
  CHECK(invert(LinMap::flip(q, 2, 3)) == LinMap::flip(q, 3, 2));
}

TEST_CASE("invert round-trips on random invertible matrices") {
  const Field fields[] = {Field::rationals(), Field::mod(5)};
  for (const Field& F : fields)
    for (int iter = 0; iter < 30; ++iter) {
      LinMap m = random_invertible(F, 3);
      CHECK(compose(invert(m), m) == LinMap::identity(F, 3));
      CHECK(compose(m, invert(m)) == LinMap::identity(F, 3));
    }
}

TEST_CASE("invert rejects singular maps") {
  Field q = Field::rationals();
  LinMap z(q, 3, 3);
  CHECK_THROWS_AS(invert(z), SingularMap);
  LinMap rank1(q, 2, 2);
  rank1.set(0, 0, Scalar::rational(1));
  rank1.set(1, 0, Scalar::rational(2));
  rank1.set(0, 1, Scalar::rational(2));
  rank1.set(1, 1, Scalar::rational(4));
  CHECK_THROWS_AS(invert(rank1), SingularMap);
}

TEST_CASE("kernel basis spans the kernel exactly") {
  const Field fields[] = {Field::rationals(), Field::mod(3)};
  for (const Field& F : fields)
    for (int iter = 0; iter < 30; ++iter) {
      LinMap m = random_linmap(F, 4, 3);
      auto basis = kernel_basis(m);
      for (const auto& v : basis) {
        auto img = m.apply(v);
        for (const auto& x : img) CHECK(x.is_zero());
      }
      // rank-nullity against an independent rank computation
      auto rows = m.dense_rows();
      long rank = 0;
      {
        auto a = rows;
        long nrows = 3, ncols = 4, row = 0;
        for (long col = 0; col < ncols && row < nrows; ++col) {
          long piv = -1;
          for (long r = row; r < nrows; ++r)
            if (!a[r][col].is_zero()) {
              piv = r;
              break;
            }
          if (piv < 0) continue;
          std::swap(a[piv], a[row]);
          for (long r = 0; r < nrows; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            Scalar k = a[r][col] / a[row][col];
            for (long cc = 0; cc < ncols; ++cc) a[r][cc] -= k * a[row][cc];
          }
          ++rank;
          ++row;
        }
      }
      CHECK(static_cast<long>(basis.size()) == 4 - rank);
    }
}

TEST_CASE("first_difference reports the first differing column") {
  Field q = Field::rationals();
  LinMap a = LinMap::identity(q, 3);
  LinMap b = a;
  CHECK(!first_difference(a, b).has_value());
  b.set(2, 1, Scalar::rational(5));
  auto w = first_difference(a, b);
  REQUIRE(w.has_value());
  CHECK(*w == 1);
}
