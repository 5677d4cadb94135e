#include "doctest.h"

#include <array>

#include "helpers.hpp"
#include "ybx/gallery.hpp"
#include "ybx/hopf.hpp"

using namespace ybx;
namespace gal = ybx::gallery;

TEST_CASE("group algebras are Hopf algebras") {
  Field q = Field::rationals();
  CHECK(check_hopf(group_algebra(q, gal::cyclic_table(2))).all_pass());
  HopfAlgebra s3 = group_algebra(q, gal::s3_table(), gal::s3_labels());
  CHECK(check_hopf(s3).all_pass());
  // the antipode is the inversion permutation
  auto table = gal::s3_table();
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h)
      if (table[g][h] == 0 && table[h][g] == 0)
        CHECK(s3.antipode().at(h, g) == Scalar::one(q));
}

TEST_CASE("identity antipode on k[Z/4] fails the antipode axiom") {
  Field q = Field::rationals();
  HopfAlgebra z4 = group_algebra(q, gal::cyclic_table(4));
  HopfAlgebra bad(z4.coalgebra(), z4.m(), z4.unit(), LinMap::identity(q, 4));
  VerificationReport rep = check_hopf(bad);
  CHECK(!rep.all_pass());
  const CheckResult* left = rep.find("antipode-left");
  REQUIRE(left != nullptr);
  CHECK(!left->pass);
  REQUIRE(left->witness.has_value());
  CHECK(*left->witness == 1);  // fails on the generator, not the unit
}

TEST_CASE("the trivial brace passes and has the counit action") {
  Field q = Field::rationals();
  for (int m : {2, 3, 5}) {
    Brace b = trivial_brace(group_algebra(q, gal::cyclic_table(m)));
    CHECK(check_brace(b).all_pass());
    // lambda(a (x) b) = eps(a) b
    CHECK(b.lambda() ==
          tensor(b.coalgebra().counit(), LinMap::identity(q, b.dim())));
  }
}

TEST_CASE("set-level brace axiom for a o b = a + b + 2ab on Z/4") {
  // a o (b + c) = a o b - a + a o c, brute force over all 64 triples.
  auto circ = [](long a, long b) { return (a + b + 2 * a * b) % 4; };
  for (long a = 0; a < 4; ++a)
    for (long b = 0; b < 4; ++b)
      for (long c = 0; c < 4; ++c)
        CHECK(circ(a, (b + c) % 4) ==
              (circ(a, b) + 4 - a + circ(a, c)) % 4);
}

TEST_CASE("the Z/4 Klein brace passes the linear brace axioms") {
  Field q = Field::rationals();
  Brace b = gal::z4_klein_brace(q);
  VerificationReport rep = check_brace(b);
  CHECK(rep.all_pass());
  // the circle group is Klein: every element is its own circle inverse
  CHECK(b.antipode_circ() == LinMap::identity(q, 4));
}

TEST_CASE("a non-group circle operation fails with a witness") {
  Field q = Field::rationals();
  HopfAlgebra z4 = group_algebra(q, gal::cyclic_table(4));
  LinMap mo(q, 16, 4);
  for (long a = 0; a < 4; ++a)
    for (long b = 0; b < 4; ++b)
      mo.set((a + 3 * b) % 4, a * 4 + b, Scalar::one(q));
  Brace bad(z4.coalgebra(), z4.m(), z4.unit(), z4.antipode(), mo, z4.unit(),
            LinMap::identity(q, 4));
  VerificationReport rep = check_brace(bad);
  CHECK(!rep.all_pass());
  const CheckResult* assoc = rep.find("second.associativity");
  REQUIRE(assoc != nullptr);
  CHECK(!assoc->pass);
  CHECK(assoc->witness.has_value());
}

TEST_CASE("brace to operator: trivial brace gives the flip") {
  Field q = Field::rationals();
  Brace b = trivial_brace(group_algebra(q, gal::cyclic_table(2)));
  BraidingOperator o = brace_to_operator(b);
  CHECK(o.r == LinMap::flip(q, 2, 2));
  CHECK(check_operator(o).all_pass());
}

TEST_CASE("brace to operator on the Z/4 Klein brace") {
  Field q = Field::rationals();
  Brace b = gal::z4_klein_brace(q);
  BraidingOperator o = brace_to_operator(b);
  CHECK(o.r != LinMap::flip(q, 4, 4));

  // Independent set-level check: lambda_a(b) = -a + (a o b) and
  // rho_b(a) = T(lambda_a(b)) o (a o b) on the group-like basis.
  auto circ = [](long a, long b) { return (a + b + 2 * a * b) % 4; };
  for (long a = 0; a < 4; ++a)
    for (long b = 0; b < 4; ++b) {
      long lam = (circ(a, b) + 4 - a) % 4;
      long rho = circ(lam, circ(a, b));  // every element is its own inverse
      CHECK(o.r.at(lam * 4 + rho, a * 4 + b) == Scalar::one(q));
    }

  // m_circ o r = m_circ
  CHECK(compose(b.m_circ(), o.r) == b.m_circ());

  // set-level braid brute force over all 64 triples
  auto rr = [&](long a, long bb) {
    long lam = (circ(a, bb) + 4 - a) % 4;
    return std::make_pair(lam, circ(lam, circ(a, bb)));
  };
  auto r12 = [&](std::array<long, 3> t) {
    auto [x, y] = rr(t[0], t[1]);
    return std::array<long, 3>{x, y, t[2]};
  };
  auto r23 = [&](std::array<long, 3> t) {
    auto [x, y] = rr(t[1], t[2]);
    return std::array<long, 3>{t[0], x, y};
  };
  for (long x = 0; x < 4; ++x)
    for (long y = 0; y < 4; ++y)
      for (long z = 0; z < 4; ++z) {
        std::array<long, 3> t{x, y, z};
        CHECK(r12(r23(r12(t))) == r23(r12(r23(t))));
      }
  CHECK(check_braid(BraidedPair(b.coalgebra(), o.r)).pass);
}

TEST_CASE("operator to brace round trips") {
  Field q = Field::rationals();
  Brace b = gal::z4_klein_brace(q);
  BraidingOperator o = brace_to_operator(b);
  Brace back = operator_to_brace(o);
  CHECK(back == b);  // recovers the addition exactly

  BraidingOperator o2 = brace_to_operator(back);
  CHECK(o2.r == o.r);
}

TEST_CASE("an operator is determined by its first coordinate") {
  Field q = Field::rationals();
  const BraidingOperator ops[] = {
      brace_to_operator(gal::z4_klein_brace(q)),
      gal::conjugation_operator(q, gal::s3_table(), gal::s3_labels())};
  for (const BraidingOperator& o : ops) {
    // rebuild rho from lambda alone and compare r
    const Coalgebra& a = o.hopf.coalgebra();
    Coalgebra a2 = tensor_coalgebra(a, a);
    LinMap id = LinMap::identity(q, o.hopf.dim());
    LinMap rho = compose_all({o.hopf.m(), tensor(o.hopf.antipode(), id),
                              tensor(o.lambda, o.hopf.m()), a2.delta()});
    CHECK(rho == o.rho);
    CHECK(compose(tensor(o.lambda, rho), a2.delta()) == o.r);
  }
}

TEST_CASE("brace to cocycle and back") {
  Field q = Field::rationals();
  const Brace braces[] = {trivial_brace(group_algebra(q, gal::cyclic_table(2))),
                          gal::z4_klein_brace(q)};
  for (const Brace& b : braces) {
    Cocycle k = brace_to_cocycle(b);
    CHECK(check_cocycle(k).all_pass());
    CHECK(k.pi.is_identity());
    CHECK(k.action == b.lambda());
    Brace back = cocycle_to_brace(k);
    CHECK(back == b);
  }
}

TEST_CASE("a permuted cocycle round-trips to a conjugated brace") {
  Field q = Field::rationals();
  Brace b = gal::z4_klein_brace(q);
  Cocycle k = brace_to_cocycle(b);
  // conjugate the domain Hopf algebra by a group automorphism of (Z/4, o);
  // x -> 3x is an automorphism of both structures fixing basis order 0,3,2,1.
  LinMap pi = LinMap::permutation(q, {0, 3, 2, 1});
  LinMap pi_inv = invert(pi);
  HopfAlgebra h = k.domain;
  HopfAlgebra twisted(h.coalgebra(), compose_all({pi_inv, h.m(), tensor(pi, pi)}),
                      compose(pi_inv, h.unit()),
                      compose_all({pi_inv, h.antipode(), pi}));
  Cocycle twisted_cocycle{twisted, k.codomain,
                          compose(k.action, tensor(pi, LinMap::identity(q, 4))),
                          compose(k.pi, pi)};
  CHECK(check_cocycle(twisted_cocycle).all_pass());
  Brace back = cocycle_to_brace(twisted_cocycle);
  // the recovered circle structure is conjugation-invariant, hence equal
  CHECK(back == b);
}

TEST_CASE("operators embed as braided pairs with antipode identities") {
  Field q = Field::rationals();
  {
    BraidingOperator o = brace_to_operator(trivial_brace(group_algebra(q, gal::cyclic_table(2))));
    BraidedPair p = operator_as_braided_pair(o);
    CHECK(check_involutive(p));
  }
  {
    BraidingOperator o = brace_to_operator(gal::z4_klein_brace(q));
    BraidedPair p = operator_as_braided_pair(o);
    CHECK(check_braid(p).pass);
    CHECK(p.is_nondegenerate());
    // two-sided brace on an abelian group: the solution is involutive
    CHECK(check_involutive(p));
  }
  {
    BraidingOperator o = gal::conjugation_operator(q, gal::s3_table(), gal::s3_labels());
    CHECK(check_operator(o).all_pass());
    BraidedPair p = operator_as_braided_pair(o);
    CHECK(check_braid(p).pass);
  }
}

TEST_CASE("hopf data loaded from JSON is re-verified by every operation") {
  Field q = Field::rationals();
  HopfAlgebra z4 = group_algebra(q, gal::cyclic_table(4));
  Brace bad(z4.coalgebra(), z4.m(), z4.unit(), LinMap::identity(q, 4),  // wrong S
            z4.m(), z4.unit(), z4.antipode());
  CHECK_THROWS_AS(brace_to_operator(bad), BraceInvalid);
  CHECK_THROWS_AS(brace_to_cocycle(bad), BraceInvalid);
}
