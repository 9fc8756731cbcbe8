#include <catch2/catch_amalgamated.hpp>

#include <hilbcat/ring_checks.hpp>
#include <hilbcat/scalar.hpp>
#include <hilbcat/semiring_hom.hpp>

using namespace hilbcat;

TEST_CASE("ring names round-trip") {
  for (const char* n : {"nat", "bool", "int", "rat", "gauss", "qsqrt2", "qsqrt5"}) {
    auto r = ScalarRing::from_name(n);
    REQUIRE(r);
    CHECK(r->name() == n);
  }
  CHECK_FALSE(ScalarRing::from_name("qsqrt1"));
  CHECK_FALSE(ScalarRing::from_name("qsqrtx"));
  CHECK_FALSE(ScalarRing::from_name("real"));
}

TEST_CASE("domain validation on construction") {
  CHECK_THROWS_AS(Scalar(nat_ring(), -1), error);
  CHECK_THROWS_AS(Scalar(nat_ring(), mpq_class(1, 2)), error);
  CHECK_THROWS_AS(Scalar(bool_ring(), 2), error);
  CHECK_THROWS_AS(Scalar(int_ring(), mpq_class(1, 2)), error);
  CHECK_THROWS_AS(Scalar(rat_ring(), 0, 1), error);
  CHECK_NOTHROW(Scalar(gauss_ring(), 0, 1));
  CHECK_NOTHROW(Scalar(quad_ring(2), mpq_class(1, 2), mpq_class(-3, 7)));
}

TEST_CASE("boolean semiring is max/min") {
  ScalarRing b = bool_ring();
  Scalar t = Scalar::one(b), f = Scalar::zero(b);
  CHECK(t + t == t);
  CHECK(t + f == t);
  CHECK(f + f == f);
  CHECK(t * t == t);
  CHECK(t * f == f);
}

TEST_CASE("gauss and quadratic multiplication") {
  ScalarRing g = gauss_ring();
  Scalar i(g, 0, 1);
  CHECK(i * i == Scalar(g, -1));
  CHECK(involute(i) == Scalar(g, 0, -1));
  CHECK(involute(involute(i)) == i);

  ScalarRing q = quad_ring(2);
  Scalar r2(q, 0, 1);
  CHECK(r2 * r2 == Scalar(q, 2));
  CHECK(involute(r2) == r2);  // real embedding, trivial involution

  ScalarRing q5 = quad_ring(5);
  Scalar r5(q5, 0, 1);
  CHECK(r5 * r5 == Scalar(q5, 5));
}

TEST_CASE("inversion") {
  // (1+i)^-1 = (1-i)/2
  ScalarRing g = gauss_ring();
  Scalar s(g, 1, 1);
  CHECK(invert(s) == Scalar(g, mpq_class(1, 2), mpq_class(-1, 2)));
  CHECK(invert(s) * s == Scalar::one(g));

  ScalarRing q = quad_ring(2);
  Scalar t(q, 1, 1);  // 1 + sqrt(2), inverse -1 + sqrt(2)
  CHECK(invert(t) == Scalar(q, -1, 1));

  CHECK(invert(Scalar(rat_ring(), mpq_class(-3, 4))) ==
        Scalar(rat_ring(), mpq_class(-4, 3)));
  CHECK(invert(Scalar::from_int(int_ring(), -1)) ==
        Scalar::from_int(int_ring(), -1));
  CHECK_THROWS_AS(invert(Scalar::from_int(int_ring(), 2)), error);
  CHECK_THROWS_AS(invert(Scalar::from_int(nat_ring(), 3)), error);
  CHECK_THROWS_AS(invert(Scalar::zero(rat_ring())), error);
}

TEST_CASE("positivity cones") {
  CHECK(is_positive(Scalar::from_int(nat_ring(), 7)));
  CHECK(is_positive(Scalar::zero(bool_ring())));
  CHECK(is_positive(Scalar::from_int(int_ring(), 3)));
  CHECK_FALSE(is_positive(Scalar::from_int(int_ring(), -3)));
  CHECK_FALSE(is_positive(Scalar(gauss_ring(), 1, 1)));
  CHECK(is_positive(Scalar(gauss_ring(), mpq_class(2, 3))));

  // totally positive: both embeddings of a + b sqrt(2) nonnegative
  ScalarRing q = quad_ring(2);
  CHECK(is_positive(Scalar(q, 3, 1)));        // 3 + sqrt 2, 3 - sqrt 2 > 0
  CHECK_FALSE(is_positive(Scalar(q, 1, 1)));  // 1 - sqrt 2 < 0
  CHECK_FALSE(is_positive(Scalar(q, 0, 1)));  // sqrt 2 alone is not a norm sum
  CHECK(is_positive(Scalar(q, 3, -1)));
}

TEST_CASE("order is the additive-positivity order") {
  ScalarRing n = nat_ring();
  CHECK(leq(Scalar::from_int(n, 2), Scalar::from_int(n, 5)));
  CHECK_FALSE(leq(Scalar::from_int(n, 5), Scalar::from_int(n, 2)));
  ScalarRing g = gauss_ring();
  CHECK(leq(Scalar(g, 1, 1), Scalar(g, 2, 1)));
  CHECK_FALSE(leq(Scalar(g, 1, 1), Scalar(g, 2, 0)));  // imaginary parts differ
  CHECK(leq(Scalar(bool_ring(), 0), Scalar(bool_ring(), 1)));
}

TEST_CASE("string round-trips and parse failures") {
  CHECK(to_string(Scalar(rat_ring(), mpq_class(-7, 3))) == "-7/3");
  CHECK(parse_scalar(rat_ring(), "-7/3") == Scalar(rat_ring(), mpq_class(-7, 3)));
  CHECK(to_string(Scalar(gauss_ring(), mpq_class(1, 2), mpq_class(-2, 5))) ==
        "1/2-2/5*i");
  CHECK(parse_scalar(gauss_ring(), "1/2-2/5*i") ==
        Scalar(gauss_ring(), mpq_class(1, 2), mpq_class(-2, 5)));
  CHECK(to_string(Scalar(quad_ring(2), 1, 1)) == "1+1*sqrt(2)");
  CHECK(parse_scalar(quad_ring(2), "1+1*sqrt(2)") == Scalar(quad_ring(2), 1, 1));
  CHECK(parse_scalar(gauss_ring(), "3/4") == Scalar(gauss_ring(), mpq_class(3, 4)));
  CHECK_THROWS_AS(parse_scalar(gauss_ring(), "1+1*sqrt(2)"), error);
  CHECK_THROWS_AS(parse_scalar(quad_ring(3), "1+1*sqrt(2)"), error);
  CHECK_THROWS_AS(parse_scalar(rat_ring(), "abc"), error);
  CHECK_THROWS_AS(parse_scalar(nat_ring(), "-2"), error);
}

TEST_CASE("zerosumfree matches the truth table") {
  CHECK_FALSE(is_zerosumfree(nat_ring(), 1000));
  CHECK_FALSE(is_zerosumfree(bool_ring(), 1000));
  CHECK(is_zerosumfree(int_ring(), 1000));
  CHECK(is_zerosumfree(rat_ring(), 1000));
  CHECK(is_zerosumfree(gauss_ring(), 1000));
  CHECK(is_zerosumfree(quad_ring(2), 1000));
  auto w = is_zerosumfree(int_ring(), 1000);
  CHECK((w->s + w->t).is_zero());
}

TEST_CASE("all shipped rings are multiplicatively cancellative") {
  for (auto r : {nat_ring(), bool_ring(), int_ring(), rat_ring(), gauss_ring(),
                 quad_ring(2)})
    CHECK_FALSE(is_mult_cancellative(r, 2000));
}

TEST_CASE("a ring product fails cancellativity") {
  // Q x Q with componentwise operations: (1,0)*(0,1) = (1,0)*(0,2) = (0,0)
  using P = std::pair<mpq_class, mpq_class>;
  int tick = 0;
  auto sample = [&]() -> P {
    static const P pool[] = {{1, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 3}};
    return pool[tick++ % 5];
  };
  auto witness = cancellative_search<P>(
      200, sample,
      [](const P& a, const P& b) -> P {
        return {a.first * b.first, a.second * b.second};
      },
      [](const P& a) { return a.first == 0 && a.second == 0; },
      [](const P& a, const P& b) { return a == b; });
  REQUIRE(witness);
  CHECK(witness->s.first * witness->r.first ==
        witness->s.first * witness->t.first);
  CHECK(witness->s.second * witness->r.second ==
        witness->s.second * witness->t.second);
}

TEST_CASE("characteristic zero") {
  for (auto r : {nat_ring(), bool_ring(), int_ring(), rat_ring(), gauss_ring(),
                 quad_ring(2)})
    CHECK_FALSE(char_zero_check(r, 1000));
}

TEST_CASE("scalar homomorphisms embed entrywise") {
  Scalar half(rat_ring(), mpq_class(1, 2));
  CHECK(hom_apply(SemiringHom::q_to_qi(), half) ==
        Scalar(gauss_ring(), mpq_class(1, 2)));
  CHECK(hom_apply(SemiringHom::q_to_qsqrt2(), half) ==
        Scalar(quad_ring(2), mpq_class(1, 2)));
  CHECK(hom_apply(SemiringHom::nat_to_int(), Scalar::from_int(nat_ring(), 4)) ==
        Scalar::from_int(int_ring(), 4));
  CHECK_THROWS_AS(
      hom_apply(SemiringHom::nat_to_int(), Scalar::from_int(int_ring(), 4)),
      error);
  CHECK_FALSE(SemiringHom::from_name("z-to-q"));
}
