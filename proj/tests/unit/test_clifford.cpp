#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gpslice/clifford.hpp"
#include "gpslice/errors.hpp"
#include "support/oracles.hpp"

using namespace gpslice;

namespace {

constexpr BladeMask e1 = 0b1, e2 = 0b10, e3 = 0b100, e12 = 0b11, e23 = 0b110, e123 = 0b111;

Multivector mv(std::initializer_list<Multivector::Term> terms) {
  return Multivector::from_terms(std::vector<Multivector::Term>(terms));
}

}  // namespace

TEST_CASE("blade products on small generators") {
  CHECK(blade_product(e1, e1).sign == -1);
  CHECK(blade_product(e1, e1).mask == 0);
  CHECK(blade_product(e1, e2).sign == 1);
  CHECK(blade_product(e1, e2).mask == e12);
  CHECK(blade_product(e2, e1).sign == -1);
  CHECK(blade_product(e12, e12).sign == -1);
  CHECK(blade_product(e123, e123).sign == 1);
  const auto p = blade_product(e12, e23);
  CHECK(p.mask == (e1 | e3));
  CHECK(p.sign == oracle::reorder_product(e12, e23).first);
}

TEST_CASE("blade products agree with the reordering oracle on every pair in R_6") {
  for (BladeMask a = 0; a < 64; ++a) {
    for (BladeMask b = 0; b < 64; ++b) {
      const auto got = blade_product(a, b);
      const auto want = oracle::reorder_product(a, b);
      REQUIRE(got.sign == want.first);
      REQUIRE(got.mask == want.second);
    }
  }
}

TEST_CASE("multivector products") {
  const Multivector one(1);
  CHECK(mv_mul(one + Multivector::blade(e1), one - Multivector::blade(e1)) == Multivector(2));
  CHECK(mv_mul(mv_mul(Multivector::blade(e1), Multivector::blade(e2)), Multivector::blade(e3)) ==
        Multivector::blade(e123));
  CHECK(mv_mul(Multivector::blade(e12), Multivector::blade(e12)) == Multivector(-1));
  CHECK((Multivector::blade(e1) * Multivector::blade(e2)) == Multivector::blade(e12));
}

TEST_CASE("conjugation on blades") {
  CHECK(conjugate(Multivector(1)) == Multivector(1));
  CHECK(conjugate(Multivector::blade(e1)) == Multivector::blade(e1, -1));
  CHECK(conjugate(Multivector::blade(e12)) == Multivector::blade(e12, -1));
  CHECK(conjugate(Multivector::blade(e123)) == Multivector::blade(e123));
  CHECK(conjugation_sign(0) == 1);
  CHECK(conjugation_sign(e1) == -1);
  CHECK(conjugation_sign(e12) == -1);
  CHECK(conjugation_sign(e123) == 1);
  CHECK(conjugation_sign(0b1111) == 1);
}

TEST_CASE("norm squared and grade parts") {
  CHECK(norm_squared(mv({{0, 3}, {e12, 4}})) == 25);
  CHECK(norm_squared(Multivector()) == 0);
  const Multivector x = mv({{0, 1}, {e1, 2}, {e12, 3}, {e23, -1}});
  CHECK(grade_part(x, 2) == mv({{e12, 3}, {e23, -1}}));
  CHECK(grade_part(x, 0) + grade_part(x, 1) + grade_part(x, 2) == x);
  CHECK(grade(e123) == 3);
}

TEST_CASE("zero coefficients are dropped and duplicates merged") {
  const Multivector a = mv({{e1, 1}, {e1, -1}, {e2, 2}, {e2, 3}});
  CHECK(a.size() == 1);
  CHECK(a.coeff(e2) == 5);
  CHECK(a.coeff(e1) == 0);
  CHECK((a - a).is_zero());
}

TEST_CASE("signature validation") {
  CHECK_THROWS_AS(Signature(-1, 2), InputError);
  CHECK_THROWS_AS(Signature(0, 0), InputError);
  CHECK_THROWS_AS(Signature(10, 10), InputError);
  const Signature sig(1, 3);
  CHECK(sig.n() == 4);
  CHECK(sig.blade_count() == 16);
  CHECK(Multivector::blade(0b1000).fits(sig));
  CHECK_FALSE(Multivector::blade(0b10000).fits(sig));
}

TEST_CASE("one_vector and labels") {
  const std::vector<Rational> c{1, -2};
  CHECK(one_vector(c, 2) == mv({{e2, 1}, {e3, -2}}));
  CHECK(blade_label(0) == "1");
  CHECK(blade_label(e123) == "e123");
}

TEST_CASE("property: the product is associative and matches the oracle") {
  oracle::Random rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.uniform(1, 6);
    const auto a = rng.multivector(n), b = rng.multivector(n), c = rng.multivector(n);
    REQUIRE(mv_mul(a, b) == oracle::product(a, b));
    REQUIRE(mv_mul(mv_mul(a, b), c) == mv_mul(a, mv_mul(b, c)));
    REQUIRE(mv_mul(a, b + c) == mv_mul(a, b) + mv_mul(a, c));
  }
}

TEST_CASE("property: conjugation is an involutive anti-automorphism") {
  oracle::Random rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.uniform(1, 6);
    const auto a = rng.multivector(n), b = rng.multivector(n);
    REQUIRE(conjugate(mv_mul(a, b)) == mv_mul(conjugate(b), conjugate(a)));
    REQUIRE(conjugate(conjugate(a)) == a);
  }
}

TEST_CASE("property: a 1-vector squares to minus its Euclidean norm") {
  oracle::Random rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform(1, 8);
    std::vector<Rational> c;
    for (int i = 0; i < n; ++i) c.push_back(rng.rational());
    const Multivector v = one_vector(c, 1);
    REQUIRE(mv_mul(v, v) == Multivector(-norm_squared(v)));
  }
}

TEST_CASE("property: x conj(x) is the scalar |x|^2 for paravectors") {
  oracle::Random rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform(1, 6);
    std::vector<Rational> c;
    for (int i = 0; i < n; ++i) c.push_back(rng.rational());
    const Multivector x = Multivector(rng.rational()) + one_vector(c, 1);
    REQUIRE(mv_mul(x, conjugate(x)) == Multivector(norm_squared(x)));
  }
}
