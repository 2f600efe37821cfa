#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gpslice/almansi.hpp"
#include "support/build.hpp"
#include "support/oracles.hpp"

using namespace gpslice;
using build::num;
using build::pow;
using build::var;

namespace {

StemPair power_stem(const Signature& sig, int k) {
  const auto v = stem_vars(sig);
  Polynomial re = num(v, 1), im(v);
  const auto x0 = var(v, "x0"), r = var(v, "r");
  for (int j = 0; j < k; ++j) {
    Polynomial nre = x0 * re - r * im;
    Polynomial nim = x0 * im + r * re;
    re = std::move(nre);
    im = std::move(nim);
  }
  return StemPair(sig, re, im);
}

// sum_i x_i e_i over x1..xn.
Polynomial underline_x(int n) {
  const auto v = underline_vars(n);
  Polynomial out(v);
  for (int i = 1; i <= n; ++i) out += var(v, "x" + std::to_string(i)).right_blade(1u << (i - 1));
  return out;
}

// Left action of sum_i e_i d_i over x1..xn.
Polynomial underline_dirac(const Polynomial& u) {
  Polynomial out(u.vars());
  for (std::size_t i = 0; i < u.var_count(); ++i) out += u.derivative(i).left_blade(1u << i);
  return out;
}

}  // namespace

TEST_CASE("A/B decomposition of x and x^2") {
  const Signature sig(0, 3);
  const auto a = ambient_vars(sig);
  const auto x0 = var(a, "x0");
  const auto fx = induce(power_stem(sig, 1));
  const auto ab1 = almansi_ab(fx);
  CHECK(ab1.a == num(a, 2) * x0);
  CHECK(ab1.b == num(a, 1));
  CHECK(ab1.m == 1);
  CHECK(laplacian(num(a, 3) * x0 * x0 - radial_square(sig)).is_zero());
  CHECK(certify_ab(fx, ab1).all());

  const auto fx2 = induce(power_stem(sig, 2));
  const auto ab2 = almansi_ab(fx2);
  CHECK(ab2.a == num(a, 3) * x0 * x0 - radial_square(sig));
  CHECK(ab2.b == num(a, 2) * x0);
  CHECK(certify_ab(fx2, ab2).all());
  CHECK(ab2.a - conj_paravector(sig) * ab2.b == fx2.ambient());
}

TEST_CASE("A/B decomposition argument checks") {
  CHECK_THROWS_AS(almansi_ab(induce(power_stem(Signature(0, 1), 2))), InputError);
  CHECK_THROWS_AS(almansi_ab(induce(power_stem(Signature(0, 2), 2))), InputError);
  const Signature sig(0, 3);
  const auto v = stem_vars(sig);
  CHECK_THROWS_AS(almansi_ab(induce(StemPair(sig, var(v, "r") * var(v, "r"), Polynomial(v)))),
                  PreconditionError);
}

TEST_CASE("certificate rejects a tampered decomposition") {
  const Signature sig(0, 3);
  const auto f = induce(power_stem(sig, 2));
  auto ab = almansi_ab(f);
  ab.a += radial_square(sig);
  const auto cert = certify_ab(f, ab);
  CHECK_FALSE(cert.reconstruction);
  CHECK_FALSE(cert.all());
}

TEST_CASE("converse rows") {
  const Signature sig(0, 3);
  const auto f = induce(power_stem(sig, 3));
  const auto ab = almansi_ab(f);
  const auto [c1, c2] = cr2_residual(ab.a, ab.b, sig);
  CHECK(c1.is_zero());
  CHECK(c2.is_zero());
  const auto a = ambient_vars(sig);
  const auto [d1, d2] = cr2_residual(ab.a + radial_square(sig), ab.b, sig);
  const bool converse_holds = d1.is_zero() && d2.is_zero();
  CHECK_FALSE(converse_holds);
  CHECK_THROWS_AS(cr2_residual(var(a, "x1"), ab.b, sig), PreconditionError);
}

TEST_CASE("polyharmonic commutator on a worked example") {
  const Signature sig(0, 3);
  const auto a = ambient_vars(sig);
  const auto x0 = var(a, "x0");
  // Delta(x0^3) = 6 x0, 2 conj(D_{x_p}) x0^2 = 4 x0, x0 Delta(x0^2) = 2 x0.
  CHECK(laplacian_ambient(pow(x0, 3), sig) == num(a, 6) * x0);
  CHECK(polyharmonic_commutator_residual(x0 * x0, 1, sig).is_zero());
  CHECK_THROWS_AS(polyharmonic_commutator_residual(x0, 0, sig), InputError);
}

TEST_CASE("property: polyharmonic commutator for random polynomials") {
  oracle::Random rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const Signature sig(rng.uniform(0, 2), rng.uniform(1, 3));
    const auto h = rng.polynomial(ambient_vars(sig), sig.n(), 5);
    REQUIRE(polyharmonic_commutator_check(h, rng.uniform(1, 3), sig));
  }
}

TEST_CASE("classical decomposition on examples") {
  const std::vector<std::string> v{"x0", "x1", "x2", "x3"};
  const auto norm2 = norm_square(v);
  const auto r1 = classical_almansi(norm2, 2);
  REQUIRE(r1.components.size() == 2);
  CHECK(r1.components[0].is_zero());
  CHECK(r1.components[1] == num(v, 1));
  CHECK(r1.unique());

  const auto x0 = var(v, "x0");
  const auto r2 = classical_almansi(x0 * x0, 2);
  CHECK(r2.components[0] == x0 * x0 - norm2.scaled(Rational(1, 4)));
  CHECK(r2.components[1] == num(v, Rational(1, 4)));

  const auto h = x0 * var(v, "x1");
  const auto r3 = classical_almansi(h, 1);
  REQUIRE(r3.components.size() == 1);
  CHECK(r3.components[0] == h);

  CHECK_THROWS_AS(classical_almansi(norm2 * norm2, 2), PreconditionError);
  CHECK_THROWS_AS(classical_almansi(h, 0), InputError);
}

TEST_CASE("property: classical decomposition matches Fischer peeling") {
  oracle::Random rng(62);
  for (int trial = 0; trial < 40; ++trial) {
    const int nv = rng.uniform(2, 4);
    std::vector<std::string> v;
    for (int i = 0; i < nv; ++i) v.push_back("x" + std::to_string(i));
    const auto u = rng.polynomial(v, 2, 5, 6);
    const int N = 3;
    const auto got = classical_almansi(u, N);
    const auto want = oracle::fischer_peel(u, N);
    REQUIRE(got.unique());
    REQUIRE(got.components.size() == want.size());
    for (std::size_t k = 0; k < want.size(); ++k) REQUIRE(got.components[k] == want[k]);
  }
}

TEST_CASE("polymonogenic decomposition on examples") {
  const auto v2 = underline_vars(2);
  const auto u = var(v2, "x1").right_blade(0b1) - var(v2, "x2").right_blade(0b10);
  REQUIRE(underline_dirac(u).is_zero());
  const auto r1 = polymonogenic_almansi(u, 1);
  REQUIRE(r1.components.size() == 1);
  CHECK(r1.components[0] == u);

  const auto xu = underline_x(3);
  const auto r2 = polymonogenic_almansi(xu, 2);
  REQUIRE(r2.components.size() == 2);
  CHECK(r2.components[0].is_zero());
  CHECK(r2.components[1] == num(underline_vars(3), 1));

  CHECK_THROWS_AS(polymonogenic_almansi(xu * xu, 2), PreconditionError);
  CHECK_THROWS_AS(polymonogenic_almansi(Polynomial(std::vector<std::string>{"y"}), 1), InputError);
}

TEST_CASE("property: polymonogenic pieces are monogenic and reconstruct the input") {
  oracle::Random rng(63);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.uniform(2, 3);
    const auto v = underline_vars(n);
    const auto u = rng.polynomial(v, n, 3, 5);
    const int N = 4;
    const auto res = polymonogenic_almansi(u, N);
    REQUIRE(res.unique());
    Polynomial sum(v), weight = num(v, 1);
    for (const auto& uk : res.components) {
      REQUIRE(underline_dirac(uk).is_zero());
      sum += weight * uk;
      weight = weight * underline_x(n);
    }
    REQUIRE(sum == u);
  }
}

TEST_CASE("star-like decomposition on examples") {
  const Signature sig(0, 3);
  const auto f = induce(power_stem(sig, 2));
  const auto d = starlike_almansi(f);
  CHECK(certify_starlike(f, d).all());
  REQUIRE_FALSE(d.g.empty());
  CHECK(d.g[0] == f.ambient());
  for (std::size_t k = 1; k < d.g.size(); ++k) CHECK(d.g[k].is_zero());

  const auto c = induce(power_stem(sig, 0));
  const auto dc = starlike_almansi(c);
  CHECK(dc.g[0] == c.ambient());
}

TEST_CASE("property: star-like decomposition of random regular functions") {
  oracle::Random rng(64);
  for (const Signature sig : {Signature(0, 3), Signature(1, 3), Signature(0, 5)}) {
    const auto basis = gsr_basis(sig, 3);
    for (int trial = 0; trial < 6; ++trial) {
      const auto& pick = basis[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(basis.size()) - 1))];
      const auto d = starlike_almansi(pick);
      REQUIRE(certify_starlike(pick, d).all());
      const auto norm2 = norm_square(ambient_vars(sig));
      Polynomial sum(ambient_vars(sig)), weight = num(ambient_vars(sig), 1);
      for (const auto& g : d.g) {
        sum += weight * g;
        weight = weight * norm2;
      }
      REQUIRE(sum == pick.ambient());
    }
  }
}

TEST_CASE("property: classical decomposition commutes with signed permutations of x_q") {
  oracle::Random rng(65);
  const Signature sig(1, 3);
  const auto v = ambient_vars(sig);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::size_t> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    std::vector<int> signs;
    for (int i = 0; i < 3; ++i) signs.push_back(rng.uniform(0, 1) == 0 ? -1 : 1);
    const auto u = rng.polynomial(v, sig.n(), 4, 5);
    const auto direct = classical_almansi(permute_x_q(u, sig, perm, signs), 3);
    const auto base = classical_almansi(u, 3);
    for (std::size_t k = 0; k < base.components.size(); ++k) {
      REQUIRE(direct.components[k] == permute_x_q(base.components[k], sig, perm, signs));
    }
  }
  const std::vector<std::size_t> bad{0, 1};
  const std::vector<int> signs{1, 1};
  CHECK_THROWS_AS(permute_x_q(Polynomial(v), sig, bad, signs), InputError);
}

TEST_CASE("property: A and B stay symmetric after a signed permutation of x_q") {
  const Signature sig(0, 3);
  const std::vector<std::size_t> perm{2, 0, 1};
  const std::vector<int> signs{-1, 1, -1};
  for (const auto& f : gsr_basis(sig, 3)) {
    const auto ab = almansi_ab(f);
    REQUIRE(permute_x_q(ab.a, sig, perm, signs) == ab.a);
    REQUIRE(permute_x_q(ab.b, sig, perm, signs) == ab.b);
  }
}
