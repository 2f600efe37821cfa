#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gpslice/linear_system.hpp"
#include "gpslice/mvpoly.hpp"
#include "support/build.hpp"
#include "support/oracles.hpp"

using namespace gpslice;
using build::num;
using build::pow;
using build::var;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("+1/3") == Rational(1, 3));
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(parse_rational("-7")) == "-7");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
}

TEST_CASE("graded order puts lower degree first and x0 before x1") {
  GradedOrder lt;
  const Monomial x0sq({2, 0}), x0x1({1, 1}), x1sq({0, 2}), x1({0, 1});
  CHECK(lt(x1, x0sq));
  CHECK(lt(x0sq, x0x1));
  CHECK(lt(x0x1, x1sq));
  CHECK(monomials_of_degree(2, 2).size() == 3);
  CHECK(monomials_of_degree(2, 2).front() == x0sq);
  CHECK(monomials_of_degree(4, 3).size() == 20);
}

TEST_CASE("partial derivatives") {
  const std::vector<std::string> v{"x0", "x1"};
  const auto x0 = var(v, "x0"), x1 = var(v, "x1");
  const auto p = x0 * x0 * x1 + build::blade(v, 0b1) * x1;
  CHECK(partial_derivative(p, "x0") == num(v, 2) * x0 * x1);
  CHECK(partial_derivative(p, "x1") == x0 * x0 + build::blade(v, 0b1));
  CHECK(partial_derivative(num(v, 5), "x1").is_zero());
  CHECK_THROWS_AS(partial_derivative(p, "y"), InputError);
}

TEST_CASE("coefficient products keep their order") {
  const std::vector<std::string> v{"x0"};
  const auto a = build::blade(v, 0b1) * var(v, "x0");
  const auto b = build::blade(v, 0b10);
  CHECK((a * b).coeff(Monomial(std::vector<std::uint32_t>{1})) == Multivector::blade(0b11));
  CHECK((b * a).coeff(Monomial(std::vector<std::uint32_t>{1})) == Multivector::blade(0b11, -1));
  CHECK(a.left_blade(0b10) == b * a);
  CHECK(a.right_blade(0b10) == a * b);
}

TEST_CASE("substitute_radial") {
  const Signature s03(0, 3), s02(0, 2);
  const auto g3 = gform_vars(s03);
  const auto a3 = ambient_vars(s03);
  CHECK(substitute_radial(var(g3, "t"), s03) == pow(var(a3, "x1"), 2) + pow(var(a3, "x2"), 2) + pow(var(a3, "x3"), 2));
  const auto g2 = gform_vars(s02);
  const auto a2 = ambient_vars(s02);
  const auto x0 = var(a2, "x0"), x1 = var(a2, "x1"), x2 = var(a2, "x2");
  CHECK(substitute_radial(var(g2, "x0") * var(g2, "t"), s02) == x0 * (x1 * x1 + x2 * x2));
  CHECK(substitute_radial(pow(var(g2, "t"), 2), s02) ==
        pow(x1, 4) + num(a2, 2) * x1 * x1 * x2 * x2 + pow(x2, 4));
  CHECK(substitute_radial(num(g2, 7), s02) == num(a2, 7));
}

TEST_CASE("variable lists") {
  const Signature sig(1, 3);
  CHECK(ambient_vars(sig) == std::vector<std::string>{"x0", "x1", "x2", "x3", "x4"});
  CHECK(stem_vars(sig) == std::vector<std::string>{"x0", "x1", "r"});
  CHECK(gform_vars(sig) == std::vector<std::string>{"x0", "x1", "t"});
}

TEST_CASE("evaluation of x^2 at a paravector equals the squared multivector") {
  const Signature sig(0, 3);
  const auto v = ambient_vars(sig);
  Polynomial x = var(v, "x0");
  for (int i = 1; i <= 3; ++i) x += var(v, "x" + std::to_string(i)).right_blade(1u << (i - 1));
  const std::vector<Rational> pt{1, 2, -1, Rational(1, 2)};
  Multivector xv(pt[0]);
  for (int i = 1; i <= 3; ++i) xv += Multivector::blade(1u << (i - 1), pt[static_cast<std::size_t>(i)]);
  CHECK(evaluate(x * x, pt) == mv_mul(xv, xv));
  CHECK_THROWS_AS(evaluate(x, std::vector<Rational>{1, 2}), InputError);
}

TEST_CASE("homogeneous parts") {
  const std::vector<std::string> v{"x0", "x1"};
  const auto x0 = var(v, "x0"), x1 = var(v, "x1");
  const auto p = num(v, 1) + x0 * x1 + x1 + pow(x0, 3);
  const auto parts = homogeneous_parts(p);
  REQUIRE(parts.size() == 4);
  CHECK(parts[0] == num(v, 1));
  CHECK(parts[1] == x1);
  CHECK(parts[2] == x0 * x1);
  CHECK(parts[3] == pow(x0, 3));
  CHECK(homogeneous_parts(Polynomial(v)).empty());
  CHECK(p.truncated(1) == num(v, 1) + x1);
}

TEST_CASE("divide_by_radial_square") {
  const Signature sig(1, 2);
  const auto v = ambient_vars(sig);
  const auto rho = radial_square(sig);
  const auto q = var(v, "x0") * var(v, "x1") + build::blade(v, 0b10);
  const auto quotient = divide_by_radial_square(rho * q, sig);
  REQUIRE(quotient.has_value());
  CHECK(*quotient == q);
  CHECK_FALSE(divide_by_radial_square(var(v, "x2"), sig).has_value());
  CHECK_FALSE(divide_by_radial_square(rho + var(v, "x2") * var(v, "x2"), sig).has_value());
}

TEST_CASE("signed permutation") {
  const std::vector<std::string> v{"a", "b"};
  const auto a = var(v, "a"), b = var(v, "b");
  const std::vector<std::size_t> perm{1, 0};
  const std::vector<int> signs{-1, 1};
  CHECK(signed_permutation(a * a * b, perm, signs) == b * b * a);
  CHECK(signed_permutation(a, perm, signs) == num(v, -1) * b);
}

TEST_CASE("format prints readable terms") {
  const std::vector<std::string> v{"x0", "x1"};
  CHECK(format(Polynomial(v)) == "0");
  CHECK(format(var(v, "x0") * var(v, "x0") - var(v, "x1")) == "-x1 + x0^2");
}

TEST_CASE("nullspace of small systems") {
  LinearSystem sys(2);
  sys.add_row({{0, 1}, {1, 1}});
  const auto ns = nullspace(sys);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == std::vector<Rational>{-1, 1});

  LinearSystem full(2);
  full.add_row({{0, 1}});
  full.add_row({{1, 3}});
  CHECK(nullspace(full).empty());

  LinearSystem empty(3);
  CHECK(nullspace(empty).size() == 3);
}

TEST_CASE("solve with several right-hand sides") {
  LinearSystem sys(2, 2);
  sys.add_row({{0, 1}, {1, 1}}, {{0, 3}, {1, 1}});
  sys.add_row({{0, 1}, {1, -1}}, {{0, 1}});
  const auto res = solve(sys);
  CHECK(res.unique());
  REQUIRE(res.solutions[0].has_value());
  CHECK(*res.solutions[0] == std::vector<Rational>{2, 1});
  CHECK(*res.solutions[1] == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

  LinearSystem bad(1, 1);
  bad.add_row({{0, 1}}, {{0, 1}});
  bad.add_row({{0, 2}}, {{0, 3}});
  CHECK_FALSE(solve(bad).solutions[0].has_value());
}

TEST_CASE("property: nullspace vectors satisfy every row and are independent") {
  oracle::Random rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 8));
    LinearSystem sys(n);
    const int rows = rng.uniform(0, 8);
    for (int r = 0; r < rows; ++r) {
      SparseRow row;
      for (std::size_t j = 0; j < n; ++j) {
        if (rng.uniform(0, 2) == 0) row.emplace_back(j, rng.rational());
      }
      sys.add_row(row);
    }
    const auto ech = row_reduce(sys);
    const auto ns = nullspace(ech);
    REQUIRE(ns.size() + ech.rank() == n);
    for (const auto& vec : ns) {
      for (const auto& [lhs, rhs] : sys.rows()) {
        Rational acc = 0;
        for (const auto& [j, a] : lhs) acc += a * vec[j];
        REQUIRE(acc == 0);
      }
    }
    const auto free = ech.free_columns();
    for (std::size_t i = 0; i < ns.size(); ++i) {
      for (std::size_t k = 0; k < free.size(); ++k) REQUIRE(ns[i][free[k]] == (i == k ? 1 : 0));
    }
  }
}

TEST_CASE("property: mixed partial derivatives commute") {
  oracle::Random rng(22);
  const std::vector<std::string> v{"x0", "x1", "x2"};
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = rng.polynomial(v, 3, 5);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) REQUIRE(p.derivative(i).derivative(j) == p.derivative(j).derivative(i));
    }
  }
}

TEST_CASE("property: homogeneous parts sum to the input") {
  oracle::Random rng(23);
  const std::vector<std::string> v{"x0", "x1", "x2", "x3"};
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = rng.polynomial(v, 3, 6, 10);
    Polynomial sum(v);
    int last = -1;
    for (const auto& part : homogeneous_parts(p)) {
      REQUIRE(part.degree() == part.min_degree());
      REQUIRE(part.degree() > last);
      last = part.degree();
      sum += part;
    }
    REQUIRE(sum == p);
  }
}

TEST_CASE("property: substitute_radial then evaluate equals evaluating at t = rho") {
  oracle::Random rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const Signature sig(rng.uniform(0, 2), rng.uniform(1, 3));
    const auto g = rng.polynomial(gform_vars(sig), sig.n(), 4);
    std::vector<Rational> pt;
    for (int i = 0; i <= sig.n(); ++i) pt.push_back(rng.rational());
    Rational rho = 0;
    for (int i = sig.p() + 1; i <= sig.n(); ++i) rho += pt[static_cast<std::size_t>(i)] * pt[static_cast<std::size_t>(i)];
    std::vector<Rational> gpt(pt.begin(), pt.begin() + sig.p() + 1);
    gpt.push_back(rho);
    REQUIRE(evaluate(substitute_radial(g, sig), pt) == evaluate(g, gpt));
  }
}

TEST_CASE("property: stem and G-form conversions round trip") {
  oracle::Random rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    const Signature sig(rng.uniform(0, 2), rng.uniform(1, 3));
    const auto g = rng.polynomial(gform_vars(sig), sig.n(), 3);
    const auto stem = gform_to_stem(g, sig);
    REQUIRE(stem_to_gform(stem, sig) == g);
    const auto r = var(stem_vars(sig), "r");
    REQUIRE(odd_stem_to_gform(r * stem, sig) == g);
  }
}
