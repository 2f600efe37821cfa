#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gpslice/clifford.hpp"
#include "gpslice/errors.hpp"
#include "gpslice/rational.hpp"

namespace gpslice {

// Exponent vector, one slot per variable of the owning polynomial.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t degree() const noexcept { return degree_; }
  std::span<const std::uint32_t> exponents() const noexcept { return exps_; }

  Monomial with(std::size_t i, std::uint32_t e) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

// Graded order: total degree first, ties broken by comparing exponents from
// the last variable down, so x0 < x1 within a degree (x0^2 < x0*x1 < x1^2).
struct GradedOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

// Polynomial in named commuting variables with Multivector coefficients.
// Coefficient products keep their left/right order.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Multivector, GradedOrder>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> vars);

  static Polynomial constant(std::vector<std::string> vars, const Multivector& c);
  static Polynomial variable(std::vector<std::string> vars, std::string_view name);
  static Polynomial term(std::vector<std::string> vars, const Monomial& m, const Multivector& c);

  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t var_count() const noexcept { return vars_.size(); }
  std::optional<std::size_t> find_var(std::string_view name) const;
  // Throws InputError for an unknown name.
  std::size_t var_index(std::string_view name) const;

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept;
  int min_degree() const noexcept;
  Multivector coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Multivector& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& s) const;
  // c * P and P * c.
  Polynomial left_mul(const Multivector& c) const;
  Polynomial right_mul(const Multivector& c) const;
  Polynomial left_blade(BladeMask mask) const;
  Polynomial right_blade(BladeMask mask) const;

  Polynomial derivative(std::size_t var) const;
  // x_var * P
  Polynomial times_var(std::size_t var) const;

  Multivector evaluate(std::span<const Rational> point) const;

  Polynomial homogeneous_part(int degree) const;
  // Nonzero homogeneous components in increasing degree.
  std::vector<Polynomial> homogeneous_parts() const;
  Polynomial truncated(int max_degree) const;

  // Same polynomial over a different variable list; variables missing from
  // `vars` must not occur.
  Polynomial with_vars(const std::vector<std::string>& vars) const;

 private:
  void require_same_vars(const Polynomial& other) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

// Coefficient-space element count (sum of blade terms over all monomials).
std::size_t term_count(const Polynomial& p);

Polynomial partial_derivative(const Polynomial& p, std::string_view var);
Multivector evaluate(const Polynomial& p, std::span<const Rational> point);
std::vector<Polynomial> homogeneous_parts(const Polynomial& p);

// Variable names: x0..x_{p+q} for ambient polynomials, (x0..xp, r) for stems,
// (x0..xp, t) for G-forms where t stands for r^2.
std::vector<std::string> ambient_vars(const Signature& sig);
std::vector<std::string> stem_vars(const Signature& sig);
std::vector<std::string> gform_vars(const Signature& sig);

// rho = x_{p+1}^2 + ... + x_{p+q}^2 as an ambient polynomial.
Polynomial radial_square(const Signature& sig);
// |x|^2 over every variable of `vars`.
Polynomial norm_square(const std::vector<std::string>& vars);

// Replaces t^k by rho^k in a G-form polynomial.
Polynomial substitute_radial(const Polynomial& gform, const Signature& sig);

// Stem <-> G-form: r^{2k} <-> t^k. `stem_to_gform` requires every r exponent
// to be even; `odd_stem_to_gform` divides an odd stem by r first.
Polynomial gform_to_stem(const Polynomial& gform, const Signature& sig);
Polynomial stem_to_gform(const Polynomial& stem, const Signature& sig);
Polynomial odd_stem_to_gform(const Polynomial& stem, const Signature& sig);

// Variable substitution x_i -> signs[i] * x_{perm[i]} (signed permutation).
Polynomial signed_permutation(const Polynomial& p, std::span<const std::size_t> perm,
                              std::span<const int> signs);

// Exact quotient p / rho; nullopt if rho does not divide p.
std::optional<Polynomial> divide_by_radial_square(const Polynomial& p, const Signature& sig);

std::string format(const Polynomial& p);

// Every monomial of total degree `degree` in `nvars` variables, in graded
// order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree);

// Mathematical precondition not met (e.g. input not regular, not
// polyharmonic). Carries the offending residual when one exists. The CLI maps
// these to exit code 1.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what, std::optional<Polynomial> residual = {})
      : Error(what), residual_(std::move(residual)) {}
  const std::optional<Polynomial>& residual() const noexcept { return residual_; }

 private:
  std::optional<Polynomial> residual_;
};

}  // namespace gpslice
