#pragma once

#include <utility>

#include "gpslice/mvpoly.hpp"
#include "gpslice/slice.hpp"

namespace gpslice {

enum class OperatorKind {
  dirac_p,              // sum_{i=0}^{p} e_i d_i, stem or ambient variables
  dirac_p_conj,         // d_0 - sum_{i=1}^{p} e_i d_i, stem or ambient variables
  dirac_ambient,        // sum_{i=0}^{n} e_i d_i
  dirac_ambient_conj,   // d_0 - sum_{i=1}^{n} e_i d_i
  dirac_underline,      // sum e_i d_i without x0: i <= n (ambient) or i <= p (stem)
  laplacian_stem,       // d_0^2 + ... + d_p^2 + d_r^2
  laplacian_ambient,    // d_0^2 + ... + d_n^2
  laplacian_underline,  // the Laplacian without d_0^2, stem or ambient variables
  d_r,
  euler_radial,         // sum_{i>p} x_i d_i on ambient variables
  shifted_laplacian,    // stem or ambient Laplacian + sign * lambda^2
};

enum class Side { left, right };

struct OperatorSpec {
  OperatorKind kind = OperatorKind::dirac_p;
  Side side = Side::left;
  int power = 1;
  Rational lambda = 0;
  int sign = 1;

  static OperatorSpec of(OperatorKind kind, int power = 1, Side side = Side::left);
  // (Delta + sign * lambda^2)^power
  static OperatorSpec shifted(const Rational& lambda, int sign, int power = 1);
};

// Throws InputError when P's variables are not the operator's domain.
Polynomial apply(const OperatorSpec& op, const Polynomial& P, const Signature& sig);

// Shorthands for the left action with power 1.
Polynomial dirac_p(const Polynomial& P, const Signature& sig);
Polynomial dirac_p_conj(const Polynomial& P, const Signature& sig);
Polynomial dirac_ambient(const Polynomial& P, const Signature& sig);
Polynomial laplacian_ambient(const Polynomial& P, const Signature& sig, int power = 1);
Polynomial laplacian_stem(const Polynomial& P, const Signature& sig);
Polynomial d_r(const Polynomial& P, const Signature& sig);
Polynomial euler_radial(const Polynomial& P, const Signature& sig);

// Sum of d^2/dv^2 over every variable of P, for any variable list.
Polynomial laplacian(const Polynomial& P);

struct HyperbolicVerdict {
  bool value_part = false;       // (rho Delta - (q-1) E) f_s° = 0
  bool derivative_part = false;  // (rho Delta - (q-1) E)(x_q f_s') = -(q-1) x_q f_s'
};

HyperbolicVerdict hyperbolic_check(const SliceFunction& f);

// (D_{x_p} + omega d_r)(F1 + omega F2) in stem variables.
Polynomial gsm_restriction_residual(const StemPair& stem, const UnitVector& omega);

// Delta f - [induce(Delta' F1, Delta' F2) + (q-1)(2 dG1/dt + 2 x_q dG2/dt)]
// as an ambient polynomial; zero for every stem with the right parity.
Polynomial induced_laplacian_residual(const StemPair& stem);

}  // namespace gpslice
