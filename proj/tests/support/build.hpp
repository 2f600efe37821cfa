#pragma once

// Shorthands for writing polynomials in tests.

#include <string>
#include <vector>

#include "gpslice/mvpoly.hpp"

namespace build {

using gpslice::BladeMask;
using gpslice::Multivector;
using gpslice::Polynomial;
using gpslice::Rational;

inline Polynomial var(const std::vector<std::string>& vars, const std::string& name) {
  return Polynomial::variable(vars, name);
}

inline Polynomial num(const std::vector<std::string>& vars, const Rational& c) {
  return Polynomial::constant(vars, Multivector(c));
}

inline Polynomial blade(const std::vector<std::string>& vars, BladeMask mask, const Rational& c = 1) {
  return Polynomial::constant(vars, Multivector::blade(mask, c));
}

inline Polynomial pow(const Polynomial& p, int k) {
  Polynomial out = Polynomial::constant(p.vars(), Multivector(1));
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

inline Polynomial zero(const std::vector<std::string>& vars) { return Polynomial(vars); }

}  // namespace build
