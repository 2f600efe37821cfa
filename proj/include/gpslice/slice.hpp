#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gpslice/clifford.hpp"
#include "gpslice/mvpoly.hpp"

namespace gpslice {

// Stem pair violates the even/odd requirement in r.
class ParityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Rational point on the unit sphere of R^q (sum of squares exactly 1).
class UnitVector {
 public:
  explicit UnitVector(std::vector<Rational> components);
  std::span<const Rational> components() const noexcept { return components_; }
  std::size_t size() const noexcept { return components_.size(); }
  // sum_i c_i e_{p+i} for the given signature.
  Multivector as_multivector(const Signature& sig) const;

 private:
  std::vector<Rational> components_;
};

// Pythagorean-tuple points on the unit sphere of R^q.
std::vector<UnitVector> sphere_fixtures(int q);

// (F1, F2) over the stem variables (x0..xp, r). F1 must be even and F2 odd in
// r for the pair to induce a slice function; the pair itself may be built
// without that so residual checks can report on it.
class StemPair {
 public:
  StemPair(Signature sig, Polynomial f1, Polynomial f2);

  const Signature& sig() const noexcept { return sig_; }
  const Polynomial& f1() const noexcept { return f1_; }
  const Polynomial& f2() const noexcept { return f2_; }

  // Description of the first term breaking parity, if any.
  std::optional<std::string> parity_violation() const;

  friend bool operator==(const StemPair&, const StemPair&) = default;

 private:
  Signature sig_;
  Polynomial f1_;
  Polynomial f2_;
};

// f(x) = F1(x_p, r) + omega F2(x_p, r) with its ambient polynomial and the
// G-forms F1 = G1(x_p, r^2), F2 = r G2(x_p, r^2).
class SliceFunction {
 public:
  const StemPair& stem() const noexcept { return stem_; }
  const Signature& sig() const noexcept { return stem_.sig(); }
  const Polynomial& ambient() const noexcept { return ambient_; }
  const Polynomial& g1() const noexcept { return g1_; }
  const Polynomial& g2() const noexcept { return g2_; }

  friend SliceFunction induce(const StemPair& stem);

 private:
  SliceFunction(StemPair stem, Polynomial ambient, Polynomial g1, Polynomial g2)
      : stem_(std::move(stem)), ambient_(std::move(ambient)), g1_(std::move(g1)),
        g2_(std::move(g2)) {}

  StemPair stem_;
  Polynomial ambient_;
  Polynomial g1_;
  Polynomial g2_;
};

// Throws ParityError naming the offending term.
SliceFunction induce(const StemPair& stem);

// f_s° = G1(x_p, rho) and f_s' = G2(x_p, rho) as ambient polynomials.
Polynomial spherical_value(const SliceFunction& f);
Polynomial spherical_derivative(const SliceFunction& f);

// G with substitute_radial(G) = p when p depends on x_{p+1}..x_{p+q} only
// through rho; decided by an exact linear solve per homogeneous degree.
std::optional<Polynomial> is_symmetric(const Polynomial& p, const Signature& sig);

struct SphericalParts {
  Polynomial value;
  Polynomial derivative;
};

// Spherical value and derivative straight from their definition on an
// ambient polynomial: value = (f(x) + f(x⋄)) / 2 and
// derivative = x_q^{-1} (f(x) - f(x⋄)) / 2, with x⋄ = x_p - x_q. Nullopt when
// rho does not divide the odd part.
std::optional<SphericalParts> spherical_decompose(const Polynomial& ambient, const Signature& sig);

// Recovers the stem pair of an ambient slice polynomial, if it is one.
std::optional<StemPair> extract_stem(const Polynomial& ambient, const Signature& sig);

// Compares f(x_p + r omega) with
// (f(x_p + r eta) + f(x_p - r eta)) / 2 + omega eta (f(x_p - r eta) - f(x_p + r eta)) / 2.
bool representation_formula_check(const SliceFunction& f, std::span<const Rational> x_p,
                                  const Rational& r, const UnitVector& omega,
                                  const UnitVector& eta);

// Distinguished ambient polynomials.
Polynomial one_vector_q(const Signature& sig);                  // x_q
Polynomial conj_paravector(const Signature& sig);               // conj(x)
// conj(x_p) = x0 - sum_{i<=p} x_i e_i over `vars` (ambient or stem variables).
Polynomial conj_paravector_p(const Signature& sig, const std::vector<std::string>& vars);

}  // namespace gpslice
