#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gpslice/rational.hpp"

namespace gpslice {

// Hard cap on p + q so every blade mask fits one machine word.
inline constexpr int kMaxGenerators = 16;

// Bit i-1 set <=> generator e_i present. Mask 0 is the scalar unit e_0 = 1.
using BladeMask = std::uint32_t;

// Splitting n = p + q of the generators of R_n. Index 0 is the scalar unit,
// generators e_1..e_p belong to the paravector block and e_{p+1}..e_{p+q} to
// the 1-vector block.
class Signature {
 public:
  Signature(int p, int q);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  int n() const noexcept { return p_ + q_; }
  std::uint32_t blade_count() const noexcept { return 1u << n(); }
  bool contains(BladeMask mask) const noexcept { return mask < blade_count(); }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int p_;
  int q_;
};

struct BladeProduct {
  int sign;
  BladeMask mask;
};

// e_a * e_b = sign * e_{a xor b} under e_i e_j + e_j e_i = -2 delta_ij.
BladeProduct blade_product(BladeMask a, BladeMask b) noexcept;

// Sign s with conj(e_A) = s * e_A.
int conjugation_sign(BladeMask mask) noexcept;

int grade(BladeMask mask) noexcept;

// Element of R_n stored as sorted (mask, coefficient) pairs with no zeros.
class Multivector {
 public:
  using Term = std::pair<BladeMask, Rational>;

  Multivector() = default;
  explicit Multivector(const Rational& scalar);

  static Multivector blade(BladeMask mask, const Rational& coeff = 1);
  // Sums duplicate masks and drops zeros.
  static Multivector from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coeff(BladeMask mask) const;
  // Largest mask present, 0 for the zero element.
  BladeMask max_mask() const noexcept;
  bool fits(const Signature& sig) const noexcept { return sig.contains(max_mask()); }

  Multivector& operator+=(const Multivector& other);
  Multivector& operator-=(const Multivector& other);
  Multivector& operator*=(const Rational& s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a);
  friend Multivector operator*(const Multivector& a, const Multivector& b);
  friend Multivector operator*(Multivector a, const Rational& s) { return a *= s; }
  friend Multivector operator*(const Rational& s, Multivector a) { return a *= s; }
  friend bool operator==(const Multivector& a, const Multivector& b) = default;

  // e_mask * this and this * e_mask.
  Multivector left_blade(BladeMask mask) const;
  Multivector right_blade(BladeMask mask) const;

 private:
  explicit Multivector(std::vector<Term> canonical) : terms_(std::move(canonical)) {}
  std::vector<Term> terms_;
};

// Geometric product, the bilinear extension of blade_product.
Multivector mv_mul(const Multivector& a, const Multivector& b);

// Clifford conjugation, the anti-automorphism with conj(e_j) = -e_j.
Multivector conjugate(const Multivector& a);

// Sum of squared coefficients.
Rational norm_squared(const Multivector& a);

Multivector grade_part(const Multivector& a, int k);

// sum_i components[i] * e_{first_generator + i}
Multivector one_vector(std::span<const Rational> components, int first_generator);

// "e12" style label for a blade; "1" for the scalar unit.
std::string blade_label(BladeMask mask);

std::string format(const Multivector& a);

}  // namespace gpslice
