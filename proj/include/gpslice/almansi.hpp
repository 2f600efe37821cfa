#pragma once

#include <span>
#include <utility>
#include <vector>

#include "gpslice/regular.hpp"

namespace gpslice {

struct ABDecomposition {
  Polynomial a;
  Polynomial b;
  int m = 0;
};

// A = f_s° + conj(x_p) f_s', B = f_s'. Requires odd q >= 3 (InputError) and
// GSR f (PreconditionError).
ABDecomposition almansi_ab(const SliceFunction& f);

struct ABCertificate {
  bool polyharmonic_a = false;   // Delta^m A = 0
  bool polyharmonic_b = false;   // Delta^m B = 0
  bool symmetric_a = false;
  bool symmetric_b = false;
  bool reconstruction = false;   // A - conj(x) B = f
  bool cr2 = false;              // cr2_residual vanishes
  bool uniqueness = false;       // B and A agree with the definition-based split of f

  bool all() const noexcept {
    return polyharmonic_a && polyharmonic_b && symmetric_a && symmetric_b && reconstruction &&
           cr2 && uniqueness;
  }
};

ABCertificate certify_ab(const SliceFunction& f, const ABDecomposition& ab);

// Stem-form rows of the converse system; both vanish iff A - conj(x) B is
// GSR. PreconditionError when A or B is not symmetric.
std::pair<Polynomial, Polynomial> cr2_residual(const Polynomial& a, const Polynomial& b,
                                               const Signature& sig);

// Delta^m(conj(x_p) h) - 2m Delta^{m-1} conj(D_{x_p}) h - conj(x_p) Delta^m h
Polynomial polyharmonic_commutator_residual(const Polynomial& h, int m, const Signature& sig);
bool polyharmonic_commutator_check(const Polynomial& h, int m, const Signature& sig);

struct DegreeSolve {
  int degree = 0;
  std::size_t rank = 0;
  std::size_t unknowns = 0;
};

struct AlmansiResult {
  std::vector<Polynomial> components;
  std::vector<DegreeSolve> solves;

  bool unique() const noexcept {
    for (const auto& s : solves) {
      if (s.rank != s.unknowns) return false;
    }
    return true;
  }
};

// u = sum_k |x|^{2k} u_k with harmonic u_k, where |x|^2 and the Laplacian run
// over every variable of u. PreconditionError unless Delta^N u = 0.
AlmansiResult classical_almansi(const Polynomial& u, int N);

// u over (x1..xn) with R_n coefficients: u = sum_k xu^k u_k with xu the
// 1-vector sum x_i e_i and D u_k = 0, D = sum e_i d_i. PreconditionError
// unless D^N u = 0.
AlmansiResult polymonogenic_almansi(const Polynomial& u, int N);

// Variable names x1..xn.
std::vector<std::string> underline_vars(int n);

struct StarlikeDecomposition {
  std::vector<Polynomial> g;
  std::vector<Polynomial> u;
  std::vector<Polynomial> v;
  ABDecomposition ab;
  AlmansiResult a_solve;
  AlmansiResult b_solve;
};

struct StarlikeCertificate {
  bool reconstruction = false;  // f = sum |x|^{2k} g_k
  bool symmetric = false;       // every u_k and v_k passes is_symmetric
  bool kernel = false;          // D Delta g_k = 0 for all k
  bool unique = false;          // both classical solves have full rank

  bool all() const noexcept { return reconstruction && symmetric && kernel && unique; }
};

StarlikeDecomposition starlike_almansi(const SliceFunction& f);
StarlikeCertificate certify_starlike(const SliceFunction& f, const StarlikeDecomposition& d);

// x_{p+i} -> signs[i] x_{p+perm[i]} on the x_q block of an ambient polynomial.
Polynomial permute_x_q(const Polynomial& P, const Signature& sig, std::span<const std::size_t> perm,
                       std::span<const int> signs);

}  // namespace gpslice
