#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpslice/diffops.hpp"
#include "gpslice/slice.hpp"

namespace gpslice {

struct GCRResidual {
  Polynomial r1;  // D_{x_p} F1 - d_r F2
  Polynomial r2;  // conj(D_{x_p}) F2 + d_r F1

  bool is_zero() const noexcept { return r1.is_zero() && r2.is_zero(); }
};

GCRResidual gcr_residual(const StemPair& stem);

// Real basis of the GSR stems of total degree <= d, one element per free
// column of the coefficient system (columns ordered by monomial, then blade).
// With omit_x0 the stems do not depend on x0.
std::vector<SliceFunction> gsr_basis(const Signature& sig, int degree, bool omit_x0 = false);

// Same space solved with every blade component as an unknown in one system;
// slower reference route for gsr_basis.
std::vector<StemPair> gsr_basis_dense(const Signature& sig, int degree, bool omit_x0 = false);

// D_ambient f - (1 - q) f_s'
Polynomial relation_residual(const SliceFunction& f);
bool relation_check(const SliceFunction& f);

// Admissible k: part (i) 1..floor((q-1)/2), part (ii) 1..floor((q+1)/2).
int power_lemma_max_k(int q, int part);

// (Delta + sign lambda^2)^k applied to f_s' (part 1) or f_s° (part 2) minus the
// closed form 2^k prod_j (q - 2j -/+ 1) (d_t^k G) with G substituted radially.
// For a jet of order d (jet_order >= 0) only degrees <= d - 2k - 1 (part 1)
// or <= d - 2k (part 2) are kept. Throws InputError for k out of range and
// PreconditionError when the stems do not solve (Delta' + sign lambda^2) F = 0
// within that truncation.
Polynomial power_lemma_residual(const SliceFunction& f, const Rational& lambda, int sign, int k,
                                int part, int jet_order = -1);
bool laplacian_power_lemma_check(const SliceFunction& f, const Rational& lambda, int sign, int k,
                                 int jet_order = -1);

struct SphericalTheoremReport {
  bool part_i = false;
  bool part_ii = false;
  bool part_iii = false;
  bool part_iv = false;
  std::optional<bool> part_v;  // odd q only

  bool all() const noexcept {
    return part_i && part_ii && part_iii && part_iv && part_v.value_or(true);
  }
};

SphericalTheoremReport spherical_theorem_check(const SliceFunction& f);

// Delta^{(q-1)/2} f / (q-1)!!; InputError for even q.
Polynomial fueter_sce(const SliceFunction& f);

struct FueterReport {
  Polynomial tau;
  bool monogenic = false;     // D_ambient tau = 0
  bool polyharmonic = false;  // Delta^{(q+1)/2} f = 0
};

FueterReport fueter_sce_check(const SliceFunction& f);

struct JetBasis {
  std::string kind;  // "helmholtz" or "vekua"
  Signature sig;
  Rational lambda;
  int sign = 1;
  int order = 0;
  bool omit_x0 = false;
  std::vector<StemPair> elements;
};

// Stems with (Delta' + sign lambda^2) F_j = 0 in all degrees <= d - 2.
JetBasis helmholtz_jet_basis(const Signature& sig, const Rational& lambda, int order, int sign = 1);

// Stems in (x1..xp, r) with D F1 - d_r F2 = lambda F1 and
// -D F2 + d_r F1 = lambda F2 in all degrees <= d - 1 (D = sum_{i=1}^p e_i d_i).
JetBasis vekua_jet_basis(int p, int q, const Rational& lambda, int order);

std::pair<Polynomial, Polynomial> helmholtz_residual(const StemPair& stem, const Rational& lambda,
                                                     int sign);
std::pair<Polynomial, Polynomial> vekua_residual(const StemPair& stem, const Rational& lambda);

// Degrees of the residual that are meaningful for a jet of the given order.
int helmholtz_valid_degree(int order);
int vekua_valid_degree(int order);

// (D - lambda)(Delta + lambda^2)^{(q-1)/2} f for the induced ambient jet,
// truncated to degree <= d - q. InputError for even q or d <= q.
Polynomial vekua_conclusion_residual(const StemPair& jet, const Rational& lambda, int order);
bool vekua_conclusion_check(const StemPair& jet, const Rational& lambda, int order);

}  // namespace gpslice
