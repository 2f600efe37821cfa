#include "gpslice/regular.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "gpslice/linear_system.hpp"

namespace gpslice {

namespace {

using ResidualFn = std::function<std::pair<Polynomial, Polynomial>(const StemPair&)>;

// Unknown: the real coefficient of e_mask * monomial in F1 (even r power) or
// F2 (odd r power).
struct Column {
  Monomial mono;
  BladeMask mask;
};

bool column_less(const Column& a, const Column& b) {
  if (GradedOrder{}(a.mono, b.mono)) return true;
  if (GradedOrder{}(b.mono, a.mono)) return false;
  return a.mask < b.mask;
}

struct RowKey {
  int component;
  Monomial mono;
  BladeMask mask;
};

struct RowKeyLess {
  bool operator()(const RowKey& a, const RowKey& b) const {
    if (a.component != b.component) return a.component < b.component;
    if (GradedOrder{}(a.mono, b.mono)) return true;
    if (GradedOrder{}(b.mono, a.mono)) return false;
    return a.mask < b.mask;
  }
};

std::size_t r_slot(const Signature& sig) { return static_cast<std::size_t>(sig.p()) + 1; }

StemPair single_term(const Signature& sig, const Column& col, const Rational& value) {
  const auto vars = stem_vars(sig);
  Polynomial f1(vars), f2(vars);
  (col.mono[r_slot(sig)] % 2 == 0 ? f1 : f2).add_term(col.mono, Multivector::blade(col.mask, value));
  return StemPair(sig, std::move(f1), std::move(f2));
}

StemPair assemble(const Signature& sig, const std::vector<Column>& cols,
                  const std::vector<Rational>& v) {
  const auto vars = stem_vars(sig);
  Polynomial f1(vars), f2(vars);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (v[j] == 0) continue;
    (cols[j].mono[r_slot(sig)] % 2 == 0 ? f1 : f2)
        .add_term(cols[j].mono, Multivector::blade(cols[j].mask, v[j]));
  }
  return StemPair(sig, std::move(f1), std::move(f2));
}

struct KeyedStem {
  Column key;
  StemPair stem;
};

// Canonical nullspace of the linear map column -> residual rows, keeping rows
// of degree <= max_row_degree (all rows when nullopt).
std::vector<KeyedStem> solve_stems(const Signature& sig, const std::vector<Column>& cols,
                                   const ResidualFn& residual,
                                   std::optional<int> max_row_degree) {
  std::map<RowKey, SparseRow, RowKeyLess> rows;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const auto [r1, r2] = residual(single_term(sig, cols[j], 1));
    int component = 0;
    for (const Polynomial* r : {&r1, &r2}) {
      for (const auto& [m, c] : r->terms()) {
        if (max_row_degree && static_cast<int>(m.degree()) > *max_row_degree) continue;
        for (const auto& [mask, v] : c.terms()) rows[RowKey{component, m, mask}].emplace_back(j, v);
      }
      ++component;
    }
  }
  LinearSystem system(cols.size());
  for (auto& [key, row] : rows) system.add_row(std::move(row));
  const RowEchelon ech = row_reduce(system);
  const auto free = ech.free_columns();
  const auto basis = nullspace(ech);
  std::vector<KeyedStem> out;
  out.reserve(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    out.push_back({cols[free[k]], assemble(sig, cols, basis[k])});
  }
  return out;
}

std::vector<Monomial> stem_monomials(const Signature& sig, int degree, bool omit_x0) {
  const std::size_t nv = stem_vars(sig).size();
  if (!omit_x0) return monomials_of_degree(nv, static_cast<std::uint32_t>(degree));
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(nv - 1, static_cast<std::uint32_t>(degree))) {
    std::vector<std::uint32_t> e{0};
    e.insert(e.end(), m.exponents().begin(), m.exponents().end());
    out.emplace_back(std::move(e));
  }
  return out;
}

std::vector<Column> columns_for(const Signature& sig, int lo, int hi, bool omit_x0,
                                BladeMask mask_limit) {
  std::vector<Column> cols;
  for (int k = lo; k <= hi; ++k) {
    for (const auto& m : stem_monomials(sig, k, omit_x0)) {
      for (BladeMask mask = 0; mask < mask_limit; ++mask) cols.push_back({m, mask});
    }
  }
  return cols;
}

// Solutions found with coefficients in a subalgebra, tensored on the right
// by each blade of `high` and ordered by their full column key.
std::vector<KeyedStem> tensor_right(std::vector<KeyedStem> low,
                                    const std::vector<BladeMask>& high) {
  std::vector<KeyedStem> out;
  out.reserve(low.size() * high.size());
  for (const auto& ks : low) {
    for (BladeMask b : high) {
      const Signature& sig = ks.stem.sig();
      out.push_back({Column{ks.key.mono, ks.key.mask | b},
                     StemPair(sig, ks.stem.f1().right_blade(b), ks.stem.f2().right_blade(b))});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const KeyedStem& a, const KeyedStem& b) { return column_less(a.key, b.key); });
  return out;
}

std::vector<BladeMask> high_blades(const Signature& sig) {
  std::vector<BladeMask> out;
  for (BladeMask b = 0; b < (BladeMask{1} << sig.q()); ++b) out.push_back(b << sig.p());
  return out;
}

std::vector<BladeMask> all_blades(const Signature& sig) {
  std::vector<BladeMask> out;
  for (BladeMask b = 0; b < sig.blade_count(); ++b) out.push_back(b);
  return out;
}

std::pair<Polynomial, Polynomial> gcr_pair(const StemPair& s) {
  const GCRResidual r = gcr_residual(s);
  return {r.r1, r.r2};
}

Rational double_factorial(int k) {
  Rational out = 1;
  for (int j = k; j > 1; j -= 2) out *= j;
  return out;
}

void require_odd_q(const Signature& sig, const char* what) {
  if (sig.q() % 2 == 0) throw InputError(std::string(what) + " requires odd q");
}

}  // namespace

GCRResidual gcr_residual(const StemPair& stem) {
  const Signature& sig = stem.sig();
  return {dirac_p(stem.f1(), sig) - d_r(stem.f2(), sig),
          dirac_p_conj(stem.f2(), sig) + d_r(stem.f1(), sig)};
}

// The GCR operators only multiply by e_0..e_p on the left, so solutions with
// coefficients in the subalgebra on e_1..e_p span everything after right
// multiplication by the blades on e_{p+1}..e_n. Degrees decouple.
std::vector<SliceFunction> gsr_basis(const Signature& sig, int degree, bool omit_x0) {
  if (degree < 0) throw InputError("gsr_basis requires degree >= 0");
  const BladeMask low = BladeMask{1} << sig.p();
  std::vector<KeyedStem> solved;
  for (int k = 0; k <= degree; ++k) {
    auto part = solve_stems(sig, columns_for(sig, k, k, omit_x0, low), gcr_pair, std::nullopt);
    for (auto& ks : part) solved.push_back(std::move(ks));
  }
  std::vector<SliceFunction> out;
  for (const auto& ks : tensor_right(std::move(solved), high_blades(sig))) {
    out.push_back(induce(ks.stem));
  }
  return out;
}

std::vector<StemPair> gsr_basis_dense(const Signature& sig, int degree, bool omit_x0) {
  if (degree < 0) throw InputError("gsr_basis requires degree >= 0");
  std::vector<StemPair> out;
  for (auto& ks :
       solve_stems(sig, columns_for(sig, 0, degree, omit_x0, sig.blade_count()), gcr_pair, std::nullopt)) {
    out.push_back(std::move(ks.stem));
  }
  return out;
}

Polynomial relation_residual(const SliceFunction& f) {
  const Signature& sig = f.sig();
  return dirac_ambient(f.ambient(), sig) - spherical_derivative(f).scaled(Rational(1 - sig.q()));
}

bool relation_check(const SliceFunction& f) { return relation_residual(f).is_zero(); }

int power_lemma_max_k(int q, int part) {
  if (part == 1) return (q - 1) / 2;
  if (part == 2) return (q + 1) / 2;
  throw InputError("power lemma part must be 1 or 2");
}

int helmholtz_valid_degree(int order) { return order - 2; }
int vekua_valid_degree(int order) { return order - 1; }

Polynomial power_lemma_residual(const SliceFunction& f, const Rational& lambda, int sign, int k,
                                int part, int jet_order) {
  const Signature& sig = f.sig();
  const int q = sig.q();
  if (k < 1 || k > power_lemma_max_k(q, part)) {
    throw InputError("power lemma: k = " + std::to_string(k) + " outside the admissible range");
  }
  const auto [h1, h2] = helmholtz_residual(f.stem(), lambda, sign);
  const int valid = jet_order >= 0 ? helmholtz_valid_degree(jet_order) : -1;
  for (const Polynomial* h : {&h1, &h2}) {
    const Polynomial kept = jet_order >= 0 ? h->truncated(valid) : *h;
    if (!kept.is_zero()) {
      throw PreconditionError("power lemma: stems do not solve the Helmholtz equation", kept);
    }
  }

  const Polynomial& g = part == 1 ? f.g2() : f.g1();
  Rational coeff = 1;
  for (int j = 1; j <= k; ++j) coeff *= 2 * (part == 1 ? q - 2 * j - 1 : q - 2 * j + 1);
  Polynomial dg = g;
  const std::size_t t = static_cast<std::size_t>(sig.p()) + 1;
  for (int j = 0; j < k; ++j) dg = dg.derivative(t);
  const Polynomial lhs =
      apply(OperatorSpec::shifted(lambda, sign, k), substitute_radial(g, sig), sig);
  Polynomial res = lhs - substitute_radial(dg, sig).scaled(coeff);
  if (jet_order >= 0) res = res.truncated(jet_order - 2 * k - (part == 1 ? 1 : 0));
  return res;
}

bool laplacian_power_lemma_check(const SliceFunction& f, const Rational& lambda, int sign, int k,
                                 int jet_order) {
  const int q = f.sig().q();
  if (k < 1 || k > power_lemma_max_k(q, 2)) {
    throw InputError("power lemma: k = " + std::to_string(k) + " outside the admissible range");
  }
  if (k <= power_lemma_max_k(q, 1) &&
      !power_lemma_residual(f, lambda, sign, k, 1, jet_order).is_zero()) {
    return false;
  }
  return power_lemma_residual(f, lambda, sign, k, 2, jet_order).is_zero();
}

SphericalTheoremReport spherical_theorem_check(const SliceFunction& f) {
  const Signature& sig = f.sig();
  const int q = sig.q();
  SphericalTheoremReport rep;
  rep.part_i = true;
  for (int k = 1; k <= power_lemma_max_k(q, 1); ++k) {
    rep.part_i = rep.part_i && power_lemma_residual(f, 0, 1, k, 1).is_zero();
  }
  rep.part_ii = true;
  for (int k = 1; k <= power_lemma_max_k(q, 2); ++k) {
    rep.part_ii = rep.part_ii && power_lemma_residual(f, 0, 1, k, 2).is_zero();
  }
  const Polynomial value = spherical_value(f);
  const Polynomial deriv = spherical_derivative(f);
  const Polynomial rho = radial_square(sig);
  rep.part_iii = (rho * laplacian_ambient(deriv, sig) -
                  (dirac_p(value, sig) - deriv).scaled(Rational(q - 3)))
                     .is_zero();
  rep.part_iv =
      (laplacian_ambient(value, sig) - dirac_p_conj(deriv, sig).scaled(Rational(1 - q))).is_zero();
  if (q % 2 == 1) rep.part_v = laplacian_ambient(value, sig, (q + 1) / 2).is_zero();
  return rep;
}

Polynomial fueter_sce(const SliceFunction& f) {
  const Signature& sig = f.sig();
  require_odd_q(sig, "fueter_sce");
  const int m = (sig.q() - 1) / 2;
  return laplacian_ambient(f.ambient(), sig, m).scaled(1 / double_factorial(sig.q() - 1));
}

FueterReport fueter_sce_check(const SliceFunction& f) {
  const Signature& sig = f.sig();
  FueterReport rep{fueter_sce(f)};
  rep.monogenic = dirac_ambient(rep.tau, sig).is_zero();
  rep.polyharmonic = laplacian_ambient(f.ambient(), sig, (sig.q() + 1) / 2).is_zero();
  return rep;
}

std::pair<Polynomial, Polynomial> helmholtz_residual(const StemPair& stem, const Rational& lambda,
                                                     int sign) {
  const auto op = OperatorSpec::shifted(lambda, sign);
  return {apply(op, stem.f1(), stem.sig()), apply(op, stem.f2(), stem.sig())};
}

std::pair<Polynomial, Polynomial> vekua_residual(const StemPair& stem, const Rational& lambda) {
  const Signature& sig = stem.sig();
  const auto D = OperatorSpec::of(OperatorKind::dirac_underline);
  return {apply(D, stem.f1(), sig) - d_r(stem.f2(), sig) - stem.f1().scaled(lambda),
          -apply(D, stem.f2(), sig) + d_r(stem.f1(), sig) - stem.f2().scaled(lambda)};
}

// Scalar operator: blades decouple completely.
JetBasis helmholtz_jet_basis(const Signature& sig, const Rational& lambda, int order, int sign) {
  if (order < 0) throw InputError("jet order must be >= 0");
  if (sign != 1 && sign != -1) throw InputError("sign must be +1 or -1");
  ResidualFn res = [&](const StemPair& s) { return helmholtz_residual(s, lambda, sign); };
  auto solved =
      solve_stems(sig, columns_for(sig, 0, order, false, 1), res, helmholtz_valid_degree(order));
  JetBasis jb{"helmholtz", sig, lambda, sign, order, false, {}};
  for (auto& ks : tensor_right(std::move(solved), all_blades(sig))) {
    jb.elements.push_back(std::move(ks.stem));
  }
  return jb;
}

JetBasis vekua_jet_basis(int p, int q, const Rational& lambda, int order) {
  const Signature sig(p, q);
  if (order < 0) throw InputError("jet order must be >= 0");
  ResidualFn res = [&](const StemPair& s) { return vekua_residual(s, lambda); };
  auto solved = solve_stems(sig, columns_for(sig, 0, order, true, BladeMask{1} << p), res,
                            vekua_valid_degree(order));
  JetBasis jb{"vekua", sig, lambda, 1, order, true, {}};
  for (auto& ks : tensor_right(std::move(solved), high_blades(sig))) {
    jb.elements.push_back(std::move(ks.stem));
  }
  return jb;
}

Polynomial vekua_conclusion_residual(const StemPair& jet, const Rational& lambda, int order) {
  const Signature& sig = jet.sig();
  require_odd_q(sig, "vekua conclusion");
  if (order <= sig.q()) throw InputError("vekua conclusion needs order > q");
  const int m = (sig.q() - 1) / 2;
  const auto lap = OperatorSpec::of(OperatorKind::laplacian_underline);
  const auto D = OperatorSpec::of(OperatorKind::dirac_underline);
  Polynomial g = induce(jet).ambient();
  for (int k = 0; k < m; ++k) g = apply(lap, g, sig) + g.scaled(lambda * lambda);
  return (apply(D, g, sig) - g.scaled(lambda)).truncated(order - sig.q());
}

bool vekua_conclusion_check(const StemPair& jet, const Rational& lambda, int order) {
  return vekua_conclusion_residual(jet, lambda, order).is_zero();
}

}  // namespace gpslice
