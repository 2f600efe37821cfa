#include "gpslice/almansi.hpp"

#include <map>

#include "gpslice/linear_system.hpp"

namespace gpslice {

namespace {

void require_almansi_q(const Signature& sig) {
  if (sig.q() % 2 == 0 || sig.q() < 3) {
    throw InputError("Almansi decomposition requires odd q >= 3, got q = " +
                     std::to_string(sig.q()));
  }
}

void require_gsr(const SliceFunction& f) {
  const GCRResidual res = gcr_residual(f.stem());
  if (!res.is_zero()) {
    throw PreconditionError("input is not generalized partial-slice regular",
                            res.r1.is_zero() ? res.r2 : res.r1);
  }
}

Polynomial stem_form(const Polynomial& p, const Signature& sig, const char* name) {
  auto g = is_symmetric(p, sig);
  if (!g) throw PreconditionError(std::string(name) + " is not symmetric with respect to R^{p+1}", p);
  return gform_to_stem(*g, sig);
}

// sum_{i=1}^{n} e_i d_{x_i} over variables x1..xn.
Polynomial dirac_underline_vars(const Polynomial& u) {
  Polynomial out(u.vars());
  for (std::size_t i = 0; i < u.var_count(); ++i) {
    out += u.derivative(i).left_blade(BladeMask{1} << i);
  }
  return out;
}

struct RowKey {
  int group;
  Monomial mono;
  BladeMask mask;
};

struct RowKeyLess {
  bool operator()(const RowKey& a, const RowKey& b) const {
    if (a.group != b.group) return a.group < b.group;
    if (GradedOrder{}(a.mono, b.mono)) return true;
    if (GradedOrder{}(b.mono, a.mono)) return false;
    return a.mask < b.mask;
  }
};

}  // namespace

ABDecomposition almansi_ab(const SliceFunction& f) {
  const Signature& sig = f.sig();
  require_almansi_q(sig);
  require_gsr(f);
  const Polynomial deriv = spherical_derivative(f);
  const Polynomial xbar_p = conj_paravector_p(sig, ambient_vars(sig));
  return {spherical_value(f) + xbar_p * deriv, deriv, (sig.q() - 1) / 2};
}

ABCertificate certify_ab(const SliceFunction& f, const ABDecomposition& ab) {
  const Signature& sig = f.sig();
  const Polynomial xbar = conj_paravector(sig);
  ABCertificate c;
  c.polyharmonic_a = laplacian_ambient(ab.a, sig, ab.m).is_zero();
  c.polyharmonic_b = laplacian_ambient(ab.b, sig, ab.m).is_zero();
  c.symmetric_a = is_symmetric(ab.a, sig).has_value();
  c.symmetric_b = is_symmetric(ab.b, sig).has_value();
  c.reconstruction = ab.a - xbar * ab.b == f.ambient();
  if (c.symmetric_a && c.symmetric_b) {
    const auto [row1, row2] = cr2_residual(ab.a, ab.b, sig);
    c.cr2 = row1.is_zero() && row2.is_zero();
  }
  if (auto parts = spherical_decompose(f.ambient(), sig)) {
    c.uniqueness = parts->derivative == ab.b && ab.a == f.ambient() + xbar * parts->derivative;
  }
  return c;
}

std::pair<Polynomial, Polynomial> cr2_residual(const Polynomial& a, const Polynomial& b,
                                               const Signature& sig) {
  const Polynomial as = stem_form(a, sig, "A");
  const Polynomial bs = stem_form(b, sig, "B");
  const auto vars = stem_vars(sig);
  const std::size_t r = static_cast<std::size_t>(sig.p()) + 1;
  const Polynomial xbar_p = conj_paravector_p(sig, vars);

  Polynomial mixed(vars);
  for (int i = 0; i <= sig.p(); ++i) {
    const Polynomial ei_xbar = i == 0 ? xbar_p : xbar_p.left_blade(BladeMask{1} << (i - 1));
    mixed += ei_xbar * bs.derivative(static_cast<std::size_t>(i));
  }
  const Polynomial dr_b = bs.derivative(r);
  Polynomial row1 = dirac_p(as, sig) - mixed - dr_b.times_var(r) - bs.scaled(Rational(sig.p() + 2));
  Polynomial row2 = as.derivative(r) - xbar_p * dr_b + dirac_p_conj(bs, sig).times_var(r);
  return {std::move(row1), std::move(row2)};
}

Polynomial polyharmonic_commutator_residual(const Polynomial& h, int m, const Signature& sig) {
  if (m < 1) throw InputError("commutator lemma requires m >= 1");
  const Polynomial xbar_p = conj_paravector_p(sig, ambient_vars(sig));
  const Polynomial lhs = laplacian_ambient(xbar_p * h, sig, m);
  const Polynomial mid = laplacian_ambient(dirac_p_conj(h, sig), sig, m - 1).scaled(Rational(2 * m));
  return lhs - mid - xbar_p * laplacian_ambient(h, sig, m);
}

bool polyharmonic_commutator_check(const Polynomial& h, int m, const Signature& sig) {
  return polyharmonic_commutator_residual(h, m, sig).is_zero();
}

// Per degree D: unknown scalar coefficients of u_k (degree D - 2k); rows are
// the reconstruction identity and Delta u_k = 0; blades of u_D are the
// right-hand sides.
AlmansiResult classical_almansi(const Polynomial& u, int N) {
  if (N < 1) throw InputError("classical Almansi requires N >= 1");
  Polynomial check = u;
  for (int k = 0; k < N; ++k) check = laplacian(check);
  if (!check.is_zero()) throw PreconditionError("input is not polyharmonic of the given degree", check);

  const auto& vars = u.vars();
  const std::size_t nv = vars.size();
  const Polynomial norm2 = norm_square(vars);
  std::vector<Polynomial> norm_pow{Polynomial::constant(vars, Multivector(1))};
  while (norm_pow.size() < static_cast<std::size_t>(N)) norm_pow.push_back(norm_pow.back() * norm2);

  AlmansiResult out;
  out.components.assign(static_cast<std::size_t>(N), Polynomial(vars));
  for (const auto& part : u.homogeneous_parts()) {
    const int D = part.degree();
    std::vector<std::pair<int, Monomial>> cols;
    for (int k = 0; k < N && D - 2 * k >= 0; ++k) {
      for (const auto& m : monomials_of_degree(nv, static_cast<std::uint32_t>(D - 2 * k))) {
        cols.emplace_back(k, m);
      }
    }
    std::map<BladeMask, std::size_t> rhs_of;
    for (const auto& [m, c] : part.terms()) {
      for (const auto& [mask, v] : c.terms()) rhs_of.emplace(mask, rhs_of.size());
    }
    std::map<RowKey, std::pair<SparseRow, SparseRow>, RowKeyLess> rows;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const auto& [k, m] = cols[j];
      const Polynomial mono = Polynomial::term(vars, m, Multivector(1));
      const Polynomial shifted = norm_pow[static_cast<std::size_t>(k)] * mono;
      const Polynomial lap = laplacian(mono);
      for (const auto& [rm, rc] : shifted.terms()) {
        rows[RowKey{-1, rm, 0}].first.emplace_back(j, rc.coeff(0));
      }
      for (const auto& [rm, rc] : lap.terms()) {
        rows[RowKey{k, rm, 0}].first.emplace_back(j, rc.coeff(0));
      }
    }
    for (const auto& [m, c] : part.terms()) {
      auto& row = rows[RowKey{-1, m, 0}];
      for (const auto& [mask, v] : c.terms()) row.second.emplace_back(rhs_of.at(mask), v);
    }
    LinearSystem system(cols.size(), rhs_of.size());
    for (auto& [key, row] : rows) system.add_row(std::move(row.first), std::move(row.second));
    const SolveResult sol = solve(system);
    out.solves.push_back({D, sol.rank, sol.unknowns});
    for (const auto& [mask, idx] : rhs_of) {
      const auto& x = sol.solutions[idx];
      if (!x) throw PreconditionError("classical Almansi system is inconsistent", part);
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if ((*x)[j] == 0) continue;
        out.components[static_cast<std::size_t>(cols[j].first)].add_term(
            cols[j].second, Multivector::blade(mask, (*x)[j]));
      }
    }
  }
  return out;
}

std::vector<std::string> underline_vars(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

AlmansiResult polymonogenic_almansi(const Polynomial& u, int N) {
  if (N < 1) throw InputError("polymonogenic Almansi requires N >= 1");
  const int n = static_cast<int>(u.var_count());
  if (n < 1 || n > kMaxGenerators || u.vars() != underline_vars(n)) {
    throw InputError("polymonogenic Almansi expects variables x1..xn");
  }
  const Signature sig(0, n);
  for (const auto& [m, c] : u.terms()) {
    if (!c.fits(sig)) throw InputError("coefficient uses a generator beyond n");
  }
  Polynomial check = u;
  for (int k = 0; k < N; ++k) check = dirac_underline_vars(check);
  if (!check.is_zero()) throw PreconditionError("input is not polymonogenic of the given degree", check);

  const auto& vars = u.vars();
  Polynomial xu(vars);
  for (int i = 0; i < n; ++i) {
    xu.add_term(Monomial(vars.size()).with(static_cast<std::size_t>(i), 1),
                Multivector::blade(BladeMask{1} << i));
  }
  std::vector<Polynomial> xu_pow{Polynomial::constant(vars, Multivector(1))};
  while (xu_pow.size() < static_cast<std::size_t>(N)) xu_pow.push_back(xu_pow.back() * xu);

  AlmansiResult out;
  out.components.assign(static_cast<std::size_t>(N), Polynomial(vars));
  for (const auto& part : u.homogeneous_parts()) {
    const int D = part.degree();
    struct Col {
      int k;
      Monomial mono;
      BladeMask mask;
    };
    std::vector<Col> cols;
    for (int k = 0; k < N && D - k >= 0; ++k) {
      for (const auto& m : monomials_of_degree(vars.size(), static_cast<std::uint32_t>(D - k))) {
        for (BladeMask mask = 0; mask < sig.blade_count(); ++mask) cols.push_back({k, m, mask});
      }
    }
    std::map<RowKey, std::pair<SparseRow, SparseRow>, RowKeyLess> rows;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Polynomial t = Polynomial::term(vars, cols[j].mono, Multivector::blade(cols[j].mask));
      const Polynomial shifted = xu_pow[static_cast<std::size_t>(cols[j].k)] * t;
      const Polynomial dt = dirac_underline_vars(t);
      for (const auto& [rm, rc] : shifted.terms()) {
        for (const auto& [mask, v] : rc.terms()) rows[RowKey{-1, rm, mask}].first.emplace_back(j, v);
      }
      for (const auto& [rm, rc] : dt.terms()) {
        for (const auto& [mask, v] : rc.terms()) {
          rows[RowKey{cols[j].k, rm, mask}].first.emplace_back(j, v);
        }
      }
    }
    for (const auto& [m, c] : part.terms()) {
      for (const auto& [mask, v] : c.terms()) rows[RowKey{-1, m, mask}].second.emplace_back(0, v);
    }
    LinearSystem system(cols.size(), 1);
    for (auto& [key, row] : rows) system.add_row(std::move(row.first), std::move(row.second));
    const SolveResult sol = solve(system);
    out.solves.push_back({D, sol.rank, sol.unknowns});
    const auto& x = sol.solutions[0];
    if (!x) throw PreconditionError("polymonogenic Almansi system is inconsistent", part);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if ((*x)[j] == 0) continue;
      out.components[static_cast<std::size_t>(cols[j].k)].add_term(
          cols[j].mono, Multivector::blade(cols[j].mask, (*x)[j]));
    }
  }
  return out;
}

StarlikeDecomposition starlike_almansi(const SliceFunction& f) {
  const Signature& sig = f.sig();
  StarlikeDecomposition d;
  d.ab = almansi_ab(f);
  d.a_solve = classical_almansi(d.ab.a, d.ab.m);
  d.b_solve = classical_almansi(d.ab.b, d.ab.m);
  d.u = d.a_solve.components;
  d.v = d.b_solve.components;
  const Polynomial xbar = conj_paravector(sig);
  for (int k = 0; k < d.ab.m; ++k) {
    d.g.push_back(d.u[static_cast<std::size_t>(k)] - xbar * d.v[static_cast<std::size_t>(k)]);
  }
  return d;
}

StarlikeCertificate certify_starlike(const SliceFunction& f, const StarlikeDecomposition& d) {
  const Signature& sig = f.sig();
  const Polynomial norm2 = norm_square(ambient_vars(sig));
  StarlikeCertificate c;
  Polynomial sum(ambient_vars(sig));
  Polynomial weight = Polynomial::constant(ambient_vars(sig), Multivector(1));
  c.kernel = true;
  for (const auto& g : d.g) {
    sum += weight * g;
    weight = weight * norm2;
    c.kernel = c.kernel && dirac_ambient(laplacian_ambient(g, sig), sig).is_zero();
  }
  c.reconstruction = sum == f.ambient();
  c.symmetric = true;
  for (const auto* list : {&d.u, &d.v}) {
    for (const auto& p : *list) c.symmetric = c.symmetric && is_symmetric(p, sig).has_value();
  }
  c.unique = d.a_solve.unique() && d.b_solve.unique();
  return c;
}

Polynomial permute_x_q(const Polynomial& P, const Signature& sig, std::span<const std::size_t> perm,
                       std::span<const int> signs) {
  const std::size_t q = static_cast<std::size_t>(sig.q());
  if (perm.size() != q || signs.size() != q) throw InputError("x_q permutation needs q entries");
  const std::size_t off = static_cast<std::size_t>(sig.p()) + 1;
  std::vector<std::size_t> full(P.var_count());
  std::vector<int> full_signs(P.var_count(), 1);
  for (std::size_t i = 0; i < full.size(); ++i) full[i] = i;
  for (std::size_t i = 0; i < q; ++i) {
    if (perm[i] >= q) throw InputError("x_q permutation index out of range");
    full[off + i] = off + perm[i];
    full_signs[off + i] = signs[i];
  }
  return signed_permutation(P, full, full_signs);
}

}  // namespace gpslice
