#include "gpslice/slice.hpp"

#include <map>

#include "gpslice/linear_system.hpp"

namespace gpslice {

namespace {

std::size_t r_slot(const Signature& sig) { return static_cast<std::size_t>(sig.p()) + 1; }

void require_vars(const Polynomial& p, const std::vector<std::string>& vars, const char* what) {
  if (p.vars() != vars) throw InputError(std::string(what) + ": unexpected variable list");
}

std::vector<Rational> ambient_point(std::span<const Rational> x_p, const Rational& r,
                                    const UnitVector& dir) {
  std::vector<Rational> pt(x_p.begin(), x_p.end());
  for (const auto& c : dir.components()) pt.push_back(r * c);
  return pt;
}

}  // namespace

UnitVector::UnitVector(std::vector<Rational> components) : components_(std::move(components)) {
  Rational sum = 0;
  for (const auto& c : components_) sum += c * c;
  if (sum != 1) throw InputError("unit vector components must have squared sum 1");
}

Multivector UnitVector::as_multivector(const Signature& sig) const {
  if (components_.size() != static_cast<std::size_t>(sig.q())) {
    throw InputError("unit vector length must equal q");
  }
  return one_vector(components_, sig.p() + 1);
}

std::vector<UnitVector> sphere_fixtures(int q) {
  if (q < 1) throw InputError("sphere_fixtures requires q >= 1");
  const std::vector<std::vector<Rational>> patterns = {
      {Rational(1)},
      {Rational(3, 5), Rational(4, 5)},
      {Rational(-4, 5), Rational(3, 5)},
      {Rational(5, 13), Rational(-12, 13)},
      {Rational(2, 3), Rational(1, 3), Rational(2, 3)},
      {Rational(1, 3), Rational(-2, 3), Rational(2, 3)},
      {Rational(2, 7), Rational(3, 7), Rational(6, 7)},
      {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(-1, 2)},
      {Rational(1, 2), Rational(-1, 2), Rational(1, 2), Rational(1, 2)},
  };
  std::vector<std::vector<Rational>> seen;
  std::vector<UnitVector> out;
  auto push = [&](std::vector<Rational> v) {
    for (const auto& s : seen) {
      if (s == v) return;
    }
    seen.push_back(v);
    out.emplace_back(std::move(v));
  };
  for (const auto& pat : patterns) {
    const int len = static_cast<int>(pat.size());
    if (len > q) continue;
    for (int offset : {0, q - len}) {
      std::vector<Rational> v(static_cast<std::size_t>(q), Rational(0));
      for (int i = 0; i < len; ++i) v[static_cast<std::size_t>(offset + i)] = pat[static_cast<std::size_t>(i)];
      push(std::move(v));
    }
  }
  std::vector<Rational> neg(static_cast<std::size_t>(q), Rational(0));
  neg[0] = -1;
  push(std::move(neg));
  return out;
}

StemPair::StemPair(Signature sig, Polynomial f1, Polynomial f2)
    : sig_(sig), f1_(std::move(f1)), f2_(std::move(f2)) {
  const auto vars = stem_vars(sig_);
  require_vars(f1_, vars, "stem F1");
  require_vars(f2_, vars, "stem F2");
  for (const Polynomial* f : {&f1_, &f2_}) {
    for (const auto& [m, c] : f->terms()) {
      if (!c.fits(sig_)) throw InputError("stem coefficient uses a generator beyond p + q");
    }
  }
}

std::optional<std::string> StemPair::parity_violation() const {
  const std::size_t slot = r_slot(sig_);
  for (const auto& [m, c] : f1_.terms()) {
    if (m[slot] % 2 != 0) {
      return "F1 term " + format(Polynomial::term(f1_.vars(), m, c)) + " is odd in r";
    }
  }
  for (const auto& [m, c] : f2_.terms()) {
    if (m[slot] % 2 != 1) {
      return "F2 term " + format(Polynomial::term(f2_.vars(), m, c)) + " is even in r";
    }
  }
  return std::nullopt;
}

Polynomial one_vector_q(const Signature& sig) {
  const auto vars = ambient_vars(sig);
  Polynomial out(vars);
  for (int i = sig.p() + 1; i <= sig.n(); ++i) {
    out.add_term(Monomial(vars.size()).with(static_cast<std::size_t>(i), 1),
                 Multivector::blade(BladeMask{1} << (i - 1)));
  }
  return out;
}

Polynomial conj_paravector(const Signature& sig) {
  const auto vars = ambient_vars(sig);
  Polynomial out(vars);
  out.add_term(Monomial(vars.size()).with(0, 1), Multivector(1));
  for (int i = 1; i <= sig.n(); ++i) {
    out.add_term(Monomial(vars.size()).with(static_cast<std::size_t>(i), 1),
                 Multivector::blade(BladeMask{1} << (i - 1), -1));
  }
  return out;
}

Polynomial conj_paravector_p(const Signature& sig, const std::vector<std::string>& vars) {
  Polynomial out(vars);
  out.add_term(Monomial(vars.size()).with(out.var_index("x0"), 1), Multivector(1));
  for (int i = 1; i <= sig.p(); ++i) {
    out.add_term(Monomial(vars.size()).with(out.var_index("x" + std::to_string(i)), 1),
                 Multivector::blade(BladeMask{1} << (i - 1), -1));
  }
  return out;
}

SliceFunction induce(const StemPair& stem) {
  if (auto bad = stem.parity_violation()) throw ParityError("parity violation: " + *bad);
  const Signature& sig = stem.sig();
  Polynomial g1 = stem_to_gform(stem.f1(), sig);
  Polynomial g2 = odd_stem_to_gform(stem.f2(), sig);
  Polynomial ambient = substitute_radial(g1, sig) + one_vector_q(sig) * substitute_radial(g2, sig);
  return SliceFunction(stem, std::move(ambient), std::move(g1), std::move(g2));
}

Polynomial spherical_value(const SliceFunction& f) { return substitute_radial(f.g1(), f.sig()); }

Polynomial spherical_derivative(const SliceFunction& f) {
  return substitute_radial(f.g2(), f.sig());
}

// Columns are x_p^a rho^k with deg a + 2k = D; every blade of the input part
// is a separate right-hand side since substitution acts on scalars.
std::optional<Polynomial> is_symmetric(const Polynomial& p, const Signature& sig) {
  require_vars(p, ambient_vars(sig), "is_symmetric");
  const auto gvars = gform_vars(sig);
  const std::size_t np = static_cast<std::size_t>(sig.p()) + 1;
  const Polynomial rho = radial_square(sig);
  std::vector<Polynomial> rho_pow{Polynomial::constant(p.vars(), Multivector(1))};
  Polynomial g(gvars);

  for (const auto& part : p.homogeneous_parts()) {
    const int degree = part.degree();
    std::vector<Monomial> columns;
    std::vector<Polynomial> images;
    for (int k = 0; 2 * k <= degree; ++k) {
      while (rho_pow.size() <= static_cast<std::size_t>(k)) rho_pow.push_back(rho_pow.back() * rho);
      for (const auto& a : monomials_of_degree(np, static_cast<std::uint32_t>(degree - 2 * k))) {
        std::vector<std::uint32_t> ge(a.exponents().begin(), a.exponents().end());
        ge.push_back(static_cast<std::uint32_t>(k));
        columns.emplace_back(std::move(ge));
        std::vector<std::uint32_t> ae(p.var_count(), 0);
        std::copy(a.exponents().begin(), a.exponents().end(), ae.begin());
        images.push_back(Polynomial::term(p.vars(), Monomial(std::move(ae)), Multivector(1)) *
                         rho_pow[static_cast<std::size_t>(k)]);
      }
    }

    std::map<BladeMask, std::size_t> rhs_of;
    for (const auto& [m, c] : part.terms()) {
      for (const auto& [mask, v] : c.terms()) rhs_of.emplace(mask, rhs_of.size());
    }
    std::map<Monomial, std::pair<SparseRow, SparseRow>, GradedOrder> rows;
    for (std::size_t j = 0; j < images.size(); ++j) {
      for (const auto& [m, c] : images[j].terms()) rows[m].first.emplace_back(j, c.coeff(0));
    }
    for (const auto& [m, c] : part.terms()) {
      auto& row = rows[m];
      for (const auto& [mask, v] : c.terms()) row.second.emplace_back(rhs_of.at(mask), v);
    }
    LinearSystem system(columns.size(), rhs_of.size());
    for (auto& [m, row] : rows) system.add_row(std::move(row.first), std::move(row.second));
    const SolveResult sol = solve(system);
    for (const auto& [mask, k] : rhs_of) {
      const auto& x = sol.solutions[k];
      if (!x) return std::nullopt;
      for (std::size_t j = 0; j < columns.size(); ++j) {
        if ((*x)[j] != 0) g.add_term(columns[j], Multivector::blade(mask, (*x)[j]));
      }
    }
  }
  return g;
}

std::optional<SphericalParts> spherical_decompose(const Polynomial& ambient, const Signature& sig) {
  require_vars(ambient, ambient_vars(sig), "spherical_decompose");
  std::vector<std::size_t> perm(ambient.var_count());
  std::vector<int> signs(ambient.var_count(), 1);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    perm[i] = i;
    if (static_cast<int>(i) > sig.p()) signs[i] = -1;
  }
  const Polynomial reflected = signed_permutation(ambient, perm, signs);
  const Rational half(1, 2);
  Polynomial value = (ambient + reflected).scaled(half);
  const Polynomial odd = (ambient - reflected).scaled(half);
  // x_q^{-1} = -x_q / rho
  auto derivative = divide_by_radial_square(-(one_vector_q(sig) * odd), sig);
  if (!derivative) return std::nullopt;
  return SphericalParts{std::move(value), std::move(*derivative)};
}

std::optional<StemPair> extract_stem(const Polynomial& ambient, const Signature& sig) {
  auto parts = spherical_decompose(ambient, sig);
  if (!parts) return std::nullopt;
  auto g1 = is_symmetric(parts->value, sig);
  auto g2 = is_symmetric(parts->derivative, sig);
  if (!g1 || !g2) return std::nullopt;
  const auto svars = stem_vars(sig);
  const Polynomial r = Polynomial::variable(svars, "r");
  return StemPair(sig, gform_to_stem(*g1, sig), r * gform_to_stem(*g2, sig));
}

bool representation_formula_check(const SliceFunction& f, std::span<const Rational> x_p,
                                  const Rational& r, const UnitVector& omega,
                                  const UnitVector& eta) {
  const Signature& sig = f.sig();
  if (x_p.size() != static_cast<std::size_t>(sig.p()) + 1) {
    throw InputError("representation formula: x_p needs p + 1 components");
  }
  const Multivector om = omega.as_multivector(sig);
  const Multivector et = eta.as_multivector(sig);
  const Multivector lhs = f.ambient().evaluate(ambient_point(x_p, r, omega));
  const Multivector plus = f.ambient().evaluate(ambient_point(x_p, r, eta));
  const Multivector minus = f.ambient().evaluate(ambient_point(x_p, -r, eta));
  const Rational half(1, 2);
  const Multivector rhs = (plus + minus) * half + (om * et) * (minus - plus) * half;
  return lhs == rhs;
}

}  // namespace gpslice
