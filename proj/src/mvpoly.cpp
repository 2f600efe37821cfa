#include "gpslice/mvpoly.hpp"

#include <algorithm>
#include <numeric>

namespace gpslice {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::with(std::size_t i, std::uint32_t e) const {
  Monomial m = *this;
  m.degree_ = m.degree_ - m.exps_[i] + e;
  m.exps_[i] = e;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] += b.exps_[i];
  m.degree_ += b.degree_;
  return m;
}

bool GradedOrder::operator()(const Monomial& a, const Monomial& b) const noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Polynomial::Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

Polynomial Polynomial::constant(std::vector<std::string> vars, const Multivector& c) {
  Polynomial p(std::move(vars));
  p.add_term(Monomial(p.var_count()), c);
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> vars, std::string_view name) {
  Polynomial p(std::move(vars));
  const std::size_t i = p.var_index(name);
  p.add_term(Monomial(p.var_count()).with(i, 1), Multivector(1));
  return p;
}

Polynomial Polynomial::term(std::vector<std::string> vars, const Monomial& m,
                            const Multivector& c) {
  Polynomial p(std::move(vars));
  if (m.size() != p.var_count()) throw InputError("monomial arity does not match variables");
  p.add_term(m, c);
  return p;
}

std::optional<std::size_t> Polynomial::find_var(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Polynomial::var_index(std::string_view name) const {
  if (auto i = find_var(name)) return *i;
  throw InputError("unknown variable '" + std::string(name) + "'");
}

int Polynomial::degree() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
}

int Polynomial::min_degree() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

Multivector Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Multivector{} : it->second;
}

void Polynomial::add_term(const Monomial& m, const Multivector& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::require_same_vars(const Polynomial& other) const {
  if (vars_ != other.vars_) throw InputError("polynomials over different variable sets");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_vars(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_vars(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_vars(b);
  Polynomial out(a.vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::scaled(const Rational& s) const {
  Polynomial out(vars_);
  if (s == 0) return out;
  out.terms_ = terms_;
  for (auto& [m, c] : out.terms_) c *= s;
  return out;
}

Polynomial Polynomial::left_mul(const Multivector& c) const {
  Polynomial out(vars_);
  for (const auto& [m, v] : terms_) out.add_term(m, c * v);
  return out;
}

Polynomial Polynomial::right_mul(const Multivector& c) const {
  Polynomial out(vars_);
  for (const auto& [m, v] : terms_) out.add_term(m, v * c);
  return out;
}

Polynomial Polynomial::left_blade(BladeMask mask) const {
  Polynomial out(vars_);
  for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, v.left_blade(mask));
  return out;
}

Polynomial Polynomial::right_blade(BladeMask mask) const {
  Polynomial out(vars_);
  for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, v.right_blade(mask));
  return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= vars_.size()) throw InputError("derivative variable index out of range");
  Polynomial out(vars_);
  for (const auto& [m, c] : terms_) {
    const std::uint32_t e = m[var];
    if (e == 0) continue;
    out.add_term(m.with(var, e - 1), c * Rational(e));
  }
  return out;
}

Polynomial Polynomial::times_var(std::size_t var) const {
  Polynomial out(vars_);
  for (const auto& [m, c] : terms_) out.add_term(m.with(var, m[var] + 1), c);
  return out;
}

Multivector Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) {
    throw InputError("evaluation point has " + std::to_string(point.size()) +
                     " coordinates, polynomial has " + std::to_string(vars_.size()) +
                     " variables");
  }
  Multivector sum;
  for (const auto& [m, c] : terms_) {
    Rational value = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::uint32_t k = 0; k < m[i]; ++k) value *= point[i];
    }
    sum += c * value;
  }
  return sum;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial out(vars_);
  for (const auto& [m, c] : terms_) {
    if (static_cast<int>(m.degree()) == degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

std::vector<Polynomial> Polynomial::homogeneous_parts() const {
  std::vector<Polynomial> parts;
  for (const auto& [m, c] : terms_) {
    if (parts.empty() || parts.back().terms_.rbegin()->first.degree() != m.degree()) {
      parts.emplace_back(vars_);
    }
    parts.back().terms_.emplace_hint(parts.back().terms_.end(), m, c);
  }
  return parts;
}

Polynomial Polynomial::truncated(int max_degree) const {
  Polynomial out(vars_);
  for (const auto& [m, c] : terms_) {
    if (static_cast<int>(m.degree()) > max_degree) break;
    out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

Polynomial Polynomial::with_vars(const std::vector<std::string>& vars) const {
  std::vector<std::optional<std::size_t>> target(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (vars[j] == vars_[i]) target[i] = j;
    }
  }
  Polynomial out(vars);
  for (const auto& [m, c] : terms_) {
    std::vector<std::uint32_t> e(vars.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!target[i]) throw InputError("variable '" + vars_[i] + "' not present in target set");
      e[*target[i]] = m[i];
    }
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

std::size_t term_count(const Polynomial& p) {
  std::size_t n = 0;
  for (const auto& [m, c] : p.terms()) n += c.size();
  return n;
}

Polynomial partial_derivative(const Polynomial& p, std::string_view var) {
  return p.derivative(p.var_index(var));
}

Multivector evaluate(const Polynomial& p, std::span<const Rational> point) {
  return p.evaluate(point);
}

std::vector<Polynomial> homogeneous_parts(const Polynomial& p) { return p.homogeneous_parts(); }

std::vector<std::string> ambient_vars(const Signature& sig) {
  std::vector<std::string> v;
  for (int i = 0; i <= sig.n(); ++i) v.push_back("x" + std::to_string(i));
  return v;
}

std::vector<std::string> stem_vars(const Signature& sig) {
  std::vector<std::string> v;
  for (int i = 0; i <= sig.p(); ++i) v.push_back("x" + std::to_string(i));
  v.push_back("r");
  return v;
}

std::vector<std::string> gform_vars(const Signature& sig) {
  std::vector<std::string> v;
  for (int i = 0; i <= sig.p(); ++i) v.push_back("x" + std::to_string(i));
  v.push_back("t");
  return v;
}

Polynomial radial_square(const Signature& sig) {
  const auto vars = ambient_vars(sig);
  Polynomial rho(vars);
  for (int i = sig.p() + 1; i <= sig.n(); ++i) {
    rho.add_term(Monomial(vars.size()).with(static_cast<std::size_t>(i), 2), Multivector(1));
  }
  return rho;
}

Polynomial norm_square(const std::vector<std::string>& vars) {
  Polynomial sq(vars);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    sq.add_term(Monomial(vars.size()).with(i, 2), Multivector(1));
  }
  return sq;
}

Polynomial substitute_radial(const Polynomial& gform, const Signature& sig) {
  if (gform.vars() != gform_vars(sig)) {
    throw InputError("substitute_radial expects variables (x0..xp, t)");
  }
  const auto vars = ambient_vars(sig);
  const std::size_t tslot = static_cast<std::size_t>(sig.p()) + 1;
  const Polynomial rho = radial_square(sig);
  std::vector<Polynomial> powers{Polynomial::constant(vars, Multivector(1))};
  Polynomial out(vars);
  for (const auto& [m, c] : gform.terms()) {
    const std::uint32_t k = m[tslot];
    while (powers.size() <= k) powers.push_back(powers.back() * rho);
    std::vector<std::uint32_t> e(vars.size(), 0);
    for (std::size_t i = 0; i < tslot; ++i) e[i] = m[i];
    const Monomial shift(std::move(e));
    for (const auto& [pm, pc] : powers[k].terms()) out.add_term(shift * pm, pc * c);
  }
  return out;
}

Polynomial gform_to_stem(const Polynomial& gform, const Signature& sig) {
  if (gform.vars() != gform_vars(sig)) throw InputError("expected G-form variables (x0..xp, t)");
  const std::size_t slot = static_cast<std::size_t>(sig.p()) + 1;
  Polynomial out(stem_vars(sig));
  for (const auto& [m, c] : gform.terms()) out.add_term(m.with(slot, 2 * m[slot]), c);
  return out;
}

Polynomial stem_to_gform(const Polynomial& stem, const Signature& sig) {
  if (stem.vars() != stem_vars(sig)) throw InputError("expected stem variables (x0..xp, r)");
  const std::size_t slot = static_cast<std::size_t>(sig.p()) + 1;
  Polynomial out(gform_vars(sig));
  for (const auto& [m, c] : stem.terms()) {
    if (m[slot] % 2 != 0) throw InputError("stem_to_gform: odd power of r");
    out.add_term(m.with(slot, m[slot] / 2), c);
  }
  return out;
}

Polynomial odd_stem_to_gform(const Polynomial& stem, const Signature& sig) {
  if (stem.vars() != stem_vars(sig)) throw InputError("expected stem variables (x0..xp, r)");
  const std::size_t slot = static_cast<std::size_t>(sig.p()) + 1;
  Polynomial out(gform_vars(sig));
  for (const auto& [m, c] : stem.terms()) {
    if (m[slot] % 2 != 1) throw InputError("odd_stem_to_gform: even power of r");
    out.add_term(m.with(slot, (m[slot] - 1) / 2), c);
  }
  return out;
}

Polynomial signed_permutation(const Polynomial& p, std::span<const std::size_t> perm,
                              std::span<const int> signs) {
  if (perm.size() != p.var_count() || signs.size() != p.var_count()) {
    throw InputError("signed permutation arity mismatch");
  }
  Polynomial out(p.vars());
  for (const auto& [m, c] : p.terms()) {
    std::vector<std::uint32_t> e(m.size(), 0);
    int sign = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      e[perm[i]] += m[i];
      if (signs[i] < 0 && (m[i] & 1)) sign = -sign;
    }
    out.add_term(Monomial(std::move(e)), sign < 0 ? -c : c);
  }
  return out;
}

// rho is monic of degree 2 in the last variable v = x_n: rho = v^2 + s. Long
// division in v leaves a remainder of v-degree < 2, zero iff rho | p.
std::optional<Polynomial> divide_by_radial_square(const Polynomial& p, const Signature& sig) {
  if (p.vars() != ambient_vars(sig)) throw InputError("expected ambient variables");
  const std::size_t v = static_cast<std::size_t>(sig.n());
  const Polynomial rho = radial_square(sig);
  Polynomial rem = p;
  Polynomial quot(p.vars());
  while (true) {
    const Monomial* lead = nullptr;
    for (const auto& [m, c] : rem.terms()) {
      if (m[v] >= 2 && (!lead || m[v] > (*lead)[v])) lead = &m;
    }
    if (!lead) break;
    const Monomial q = lead->with(v, (*lead)[v] - 2);
    const Multivector c = rem.coeff(*lead);
    quot.add_term(q, c);
    rem -= Polynomial::term(p.vars(), q, c) * rho;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

std::string format(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool lead = first;
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += p.vars()[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    const bool compound = c.size() > 1;
    std::string coeff = format(c);
    if (!compound && coeff.front() == '-') {
      out += lead ? "-" : " - ";
      coeff.erase(0, 1);
    } else if (!lead) {
      out += " + ";
    }
    if (mono.empty()) {
      out += compound ? "(" + coeff + ")" : coeff;
    } else if (!compound && coeff == "1") {
      out += mono;
    } else {
      out += (compound ? "(" + coeff + ")" : coeff) + "*" + mono;
    }
  }
  return out;
}

namespace {

void fill_compositions(std::vector<std::uint32_t>& cur, std::size_t slot, std::uint32_t left,
                       std::vector<Monomial>& out) {
  if (slot + 1 == cur.size()) {
    cur[slot] = left;
    out.emplace_back(cur);
    return;
  }
  for (std::uint32_t e = 0; e <= left; ++e) {
    cur[slot] = e;
    fill_compositions(cur, slot + 1, left - e, out);
  }
  cur[slot] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<std::uint32_t> cur(nvars, 0);
  fill_compositions(cur, 0, degree, out);
  std::sort(out.begin(), out.end(), GradedOrder{});
  return out;
}

}  // namespace gpslice
