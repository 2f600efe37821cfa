#include "gpslice/diffops.hpp"

#include <vector>

namespace gpslice {

namespace {

enum class Domain { stem, ambient };

Domain domain_of(const Polynomial& P, const Signature& sig) {
  if (P.vars() == ambient_vars(sig)) return Domain::ambient;
  if (P.vars() == stem_vars(sig)) return Domain::stem;
  throw InputError("operator applied to a polynomial over neither stem nor ambient variables");
}

void require(Domain got, Domain want, const char* name) {
  if (got != want) {
    throw InputError(std::string(name) + " expects " +
                     (want == Domain::stem ? "stem" : "ambient") + " variables");
  }
}

// sum_k sign_k * e_{gen_k} * d_{var_k} P, gen 0 meaning the scalar unit.
struct DiracTerm {
  std::size_t var;
  int gen;
  int sign;
};

Polynomial dirac(const std::vector<DiracTerm>& terms, const Polynomial& P, Side side) {
  Polynomial out(P.vars());
  for (const auto& t : terms) {
    Polynomial d = P.derivative(t.var);
    if (t.gen > 0) {
      const BladeMask mask = BladeMask{1} << (t.gen - 1);
      d = side == Side::left ? d.left_blade(mask) : d.right_blade(mask);
    }
    if (t.sign < 0) {
      out -= d;
    } else {
      out += d;
    }
  }
  return out;
}

Polynomial second_derivatives(const std::vector<std::size_t>& vars, const Polynomial& P) {
  Polynomial out(P.vars());
  for (std::size_t v : vars) out += P.derivative(v).derivative(v);
  return out;
}

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> v;
  for (std::size_t i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

void check_domain(OperatorKind kind, Domain dom) {
  switch (kind) {
    case OperatorKind::dirac_ambient:
      return require(dom, Domain::ambient, "dirac_ambient");
    case OperatorKind::dirac_ambient_conj:
      return require(dom, Domain::ambient, "dirac_ambient_conj");
    case OperatorKind::laplacian_ambient:
      return require(dom, Domain::ambient, "laplacian_ambient");
    case OperatorKind::euler_radial:
      return require(dom, Domain::ambient, "euler_radial");
    case OperatorKind::laplacian_stem:
      return require(dom, Domain::stem, "laplacian_stem");
    case OperatorKind::d_r:
      return require(dom, Domain::stem, "d_r");
    default:
      return;
  }
}

Polynomial apply_once(const OperatorSpec& op, const Polynomial& P, const Signature& sig,
                      Domain dom) {
  const std::size_t p = static_cast<std::size_t>(sig.p());
  const std::size_t n = static_cast<std::size_t>(sig.n());
  const std::size_t last = P.var_count() - 1;
  auto dirac_terms = [](std::size_t lo, std::size_t hi, int sign) {
    std::vector<DiracTerm> t;
    for (std::size_t i = lo; i <= hi; ++i) t.push_back({i, static_cast<int>(i), i == 0 ? 1 : sign});
    return t;
  };
  switch (op.kind) {
    case OperatorKind::dirac_p:
      return dirac(dirac_terms(0, p, 1), P, op.side);
    case OperatorKind::dirac_p_conj:
      return dirac(dirac_terms(0, p, -1), P, op.side);
    case OperatorKind::dirac_ambient:
      return dirac(dirac_terms(0, n, 1), P, op.side);
    case OperatorKind::dirac_ambient_conj:
      return dirac(dirac_terms(0, n, -1), P, op.side);
    case OperatorKind::dirac_underline:
      if (dom == Domain::ambient) return dirac(dirac_terms(1, n, 1), P, op.side);
      return p == 0 ? Polynomial(P.vars()) : dirac(dirac_terms(1, p, 1), P, op.side);
    case OperatorKind::laplacian_stem:
      return second_derivatives(range(0, last), P);
    case OperatorKind::laplacian_ambient:
      return second_derivatives(range(0, last), P);
    case OperatorKind::laplacian_underline:
      return second_derivatives(range(1, last), P);
    case OperatorKind::d_r:
      return P.derivative(last);
    case OperatorKind::euler_radial: {
      Polynomial out(P.vars());
      for (std::size_t i = p + 1; i <= n; ++i) out += P.derivative(i).times_var(i);
      return out;
    }
    case OperatorKind::shifted_laplacian: {
      Polynomial out = second_derivatives(range(0, last), P);
      const Rational shift = op.sign * op.lambda * op.lambda;
      if (shift != 0) out += P.scaled(shift);
      return out;
    }
  }
  throw InputError("unknown operator kind");
}

}  // namespace

OperatorSpec OperatorSpec::of(OperatorKind kind, int power, Side side) {
  OperatorSpec op;
  op.kind = kind;
  op.power = power;
  op.side = side;
  return op;
}

OperatorSpec OperatorSpec::shifted(const Rational& lambda, int sign, int power) {
  OperatorSpec op;
  op.kind = OperatorKind::shifted_laplacian;
  op.power = power;
  op.lambda = lambda;
  op.sign = sign;
  return op;
}

Polynomial apply(const OperatorSpec& op, const Polynomial& P, const Signature& sig) {
  if (op.power < 0) throw InputError("operator power must be nonnegative");
  if (op.sign != 1 && op.sign != -1) throw InputError("operator sign must be +1 or -1");
  if (op.kind != OperatorKind::shifted_laplacian && op.lambda != 0) {
    throw InputError("lambda is only meaningful for the shifted Laplacian");
  }
  const Domain dom = domain_of(P, sig);
  check_domain(op.kind, dom);
  Polynomial out = P;
  for (int k = 0; k < op.power && !out.is_zero(); ++k) out = apply_once(op, out, sig, dom);
  return out;
}

Polynomial dirac_p(const Polynomial& P, const Signature& sig) {
  return apply(OperatorSpec::of(OperatorKind::dirac_p), P, sig);
}

Polynomial dirac_p_conj(const Polynomial& P, const Signature& sig) {
  return apply(OperatorSpec::of(OperatorKind::dirac_p_conj), P, sig);
}

Polynomial dirac_ambient(const Polynomial& P, const Signature& sig) {
  return apply(OperatorSpec::of(OperatorKind::dirac_ambient), P, sig);
}

Polynomial laplacian_ambient(const Polynomial& P, const Signature& sig, int power) {
  return apply(OperatorSpec::of(OperatorKind::laplacian_ambient, power), P, sig);
}

Polynomial laplacian_stem(const Polynomial& P, const Signature& sig) {
  return apply(OperatorSpec::of(OperatorKind::laplacian_stem), P, sig);
}

Polynomial d_r(const Polynomial& P, const Signature& sig) {
  return apply(OperatorSpec::of(OperatorKind::d_r), P, sig);
}

Polynomial euler_radial(const Polynomial& P, const Signature& sig) {
  return apply(OperatorSpec::of(OperatorKind::euler_radial), P, sig);
}

Polynomial laplacian(const Polynomial& P) {
  return P.var_count() == 0 ? Polynomial(P.vars())
                            : second_derivatives(range(0, P.var_count() - 1), P);
}

HyperbolicVerdict hyperbolic_check(const SliceFunction& f) {
  const Signature& sig = f.sig();
  const Polynomial rho = radial_square(sig);
  const Rational qm1 = sig.q() - 1;
  auto op = [&](const Polynomial& P) {
    return rho * laplacian_ambient(P, sig) - euler_radial(P, sig).scaled(qm1);
  };
  const Polynomial value = spherical_value(f);
  const Polynomial odd = one_vector_q(sig) * spherical_derivative(f);
  HyperbolicVerdict v;
  v.value_part = op(value).is_zero();
  v.derivative_part = (op(odd) + odd.scaled(qm1)).is_zero();
  return v;
}

Polynomial gsm_restriction_residual(const StemPair& stem, const UnitVector& omega) {
  const Signature& sig = stem.sig();
  const Multivector om = omega.as_multivector(sig);
  const Polynomial f = stem.f1() + stem.f2().left_mul(om);
  return dirac_p(f, sig) + d_r(f, sig).left_mul(om);
}

Polynomial induced_laplacian_residual(const StemPair& stem) {
  const Signature& sig = stem.sig();
  const SliceFunction f = induce(stem);
  const SliceFunction lap =
      induce(StemPair(sig, laplacian_stem(stem.f1(), sig), laplacian_stem(stem.f2(), sig)));
  const std::size_t t = static_cast<std::size_t>(sig.p()) + 1;
  const Polynomial correction =
      substitute_radial(f.g1().derivative(t), sig).scaled(2) +
      one_vector_q(sig) * substitute_radial(f.g2().derivative(t), sig).scaled(2);
  return laplacian_ambient(f.ambient(), sig) - lap.ambient() -
         correction.scaled(Rational(sig.q() - 1));
}

}  // namespace gpslice
