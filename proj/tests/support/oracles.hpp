#pragma once

// Independent reference implementations and random generators shared by the
// unit tests and the acceptance binary. Nothing here calls the library code
// it is used to check.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "gpslice/almansi.hpp"

namespace oracle {

using gpslice::BladeMask;
using gpslice::Multivector;
using gpslice::Polynomial;
using gpslice::Rational;

// e_a e_b by writing out both generator lists, bubble-sorting adjacent pairs
// (each swap flips the sign) and cancelling e_i e_i = -1.
inline std::pair<int, BladeMask> reorder_product(BladeMask a, BladeMask b) {
  std::vector<int> gens;
  for (int i = 0; i < 32; ++i) {
    if (a & (1u << i)) gens.push_back(i + 1);
  }
  for (int i = 0; i < 32; ++i) {
    if (b & (1u << i)) gens.push_back(i + 1);
  }
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < gens.size(); ++k) {
      if (gens[k] > gens[k + 1]) {
        std::swap(gens[k], gens[k + 1]);
        sign = -sign;
        changed = true;
      } else if (gens[k] == gens[k + 1]) {
        gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(k), gens.begin() + static_cast<std::ptrdiff_t>(k) + 2);
        sign = -sign;
        changed = true;
        break;
      }
    }
  }
  BladeMask mask = 0;
  for (int g : gens) mask |= 1u << (g - 1);
  return {sign, mask};
}

// Dense geometric product through the reordering oracle.
inline Multivector product(const Multivector& a, const Multivector& b) {
  std::vector<Multivector::Term> terms;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const auto [s, m] = reorder_product(ma, mb);
      terms.emplace_back(m, Rational(s * ca * cb));
    }
  }
  return Multivector::from_terms(std::move(terms));
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }

  Rational rational(int range = 5, int max_den = 4) {
    Rational r(uniform(-range, range), uniform(1, max_den));
    r.canonicalize();
    return r;
  }

  Multivector multivector(int n, int max_terms = 6) {
    std::vector<Multivector::Term> terms;
    const int count = uniform(1, max_terms);
    for (int k = 0; k < count; ++k) {
      terms.emplace_back(static_cast<BladeMask>(uniform(0, (1 << n) - 1)), rational());
    }
    return Multivector::from_terms(std::move(terms));
  }

  Polynomial polynomial(const std::vector<std::string>& vars, int n, int max_degree,
                        int max_terms = 6, int blade_terms = 2) {
    Polynomial p(vars);
    const int count = uniform(0, max_terms);
    for (int k = 0; k < count; ++k) {
      const int deg = uniform(0, max_degree);
      std::vector<std::uint32_t> e(vars.size(), 0);
      for (int d = 0; d < deg; ++d) ++e[static_cast<std::size_t>(uniform(0, static_cast<int>(vars.size()) - 1))];
      p.add_term(gpslice::Monomial(std::move(e)), multivector(n, blade_terms));
    }
    return p;
  }

  // Stem pair with the even/odd r-parity, not necessarily regular.
  gpslice::StemPair stem(const gpslice::Signature& sig, int max_degree, int max_terms = 5) {
    const auto vars = gpslice::stem_vars(sig);
    const std::size_t r = vars.size() - 1;
    Polynomial f1(vars), f2(vars);
    for (int which = 0; which < 2; ++which) {
      Polynomial raw = polynomial(vars, sig.n(), max_degree, max_terms);
      for (const auto& [m, c] : raw.terms()) {
        const bool odd = m[r] % 2 == 1;
        if (which == 0 && !odd) f1.add_term(m, c);
        if (which == 1 && odd) f2.add_term(m, c);
      }
    }
    return gpslice::StemPair(sig, std::move(f1), std::move(f2));
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

// Fischer triangular peeling for the classical decomposition of a harmonic
// expansion: for harmonic homogeneous h of degree a in D variables,
// Delta(|x|^{2s} h) = 2s(2s + 2a + D - 2)|x|^{2s-2} h. Taking the largest K with
// Delta^K u_d != 0 for the degree-d part u_d gives h_K = Delta^K u_d / c_K;
// subtract |x|^{2K} h_K and repeat.
inline std::vector<Polynomial> fischer_peel(const Polynomial& u, int N) {
  const auto& vars = u.vars();
  const int D = static_cast<int>(vars.size());
  auto lap = [](const Polynomial& p) {
    Polynomial out(p.vars());
    for (std::size_t i = 0; i < p.var_count(); ++i) out += p.derivative(i).derivative(i);
    return out;
  };
  Polynomial norm2(vars);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    norm2.add_term(gpslice::Monomial(vars.size()).with(i, 2), Multivector(1));
  }
  std::vector<Polynomial> out(static_cast<std::size_t>(N), Polynomial(vars));
  for (Polynomial part : u.homogeneous_parts()) {
    const int d = part.degree();
    while (!part.is_zero()) {
      int K = 0;
      Polynomial top = part;
      while (true) {
        Polynomial next = lap(top);
        if (next.is_zero()) break;
        top = std::move(next);
        ++K;
      }
      const int a = d - 2 * K;
      Rational c = 1;
      for (int s = 1; s <= K; ++s) c *= 2 * s * (2 * s + 2 * a + D - 2);
      const Polynomial h = top.scaled(1 / c);
      Polynomial weight = Polynomial::constant(vars, Multivector(1));
      for (int s = 0; s < K; ++s) weight = weight * norm2;
      out.at(static_cast<std::size_t>(K)) += h;
      part -= weight * h;
    }
  }
  return out;
}

}  // namespace oracle
