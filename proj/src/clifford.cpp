#include "gpslice/clifford.hpp"

#include <algorithm>
#include <bit>

#include "gpslice/errors.hpp"

namespace gpslice {

Signature::Signature(int p, int q) : p_(p), q_(q) {
  if (p < 0) throw InputError("signature requires p >= 0, got p = " + std::to_string(p));
  if (q < 1) throw InputError("signature requires q >= 1, got q = " + std::to_string(q));
  if (p + q > kMaxGenerators) {
    throw InputError("signature requires p + q <= " + std::to_string(kMaxGenerators));
  }
}

// Reordering e_a e_b into increasing index order needs one transposition for
// every pair (i in a, j in b) with i > j; each shared generator then squares
// to -1.
BladeProduct blade_product(BladeMask a, BladeMask b) noexcept {
  int swaps = 0;
  for (BladeMask shifted = a >> 1; shifted != 0; shifted >>= 1) {
    swaps += std::popcount(shifted & b);
  }
  swaps += std::popcount(a & b);
  return {(swaps & 1) ? -1 : 1, a ^ b};
}

int grade(BladeMask mask) noexcept { return std::popcount(mask); }

// conj(e_A) = (-1)^k e_{j_k}..e_{j_1} = (-1)^k (-1)^{k(k-1)/2} e_A.
int conjugation_sign(BladeMask mask) noexcept {
  const int k = grade(mask);
  return ((k * (k + 1) / 2) & 1) ? -1 : 1;
}

namespace {

void canonicalize_terms(std::vector<Multivector::Term>& terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    BladeMask mask = terms[i].first;
    Rational sum = std::move(terms[i].second);
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].first == mask; ++j) sum += terms[j].second;
    if (sum != 0) terms[out++] = {mask, std::move(sum)};
    i = j;
  }
  terms.resize(out);
}

template <typename Op>
std::vector<Multivector::Term> merge(std::span<const Multivector::Term> a,
                                     std::span<const Multivector::Term> b, Op op) {
  std::vector<Multivector::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, op(Rational(0), b[j].second));
      ++j;
    } else {
      Rational v = op(a[i].second, b[j].second);
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Multivector::Multivector(const Rational& scalar) {
  if (scalar != 0) terms_.emplace_back(0u, scalar);
}

Multivector Multivector::blade(BladeMask mask, const Rational& coeff) {
  Multivector m;
  if (coeff != 0) m.terms_.emplace_back(mask, coeff);
  return m;
}

Multivector Multivector::from_terms(std::vector<Term> terms) {
  canonicalize_terms(terms);
  return Multivector(std::move(terms));
}

Rational Multivector::coeff(BladeMask mask) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                             [](const Term& t, BladeMask m) { return t.first < m; });
  if (it != terms_.end() && it->first == mask) return it->second;
  return 0;
}

BladeMask Multivector::max_mask() const noexcept {
  return terms_.empty() ? 0u : terms_.back().first;
}

Multivector& Multivector::operator+=(const Multivector& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  terms_ = merge(terms_, other.terms_, [](const Rational& x, const Rational& y) {
    return Rational(x + y);
  });
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& other) {
  if (other.is_zero()) return *this;
  terms_ = merge(terms_, other.terms_, [](const Rational& x, const Rational& y) {
    return Rational(x - y);
  });
  return *this;
}

Multivector& Multivector::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= s;
  }
  return *this;
}

Multivector operator-(Multivector a) {
  for (auto& t : a.terms_) t.second = -t.second;
  return a;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Multivector::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const auto [sign, mask] = blade_product(ma, mb);
      Rational c = ca * cb;
      if (sign < 0) c = -c;
      out.emplace_back(mask, std::move(c));
    }
  }
  canonicalize_terms(out);
  return Multivector(std::move(out));
}

Multivector Multivector::left_blade(BladeMask mask) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    const auto bp = blade_product(mask, m);
    out.emplace_back(bp.mask, bp.sign < 0 ? Rational(-c) : c);
  }
  std::sort(out.begin(), out.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  return Multivector(std::move(out));
}

Multivector Multivector::right_blade(BladeMask mask) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    const auto bp = blade_product(m, mask);
    out.emplace_back(bp.mask, bp.sign < 0 ? Rational(-c) : c);
  }
  std::sort(out.begin(), out.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  return Multivector(std::move(out));
}

Multivector mv_mul(const Multivector& a, const Multivector& b) { return a * b; }

Multivector conjugate(const Multivector& a) {
  std::vector<Multivector::Term> out;
  out.reserve(a.size());
  for (const auto& [m, c] : a.terms()) {
    out.emplace_back(m, conjugation_sign(m) < 0 ? Rational(-c) : c);
  }
  return Multivector::from_terms(std::move(out));
}

Rational norm_squared(const Multivector& a) {
  Rational sum = 0;
  for (const auto& t : a.terms()) sum += t.second * t.second;
  return sum;
}

Multivector grade_part(const Multivector& a, int k) {
  std::vector<Multivector::Term> out;
  for (const auto& t : a.terms()) {
    if (grade(t.first) == k) out.push_back(t);
  }
  return Multivector::from_terms(std::move(out));
}

Multivector one_vector(std::span<const Rational> components, int first_generator) {
  std::vector<Multivector::Term> out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const int gen = first_generator + static_cast<int>(i);
    out.emplace_back(BladeMask{1} << (gen - 1), components[i]);
  }
  return Multivector::from_terms(std::move(out));
}

std::string blade_label(BladeMask mask) {
  if (mask == 0) return "1";
  const bool wide = mask >= (1u << 9);
  std::string label = wide ? "e[" : "e";
  bool first = true;
  for (int i = 0; i < kMaxGenerators; ++i) {
    if (!(mask & (1u << i))) continue;
    if (wide && !first) label += ',';
    label += std::to_string(i + 1);
    first = false;
  }
  if (wide) label += ']';
  return label;
}

std::string format(const Multivector& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += blade_label(m);
    }
  }
  return out;
}

}  // namespace gpslice
