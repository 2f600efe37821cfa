#include "gpslice/json_io.hpp"

#include <cstdlib>

namespace gpslice {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::string hex_mask(BladeMask mask) {
  static const char* digits = "0123456789abcdef";
  if (mask == 0) return "0x0";
  std::string out;
  for (BladeMask m = mask; m != 0; m >>= 4) out.insert(out.begin(), digits[m & 0xf]);
  return "0x" + out;
}

BladeMask parse_mask(const std::string& s) {
  if (s.size() < 3 || s[0] != '0' || (s[1] != 'x' && s[1] != 'X')) {
    throw InputError("blade mask must be a hex string like \"0x3\", got '" + s + "'");
  }
  char* end = nullptr;
  const unsigned long v = std::strtoul(s.c_str() + 2, &end, 16);
  if (*end != '\0' || v >= (1ul << kMaxGenerators)) throw InputError("invalid blade mask '" + s + "'");
  return static_cast<BladeMask>(v);
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError("rational must be a string \"num/den\" or an integer");
}

Json to_json(const Multivector& m) {
  Json out = Json::object();
  for (const auto& [mask, c] : m.terms()) out[hex_mask(mask)] = to_json(c);
  return out;
}

Multivector multivector_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return Multivector(rational_from_json(j));
  if (!j.is_object()) throw InputError("multivector must be an object of blade masks");
  std::vector<Multivector::Term> terms;
  for (const auto& [key, value] : j.items()) terms.emplace_back(parse_mask(key), rational_from_json(value));
  return Multivector::from_terms(std::move(terms));
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json exp = Json::array();
    for (auto e : m.exponents()) exp.push_back(e);
    terms.push_back(Json{{"exp", std::move(exp)}, {"coeff", to_json(c)}});
  }
  return Json{{"vars", p.vars()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const Json& j) {
  const Json& vars_j = field(j, "vars");
  if (!vars_j.is_array()) throw InputError("'vars' must be an array");
  std::vector<std::string> vars;
  for (const auto& v : vars_j) {
    if (!v.is_string()) throw InputError("variable names must be strings");
    vars.push_back(v.get<std::string>());
  }
  Polynomial p(vars);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw InputError("'terms' must be an array");
  for (const auto& t : terms) {
    const Json& exp = field(t, "exp");
    if (!exp.is_array() || exp.size() != vars.size()) {
      throw InputError("term exponent length must match the variable count");
    }
    std::vector<std::uint32_t> e;
    for (const auto& x : exp) {
      if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long>() >= 0)) {
        throw InputError("exponents must be nonnegative integers");
      }
      e.push_back(x.get<std::uint32_t>());
    }
    p.add_term(Monomial(std::move(e)), multivector_from_json(field(t, "coeff")));
  }
  return p;
}

Json to_json(const StemPair& s) {
  return Json{{"p", s.sig().p()}, {"q", s.sig().q()}, {"F1", to_json(s.f1())}, {"F2", to_json(s.f2())}};
}

StemPair stem_from_json(const Json& j) {
  const Signature sig(int_field(j, "p"), int_field(j, "q"));
  return StemPair(sig, polynomial_from_json(field(j, "F1")), polynomial_from_json(field(j, "F2")));
}

Json to_json(const JetBasis& b) {
  Json elements = Json::array();
  for (const auto& e : b.elements) elements.push_back(to_json(e));
  return Json{{"kind", b.kind},   {"p", b.sig.p()},        {"q", b.sig.q()},
              {"lambda", to_json(b.lambda)}, {"sign", b.sign}, {"order", b.order},
              {"omit_x0", b.omit_x0}, {"elements", std::move(elements)}};
}

JetBasis jet_basis_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw InputError("'kind' must be a string");
  const Json& omit = field(j, "omit_x0");
  if (!omit.is_boolean()) throw InputError("'omit_x0' must be a boolean");
  JetBasis b{kind.get<std::string>(),
             Signature(int_field(j, "p"), int_field(j, "q")),
             rational_from_json(field(j, "lambda")),
             j.contains("sign") ? int_field(j, "sign") : 1,
             int_field(j, "order"),
             omit.get<bool>(),
             {}};
  const Json& elements = field(j, "elements");
  if (!elements.is_array()) throw InputError("'elements' must be an array");
  for (const auto& e : elements) {
    StemPair s = stem_from_json(e);
    if (s.sig() != b.sig) throw InputError("jet element signature differs from the basis");
    b.elements.push_back(std::move(s));
  }
  return b;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace gpslice
