#include "gpslice/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "gpslice/json_io.hpp"

namespace gpslice {

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

struct Options {
  int p = 0;
  int q = 1;
  int degree = 0;
  int order = 0;
  int N = 1;
  std::string lambda = "0";
  std::string checks;
  std::string mode = "ab";
  std::string out_path;
  std::string input;
  std::string point;
  std::vector<std::string> operands;
  bool human = false;
  bool timing = false;
  bool omit_x0 = false;
};

struct CheckVerdict {
  std::string name;
  bool pass = false;
  std::string residual;  // first nonzero term, empty on success
  std::string note;
};

std::string first_term(const Polynomial& p) {
  if (p.is_zero()) return {};
  const auto& [m, c] = *p.terms().begin();
  return format(Polynomial::term(p.vars(), m, c));
}

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read input file '" + path + "'");
  ss << in.rdbuf();
  return ss.str();
}

std::string digest(std::string_view input, std::string_view flags) {
  const std::uint64_t h = fnv1a(flags, fnv1a(input));
  std::ostringstream ss;
  ss << "fnv1a:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out), start_(std::chrono::steady_clock::now()) {}

  int basis();
  int verify();
  int almansi();
  int vekua();
  int product();
  int eval();

 private:
  void emit(Json payload, const std::string& human);
  Json verdicts_json(const std::vector<CheckVerdict>& v) const;
  std::string verdicts_human(const std::vector<CheckVerdict>& v) const;

  const Options& o_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point start_;
};

void Runner::emit(Json payload, const std::string& human) {
  if (o_.timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_);
    payload["timing_ms"] = ms.count();
  }
  const std::string text = payload.dump(2) + "\n";
  if (!o_.out_path.empty()) {
    std::ofstream f(o_.out_path, std::ios::binary);
    if (!f) throw InputError("cannot write output file '" + o_.out_path + "'");
    f << text;
  }
  if (o_.human) {
    out_ << human;
  } else if (o_.out_path.empty()) {
    out_ << text;
  }
}

Json Runner::verdicts_json(const std::vector<CheckVerdict>& v) const {
  Json arr = Json::array();
  for (const auto& c : v) {
    Json j{{"name", c.name}, {"pass", c.pass}};
    j["residual"] = c.residual.empty() ? Json(nullptr) : Json(c.residual);
    if (!c.note.empty()) j["note"] = c.note;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string Runner::verdicts_human(const std::vector<CheckVerdict>& v) const {
  std::ostringstream ss;
  for (const auto& c : v) {
    ss << std::left << std::setw(22) << c.name << (c.pass ? "PASS" : "FAIL");
    if (!c.residual.empty()) ss << "  residual: " << c.residual;
    if (!c.note.empty()) ss << "  (" << c.note << ")";
    ss << "\n";
  }
  return ss.str();
}

bool all_pass(const std::vector<CheckVerdict>& v) {
  for (const auto& c : v) {
    if (!c.pass) return false;
  }
  return true;
}

int Runner::basis() {
  const Signature sig(o_.p, o_.q);
  if (o_.degree < 0) throw InputError("degree must be >= 0");
  const auto basis = gsr_basis(sig, o_.degree, o_.omit_x0);
  Json elements = Json::array();
  for (const auto& f : basis) elements.push_back(to_json(f.stem()));
  Json payload{{"command", "basis"},  {"p", o_.p},
               {"q", o_.q},           {"degree", o_.degree},
               {"omit_x0", o_.omit_x0}, {"dimension", basis.size()},
               {"elements", std::move(elements)}};
  std::ostringstream human;
  human << "GSR basis (p,q)=(" << o_.p << "," << o_.q << ") degree <= " << o_.degree << ": "
        << basis.size() << " elements\n";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    human << "  [" << i << "] F1 = " << format(basis[i].stem().f1())
          << ", F2 = " << format(basis[i].stem().f2()) << "\n";
  }
  emit(std::move(payload), human.str());
  return 0;
}

int Runner::verify() {
  const std::string text = read_input(o_.input);
  const StemPair stem = stem_from_json(parse_json(text));
  const Signature& sig = stem.sig();
  const bool odd_q = sig.q() % 2 == 1;

  std::vector<std::string> checks = split(o_.checks, ',');
  if (checks.empty()) {
    checks = {"gcr", "spherical", "hyperbolic", "repformula", "relation"};
    if (odd_q) {
      checks.push_back("fueter");
      checks.push_back("enhanced");
    }
  }
  for (const auto& c : checks) {
    static const std::vector<std::string> known = {"gcr",        "spherical", "fueter", "enhanced",
                                                   "hyperbolic", "repformula", "relation"};
    if (std::find(known.begin(), known.end(), c) == known.end()) {
      throw InputError("unknown check '" + c + "'");
    }
    if ((c == "fueter" || c == "enhanced") && !odd_q) {
      throw InputError("check '" + c + "' requires odd q");
    }
  }

  std::vector<CheckVerdict> verdicts;
  const auto parity = stem.parity_violation();
  verdicts.push_back({"parity", !parity.has_value(), parity.value_or(""), ""});
  std::optional<SliceFunction> f;
  if (!parity) f = induce(stem);

  for (const auto& c : checks) {
    CheckVerdict v{c, false, "", ""};
    if (c == "gcr") {
      const GCRResidual r = gcr_residual(stem);
      v.pass = r.is_zero();
      v.residual = r.r1.is_zero() ? first_term(r.r2) : first_term(r.r1);
    } else if (!f) {
      v.note = "skipped: stem pair violates parity";
    } else if (c == "spherical") {
      const auto rep = spherical_theorem_check(*f);
      v.pass = rep.all();
      std::string parts;
      auto mark = [&](const char* name, bool ok) { parts += std::string(name) + (ok ? "=pass " : "=fail "); };
      mark("i", rep.part_i);
      mark("ii", rep.part_ii);
      mark("iii", rep.part_iii);
      mark("iv", rep.part_iv);
      if (rep.part_v) mark("v", *rep.part_v);
      parts.pop_back();
      v.note = parts;
    } else if (c == "fueter") {
      const auto rep = fueter_sce_check(*f);
      v.pass = rep.monogenic;
      if (!v.pass) v.residual = first_term(dirac_ambient(rep.tau, sig));
      v.note = "tau = " + format(rep.tau);
    } else if (c == "enhanced") {
      const auto rep = fueter_sce_check(*f);
      v.pass = rep.monogenic && rep.polyharmonic;
      if (!rep.polyharmonic) v.residual = first_term(laplacian_ambient(f->ambient(), sig, (sig.q() + 1) / 2));
    } else if (c == "hyperbolic") {
      const auto rep = hyperbolic_check(*f);
      v.pass = rep.value_part && rep.derivative_part;
    } else if (c == "repformula") {
      const auto fixtures = sphere_fixtures(sig.q());
      std::vector<Rational> xp;
      for (int i = 0; i <= sig.p(); ++i) xp.emplace_back(Rational(i % 2 == 0 ? 1 : -1, i + 1));
      v.pass = true;
      std::size_t pairs = 0;
      for (std::size_t i = 0; i + 1 < fixtures.size() && pairs < 3; ++i, ++pairs) {
        v.pass = v.pass && representation_formula_check(*f, xp, Rational(2), fixtures[i], fixtures[i + 1]);
      }
      if (pairs == 0) v.pass = representation_formula_check(*f, xp, Rational(2), fixtures[0], fixtures[0]);
    } else if (c == "relation") {
      const Polynomial r = relation_residual(*f);
      v.pass = r.is_zero();
      v.residual = first_term(r);
    }
    verdicts.push_back(std::move(v));
  }

  const bool pass = all_pass(verdicts);
  Json payload{{"command", "verify"},
               {"p", sig.p()},
               {"q", sig.q()},
               {"input_digest", digest(text, "verify:" + o_.checks)},
               {"checks", verdicts_json(verdicts)},
               {"pass", pass}};
  emit(std::move(payload), verdicts_human(verdicts));
  return pass ? 0 : 1;
}

Json solves_json(const AlmansiResult& r) {
  Json arr = Json::array();
  for (const auto& s : r.solves) {
    arr.push_back(Json{{"degree", s.degree}, {"rank", s.rank}, {"unknowns", s.unknowns}});
  }
  return arr;
}

Json poly_list(const std::vector<Polynomial>& ps) {
  Json arr = Json::array();
  for (const auto& p : ps) arr.push_back(to_json(p));
  return arr;
}

int Runner::almansi() {
  const std::string text = read_input(o_.input);
  const Json doc = parse_json(text);
  const std::string flags = "almansi:" + o_.mode + ":" + std::to_string(o_.N);
  Json payload{{"command", "almansi"}, {"mode", o_.mode}, {"input_digest", digest(text, flags)}};
  std::vector<CheckVerdict> verdicts;
  auto cert = [&](const char* name, bool ok) { verdicts.push_back({name, ok, "", ""}); };

  if (o_.mode == "ab" || o_.mode == "starlike") {
    const SliceFunction f = induce(stem_from_json(doc));
    payload["p"] = f.sig().p();
    payload["q"] = f.sig().q();
    if (o_.mode == "ab") {
      const ABDecomposition ab = almansi_ab(f);
      const ABCertificate c = certify_ab(f, ab);
      payload["m"] = ab.m;
      payload["components"] = Json{{"A", to_json(ab.a)}, {"B", to_json(ab.b)}};
      cert("polyharmonic_A", c.polyharmonic_a);
      cert("polyharmonic_B", c.polyharmonic_b);
      cert("symmetric_A", c.symmetric_a);
      cert("symmetric_B", c.symmetric_b);
      cert("reconstruction", c.reconstruction);
      cert("cr2", c.cr2);
      cert("uniqueness", c.uniqueness);
    } else {
      const StarlikeDecomposition d = starlike_almansi(f);
      const StarlikeCertificate c = certify_starlike(f, d);
      payload["m"] = d.ab.m;
      payload["components"] = Json{{"g", poly_list(d.g)}, {"u", poly_list(d.u)}, {"v", poly_list(d.v)}};
      payload["ranks"] = Json{{"A", solves_json(d.a_solve)}, {"B", solves_json(d.b_solve)}};
      cert("reconstruction", c.reconstruction);
      cert("symmetric", c.symmetric);
      cert("kernel_D_laplacian", c.kernel);
      cert("unique", c.unique);
    }
  } else if (o_.mode == "classical" || o_.mode == "polymonogenic") {
    const Polynomial u = polynomial_from_json(doc);
    const bool classical = o_.mode == "classical";
    const AlmansiResult r = classical ? classical_almansi(u, o_.N) : polymonogenic_almansi(u, o_.N);
    payload["N"] = o_.N;
    payload["components"] = poly_list(r.components);
    payload["ranks"] = solves_json(r);
    Polynomial sum(u.vars());
    Polynomial weight = Polynomial::constant(u.vars(), Multivector(1));
    Polynomial step = Polynomial::constant(u.vars(), Multivector(1));
    bool kernel = true;
    if (classical) {
      step = norm_square(u.vars());
    } else {
      step = Polynomial(u.vars());
      for (std::size_t i = 0; i < u.var_count(); ++i) {
        step.add_term(Monomial(u.var_count()).with(i, 1), Multivector::blade(BladeMask{1} << i));
      }
    }
    for (const auto& c : r.components) {
      sum += weight * c;
      weight = weight * step;
      if (classical) {
        kernel = kernel && laplacian(c).is_zero();
      } else {
        Polynomial d(u.vars());
        for (std::size_t i = 0; i < u.var_count(); ++i) d += c.derivative(i).left_blade(BladeMask{1} << i);
        kernel = kernel && d.is_zero();
      }
    }
    cert("reconstruction", sum == u);
    cert(classical ? "harmonic" : "monogenic", kernel);
    cert("unique", r.unique());
  } else {
    throw InputError("unknown almansi mode '" + o_.mode + "'");
  }
  const bool pass = all_pass(verdicts);
  payload["certificates"] = verdicts_json(verdicts);
  payload["pass"] = pass;
  std::ostringstream human;
  human << "almansi mode " << o_.mode << "\n";
  if (payload["components"].is_object()) {
    for (const auto& [name, value] : payload["components"].items()) {
      if (value.is_array()) {
        for (std::size_t k = 0; k < value.size(); ++k) {
          human << "  " << name << "_" << k << " = " << format(polynomial_from_json(value[k])) << "\n";
        }
      } else {
        human << "  " << name << " = " << format(polynomial_from_json(value)) << "\n";
      }
    }
  } else {
    for (std::size_t k = 0; k < payload["components"].size(); ++k) {
      human << "  u_" << k << " = " << format(polynomial_from_json(payload["components"][k])) << "\n";
    }
  }
  human << verdicts_human(verdicts);
  emit(std::move(payload), human.str());
  return pass ? 0 : 1;
}

int Runner::vekua() {
  const Signature sig(o_.p, o_.q);
  const Rational lambda = parse_rational(o_.lambda);
  if (sig.q() % 2 == 0) throw InputError("vekua requires odd q");
  if (o_.order <= sig.q()) throw InputError("vekua requires order > q");
  const JetBasis jb = vekua_jet_basis(o_.p, o_.q, lambda, o_.order);
  Json system = Json::array();
  Json conclusions = Json::array();
  bool pass = true;
  std::ostringstream human;
  human << "Vekua jets (p,q)=(" << o_.p << "," << o_.q << ") lambda=" << to_string(lambda)
        << " order " << o_.order << ": " << jb.elements.size() << " elements\n";
  for (std::size_t i = 0; i < jb.elements.size(); ++i) {
    const auto [r1, r2] = vekua_residual(jb.elements[i], lambda);
    const int valid = vekua_valid_degree(o_.order);
    const bool sys_ok = r1.truncated(valid).is_zero() && r2.truncated(valid).is_zero();
    const bool concl = vekua_conclusion_check(jb.elements[i], lambda, o_.order);
    system.push_back(sys_ok);
    conclusions.push_back(concl);
    pass = pass && sys_ok && concl;
    human << "  [" << i << "] system " << (sys_ok ? "PASS" : "FAIL") << "  conclusion "
          << (concl ? "PASS" : "FAIL") << "\n";
  }
  Json payload{{"command", "vekua"},
               {"basis", to_json(jb)},
               {"system_valid_degree", vekua_valid_degree(o_.order)},
               {"conclusion_valid_degree", o_.order - sig.q()},
               {"system", std::move(system)},
               {"conclusion", std::move(conclusions)},
               {"pass", pass}};
  emit(std::move(payload), human.str());
  return pass ? 0 : 1;
}

Multivector operand(const std::string& s) {
  if (!s.empty() && (s.front() == '{' || s.front() == '"')) return multivector_from_json(parse_json(s));
  return Multivector(parse_rational(s));
}

int Runner::product() {
  const Signature sig(o_.p, o_.q);
  if (o_.operands.size() != 2) throw InputError("product takes exactly two multivectors");
  const Multivector a = operand(o_.operands[0]);
  const Multivector b = operand(o_.operands[1]);
  if (!a.fits(sig) || !b.fits(sig)) throw InputError("operand uses a generator beyond p + q");
  const Multivector ab = a * b;
  Json payload{{"command", "product"}, {"p", o_.p}, {"q", o_.q},
               {"a", to_json(a)},      {"b", to_json(b)}, {"product", to_json(ab)}};
  emit(std::move(payload), format(ab) + "\n");
  return 0;
}

int Runner::eval() {
  const Json doc = parse_json(read_input(o_.input));
  const Polynomial p = doc.contains("F1") ? induce(stem_from_json(doc)).ambient() : polynomial_from_json(doc);
  std::vector<Rational> pt;
  for (const auto& s : split(o_.point, ',')) pt.push_back(parse_rational(s));
  if (pt.size() != p.var_count()) {
    throw InputError("point has " + std::to_string(pt.size()) + " coordinates, expected " +
                     std::to_string(p.var_count()));
  }
  const Multivector v = p.evaluate(pt);
  Json point = Json::array();
  for (const auto& x : pt) point.push_back(to_json(x));
  Json payload{{"command", "eval"}, {"vars", p.vars()}, {"point", std::move(point)}, {"value", to_json(v)}};
  emit(std::move(payload), format(v) + "\n");
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact generalized partial-slice Clifford analysis engine", "gpslice"};
  app.require_subcommand(1);
  app.add_flag("--human", o.human, "Print a human-readable summary instead of JSON");
  app.add_flag("--timing", o.timing, "Add elapsed time to the report");
  app.add_option("--out", o.out_path, "Write the JSON payload to this file");

  auto sig_opts = [&](CLI::App* sub) {
    sub->add_option("-p", o.p, "Dimension of the paravector block")->required();
    sub->add_option("-q", o.q, "Dimension of the 1-vector block")->required();
  };

  auto* basis = app.add_subcommand("basis", "GSR polynomial basis up to a degree");
  sig_opts(basis);
  basis->add_option("-d,--degree", o.degree, "Maximal total degree")->required();
  basis->add_flag("--omit-x0", o.omit_x0, "Only stems independent of x0");

  auto* verify = app.add_subcommand("verify", "Run identity checks on a stem pair");
  verify->add_option("input", o.input, "Stem pair JSON file or - for stdin")->required();
  verify->add_option("--checks", o.checks,
                     "Comma list from gcr,spherical,fueter,enhanced,hyperbolic,repformula,relation");

  auto* alm = app.add_subcommand("almansi", "Almansi-type decompositions");
  alm->add_option("input", o.input, "Stem pair or polynomial JSON file")->required();
  alm->add_option("--mode", o.mode, "ab | starlike | classical | polymonogenic")
      ->check(CLI::IsMember({"ab", "starlike", "classical", "polymonogenic"}));
  alm->add_option("-N", o.N, "Polyharmonic or polymonogenic degree")->check(CLI::PositiveNumber);

  auto* vek = app.add_subcommand("vekua", "Vekua jet basis and conclusion check");
  sig_opts(vek);
  vek->add_option("--lambda", o.lambda, "Rational eigenvalue");
  vek->add_option("--order", o.order, "Truncation order")->required();

  auto* prod = app.add_subcommand("product", "Geometric product of two multivectors");
  sig_opts(prod);
  prod->add_option("operands", o.operands, "Two multivector JSON objects or rationals")->expected(2);

  auto* ev = app.add_subcommand("eval", "Evaluate a polynomial or induced stem pair");
  ev->add_option("input", o.input, "Polynomial or stem pair JSON file")->required();
  ev->add_option("--point", o.point, "Comma separated rational coordinates")->required();

  for (auto* sub : {basis, verify, alm, vek, prod, ev}) {
    sub->add_flag("--human", o.human, "Print a human-readable summary instead of JSON");
    sub->add_flag("--timing", o.timing, "Add elapsed time to the report");
    sub->add_option("--out", o.out_path, "Write the JSON payload to this file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Runner runner(o, out);
  try {
    if (*basis) return runner.basis();
    if (*verify) return runner.verify();
    if (*alm) return runner.almansi();
    if (*vek) return runner.vekua();
    if (*prod) return runner.product();
    if (*ev) return runner.eval();
  } catch (const PreconditionError& e) {
    Json payload{{"error", e.what()}, {"kind", "precondition"}};
    if (e.residual()) {
      payload["residual"] = first_term(*e.residual());
    }
    out << payload.dump(2) << "\n";
    err << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace gpslice
