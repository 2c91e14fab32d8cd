#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fc/batch.hpp"
#include "fc/error.hpp"
#include "fc/h2.hpp"
#include "fc/json_io.hpp"
#include "fc/lie.hpp"
#include "fc/mappings.hpp"
#include "fc/parser.hpp"
#include "fc/tapering.hpp"
#include "fc/verify.hpp"

namespace fc::cli {

namespace {

constexpr const char* kGrammar = R"(Expression grammar:
  sum    := [qubits: N | modes: N] term (('+'|'-') term)*
  term   := (scalar '*')* factor+  |  scalar
  scalar := 3 | 1/4 | 0.5 | v0101 | i | sqrt2 | (re,im) | (1/2*h00 - 1/4*v0101)
  pauli factors     X0 Y1 Z2, I
  majorana factors  g1(0) g2(0) g3(0), I
  fermion factors   a0^ a0 n0 h0 (or a+(0) a(0) n(0) h(0)), I
Generators: halfbody-(p) halfbody+(p) pair-(p,q) pair+(p,q) exc-(p,q) exc+(p,q) num(p)
Angles: pi/2, 3pi/4, -pi, or decimal radians
)";

class UsageError : public Error {
 public:
  using Error::Error;
};

class VerificationFailure : public Error {
 public:
  using Error::Error;
};

enum class Alg { Pauli, Majorana, Fermion };

Alg parse_alg(const std::string& s) {
  if (s == "pauli") return Alg::Pauli;
  if (s == "majorana") return Alg::Majorana;
  if (s == "fermion") return Alg::Fermion;
  throw UsageError("unknown algebra '" + s + "' (pauli, majorana, fermion)");
}

std::string caret(const std::string& text, const ParseError& e) {
  std::string pointer(std::min(e.position(), text.size()), ' ');
  return "  " + text + "\n  " + pointer + "^";
}

template <class F>
auto parse_input(const std::string& text, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw UsageError(std::string("parse error: ") + e.what() + "\n" + caret(text, e));
  }
}

double tolerance() {
  if (const char* t = std::getenv("FC_TOL")) {
    try {
      return std::stod(t);
    } catch (const std::logic_error&) {
      throw UsageError(std::string("FC_TOL is not a number: ") + t);
    }
  }
  return 1e-10;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::vector<std::size_t> parse_targets(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoul(item));
    } catch (const std::logic_error&) {
      throw UsageError("bad target list '" + s + "'");
    }
  }
  return out;
}

struct Options {
  bool json = false;
  bool floating = false;
};

template <class Sum>
Sum mode(const Sum& s, const Options& o) {
  return o.floating ? s.to_float() : s;
}

std::string render(const PauliSum& s) { return format(s); }
std::string render(const MajoranaSum& s) { return format(s); }
std::string render(const FermionicSum& s) { return format(s); }

template <class Sum>
void emit(std::ostream& out, const Options& o, const Sum& s) {
  if (o.json) {
    Json j;
    j["width"] = s.width();
    j["result"] = render(s);
    out << j.dump(2) << "\n";
  } else {
    out << render(s) << "\n";
  }
}

// --- subcommands -----------------------------------------------------------

void cmd_mul(std::ostream& out, const Options& o, const std::string& alg, const std::string& a, const std::string& b,
             std::size_t width) {
  switch (parse_alg(alg)) {
    case Alg::Pauli: {
      auto x = parse_input(a, [&] { return parse_pauli(a, width); });
      auto y = parse_input(b, [&] { return parse_pauli(b, width ? width : x.width()); });
      emit(out, o, mode(x, o) * mode(y, o));
      break;
    }
    case Alg::Majorana: {
      auto x = parse_input(a, [&] { return parse_majorana(a, width); });
      auto y = parse_input(b, [&] { return parse_majorana(b, width ? width : x.width()); });
      emit(out, o, mode(x, o) * mode(y, o));
      break;
    }
    case Alg::Fermion: {
      auto x = parse_input(a, [&] { return parse_fermion(a, width); });
      auto y = parse_input(b, [&] { return parse_fermion(b, width ? width : x.width()); });
      emit(out, o, mode(x, o) * mode(y, o));
      break;
    }
  }
}

template <class Sum, class Str, class F>
Sum conj_sum(const Sum& o, F&& f) {
  Sum out(o.width());
  for (const auto& [s, c] : o) out += f(s) * c;
  return out;
}

void cmd_conj(std::ostream& out, const Options& o, const std::string& alg, const std::string& expr,
              const std::string& gen, const std::string& theta_text, std::size_t width) {
  auto angle = [&](std::optional<Angle> inline_theta) {
    if (!theta_text.empty()) return Angle::parse(theta_text);
    if (inline_theta) return *inline_theta;
    throw UsageError("conj needs --theta (or a generator suffix like @pi/2)");
  };
  switch (parse_alg(alg)) {
    case Alg::Fermion: {
      auto [g, inline_theta] = parse_input(gen, [&] { return parse_generator(gen); });
      Angle theta = angle(inline_theta);
      auto x = parse_input(expr, [&] { return parse_fermion(expr, width); });
      std::size_t need = std::max(g.p, g.kind == GenKind::PairCreate || g.kind == GenKind::SingleExc ? g.q : 0) + 1;
      if (x.width() < need) {
        if (width) throw UsageError("generator acts outside the declared register");
        x = parse_input(expr, [&] { return parse_fermion(expr, need); });
      }
      g.validate(x.width());
      emit(out, o, conjugate_terms(mode(x, o), g, theta));
      break;
    }
    case Alg::Pauli: {
      if (theta_text.empty()) throw UsageError("conj needs --theta");
      Angle theta = Angle::parse(theta_text);
      auto p = parse_input(gen, [&] { return parse_pauli(gen, width); });
      auto x = parse_input(expr, [&] { return parse_pauli(expr, std::max(width, p.width())); });
      if (x.width() != p.width()) p = parse_input(gen, [&] { return parse_pauli(gen, x.width()); });
      if (p.size() != 1 || !(p.begin()->second == Coeff::one()))
        throw UsageError("Pauli generator must be a single bare string");
      const PauliString& ps = p.begin()->first;
      emit(out, o, conj_sum<PauliSum, PauliString>(mode(x, o), [&](const PauliString& s) {
             return pauli_conjugate(s, ps, theta);
           }));
      break;
    }
    case Alg::Majorana: {
      if (theta_text.empty()) throw UsageError("conj needs --theta");
      Angle theta = Angle::parse(theta_text);
      auto p = parse_input(gen, [&] { return parse_majorana(gen, width); });
      auto x = parse_input(expr, [&] { return parse_majorana(expr, std::max(width, p.width())); });
      if (x.width() != p.width()) p = parse_input(gen, [&] { return parse_majorana(gen, x.width()); });
      if (p.size() != 1 || !(p.begin()->second == Coeff::one()))
        throw UsageError("Majorana generator must be a single bare string");
      const MajoranaString& gs = p.begin()->first;
      emit(out, o, conj_sum<MajoranaSum, MajoranaString>(mode(x, o), [&](const MajoranaString& s) {
             return maj_conjugate(s, gs, theta);
           }));
      break;
    }
  }
}

void cmd_map(std::ostream& out, const Options& o, const std::string& from, const std::string& to,
             const std::string& expr, std::size_t width) {
  Alg a = parse_alg(from), b = parse_alg(to);
  switch (a) {
    case Alg::Fermion: {
      auto x = mode(parse_input(expr, [&] { return parse_fermion(expr, width); }), o);
      if (b == Alg::Pauli) return emit(out, o, jw_fermion_to_pauli(x, x.width()));
      if (b == Alg::Majorana) return emit(out, o, fermion_to_majorana(x));
      return emit(out, o, x);
    }
    case Alg::Majorana: {
      auto x = mode(parse_input(expr, [&] { return parse_majorana(expr, width); }), o);
      if (b == Alg::Pauli) return emit(out, o, jw_majorana_to_pauli(x, x.width()));
      if (b == Alg::Fermion) return emit(out, o, majorana_to_fermion(x));
      return emit(out, o, x);
    }
    case Alg::Pauli: {
      auto x = mode(parse_input(expr, [&] { return parse_pauli(expr, width); }), o);
      if (b == Alg::Fermion) return emit(out, o, inverse_jw(x, x.width()));
      if (b == Alg::Majorana) return emit(out, o, fermion_to_majorana(inverse_jw(x, x.width())));
      return emit(out, o, x);
    }
  }
}

void cmd_find_syms(std::ostream& out, const Options& o, const std::string& file) {
  PauliSum h = parse_input(file, [&] { return hamiltonian_from_json(read_json_file(file)); });
  SymmetryGroup s = find_z2_symmetries(h);
  auto targets = auto_targets(s);
  if (o.json) {
    Json j;
    j["n_qubits"] = s.n_qubits;
    Json gens = Json::array();
    for (const auto& g : s.generators) gens.push_back(g.label());
    j["generators"] = gens;
    j["targets"] = targets;
    out << j.dump(2) << "\n";
    return;
  }
  out << s.generators.size() << " generator(s) on " << s.n_qubits << " qubits\n";
  for (std::size_t k = 0; k < s.generators.size(); ++k)
    out << "  " << s.generators[k].label() << "  target " << targets[k] << "\n";
}

void cmd_taper_run(std::ostream& out, const Options& o, const std::string& file, const std::string& sector,
                   const std::string& targets_text) {
  PauliSum h = mode(parse_input(file, [&] { return hamiltonian_from_json(read_json_file(file)); }), o);
  SymmetryGroup s = find_z2_symmetries(h);
  auto targets = targets_text.empty() ? auto_targets(s) : parse_targets(targets_text);
  std::vector<int> sec;
  try {
    sec = parse_sector(sector);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (sec.size() != s.generators.size())
    throw UsageError("sector has " + std::to_string(sec.size()) + " signs but the Hamiltonian has " +
                     std::to_string(s.generators.size()) + " symmetry generators");
  TaperingPlan plan = build_tapering_plan(s, targets, sec);
  PauliSum tapered = taper_qubits(conjugate_hamiltonian(h, plan), plan);
  if (o.json) {
    out << hamiltonian_to_json(tapered).dump(2) << "\n";
  } else {
    out << "qubits: " << tapered.width() << "\n" << format(tapered) << "\n";
  }
}

void cmd_demo_h2(std::ostream& out, const Options& o, const std::string& integrals_file) {
  std::optional<Bindings> values;
  if (!integrals_file.empty()) {
    Json j = read_json_file(integrals_file);
    Bindings b;
    for (const auto& name : h2::integral_names()) {
      if (!j.contains(name) || !j[name].is_number()) throw UsageError(integrals_file + ": missing number for " + name);
      b[name] = j[name].get<double>();
    }
    values = b;
  }
  h2::Report r = h2::demo(values);
  if (o.json) {
    out << report_to_json(r).dump(2) << "\n";
    return;
  }
  out << "fermionic Hamiltonian (" << r.fermionic.size() << " terms)\n  " << format(r.fermionic) << "\n";
  out << "Pauli Hamiltonian (" << r.pauli.size() << " terms)\n  " << format(r.pauli) << "\n";
  out << "symmetry generators:";
  for (const auto& g : r.symmetries.generators) out << " [" << g.label() << "]";
  out << "\ntargets:";
  for (auto t : r.plan.targets) out << " " << t;
  out << "\nconjugated Hamiltonian (" << r.transformed.size() << " terms)\n  " << format(r.transformed) << "\n";
  out << "fermionic terms: " << r.fermionic_terms_before << " before, " << r.fermionic_terms_after << " after\n";
  out << "sector +-- (1 qubit)\n  " << format(r.tapered) << "\n";
  out << "  fermionic form: " << format(r.tapered_fermionic) << "\n";
  if (r.tapered_spectrum && r.block_spectrum) {
    out << "  tapered spectrum:";
    for (double e : *r.tapered_spectrum) out << " " << float_text(e);
    out << "\n  block spectrum:  ";
    for (double e : *r.block_spectrum) out << " " << float_text(e);
    out << "\n";
  }
}

void cmd_lie(std::ostream& out, const Options& o, const std::string& family, std::size_t modes) {
  lie::Family f;
  try {
    f = lie::parse_family(family);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (modes < 2 || modes > 6) throw UsageError("--modes must be between 2 and 6");
  lie::ClosureReport r = lie::verify_closure(f, modes);
  bool expect_closed = f != lie::Family::Pairs;
  std::optional<bool> iso;
  if (r.closed) iso = lie::verify_isomorphism(f, modes);
  bool checks_ok = true;
  for (const auto& c : r.checks) checks_ok = checks_ok && c.ok;
  bool ok = r.closed == expect_closed && checks_ok && iso.value_or(true);
  if (o.json) {
    out << closure_to_json(r, iso, ok).dump(2) << "\n";
  } else {
    out << "family " << lie::family_name(f) << ", " << modes << " modes\n";
    out << "  dimension " << r.dimension << " (expected " << lie::expected_dimension(f, modes) << ")\n";
    out << "  closed under commutation: " << (r.closed ? "yes" : "no") << "\n";
    for (const auto& c : r.checks) out << "  " << (c.ok ? "ok   " : "FAIL ") << c.name << "\n";
    if (iso) out << "  " << (*iso ? "ok   " : "FAIL ") << "matrix isomorphism\n";
  }
  if (!ok) throw VerificationFailure("Lie verification failed for " + lie::family_name(f));
}

void cmd_verify(std::ostream& out, const Options& o, std::uint64_t seed, std::size_t cases) {
  double tol = tolerance();
  SuiteResult r = oracle_suite(seed, cases, tol);
  if (o.json) {
    Json j;
    j["seed"] = seed;
    j["cases"] = r.cases;
    j["tolerance"] = tol;
    j["max_deviation"] = r.max_deviation;
    j["ok"] = r.ok;
    j["worst_case_seed"] = r.worst_seed;
    j["worst_case"] = r.worst_case;
    out << j.dump(2) << "\n";
  } else {
    out << r.cases << " cases, max deviation " << float_text(r.max_deviation) << " (tolerance " << float_text(tol)
        << ")\n";
  }
  if (!r.ok) {
    std::ostringstream msg;
    msg << "max deviation " << float_text(r.max_deviation) << " exceeds " << float_text(tol) << " in case seed "
        << r.worst_seed << ": " << r.worst_case;
    throw VerificationFailure(msg.str());
  }
}

void cmd_parse(std::ostream& out, const Options& o, const std::string& alg, const std::string& expr, bool check,
               std::size_t width) {
  auto finish = [&](const auto& s) {
    if (check)
      out << "ok\n";
    else
      emit(out, o, mode(s, o));
  };
  switch (parse_alg(alg)) {
    case Alg::Pauli: return finish(parse_input(expr, [&] { return parse_pauli(expr, width); }));
    case Alg::Majorana: return finish(parse_input(expr, [&] { return parse_majorana(expr, width); }));
    case Alg::Fermion: return finish(parse_input(expr, [&] { return parse_fermion(expr, width); }));
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact algebra of Pauli, Majorana and fermionic strings", "fcalg"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "machine-readable output");
  auto* exact = app.add_flag("--exact", "exact coefficients (default)");
  auto* floating = app.add_flag("--float", o.floating, "convert coefficients to floating point");
  exact->excludes(floating);

  std::string alg = "fermion", a, b, gen, theta, from, to, file, sector, targets, integrals, family;
  std::size_t width = 0, modes = 4, cases = 500;
  std::uint64_t seed = 42;
  bool check = false;

  auto* mul = app.add_subcommand("mul", "multiply two expressions");
  mul->add_option("a", a)->required();
  mul->add_option("b", b)->required();
  mul->add_option("--algebra", alg, "pauli, majorana or fermion")->capture_default_str();
  mul->add_option("--width", width, "register width");

  auto* conj = app.add_subcommand("conj", "conjugate an expression by the unitary of a generator");
  conj->add_option("expr", a)->required();
  conj->add_option("--generator", gen, "fermionic generator, or a Pauli/Majorana string")->required();
  conj->add_option("--theta", theta, "angle: pi/2, 3pi/4 or radians");
  conj->add_option("--algebra", alg)->capture_default_str();
  conj->add_option("--width", width);

  auto* map = app.add_subcommand("map", "map between algebras (Jordan-Wigner and Majorana decomposition)");
  map->add_option("expr", a)->required();
  map->add_option("--from", from)->required();
  map->add_option("--to", to)->required();
  map->add_option("--width", width);

  auto* taper = app.add_subcommand("taper", "Z2 symmetries and qubit tapering");
  taper->require_subcommand(1);
  auto* find = taper->add_subcommand("find-syms", "list Z2 symmetry generators of a JSON Hamiltonian");
  find->add_option("file", file)->required();
  auto* trun = taper->add_subcommand("run", "taper a JSON Hamiltonian in one symmetry sector");
  trun->add_option("file", file)->required();
  trun->add_option("--sector", sector, "signs per generator, e.g. +--")->required();
  trun->add_option("--targets", targets, "comma-separated target qubits");
  auto* demo = taper->add_subcommand("demo-h2", "tapering walkthrough for minimal-basis H2");
  demo->add_option("--integrals", integrals, "JSON object with numeric integrals h00, h22, v0101, ...");

  auto* lie = app.add_subcommand("lie", "Lie algebra checks");
  lie->require_subcommand(1);
  auto* lver = lie->add_subcommand("verify", "closure, structure constants and isomorphism");
  lver->add_option("--family", family, "singles, pairs, singles_pairs, singles_pairs_half")->required();
  lver->add_option("--modes", modes)->capture_default_str();

  auto* ver = app.add_subcommand("verify", "random conjugations against dense matrices");
  ver->add_option("--seed", seed)->capture_default_str();
  ver->add_option("--cases", cases)->capture_default_str();

  auto* parse = app.add_subcommand("parse", "parse and print an expression in canonical form");
  parse->add_option("expr", a)->required();
  parse->add_option("--algebra", alg)->capture_default_str();
  parse->add_flag("--check", check, "only validate");
  parse->add_option("--width", width);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*mul) cmd_mul(out, o, alg, a, b, width);
    else if (*conj) cmd_conj(out, o, alg, a, gen, theta, width);
    else if (*map) cmd_map(out, o, from, to, a, width);
    else if (*find) cmd_find_syms(out, o, file);
    else if (*trun) cmd_taper_run(out, o, file, sector, targets);
    else if (*demo) cmd_demo_h2(out, o, integrals);
    else if (*lver) cmd_lie(out, o, family, modes);
    else if (*ver) cmd_verify(out, o, seed, cases);
    else if (*parse) cmd_parse(out, o, alg, a, check, width);
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    err << "internal consistency check failed: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << kGrammar;
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return run(args, std::cout, std::cerr);
}

}  // namespace fc::cli
