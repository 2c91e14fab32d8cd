#include "fc/parser.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <regex>
#include <vector>

#include "fc/error.hpp"

namespace fc {

namespace {

struct OpToken {
  char kind;          // 'X','Y','Z' | 'g' | 'c','a','n','h'
  std::size_t index;  // qubit / mode
  int flavor = 0;     // Majorana flavor
  std::size_t pos;
};

struct Term {
  Coeff coeff;
  std::vector<OpToken> ops;
};

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Parser {
 public:
  Parser(const std::string& text, Algebra alg) : s_(text), alg_(alg) {}

  std::size_t header_width() {
    skip_ws();
    for (const char* kw : {"qubits", "modes"}) {
      std::string k = kw;
      if (s_.compare(pos_, k.size(), k) == 0) {
        std::size_t save = pos_;
        pos_ += k.size();
        skip_ws();
        if (peek() != ':') {
          pos_ = save;
          return 0;
        }
        ++pos_;
        skip_ws();
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected register width");
        return std::stoul(s_.substr(start, pos_ - start));
      }
    }
    return 0;
  }

  std::vector<Term> sum() {
    std::vector<Term> out;
    skip_ws();
    if (at_end()) fail("empty expression");
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    for (;;) {
      Term t = term();
      if (sign < 0) t.coeff = -t.coeff;
      out.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail(std::string("unexpected '") + peek() + "'");
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    return out;
  }

  Coeff lone_scalar() {
    Coeff c = lin();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t p) const { throw ParseError(msg, p); }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek(std::size_t k = 0) const { return pos_ + k < s_.size() ? s_[pos_ + k] : '\0'; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool boundary() {
    skip_ws();
    return at_end() || peek() == '+' || peek() == '-';
  }

  std::size_t digits(bool required) {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) {
      if (required) fail("expected digits");
      return 0;
    }
    return std::stoul(s_.substr(start, pos_ - start));
  }

  std::size_t paren_index() {
    if (peek() != '(') fail("expected '('");
    ++pos_;
    skip_ws();
    std::size_t k = digits(true);
    skip_ws();
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    return k;
  }

  // One operator factor of the active algebra at the cursor, or nullopt (cursor unchanged).
  std::optional<OpToken> op_factor() {
    std::size_t start = pos_;
    char c = peek();
    auto done = [&](OpToken t) -> std::optional<OpToken> {
      if (is_ident_char(peek())) {
        pos_ = start;
        return std::nullopt;
      }
      return t;
    };
    if (c == 'I' && !is_ident_char(peek(1))) {
      ++pos_;
      return OpToken{'I', 0, 0, start};
    }
    switch (alg_) {
      case Algebra::Pauli:
        if ((c == 'X' || c == 'Y' || c == 'Z') && std::isdigit(static_cast<unsigned char>(peek(1)))) {
          ++pos_;
          std::size_t k = digits(true);
          if (auto t = done(OpToken{c, k, 0, start})) return t;
        }
        break;
      case Algebra::Majorana:
        if (c == 'g' && (peek(1) == '1' || peek(1) == '2' || peek(1) == '3') && peek(2) == '(') {
          int flavor = peek(1) - '0';
          pos_ += 2;
          std::size_t k = paren_index();
          return OpToken{'g', k, flavor, start};
        }
        break;
      case Algebra::Fermion:
        if (c == 'a' && peek(1) == '+' && peek(2) == '(') {
          pos_ += 2;
          return OpToken{'c', paren_index(), 0, start};
        }
        if ((c == 'a' || c == 'n' || c == 'h') && peek(1) == '(') {
          ++pos_;
          return OpToken{c, paren_index(), 0, start};
        }
        if ((c == 'a' || c == 'n' || c == 'h') && std::isdigit(static_cast<unsigned char>(peek(1)))) {
          ++pos_;
          std::size_t k = digits(true);
          char kind = c;
          if (c == 'a' && peek() == '^') {
            ++pos_;
            kind = 'c';
          }
          if (auto t = done(OpToken{kind, k, 0, start})) return t;
        }
        break;
    }
    pos_ = start;
    return std::nullopt;
  }

  // Whole remaining term as operator factors, or nullopt (cursor unchanged).
  std::optional<std::vector<OpToken>> op_list() {
    std::size_t start = pos_;
    std::vector<OpToken> ops;
    for (;;) {
      skip_ws();
      if (at_end() || peek() == '+' || peek() == '-') break;
      auto t = op_factor();
      if (!t) {
        if (!ops.empty()) op_fail_ = std::max(op_fail_, pos_);
        pos_ = start;
        return std::nullopt;
      }
      ops.push_back(*t);
    }
    if (ops.empty()) {
      pos_ = start;
      return std::nullopt;
    }
    return ops;
  }

  static bool looks_like_operator(const std::string& id) {
    static const std::regex re(R"(^([XYZ][0-9]+|[anh][0-9]+|g[123])$)");
    return std::regex_match(id, re);
  }

  Term term() {
    Term t{Coeff::one(), {}};
    for (;;) {
      skip_ws();
      if (at_end()) fail("expected a term");
      if (auto ops = op_list()) {
        t.ops = std::move(*ops);
        return t;
      }
      // If the operator reading got further than the scalar reading, its
      // stopping point is the more useful error location.
      const std::size_t hint = op_fail_;
      op_fail_ = 0;
      try {
        if (scalar_step(t)) return t;
      } catch (const ParseError& e) {
        if (hint > e.position()) fail_at(std::string("unexpected '") + s_[hint] + "'", hint);
        throw;
      }
    }
  }

  // Consumes one scalar factor; true when the term ends after it.
  bool scalar_step(Term& t) {
    std::size_t at = pos_;
    std::string ident;
    if (is_ident_start(peek())) {
      std::size_t e = pos_;
      while (e < s_.size() && is_ident_char(s_[e])) ++e;
      ident = s_.substr(pos_, e - pos_);
    }
    Coeff c = atom();
    t.coeff = mul(t.coeff, c, at);
    skip_ws();
    if (peek() == '*') {
      ++pos_;
      return false;
    }
    if (boundary()) {
      if (!ident.empty() && looks_like_operator(ident))
        fail_at("operator '" + ident + "' does not belong to this algebra", at);
      return true;
    }
    fail(std::string("unexpected '") + peek() + "'");
  }

  Coeff mul(const Coeff& a, const Coeff& b, std::size_t at) const {
    try {
      return a * b;
    } catch (const ArithmeticError& e) {
      fail_at(e.what(), at);
    }
  }

  // Linear combination of scalar products, used inside parentheses.
  Coeff lin() {
    Coeff acc;
    skip_ws();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    for (;;) {
      skip_ws();
      std::size_t at = pos_;
      Coeff prod = atom();
      for (;;) {
        skip_ws();
        if (peek() != '*') break;
        ++pos_;
        skip_ws();
        std::size_t at2 = pos_;
        prod = mul(prod, atom(), at2);
      }
      (void)at;
      acc += sign < 0 ? -prod : prod;
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    return acc;
  }

  Coeff atom() {
    skip_ws();
    std::size_t start = pos_;
    char c = peek();
    if (c == '(') {
      ++pos_;
      Coeff re = lin();
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        Coeff im = lin();
        skip_ws();
        if (peek() != ')') fail("expected ')'");
        ++pos_;
        return complex_pair(re, im, start);
      }
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return re;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (is_ident_start(c)) {
      while (is_ident_char(peek())) ++pos_;
      std::string id = s_.substr(start, pos_ - start);
      if (id == "i") return Coeff::i();
      if (id == "sqrt2") return Coeff(SymbolicCoeff::sqrt2());
      return Coeff::symbol(id);
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  Coeff complex_pair(const Coeff& re, const Coeff& im, std::size_t at) const {
    auto real_part = [&](const Coeff& x) {
      if (x.is_exact() ? !x.exact().im.is_zero() : x.value().imag() != 0.0)
        fail_at("complex pair components must be real", at);
    };
    real_part(re);
    real_part(im);
    if (re.is_exact() && im.is_exact()) return Coeff(re.exact().re, im.exact().re);
    return Coeff(std::complex<double>(re.value().real(), im.value().real()));
  }

  Coeff number() {
    std::size_t start = pos_;
    bool is_float = false;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.') {
      is_float = true;
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if ((peek() == 'e' || peek() == 'E') &&
        (std::isdigit(static_cast<unsigned char>(peek(1))) ||
         ((peek(1) == '+' || peek(1) == '-') && std::isdigit(static_cast<unsigned char>(peek(2)))))) {
      is_float = true;
      pos_ += 2;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    std::string text = s_.substr(start, pos_ - start);
    if (is_float) {
      try {
        return Coeff::real(std::stod(text));
      } catch (const std::logic_error&) {
        fail_at("bad number '" + text + "'", start);
      }
    }
    try {
      Rational r = Rational::parse(text);
      if (peek() == '/' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        ++pos_;
        std::size_t ds = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        r = r / Rational::parse(s_.substr(ds, pos_ - ds));
      }
      return Coeff(r);
    } catch (const Error& e) {
      fail_at(e.what(), start);
    }
  }

  const std::string& s_;
  Algebra alg_;
  std::size_t pos_ = 0;
  std::size_t op_fail_ = 0;
};

std::size_t infer_width(const std::vector<Term>& terms, std::size_t declared, const std::string& what) {
  std::size_t w = 0;
  for (const auto& t : terms)
    for (const auto& o : t.ops)
      if (o.kind != 'I') {
        if (declared && o.index >= declared)
          throw ParseError(what + " index " + std::to_string(o.index) + " exceeds declared width " +
                               std::to_string(declared),
                           o.pos);
        w = std::max(w, o.index + 1);
      }
  if (declared) return declared;
  return std::max<std::size_t>(w, 1);
}

template <class Sum, class Build>
Sum build(const std::string& text, Algebra alg, std::size_t width, const char* what, Build&& make) {
  Parser p(text, alg);
  std::size_t header = p.header_width();
  if (width == 0) width = header;
  auto terms = p.sum();
  width = infer_width(terms, width, what);
  Sum out(width);
  for (const auto& t : terms) {
    auto [s, c] = make(width, t);
    out.add(s, c);
  }
  return out;
}

template <class S>
std::string render(const OperatorSum<S>& sum, const std::function<std::pair<Coeff, std::string>(const S&, const Coeff&)>& show) {
  if (sum.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c0] : sum) {
    auto [c, label] = show(s, c0);
    std::string ctext;
    bool neg = false;
    if (c == Coeff::one()) {
      ctext = "";
    } else if (c == Coeff(-1)) {
      neg = true;
    } else if (c.is_atomic()) {
      ctext = c.str();
      if (ctext[0] == '-') {
        neg = true;
        ctext = ctext.substr(1);
      }
    } else {
      ctext = "(" + c.str() + ")";
    }
    std::string body = ctext.empty() ? label : ctext + " * " + label;
    if (first)
      out += neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace

PauliSum parse_pauli(const std::string& text, std::size_t width) {
  return build<PauliSum>(text, Algebra::Pauli, width, "qubit", [](std::size_t n, const Term& t) {
    std::vector<std::pair<std::size_t, char>> ops;
    for (const auto& o : t.ops)
      if (o.kind != 'I') ops.emplace_back(o.index, o.kind);
    return std::make_pair(PauliString::from_ops(n, ops), t.coeff);
  });
}

MajoranaSum parse_majorana(const std::string& text, std::size_t width) {
  return build<MajoranaSum>(text, Algebra::Majorana, width, "mode", [](std::size_t n, const Term& t) {
    std::vector<MajoranaFactor> raw;
    for (const auto& o : t.ops)
      if (o.kind != 'I') raw.push_back({o.index, o.flavor});
    return std::make_pair(maj_normalize(n, raw), t.coeff);
  });
}

FermionicSum parse_fermion(const std::string& text, std::size_t width) {
  return build<FermionicSum>(text, Algebra::Fermion, width, "mode", [](std::size_t n, const Term& t) {
    std::vector<FFactor> raw;
    for (const auto& o : t.ops) {
      switch (o.kind) {
        case 'c': raw.push_back({o.index, FOp::Cre}); break;
        case 'a': raw.push_back({o.index, FOp::Ann}); break;
        case 'n': raw.push_back({o.index, FOp::Num}); break;
        case 'h': raw.push_back({o.index, FOp::Hole}); break;
        default: break;
      }
    }
    return std::make_pair(FermionicString::normalize(n, raw), t.coeff);
  });
}

Coeff parse_coeff(const std::string& text) {
  Parser p(text, Algebra::Pauli);
  return p.lone_scalar();
}

std::string format_coeff(const Coeff& c) {
  return c.str();
}

std::string format(const PauliSum& s) {
  return render<PauliString>(s, [](const PauliString& p, const Coeff& c) { return std::make_pair(c, p.label()); });
}

std::string format(const MajoranaSum& s) {
  return render<MajoranaString>(s, [](const MajoranaString& g, const Coeff& c) { return std::make_pair(c, g.label()); });
}

namespace {

// Display order: creations, annihilations and holes/numbers each ascending.
std::pair<Coeff, std::string> fermion_display(const FermionicString& f, const Coeff& c) {
  if (f.is_zero()) return {c, "0"};
  std::size_t l = f.annihilations().popcount();
  Coeff sign = l > 1 && (l * (l - 1) / 2) % 2 ? Coeff(-1) : Coeff::one();
  std::string s;
  auto add = [&](const std::string& t) {
    if (!s.empty()) s += ' ';
    s += t;
  };
  for (auto m : f.creations().ones()) add("a" + std::to_string(m) + "^");
  for (auto m : f.annihilations().ones()) add("a" + std::to_string(m));
  for (auto m : f.holes().ones()) add("h" + std::to_string(m));
  for (auto m : f.numbers().ones()) add("n" + std::to_string(m));
  return {c * Coeff::i_pow(f.phase()) * sign, s.empty() ? "I" : s};
}

}  // namespace

std::string format(const FermionicSum& s) {
  return render<FermionicString>(s, fermion_display);
}

std::string format(const FermionicString& s) {
  if (s.is_zero()) return "0";
  return format(FermionicSum(s));
}

std::pair<Generator, std::optional<Angle>> parse_generator(const std::string& text) {
  static const std::regex re(R"(^\s*(halfbody|pair|exc|num)([+-]?)\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)\s*(?:@\s*(.+))?$)");
  std::smatch m;
  if (!std::regex_match(text, m, re))
    throw ParseError("bad generator '" + text + "' (expected halfbody-(p), pair+(p,q), exc-(p,q), num(p))", 0);
  std::string kind = m[1];
  GenSign sign = m[2] == "+" ? GenSign::Herm : GenSign::Anti;
  std::size_t p = std::stoul(m[3]);
  bool two = m[4].matched;
  std::optional<Angle> theta;
  if (m[5].matched) theta = Angle::parse(m[5]);
  if (kind == "num") {
    if (two || m[2].length() > 0) throw ParseError("num takes one index and no sign", 0);
    return {Generator::number(p), theta};
  }
  if (m[2].length() == 0) throw ParseError("generator needs a sign: '-' (anti-Hermitian) or '+' (Hermitian)", 0);
  if (kind == "halfbody") {
    if (two) throw ParseError("halfbody takes one index", 0);
    return {Generator::half_body(p, sign), theta};
  }
  if (!two) throw ParseError(kind + " takes two indices", 0);
  std::size_t q = std::stoul(m[4]);
  if (kind == "pair") return {Generator::pair(p, q, sign), theta};
  return {Generator::excitation(p, q, sign), theta};
}

}  // namespace fc
