#include "subalg/problem.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace subalg {

namespace {

struct Cursor {
  const std::string& text;
  int line;
  size_t pos = 0;

  int column() const { return static_cast<int>(pos) + 1; }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void skip_space() {
    while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, column(), msg); }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string read_ident(Cursor& c) {
  size_t start = c.pos;
  while (!c.done() && ident_char(c.peek())) ++c.pos;
  return c.text.substr(start, c.pos - start);
}

Int read_nat(Cursor& c) {
  size_t start = c.pos;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  if (c.pos == start) c.fail("expected a number");
  return Int(c.text.substr(start, c.pos - start));
}

int var_index(const PolyRing& ring, Cursor& c, const std::string& name) {
  auto it = std::find(ring.vars.begin(), ring.vars.end(), name);
  if (it == ring.vars.end()) c.fail("unknown variable '" + name + "'");
  return static_cast<int>(it - ring.vars.begin());
}

// factor := number | var ['^' nat]; returns (coefficient, exponent bump)
void parse_factor(const PolyRing& ring, Cursor& c, Coeff& coeff, std::vector<Exponent>& exps) {
  c.skip_space();
  if (c.done()) c.fail("expected a factor");
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    int numcol = c.column();
    Int num = read_nat(c);
    Coeff value(num);
    if (!c.done() && c.peek() == '/') {
      if (ring.domain != Domain::Rationals)
        throw ParseError(c.line, c.column(), "rational coefficient in an integer-ring problem");
      ++c.pos;
      Int den = read_nat(c);
      if (den == 0) throw ParseError(c.line, numcol, "zero denominator");
      value = Coeff(num) / Coeff(den);
    }
    if (!c.done() && (ident_start(c.peek()) || std::isdigit(static_cast<unsigned char>(c.peek()))))
      c.fail("implicit multiplication is not allowed; use '*'");
    coeff *= value;
    return;
  }
  if (ident_start(c.peek())) {
    std::string name = read_ident(c);
    int idx = var_index(ring, c, name);
    Exponent e = 1;
    if (!c.done() && c.peek() == '^') {
      ++c.pos;
      Int n = read_nat(c);
      if (n < 0 || n > 100000) c.fail("exponent out of range");
      e = static_cast<Exponent>(n.get_ui());
    }
    if (!c.done() && (ident_start(c.peek()) || std::isdigit(static_cast<unsigned char>(c.peek()))))
      c.fail("implicit multiplication is not allowed; use '*'");
    exps[idx] += e;
    return;
  }
  c.fail(std::string("unexpected character '") + c.peek() + "'");
}

Poly parse_poly_cursor(const PolyRing& ring, Cursor& c) {
  std::vector<Term> terms;
  c.skip_space();
  if (c.done()) c.fail("empty polynomial");
  bool first = true;
  while (true) {
    c.skip_space();
    if (c.done()) break;
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      if (c.peek() == '-') sign = -1;
      ++c.pos;
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    Coeff coeff(sign);
    std::vector<Exponent> exps(ring.arity(), 0);
    parse_factor(ring, c, coeff, exps);
    c.skip_space();
    while (!c.done() && c.peek() == '*') {
      ++c.pos;
      parse_factor(ring, c, coeff, exps);
      c.skip_space();
    }
    terms.push_back(Term{coeff, Monomial(exps)});
    first = false;
  }
  return make_poly(ring, std::move(terms));
}

std::string strip_comment(const std::string& line) {
  size_t h = line.find('#');
  std::string s = h == std::string::npos ? line : line.substr(0, h);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
  return s;
}

}  // namespace

Poly parse_poly(const PolyRing& ring, const std::string& text) {
  Cursor c{text, 1};
  return parse_poly_cursor(ring, c);
}

ProblemFile parse_problem(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;

  Domain domain = Domain::Integers;
  bool have_ring = false, have_vars = false, have_order = false;
  OrderKind order = OrderKind::DegLex;
  std::vector<std::string> vars;
  int max_passes = 0;

  ProblemFile pf;
  std::vector<Poly>* section = nullptr;
  std::string section_name;
  bool ring_built = false;

  auto build_ring = [&](int line) {
    if (!have_ring) throw ParseError(line, 1, "missing 'ring =' declaration");
    if (!have_vars) throw ParseError(line, 1, "missing 'vars =' declaration");
    if (!have_order) throw ParseError(line, 1, "missing 'order =' declaration");
    pf.ring = make_ring(domain, order, vars);
    ring_built = true;
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    Cursor c{line, lineno};
    c.skip_space();
    if (c.done()) continue;

    if (c.peek() == '[') {
      size_t close = line.find(']', c.pos);
      if (close == std::string::npos) c.fail("unterminated section header");
      std::string name = line.substr(c.pos + 1, close - c.pos - 1);
      c.pos = close + 1;
      c.skip_space();
      if (!c.done()) c.fail("trailing text after section header");
      if (!ring_built) build_ring(lineno);
      if (name == "F") {
        section = &pf.f_section;
      } else if (name == "G") {
        section = &pf.g_section;
        pf.has_g = true;
      } else if (name == "H") {
        section = &pf.h_section;
        pf.has_h = true;
      } else {
        throw ParseError(lineno, c.column(), "unknown section '" + name + "'");
      }
      section_name = name;
      continue;
    }

    if (section == nullptr) {
      // Header assignments: key = value.
      if (!ident_start(c.peek())) c.fail("expected a declaration or section header");
      std::string key = read_ident(c);
      c.skip_space();
      if (c.done() || c.peek() != '=') c.fail("expected '=' after '" + key + "'");
      ++c.pos;
      c.skip_space();
      if (key == "ring") {
        std::string v = read_ident(c);
        if (v == "int") domain = Domain::Integers;
        else if (v == "rat") domain = Domain::Rationals;
        else c.fail("ring must be 'int' or 'rat'");
        have_ring = true;
      } else if (key == "vars") {
        while (true) {
          c.skip_space();
          if (c.done() || !ident_start(c.peek())) c.fail("expected a variable name");
          std::string name = read_ident(c);
          if (std::find(vars.begin(), vars.end(), name) != vars.end())
            c.fail("duplicate variable '" + name + "'");
          vars.push_back(name);
          c.skip_space();
          if (c.done()) break;
          if (c.peek() != ',') c.fail("expected ',' between variable names");
          ++c.pos;
        }
        have_vars = true;
      } else if (key == "order") {
        std::string v = read_ident(c);
        if (v == "lex") order = OrderKind::Lex;
        else if (v == "deglex") order = OrderKind::DegLex;
        else if (v == "degrevlex") order = OrderKind::DegRevLex;
        else c.fail("order must be 'lex', 'deglex' or 'degrevlex'");
        have_order = true;
      } else if (key == "max_passes") {
        Int n = read_nat(c);
        if (n < 1 || n > 10000) c.fail("max_passes out of range");
        max_passes = static_cast<int>(n.get_si());
      } else {
        c.fail("unknown declaration '" + key + "'");
      }
      c.skip_space();
      if (!c.done()) c.fail("trailing text after declaration");
      continue;
    }

    section->push_back(parse_poly_cursor(pf.ring, c));
  }

  if (!ring_built) build_ring(lineno == 0 ? 1 : lineno);
  if (pf.f_section.empty()) throw ParseError(lineno == 0 ? 1 : lineno, 1, "empty generator section [F]");
  pf.max_passes = max_passes;
  return pf;
}

ProblemFile parse_problem_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open problem file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

namespace {

std::string monomial_to_string(const PolyRing& ring, const Monomial& m) {
  std::string out;
  for (int v = 0; v < m.arity(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.vars[v];
    if (m[v] >= 2) out += "^" + std::to_string(m[v]);
  }
  return out;
}

}  // namespace

std::string poly_to_string(const PolyRing& ring, const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    Coeff a = abs(t.coeff);
    bool neg = t.coeff < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono = monomial_to_string(ring, t.mono);
    if (mono.empty()) {
      out += coeff_to_string(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += coeff_to_string(a) + "*" + mono;
    }
    first = false;
  }
  return out;
}

}  // namespace subalg
