#ifndef SUBALG_PROBLEM_HPP
#define SUBALG_PROBLEM_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "subalg/poly.hpp"

namespace subalg {

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(col) +
                           ": " + msg),
        line(line),
        column(col) {}
  int line;
  int column;
};

/// Parsed problem: coefficient ring, variables, order, generator sections.
/// Grammar (one polynomial per line, explicit '*' required):
///   ring = int | rat
///   vars = x, y, ...
///   order = lex | deglex | degrevlex
///   max_passes = N          (optional)
///   [F] / [G] / [H] section headers, '#' starts a comment
struct ProblemFile {
  PolyRing ring;
  std::vector<Poly> f_section;
  std::vector<Poly> g_section;
  std::vector<Poly> h_section;
  bool has_g = false;
  bool has_h = false;
  int max_passes = 0;  // 0: unset
};

ProblemFile parse_problem(const std::string& text);
ProblemFile parse_problem_file(const std::string& path);

/// Polynomial expression over a declared ring ('+ - * ^', explicit '*').
Poly parse_poly(const PolyRing& ring, const std::string& text);

/// Canonical text: terms descending in the ring order, explicit signs,
/// coefficient 1 elided before a variable, '^' only for exponents >= 2.
std::string poly_to_string(const PolyRing& ring, const Poly& p);

}  // namespace subalg

#endif
