#include "subalg/diophantine.hpp"

#include <stdexcept>

namespace subalg {

namespace {

struct Search {
  const std::vector<Monomial>& cols;
  int nvars;
  // can_cover[j][v]: some column at index >= j has a positive exponent at v
  std::vector<std::vector<bool>> can_cover;
  std::vector<Exponent> current;
  std::vector<Monomial> out;

  void run(size_t idx, std::vector<Exponent>& remaining) {
    for (int v = 0; v < nvars; ++v) {
      if (remaining[v] > 0 && (idx >= cols.size() || !can_cover[idx][v])) return;
    }
    if (idx == cols.size()) {
      bool zero = true;
      for (int v = 0; v < nvars; ++v)
        if (remaining[v]) zero = false;
      if (zero) out.push_back(Monomial(current));
      return;
    }
    const Monomial& col = cols[idx];
    Exponent bound = 0;
    bool first = true;
    for (int v = 0; v < nvars; ++v) {
      if (col[v] == 0) continue;
      Exponent q = remaining[v] / col[v];
      bound = first ? q : std::min(bound, q);
      first = false;
    }
    for (Exponent e = 0; e <= bound; ++e) {
      current[idx] = e;
      std::vector<Exponent> rem = remaining;
      bool ok = true;
      for (int v = 0; v < nvars && ok; ++v) {
        Exponent used = e * col[v];
        if (used > rem[v])
          ok = false;
        else
          rem[v] -= used;
      }
      if (ok) run(idx + 1, rem);
    }
    current[idx] = 0;
  }
};

}  // namespace

std::vector<Monomial> nonneg_solutions(const DiophantineSystem& sys) {
  const size_t m = sys.columns.size();
  const int nvars = sys.target.arity();
  for (const Monomial& c : sys.columns) {
    if (c.arity() != nvars) throw std::invalid_argument("column arity mismatch");
    if (c.total_degree() == 0)
      throw std::invalid_argument("diophantine column with zero degree breaks finiteness");
  }
  Search s{sys.columns, nvars, {}, std::vector<Exponent>(m, 0), {}};
  s.can_cover.assign(m + 1, std::vector<bool>(nvars, false));
  for (size_t j = m; j-- > 0;) {
    for (int v = 0; v < nvars; ++v)
      s.can_cover[j][v] = s.can_cover[j + 1][v] || sys.columns[j][v] > 0;
  }
  std::vector<Exponent> remaining(sys.target.exps());
  s.run(0, remaining);
  return s.out;
}

std::vector<Monomial> quotient_memberships(const Monomial& alpha, const Monomial& lp_g,
                                           const std::vector<Monomial>& lp_gens) {
  if (!lp_g.divides(alpha)) return {};
  return nonneg_solutions(DiophantineSystem{lp_gens, alpha / lp_g});
}

}  // namespace subalg
