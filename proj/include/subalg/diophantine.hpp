#ifndef SUBALG_DIOPHANTINE_HPP
#define SUBALG_DIOPHANTINE_HPP

#include <vector>

#include "subalg/monomial.hpp"

namespace subalg {

/// Inhomogeneous system: find all e in N^m with sum e_i * columns_i = target.
/// Every column must have total degree >= 1 so the solution set is finite.
struct DiophantineSystem {
  std::vector<Monomial> columns;
  Monomial target;
};

/// Complete, duplicate-free solution set, lexicographically ascending.
/// Throws std::invalid_argument on a zero-degree column.
std::vector<Monomial> nonneg_solutions(const DiophantineSystem& sys);

/// Solutions eta of alpha = lp_g * product(lp_gens^eta): empty unless lp_g
/// divides alpha componentwise, else the solutions for target alpha / lp_g.
std::vector<Monomial> quotient_memberships(const Monomial& alpha, const Monomial& lp_g,
                                           const std::vector<Monomial>& lp_gens);

}  // namespace subalg

#endif
