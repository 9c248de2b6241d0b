#ifndef SUBALG_GROEBNER_HPP
#define SUBALG_GROEBNER_HPP

#include <optional>
#include <vector>

#include "subalg/poly.hpp"

namespace subalg {

/// Completed basis of an ideal. Over the integers this is a strong basis:
/// the leading term of every ideal element is divisible, coefficient
/// included, by some basis leading term. Over the rationals it is the
/// reduced basis. cofactors[i] expresses gens[i] over the stored inputs.
struct GroebnerBasis {
  PolyRing ring;
  std::vector<Poly> gens;
  std::vector<Poly> inputs;
  std::vector<std::vector<Poly>> cofactors;
};

GroebnerBasis groebner_basis(const PolyRing& ring, const std::vector<Poly>& gens);

/// p - remainder = sum cofactors[i] * basis.gens[i]; no term of the
/// remainder is reducible. Zero remainder decides ideal membership.
struct NormalForm {
  Poly remainder;
  std::vector<Poly> cofactors;
};
NormalForm normal_form(const PolyRing& ring, const Poly& p, const GroebnerBasis& basis);

Poly s_polynomial(const PolyRing& ring, const Poly& f, const Poly& g);
/// Bezout combination reaching gcd of the leading coefficients (integer
/// domain); absent when either leading coefficient divides the other.
std::optional<Poly> g_polynomial(const PolyRing& ring, const Poly& f, const Poly& g);

/// Generators of the kernel of tag_i -> targets_i, as a basis in a fresh
/// tag ring, via elimination with the original variables dominant.
GroebnerBasis evaluation_kernel(const PolyRing& xring, const std::vector<Poly>& targets);

/// Generators of I ∩ J via one auxiliary elimination variable.
GroebnerBasis ideal_intersection(const PolyRing& ring, const std::vector<Poly>& gens_i,
                                 const std::vector<Poly>& gens_j);

/// Generating set of { v : sum v_i * rows_i = 0 }.
std::vector<std::vector<Poly>> module_syzygies(const PolyRing& ring,
                                               const std::vector<Poly>& rows);

/// Strong basis of a submodule of ring^rank (position-over-term order).
struct ModuleBasis {
  PolyRing ring;
  int rank = 0;
  std::vector<std::vector<Poly>> elements;
};
ModuleBasis module_groebner_basis(const PolyRing& ring, int rank,
                                  const std::vector<std::vector<Poly>>& gens);
std::vector<Poly> module_normal_form(const PolyRing& ring, const std::vector<Poly>& v,
                                     const ModuleBasis& basis);

/// Vectors over the tag ring whose images under tag_i -> lt(sagbi_gens_i)
/// generate the syzygies of the images of lead_reps. Each lead_reps entry
/// must be homogeneous for the induced grading. Union of the syzygies of
/// lead_reps themselves and of expressions of kernel ∩ <lead_reps>
/// generators over lead_reps.
std::vector<std::vector<Poly>> monomial_algebra_syzygies(const PolyRing& xring,
                                                         const std::vector<Poly>& sagbi_gens,
                                                         const PolyRing& tag_ring,
                                                         const std::vector<Poly>& lead_reps);

}  // namespace subalg

#endif
