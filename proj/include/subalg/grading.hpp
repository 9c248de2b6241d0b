#ifndef SUBALG_GRADING_HPP
#define SUBALG_GRADING_HPP

#include <optional>
#include <vector>

#include "subalg/poly.hpp"

namespace subalg {

/// Grading of the tag ring by leading X-monomials of the tagged generators:
/// a tag monomial Y^a is graded by the leading monomial of the product of
/// the generators raised to a. The zero polynomial has no degree.
std::optional<Monomial> tag_degree(const TermOrder& xorder, const std::vector<Monomial>& gen_lps,
                                   const Poly& p);

bool is_tag_homogeneous(const TermOrder& xorder, const std::vector<Monomial>& gen_lps,
                        const Poly& p);

/// Partition of p by tag degree, components descending by degree in xorder.
/// Their sum is p; each component is homogeneous.
std::vector<Poly> tag_homogeneous_components(const PolyRing& tag_ring, const TermOrder& xorder,
                                             const std::vector<Monomial>& gen_lps, const Poly& p);

}  // namespace subalg

#endif
