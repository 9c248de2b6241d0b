#include "subalg/grading.hpp"

#include <algorithm>
#include <map>

namespace subalg {

std::optional<Monomial> tag_degree(const TermOrder& xorder, const std::vector<Monomial>& gen_lps,
                                   const Poly& p) {
  std::optional<Monomial> best;
  for (const Term& t : p.terms()) {
    Monomial d = monomial_power_product(gen_lps, t.mono);
    if (!best || xorder.greater(d, *best)) best = d;
  }
  return best;
}

bool is_tag_homogeneous(const TermOrder& xorder, const std::vector<Monomial>& gen_lps,
                        const Poly& p) {
  (void)xorder;
  std::optional<Monomial> d;
  for (const Term& t : p.terms()) {
    Monomial m = monomial_power_product(gen_lps, t.mono);
    if (!d) {
      d = m;
    } else if (*d != m) {
      return false;
    }
  }
  return true;
}

std::vector<Poly> tag_homogeneous_components(const PolyRing& tag_ring, const TermOrder& xorder,
                                             const std::vector<Monomial>& gen_lps, const Poly& p) {
  std::map<Monomial, std::vector<Term>> buckets;
  for (const Term& t : p.terms()) {
    buckets[monomial_power_product(gen_lps, t.mono)].push_back(t);
  }
  std::vector<std::pair<Monomial, std::vector<Term>>> ordered(buckets.begin(), buckets.end());
  std::sort(ordered.begin(), ordered.end(),
            [&](const auto& a, const auto& b) { return xorder.greater(a.first, b.first); });
  std::vector<Poly> out;
  out.reserve(ordered.size());
  for (auto& [deg, terms] : ordered) out.push_back(make_poly(tag_ring, std::move(terms)));
  return out;
}

}  // namespace subalg
