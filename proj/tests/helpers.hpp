#ifndef SUBALG_TEST_HELPERS_HPP
#define SUBALG_TEST_HELPERS_HPP

#include <string>
#include <vector>

#include "subalg/problem.hpp"

namespace subalg::test {

inline PolyRing zz_xy(OrderKind k = OrderKind::DegLex) {
  return make_ring(Domain::Integers, k, {"x", "y"});
}
inline PolyRing qq_xy(OrderKind k = OrderKind::DegLex) {
  return make_ring(Domain::Rationals, k, {"x", "y"});
}

inline Poly P(const PolyRing& r, const std::string& s) { return parse_poly(r, s); }

/// Deterministic 64-bit LCG for reproducible randomized suites.
struct Rng {
  unsigned long long state;
  explicit Rng(unsigned long long seed) : state(seed) {}
  unsigned long long next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 17;
  }
  long pick(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<unsigned long long>(hi - lo + 1));
  }
};

inline Monomial random_monomial(Rng& rng, int arity, long max_deg) {
  std::vector<Exponent> e(arity);
  long left = max_deg;
  for (int i = 0; i < arity; ++i) {
    long d = rng.pick(0, left);
    e[i] = static_cast<Exponent>(d);
    left -= d;
  }
  return Monomial(e);
}

inline Poly random_poly(Rng& rng, const PolyRing& r, int max_terms, long max_deg,
                        long max_coeff, int min_terms = 0) {
  std::vector<Term> ts;
  int n = static_cast<int>(rng.pick(min_terms, max_terms));
  for (int i = 0; i < n; ++i) {
    long c = rng.pick(-max_coeff, max_coeff);
    if (c == 0) c = 1;
    ts.push_back(Term{Coeff(c), random_monomial(rng, r.arity(), max_deg)});
  }
  return make_poly(r, std::move(ts));
}

}  // namespace subalg::test

#endif
