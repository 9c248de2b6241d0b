#ifndef SUBALG_POLY_HPP
#define SUBALG_POLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "subalg/monomial.hpp"
#include "subalg/order.hpp"
#include "subalg/ring.hpp"

namespace subalg {

struct Term {
  Coeff coeff;
  Monomial mono;
  bool operator==(const Term&) const = default;
};

/// Sparse polynomial: terms strictly descending in the owning ring's order,
/// no zero coefficients, no duplicate monomials. Zero is the empty list.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Term> terms) : terms_(std::move(terms)) {}

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }

  bool operator==(const Poly&) const = default;

 private:
  std::vector<Term> terms_;
};

/// Ring context: coefficient domain, term order and variable names.
/// Polynomials do not carry their order; every operation takes the ring.
struct PolyRing {
  Domain domain = Domain::Integers;
  TermOrder order;
  std::vector<std::string> vars;

  int arity() const { return static_cast<int>(vars.size()); }
};

PolyRing make_ring(Domain d, OrderKind k, std::vector<std::string> vars);
/// Tag ring R[y1..ycount], DegRevLex by index.
PolyRing make_tag_ring(Domain d, int count);

Poly make_poly(const PolyRing& r, std::vector<Term> terms);
Poly p_zero();
Poly p_const(const PolyRing& r, const Coeff& c);
Poly p_var(const PolyRing& r, int index);
Poly p_term(const PolyRing& r, const Coeff& c, const Monomial& m);

Poly p_add(const PolyRing& r, const Poly& a, const Poly& b);
Poly p_sub(const PolyRing& r, const Poly& a, const Poly& b);
Poly p_neg(const Poly& a);
Poly p_scale(const Poly& a, const Coeff& c);
Poly p_mul_term(const PolyRing& r, const Poly& a, const Term& t);
Poly p_mul(const PolyRing& r, const Poly& a, const Poly& b);
Poly p_pow(const PolyRing& r, const Poly& a, unsigned e);

bool is_constant(const Poly& a);

/// Leading data. lp is absent for the zero polynomial while lc and lt are 0.
struct LeadingData {
  std::optional<Monomial> lp;
  Coeff lc;
  Poly lt;
};
LeadingData leading_data(const PolyRing& r, const Poly& p);

/// Height of the expression sum coeff_i * part_i: the order-maximum of
/// lp(part_i) over nonzero parts, with the indices attaining it.
struct HeightInfo {
  Monomial height;
  std::vector<int> contributors;
};
HeightInfo representation_height(const PolyRing& r,
                                 const std::vector<std::pair<Coeff, Poly>>& parts);

/// Evaluate a tag-ring polynomial by substituting values[i] for tag i.
Poly tag_evaluate(const PolyRing& xring, const Poly& tag_poly, const std::vector<Poly>& values);

/// Product of gens[i]^exps[i] in the given ring.
Poly power_product(const PolyRing& r, const std::vector<Poly>& gens, const Monomial& exps);
/// Product of lcs[i]^exps[i].
Coeff coeff_power_product(const std::vector<Coeff>& lcs, const Monomial& exps);
/// Sum of exps[i] * lps[i] (the leading monomial of the corresponding product).
Monomial monomial_power_product(const std::vector<Monomial>& lps, const Monomial& exps);

}  // namespace subalg

#endif
