#include "subalg/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace subalg {

PolyRing make_ring(Domain d, OrderKind k, std::vector<std::string> vars) {
  PolyRing r;
  r.domain = d;
  r.order = TermOrder::simple(k, static_cast<int>(vars.size()));
  r.vars = std::move(vars);
  return r;
}

PolyRing make_tag_ring(Domain d, int count) {
  std::vector<std::string> vars;
  vars.reserve(count);
  for (int i = 0; i < count; ++i) vars.push_back("y" + std::to_string(i + 1));
  return make_ring(d, OrderKind::DegRevLex, std::move(vars));
}

Poly make_poly(const PolyRing& r, std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.mono.arity() != r.arity()) throw std::invalid_argument("term arity does not match ring");
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return r.order.greater(a.mono, b.mono);
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  return Poly(std::move(out));
}

Poly p_zero() { return Poly(); }

Poly p_const(const PolyRing& r, const Coeff& c) {
  if (c == 0) return Poly();
  return Poly({Term{c, Monomial::unit(r.arity())}});
}

Poly p_var(const PolyRing& r, int index) {
  return Poly({Term{Coeff(1), Monomial::var(r.arity(), index)}});
}

Poly p_term(const PolyRing& r, const Coeff& c, const Monomial& m) {
  if (c == 0) return Poly();
  if (m.arity() != r.arity()) throw std::invalid_argument("term arity does not match ring");
  return Poly({Term{c, m}});
}

Poly p_add(const PolyRing& r, const Poly& a, const Poly& b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea && ib != eb) {
    int c = r.order.compare(ia->mono, ib->mono);
    if (c > 0) {
      out.push_back(*ia++);
    } else if (c < 0) {
      out.push_back(*ib++);
    } else {
      Coeff s = ia->coeff + ib->coeff;
      if (s != 0) out.push_back(Term{std::move(s), ia->mono});
      ++ia;
      ++ib;
    }
  }
  out.insert(out.end(), ia, ea);
  out.insert(out.end(), ib, eb);
  return Poly(std::move(out));
}

Poly p_neg(const Poly& a) {
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.coeff = -t.coeff;
  return Poly(std::move(out));
}

Poly p_sub(const PolyRing& r, const Poly& a, const Poly& b) { return p_add(r, a, p_neg(b)); }

Poly p_scale(const Poly& a, const Coeff& c) {
  if (c == 0) return Poly();
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.coeff *= c;
  return Poly(std::move(out));
}

Poly p_mul_term(const PolyRing& r, const Poly& a, const Term& t) {
  (void)r;
  if (t.coeff == 0) return Poly();
  std::vector<Term> out;
  out.reserve(a.size());
  for (const Term& s : a.terms()) out.push_back(Term{s.coeff * t.coeff, s.mono * t.mono});
  return Poly(std::move(out));
}

Poly p_mul(const PolyRing& r, const Poly& a, const Poly& b) {
  Poly acc;
  for (const Term& t : b.terms()) acc = p_add(r, acc, p_mul_term(r, a, t));
  return acc;
}

Poly p_pow(const PolyRing& r, const Poly& a, unsigned e) {
  Poly acc = p_const(r, Coeff(1));
  for (unsigned i = 0; i < e; ++i) acc = p_mul(r, acc, a);
  return acc;
}

bool is_constant(const Poly& a) {
  return a.is_zero() || (a.size() == 1 && a.lead().mono.is_unit());
}

LeadingData leading_data(const PolyRing& r, const Poly& p) {
  (void)r;
  if (p.is_zero()) return LeadingData{std::nullopt, Coeff(0), Poly()};
  const Term& t = p.lead();
  return LeadingData{t.mono, t.coeff, Poly({t})};
}

HeightInfo representation_height(const PolyRing& r,
                                 const std::vector<std::pair<Coeff, Poly>>& parts) {
  std::optional<Monomial> h;
  for (const auto& [c, p] : parts) {
    if (p.is_zero()) continue;
    const Monomial& m = p.lead().mono;
    if (!h || r.order.greater(m, *h)) h = m;
  }
  if (!h) throw std::invalid_argument("height is undefined: all parts are zero");
  HeightInfo info{*h, {}};
  for (size_t i = 0; i < parts.size(); ++i) {
    if (!parts[i].second.is_zero() && parts[i].second.lead().mono == *h)
      info.contributors.push_back(static_cast<int>(i));
  }
  return info;
}

Poly tag_evaluate(const PolyRing& xring, const Poly& tag_poly, const std::vector<Poly>& values) {
  Poly acc;
  for (const Term& t : tag_poly.terms()) {
    if (t.mono.arity() != static_cast<int>(values.size()))
      throw std::invalid_argument("tag arity does not match value count");
    Poly prod = p_const(xring, t.coeff);
    for (int i = 0; i < t.mono.arity(); ++i) {
      for (Exponent k = 0; k < t.mono[i]; ++k) prod = p_mul(xring, prod, values[i]);
    }
    acc = p_add(xring, acc, prod);
  }
  return acc;
}

Poly power_product(const PolyRing& r, const std::vector<Poly>& gens, const Monomial& exps) {
  if (exps.arity() != static_cast<int>(gens.size()))
    throw std::invalid_argument("exponent arity does not match generator count");
  Poly acc = p_const(r, Coeff(1));
  for (int i = 0; i < exps.arity(); ++i) {
    for (Exponent k = 0; k < exps[i]; ++k) acc = p_mul(r, acc, gens[i]);
  }
  return acc;
}

Coeff coeff_power_product(const std::vector<Coeff>& lcs, const Monomial& exps) {
  if (exps.arity() != static_cast<int>(lcs.size()))
    throw std::invalid_argument("exponent arity does not match coefficient count");
  Coeff acc(1);
  for (int i = 0; i < exps.arity(); ++i) {
    for (Exponent k = 0; k < exps[i]; ++k) acc *= lcs[i];
  }
  return acc;
}

Monomial monomial_power_product(const std::vector<Monomial>& lps, const Monomial& exps) {
  if (exps.arity() != static_cast<int>(lps.size()))
    throw std::invalid_argument("exponent arity does not match monomial count");
  if (lps.empty()) return Monomial();
  std::vector<Exponent> acc(lps.front().arity(), 0);
  for (int i = 0; i < exps.arity(); ++i) {
    for (int v = 0; v < lps[i].arity(); ++v) acc[v] += exps[i] * lps[i][v];
  }
  return Monomial(std::move(acc));
}

}  // namespace subalg
