#include "subalg/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "subalg/grading.hpp"

namespace subalg {

namespace {

// ---------------------------------------------------------------------------
// Module vectors: terms (coeff, monomial, position), position-over-term
// order with position 0 dominant. Ideals are the rank-1 case.
// ---------------------------------------------------------------------------

struct ModTerm {
  Coeff coeff;
  Monomial mono;
  int pos;
};

// Position-over-term: lower position index wins, ties by the ring order.
int mt_compare(const TermOrder& ord, const ModTerm& a, const ModTerm& b) {
  if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
  return ord.compare(a.mono, b.mono);
}

// Terms strictly descending.
using ModVec = std::vector<ModTerm>;

ModVec mv_canonize(const TermOrder& ord, ModVec v) {
  std::sort(v.begin(), v.end(),
            [&](const ModTerm& a, const ModTerm& b) { return mt_compare(ord, a, b) > 0; });
  ModVec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().pos == t.pos && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

ModVec mv_add(const TermOrder& ord, const ModVec& a, const ModVec& b) {
  ModVec out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = mt_compare(ord, a[i], b[j]);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      Coeff s = a[i].coeff + b[j].coeff;
      if (s != 0) out.push_back(ModTerm{std::move(s), a[i].mono, a[i].pos});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

ModVec mv_scale_term(const ModVec& a, const Coeff& c, const Monomial& m) {
  ModVec out;
  if (c == 0) return out;
  out.reserve(a.size());
  for (const ModTerm& t : a) out.push_back(ModTerm{t.coeff * c, t.mono * m, t.pos});
  return out;
}

ModVec mv_from_poly(const Poly& p, int pos) {
  ModVec v;
  v.reserve(p.size());
  for (const Term& t : p.terms()) v.push_back(ModTerm{t.coeff, t.mono, pos});
  return v;
}

std::vector<Poly> mv_to_coords(const PolyRing& ring, const ModVec& v, int rank) {
  std::vector<std::vector<Term>> parts(rank);
  for (const ModTerm& t : v) parts.at(t.pos).push_back(Term{t.coeff, t.mono});
  std::vector<Poly> out;
  out.reserve(rank);
  for (auto& ts : parts) out.push_back(make_poly(ring, std::move(ts)));
  return out;
}

ModVec mv_from_coords(const TermOrder& ord, const std::vector<Poly>& coords) {
  ModVec v;
  for (size_t i = 0; i < coords.size(); ++i) {
    for (const Term& t : coords[i].terms())
      v.push_back(ModTerm{t.coeff, t.mono, static_cast<int>(i)});
  }
  return mv_canonize(ord, std::move(v));
}

// ---------------------------------------------------------------------------
// Completion engine with cofactor tracking over the inputs.
// ---------------------------------------------------------------------------

struct Element {
  ModVec vec;
  std::vector<Poly> row;  // vec = sum row[k] * input[k]
};

struct Completion {
  const PolyRing& ring;
  int rank;
  bool track_rows = true;  // cofactor rows over the inputs
  std::vector<ModVec> inputs;
  std::vector<Element> basis;

  struct PairKey {
    Monomial lcm_mono;
    long seq;
    int i, j;
    bool g_kind;
  };
  struct PairLess {
    const TermOrder* ord;
    bool operator()(const PairKey& a, const PairKey& b) const {
      int c = ord->compare(a.lcm_mono, b.lcm_mono);
      if (c != 0) return c < 0;
      return a.seq < b.seq;
    }
  };
  std::set<PairKey, PairLess> queue;
  long seq_counter = 0;

  Completion(const PolyRing& r, int rk)
      : ring(r), rank(rk), queue(PairLess{&r.order}) {}

  bool integer_domain() const { return ring.domain == Domain::Integers; }

  // Divisibility of a term by a basis lead: same position, monomial divides,
  // and over the integers the coefficient divides as well.
  bool reduces(const ModTerm& lead, const ModTerm& t) const {
    if (lead.pos != t.pos) return false;
    if (!lead.mono.divides(t.mono)) return false;
    return coeff_divides(ring.domain, lead.coeff, t.coeff);
  }

  // Strong normal form. quotients, when given, receives per-basis cofactors.
  ModVec normal_form(ModVec h, std::vector<Poly>* quotients) const {
    ModVec done;
    while (!h.empty()) {
      const ModTerm& top = h.front();
      bool stepped = false;
      for (size_t k = 0; k < basis.size(); ++k) {
        const ModVec& b = basis[k].vec;
        if (b.empty()) continue;
        if (!reduces(b.front(), top)) continue;
        Coeff c = coeff_div(top.coeff, b.front().coeff);
        Monomial m = top.mono / b.front().mono;
        h = mv_add(ring.order, h, mv_scale_term(b, -c, m));
        if (quotients)
          (*quotients)[k] = p_add(ring, (*quotients)[k], p_term(ring, c, m));
        stepped = true;
        break;
      }
      if (!stepped) {
        done.push_back(h.front());
        h.erase(h.begin());
      }
    }
    return done;
  }

  void normalize(ModVec& v, std::vector<Poly>& row) const {
    if (v.empty()) return;
    Coeff scale(1);
    if (integer_domain()) {
      if (v.front().coeff < 0) scale = -1;
    } else {
      scale = Coeff(1) / v.front().coeff;
    }
    if (scale != 1) {
      for (auto& t : v) t.coeff *= scale;
      for (auto& p : row) p = p_scale(p, scale);
    }
  }

  void enqueue_pairs(size_t idx) {
    for (size_t k = 0; k < idx; ++k) {
      const ModTerm& a = basis[k].vec.front();
      const ModTerm& b = basis[idx].vec.front();
      if (a.pos != b.pos) continue;
      Monomial l = lcm(a.mono, b.mono);
      queue.insert(PairKey{l, seq_counter++, static_cast<int>(k), static_cast<int>(idx), false});
      if (integer_domain()) {
        Int ca = to_int(a.coeff), cb = to_int(b.coeff);
        if (ca % cb != 0 && cb % ca != 0)
          queue.insert(PairKey{l, seq_counter++, static_cast<int>(k), static_cast<int>(idx), true});
      }
    }
  }

  void add_element(ModVec v, std::vector<Poly> row) {
    normalize(v, row);
    basis.push_back(Element{std::move(v), std::move(row)});
    enqueue_pairs(basis.size() - 1);
  }

  // Combination pair: S-polynomial (cancel lcm of leads) or, over the
  // integers, the G-polynomial reaching the gcd of the leading coefficients.
  std::pair<ModVec, std::vector<Poly>> make_pair(const PairKey& pk) const {
    const Element& ei = basis[pk.i];
    const Element& ej = basis[pk.j];
    const ModTerm& a = ei.vec.front();
    const ModTerm& b = ej.vec.front();
    Monomial mi = pk.lcm_mono / a.mono;
    Monomial mj = pk.lcm_mono / b.mono;
    Coeff ci, cj;
    if (!pk.g_kind) {
      if (integer_domain()) {
        Int l = int_lcm(to_int(a.coeff), to_int(b.coeff));
        ci = Coeff(l) / a.coeff;
        cj = -(Coeff(l) / b.coeff);
      } else {
        ci = Coeff(1) / a.coeff;
        cj = -(Coeff(1) / b.coeff);
      }
    } else {
      Int s, t;
      gcd_ext(to_int(a.coeff), to_int(b.coeff), s, t);
      ci = Coeff(s);
      cj = Coeff(t);
    }
    ModVec v = mv_add(ring.order, mv_scale_term(ei.vec, ci, mi), mv_scale_term(ej.vec, cj, mj));
    std::vector<Poly> row(inputs.size());
    Poly ti = p_term(ring, ci, mi);
    Poly tj = p_term(ring, cj, mj);
    for (size_t k = 0; k < inputs.size(); ++k)
      row[k] = p_add(ring, p_mul(ring, ei.row[k], ti), p_mul(ring, ej.row[k], tj));
    return {std::move(v), std::move(row)};
  }

  void run(const std::vector<ModVec>& gens) {
    inputs = gens;
    for (size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].empty()) continue;
      std::vector<Poly> row(gens.size());
      row[i] = p_const(ring, Coeff(1));
      add_element(gens[i], std::move(row));
    }
    while (!queue.empty()) {
      PairKey pk = *queue.begin();
      queue.erase(queue.begin());
      auto [v, row] = make_pair(pk);
      std::vector<Poly> qs(basis.size());
      ModVec rem = normal_form(std::move(v), &qs);
      if (rem.empty()) continue;
      for (size_t k = 0; k < basis.size(); ++k) {
        if (qs[k].is_zero()) continue;
        for (size_t c = 0; c < row.size(); ++c)
          row[c] = p_sub(ring, row[c], p_mul(ring, qs[k], basis[k].row[c]));
      }
      add_element(std::move(rem), std::move(row));
    }
    finalize();
  }

  void finalize() {
    // Canonical order: ascending lead; drop elements whose lead is strongly
    // divisible by a kept one.
    std::vector<size_t> idx(basis.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
      int c = mt_compare(ring.order, basis[a].vec.front(), basis[b].vec.front());
      if (c != 0) return c < 0;
      Coeff ca = abs(basis[a].vec.front().coeff), cb = abs(basis[b].vec.front().coeff);
      if (ca != cb) return ca < cb;
      return a < b;
    });
    std::vector<Element> kept;
    for (size_t i : idx) {
      const ModTerm& lead = basis[i].vec.front();
      bool redundant = false;
      for (const Element& e : kept) {
        if (reduces(e.vec.front(), lead)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) kept.push_back(std::move(basis[i]));
    }
    basis = std::move(kept);
    if (!integer_domain()) {
      // Tail-reduce to the reduced basis; leads are mutually irreducible.
      for (size_t i = 0; i < basis.size(); ++i) {
        Element self = std::move(basis[i]);
        basis[i].vec.clear();
        std::vector<Poly> qs(basis.size());
        ModVec rem = normal_form(self.vec, &qs);
        for (size_t k = 0; k < basis.size(); ++k) {
          if (qs[k].is_zero()) continue;
          for (size_t c = 0; c < self.row.size(); ++c)
            self.row[c] = p_sub(ring, self.row[c], p_mul(ring, qs[k], basis[k].row[c]));
        }
        self.vec = std::move(rem);
        basis[i] = std::move(self);
      }
    }
  }
};

std::vector<ModVec> polys_to_rank1(const std::vector<Poly>& gens) {
  std::vector<ModVec> out;
  out.reserve(gens.size());
  for (const Poly& p : gens) out.push_back(mv_from_poly(p, 0));
  return out;
}

Poly rank1_to_poly(const PolyRing& ring, const ModVec& v) {
  return mv_to_coords(ring, v, 1).front();
}

// Shared elimination helper: completed basis in an extended ring, keep the
// elements whose terms avoid the eliminated variables, project them back.
std::vector<Poly> eliminate(const PolyRing& ering, const std::vector<Poly>& gens,
                            int keep_begin, int keep_count, const PolyRing& target) {
  Completion comp(ering, 1);
  comp.run(polys_to_rank1(gens));
  std::vector<Poly> out;
  for (const Element& e : comp.basis) {
    bool pure = true;
    for (const ModTerm& t : e.vec) {
      for (int v = 0; v < ering.arity() && pure; ++v) {
        if (v >= keep_begin && v < keep_begin + keep_count) continue;
        if (t.mono[v] != 0) pure = false;
      }
      if (!pure) break;
    }
    if (!pure) continue;
    std::vector<Term> terms;
    for (const ModTerm& t : e.vec) {
      std::vector<Exponent> ex(keep_count);
      for (int v = 0; v < keep_count; ++v) ex[v] = t.mono[keep_begin + v];
      terms.push_back(Term{t.coeff, Monomial(std::move(ex))});
    }
    out.push_back(make_poly(target, std::move(terms)));
  }
  return out;
}

}  // namespace

GroebnerBasis groebner_basis(const PolyRing& ring, const std::vector<Poly>& gens) {
  Completion comp(ring, 1);
  comp.run(polys_to_rank1(gens));
  GroebnerBasis out;
  out.ring = ring;
  out.inputs = gens;
  for (const Element& e : comp.basis) {
    out.gens.push_back(rank1_to_poly(ring, e.vec));
    out.cofactors.push_back(e.row);
  }
  return out;
}

NormalForm normal_form(const PolyRing& ring, const Poly& p, const GroebnerBasis& basis) {
  Completion comp(ring, 1);
  for (const Poly& g : basis.gens) comp.basis.push_back(Element{mv_from_poly(g, 0), {}});
  std::vector<Poly> qs(basis.gens.size());
  ModVec rem = comp.normal_form(mv_from_poly(p, 0), &qs);
  return NormalForm{rank1_to_poly(ring, rem), std::move(qs)};
}

Poly s_polynomial(const PolyRing& ring, const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return Poly();
  const Term& a = f.lead();
  const Term& b = g.lead();
  Monomial l = lcm(a.mono, b.mono);
  Coeff ca, cb;
  if (ring.domain == Domain::Integers) {
    Int cl = int_lcm(to_int(a.coeff), to_int(b.coeff));
    ca = Coeff(cl) / a.coeff;
    cb = Coeff(cl) / b.coeff;
  } else {
    ca = Coeff(1) / a.coeff;
    cb = Coeff(1) / b.coeff;
  }
  return p_sub(ring, p_mul_term(ring, f, Term{ca, l / a.mono}),
               p_mul_term(ring, g, Term{cb, l / b.mono}));
}

std::optional<Poly> g_polynomial(const PolyRing& ring, const Poly& f, const Poly& g) {
  if (ring.domain != Domain::Integers) return std::nullopt;
  if (f.is_zero() || g.is_zero()) return std::nullopt;
  const Term& a = f.lead();
  const Term& b = g.lead();
  Int ca = to_int(a.coeff), cb = to_int(b.coeff);
  if (ca % cb == 0 || cb % ca == 0) return std::nullopt;
  Int s, t;
  gcd_ext(ca, cb, s, t);
  Monomial l = lcm(a.mono, b.mono);
  return p_add(ring, p_mul_term(ring, f, Term{Coeff(s), l / a.mono}),
               p_mul_term(ring, g, Term{Coeff(t), l / b.mono}));
}

GroebnerBasis evaluation_kernel(const PolyRing& xring, const std::vector<Poly>& targets) {
  const int n = xring.arity();
  const int m = static_cast<int>(targets.size());
  for (const Poly& t : targets) {
    if (t.is_zero()) throw std::invalid_argument("evaluation kernel target must be nonzero");
  }
  PolyRing ering;
  ering.domain = xring.domain;
  ering.vars = xring.vars;
  for (int i = 0; i < m; ++i) ering.vars.push_back("y" + std::to_string(i + 1));
  std::vector<OrderBlock> blocks = xring.order.blocks();
  OrderBlock tag_block{OrderKind::DegRevLex, {}};
  for (int i = 0; i < m; ++i) tag_block.vars.push_back(n + i);
  blocks.push_back(std::move(tag_block));
  ering.order = TermOrder::composite(std::move(blocks));

  auto embed = [&](const Poly& p) {
    std::vector<Term> ts;
    for (const Term& t : p.terms()) {
      std::vector<Exponent> e(t.mono.exps());
      e.resize(n + m, 0);
      ts.push_back(Term{t.coeff, Monomial(std::move(e))});
    }
    return make_poly(ering, std::move(ts));
  };

  std::vector<Poly> gens;
  gens.reserve(m);
  for (int i = 0; i < m; ++i)
    gens.push_back(p_sub(ering, p_var(ering, n + i), embed(targets[i])));

  PolyRing tag_ring = make_tag_ring(xring.domain, m);
  GroebnerBasis out;
  out.ring = tag_ring;
  out.gens = eliminate(ering, gens, n, m, tag_ring);
  return out;
}

GroebnerBasis ideal_intersection(const PolyRing& ring, const std::vector<Poly>& gens_i,
                                 const std::vector<Poly>& gens_j) {
  const int n = ring.arity();
  PolyRing ering;
  ering.domain = ring.domain;
  ering.vars.push_back("_t");
  for (const auto& v : ring.vars) ering.vars.push_back(v);
  std::vector<OrderBlock> blocks{OrderBlock{OrderKind::Lex, {0}}};
  for (OrderBlock b : ring.order.blocks()) {
    for (int& v : b.vars) ++v;
    blocks.push_back(std::move(b));
  }
  ering.order = TermOrder::composite(std::move(blocks));

  auto embed = [&](const Poly& p) {
    std::vector<Term> ts;
    for (const Term& t : p.terms()) {
      std::vector<Exponent> e;
      e.reserve(n + 1);
      e.push_back(0);
      e.insert(e.end(), t.mono.exps().begin(), t.mono.exps().end());
      ts.push_back(Term{t.coeff, Monomial(std::move(e))});
    }
    return make_poly(ering, std::move(ts));
  };

  Poly t = p_var(ering, 0);
  Poly one_minus_t = p_sub(ering, p_const(ering, Coeff(1)), t);
  std::vector<Poly> gens;
  for (const Poly& p : gens_i) gens.push_back(p_mul(ering, t, embed(p)));
  for (const Poly& p : gens_j) gens.push_back(p_mul(ering, one_minus_t, embed(p)));

  GroebnerBasis out;
  out.ring = ring;
  out.gens = eliminate(ering, gens, 1, n, ring);
  return out;
}

std::vector<std::vector<Poly>> module_syzygies(const PolyRing& ring,
                                               const std::vector<Poly>& rows) {
  const int m = static_cast<int>(rows.size());
  Completion comp(ring, m + 1);
  std::vector<ModVec> gens;
  gens.reserve(m);
  for (int i = 0; i < m; ++i) {
    ModVec v = mv_from_poly(rows[i], 0);
    v.push_back(ModTerm{Coeff(1), Monomial::unit(ring.arity()), i + 1});
    gens.push_back(mv_canonize(ring.order, std::move(v)));
  }
  comp.run(gens);
  std::vector<std::vector<Poly>> out;
  for (const Element& e : comp.basis) {
    if (e.vec.empty() || e.vec.front().pos == 0) continue;
    std::vector<Poly> coords = mv_to_coords(ring, e.vec, m + 1);
    out.push_back(std::vector<Poly>(coords.begin() + 1, coords.end()));
  }
  return out;
}

ModuleBasis module_groebner_basis(const PolyRing& ring, int rank,
                                  const std::vector<std::vector<Poly>>& gens) {
  Completion comp(ring, rank);
  std::vector<ModVec> input;
  input.reserve(gens.size());
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != rank)
      throw std::invalid_argument("module generator rank mismatch");
    input.push_back(mv_from_coords(ring.order, g));
  }
  comp.run(input);
  ModuleBasis out;
  out.ring = ring;
  out.rank = rank;
  for (const Element& e : comp.basis) out.elements.push_back(mv_to_coords(ring, e.vec, rank));
  return out;
}

std::vector<Poly> module_normal_form(const PolyRing& ring, const std::vector<Poly>& v,
                                     const ModuleBasis& basis) {
  if (static_cast<int>(v.size()) != basis.rank)
    throw std::invalid_argument("module vector rank mismatch");
  Completion comp(ring, basis.rank);
  for (const auto& e : basis.elements)
    comp.basis.push_back(Element{mv_from_coords(ring.order, e), {}});
  ModVec rem = comp.normal_form(mv_from_coords(ring.order, v), nullptr);
  return mv_to_coords(ring, rem, basis.rank);
}

std::vector<std::vector<Poly>> monomial_algebra_syzygies(const PolyRing& xring,
                                                         const std::vector<Poly>& sagbi_gens,
                                                         const PolyRing& tag_ring,
                                                         const std::vector<Poly>& lead_reps) {
  std::vector<Monomial> gen_lps;
  gen_lps.reserve(sagbi_gens.size());
  for (const Poly& f : sagbi_gens) {
    if (f.is_zero()) throw std::invalid_argument("zero generator");
    gen_lps.push_back(f.lead().mono);
  }
  for (const Poly& s : lead_reps) {
    if (!is_tag_homogeneous(xring.order, gen_lps, s))
      throw std::invalid_argument("lead representation is not homogeneous");
  }
  const size_t m = lead_reps.size();

  std::vector<std::vector<Poly>> out = module_syzygies(tag_ring, lead_reps);

  std::vector<Poly> lt_targets;
  lt_targets.reserve(sagbi_gens.size());
  for (const Poly& f : sagbi_gens) lt_targets.push_back(leading_data(xring, f).lt);
  GroebnerBasis kernel = evaluation_kernel(xring, lt_targets);

  GroebnerBasis inter = ideal_intersection(tag_ring, kernel.gens, lead_reps);
  GroebnerBasis sgb = groebner_basis(tag_ring, lead_reps);
  for (const Poly& w : inter.gens) {
    NormalForm nf = normal_form(tag_ring, w, sgb);
    if (!nf.remainder.is_zero())
      throw std::logic_error("intersection element does not lie in the generated ideal");
    std::vector<Poly> p(m);
    for (size_t j = 0; j < sgb.gens.size(); ++j) {
      if (nf.cofactors[j].is_zero()) continue;
      for (size_t k = 0; k < m; ++k)
        p[k] = p_add(tag_ring, p[k], p_mul(tag_ring, nf.cofactors[j], sgb.cofactors[j][k]));
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace subalg
