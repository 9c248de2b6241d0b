#include "subalg/sgbasis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "subalg/diophantine.hpp"
#include "subalg/grading.hpp"
#include "subalg/groebner.hpp"

namespace subalg {

AlgebraElement ae_zero() { return AlgebraElement{Poly(), Poly()}; }

AlgebraElement ae_const(const SubalgebraPresentation& pres, const Coeff& c) {
  return AlgebraElement{p_const(pres.xring, c), p_const(pres.tag_ring, c)};
}

AlgebraElement ae_from_certificate(const SubalgebraPresentation& pres, const Poly& value,
                                   const SReductionCertificate& cert) {
  if (!cert.final.is_zero()) throw std::invalid_argument("certificate does not reach zero");
  return AlgebraElement{value, certificate_tag_form(pres, cert)};
}

AlgebraElement ae_add(const SubalgebraPresentation& pres, const AlgebraElement& a,
                      const AlgebraElement& b) {
  return AlgebraElement{p_add(pres.xring, a.value, b.value),
                        p_add(pres.tag_ring, a.tag_form, b.tag_form)};
}

AlgebraElement ae_sub(const SubalgebraPresentation& pres, const AlgebraElement& a,
                      const AlgebraElement& b) {
  return AlgebraElement{p_sub(pres.xring, a.value, b.value),
                        p_sub(pres.tag_ring, a.tag_form, b.tag_form)};
}

AlgebraElement ae_mul(const SubalgebraPresentation& pres, const AlgebraElement& a,
                      const AlgebraElement& b) {
  return AlgebraElement{p_mul(pres.xring, a.value, b.value),
                        p_mul(pres.tag_ring, a.tag_form, b.tag_form)};
}

AlgebraElement ae_neg(const AlgebraElement& a) {
  return AlgebraElement{p_neg(a.value), p_neg(a.tag_form)};
}

AlgebraElement ae_scale(const AlgebraElement& a, const Coeff& c) {
  return AlgebraElement{p_scale(a.value, c), p_scale(a.tag_form, c)};
}

bool ae_is_zero(const AlgebraElement& a) { return a.value.is_zero(); }

bool ae_consistent(const SubalgebraPresentation& pres, const AlgebraElement& a) {
  return tag_evaluate(pres.xring, a.tag_form, pres.gens) == a.value;
}

IdealPresentation make_ideal(const SubalgebraPresentation& ambient,
                             const std::vector<Poly>& gens) {
  if (!ambient.sagbi_verified)
    throw std::invalid_argument("ideal requires a verified ambient basis");
  IdealPresentation ideal;
  ideal.ambient = ambient;
  for (size_t i = 0; i < gens.size(); ++i) {
    const Poly& g = gens[i];
    std::string label = "generator " + std::to_string(i + 1);
    if (g.is_zero()) throw std::invalid_argument(label + " is zero");
    MembershipResult m = subalgebra_member(g, ambient);
    if (!m.is_member())
      throw std::invalid_argument(
          label + " is not certified in the subalgebra (" +
          std::string(m.status == MembershipStatus::NonMemberModuloConstant
                          ? "constant residue remains"
                          : "final reductum is nonzero") +
          ")");
    ideal.gens.push_back(ae_from_certificate(ambient, g, m.certificate));
  }
  return ideal;
}

namespace {

struct Atom {
  int gen_index;
  Monomial exps;   // over the ambient generators
  Coeff lc;        // lc(gen) * lc(product)
};

// All one-term eliminations available at monomial m: a generator times an
// ambient power product whose leading monomial is exactly m.
std::vector<Atom> atoms_at(const IdealPresentation& ideal, const Monomial& m) {
  const SubalgebraPresentation& A = ideal.ambient;
  std::vector<Atom> atoms;
  for (size_t i = 0; i < ideal.gens.size(); ++i) {
    const Poly& g = ideal.gens[i].value;
    for (const Monomial& eta :
         quotient_memberships(m, g.lead().mono, A.lead_monos)) {
      atoms.push_back(Atom{static_cast<int>(i), eta,
                           g.lead().coeff * coeff_power_product(A.lead_coeffs, eta)});
    }
  }
  // Fewest ambient factors first, then generator order.
  std::stable_sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
    return a.exps.total_degree() < b.exps.total_degree();
  });
  return atoms;
}

}  // namespace

SiReduction si_reduce(const Poly& h, const IdealPresentation& ideal) {
  if (!ideal.ambient.sagbi_verified)
    throw std::invalid_argument("si-reduction requires a verified ambient basis");
  const SubalgebraPresentation& A = ideal.ambient;
  SiReduction out;
  Poly cur = h;
  std::map<Monomial, std::vector<Atom>> cache;
  bool stepped = true;
  while (stepped && !cur.is_zero()) {
    stepped = false;
    for (const Term& t : cur.terms()) {
      auto it = cache.find(t.mono);
      if (it == cache.end()) it = cache.emplace(t.mono, atoms_at(ideal, t.mono)).first;
      const std::vector<Atom>& atoms = it->second;
      if (atoms.empty()) continue;
      std::vector<Coeff> lcs;
      lcs.reserve(atoms.size());
      for (const Atom& a : atoms) lcs.push_back(a.lc);
      auto witness = ideal_membership_witness(A.xring.domain, t.coeff, lcs);
      if (!witness) continue;
      // Group the chosen atoms by generator into subalgebra coefficients.
      std::map<int, AlgebraElement> per_gen;
      for (size_t k = 0; k < atoms.size(); ++k) {
        if ((*witness)[k] == 0) continue;
        AlgebraElement part{
            p_scale(power_product(A.xring, A.gens, atoms[k].exps), (*witness)[k]),
            p_term(A.tag_ring, (*witness)[k], atoms[k].exps)};
        auto [pos, fresh] = per_gen.try_emplace(atoms[k].gen_index, part);
        if (!fresh) pos->second = ae_add(A, pos->second, part);
      }
      for (auto& [gi, coeff] : per_gen) {
        cur = p_sub(A.xring, cur, p_mul(A.xring, coeff.value, ideal.gens[gi].value));
        out.parts.push_back(SiPart{std::move(coeff), gi});
      }
      stepped = true;
      break;
    }
  }
  out.final = cur;
  return out;
}

namespace {

// Tag polynomial expressing lt(g) over the leading terms of the ambient
// generators: the slice of a fresh reduction certificate at lp(g).
Poly lead_representation(const SubalgebraPresentation& A, const Poly& g) {
  SReductionCertificate cert = s_reduce(g, A);
  std::vector<Term> terms;
  for (const SReductionStep& s : cert.steps) {
    if (s.at != g.lead().mono) continue;
    for (size_t i = 0; i < s.coeffs.size(); ++i) terms.push_back(Term{s.coeffs[i], s.exps[i]});
  }
  if (terms.empty())
    throw std::logic_error("leading term admits no representation over the ambient basis");
  return make_poly(A.tag_ring, std::move(terms));
}

}  // namespace

namespace {

// Inter-reduction of candidate lt-syzygy vectors: each candidate lift is
// replaced by its module normal form against the accepted lifts and the
// kernel of tag -> leading term (so reduction happens over the monomial
// algebra). Candidates that reduce to zero are redundant. The kernel
// generators are used in homogeneous components, which keeps reduced
// candidates homogeneous.
struct LtVectorSieve {
  const PolyRing& tag_ring;
  size_t rank;
  std::vector<std::vector<Poly>> shift_gens;  // kernel component * unit vector
  std::vector<std::vector<Poly>> accepted_lifts;

  LtVectorSieve(const SubalgebraPresentation& A, size_t rank_in)
      : tag_ring(A.tag_ring), rank(rank_in) {
    std::vector<Poly> lt_targets;
    for (const Poly& f : A.gens) lt_targets.push_back(leading_data(A.xring, f).lt);
    for (const Poly& k : evaluation_kernel(A.xring, lt_targets).gens) {
      for (const Poly& comp :
           tag_homogeneous_components(A.tag_ring, A.xring.order, A.lead_monos, k)) {
        for (size_t i = 0; i < rank; ++i) {
          std::vector<Poly> shift(rank, Poly());
          shift[i] = comp;
          shift_gens.push_back(std::move(shift));
        }
      }
    }
  }

  std::vector<Poly> reduce(const std::vector<Poly>& lift) const {
    std::vector<std::vector<Poly>> gens = accepted_lifts;
    gens.insert(gens.end(), shift_gens.begin(), shift_gens.end());
    ModuleBasis basis = module_groebner_basis(tag_ring, static_cast<int>(rank), gens);
    return module_normal_form(tag_ring, lift, basis);
  }

  void accept(std::vector<Poly> lift) { accepted_lifts.push_back(std::move(lift)); }
};

}  // namespace

std::vector<LtSyzygyVector> lt_syzygy_generators(const IdealPresentation& ideal) {
  const SubalgebraPresentation& A = ideal.ambient;
  const size_t m = ideal.gens.size();
  std::vector<Poly> lead_reps;
  lead_reps.reserve(m);
  for (const AlgebraElement& g : ideal.gens) lead_reps.push_back(lead_representation(A, g.value));

  std::vector<std::vector<Poly>> raw =
      monomial_algebra_syzygies(A.xring, A.gens, A.tag_ring, lead_reps);

  LtVectorSieve sieve(A, m);

  std::vector<LtSyzygyVector> out;
  for (const std::vector<Poly>& vec : raw) {
    // Split by the X-degree of coordinate-times-generator; each slice is a
    // homogeneous syzygy of the generator leading terms.
    std::map<Monomial, std::vector<std::vector<Term>>> slices;
    for (size_t i = 0; i < m; ++i) {
      const Monomial& gi_lp = ideal.gens[i].value.lead().mono;
      for (const Term& t : vec[i].terms()) {
        Monomial deg = monomial_power_product(A.lead_monos, t.mono) * gi_lp;
        auto [it, fresh] = slices.try_emplace(deg, std::vector<std::vector<Term>>(m));
        it->second[i].push_back(t);
      }
    }
    std::vector<std::pair<Monomial, std::vector<std::vector<Term>>>> ordered(slices.begin(),
                                                                             slices.end());
    std::sort(ordered.begin(), ordered.end(), [&](const auto& a, const auto& b) {
      return A.xring.order.greater(a.first, b.first);
    });
    for (auto& [deg, coord_terms] : ordered) {
      std::vector<Poly> lift(m);
      for (size_t i = 0; i < m; ++i) lift[i] = make_poly(A.tag_ring, std::move(coord_terms[i]));
      lift = sieve.reduce(lift);

      LtSyzygyVector q;
      q.degree = deg;
      Poly lt_check;
      bool any = false;
      for (size_t i = 0; i < m; ++i) {
        Poly yi = std::move(lift[i]);
        if (yi.is_zero()) {
          q.coords.push_back(ae_zero());
          lift[i] = Poly();
          continue;
        }
        // Image under tag -> leading term: a single X-term (or zero, in
        // which case the coordinate is zeroed to keep the lt-vector exact).
        Coeff image(0);
        for (const Term& t : yi.terms())
          image += t.coeff * coeff_power_product(A.lead_coeffs, t.mono);
        if (image == 0) {
          q.coords.push_back(ae_zero());
          lift[i] = Poly();
          continue;
        }
        if (!is_tag_homogeneous(A.xring.order, A.lead_monos, yi))
          throw std::logic_error("reduced coordinate lost homogeneity");
        any = true;
        Monomial coord_lp = deg / ideal.gens[i].value.lead().mono;
        lt_check = p_add(A.xring, lt_check,
                         p_term(A.xring, image * ideal.gens[i].value.lead().coeff,
                                coord_lp * ideal.gens[i].value.lead().mono));
        AlgebraElement coord{tag_evaluate(A.xring, yi, A.gens), std::move(yi)};
        lift[i] = coord.tag_form;
        q.coords.push_back(std::move(coord));
      }
      if (!any) continue;
      if (!lt_check.is_zero())
        throw std::logic_error("leading terms of a syzygy vector do not cancel");
      sieve.accept(std::move(lift));
      out.push_back(std::move(q));
    }
  }
  return out;
}

namespace {

struct SgPassOutcome {
  SgPassRecord record;
  std::vector<AlgebraElement> adjoin;
  std::vector<std::vector<AlgebraElement>> adjoin_rows;
};

Poly evaluate_syzygy(const IdealPresentation& ideal, const LtSyzygyVector& q) {
  Poly acc;
  for (size_t i = 0; i < ideal.gens.size(); ++i)
    acc = p_add(ideal.ambient.xring, acc,
                p_mul(ideal.ambient.xring, q.coords[i].value, ideal.gens[i].value));
  return acc;
}

SgPassOutcome run_sg_pass(const IdealPresentation& ideal,
                          const std::vector<std::vector<AlgebraElement>>& u_rows) {
  const SubalgebraPresentation& A = ideal.ambient;
  SgPassOutcome out;
  out.record.syzygies = lt_syzygy_generators(ideal);
  for (const LtSyzygyVector& q : out.record.syzygies) {
    Poly value = evaluate_syzygy(ideal, q);
    SiReduction red = si_reduce(value, ideal);
    out.record.evaluations.push_back(value);
    out.record.reducta.push_back(red.final);
    if (red.final.is_zero()) continue;
    // Express the reductum over the current basis, then over the originals.
    std::vector<AlgebraElement> over_basis(ideal.gens.size(), ae_zero());
    for (size_t i = 0; i < ideal.gens.size(); ++i) over_basis[i] = q.coords[i];
    for (const SiPart& part : red.parts)
      over_basis[part.gen_index] = ae_sub(A, over_basis[part.gen_index], part.coeff);
    AlgebraElement ae = ae_zero();
    std::vector<AlgebraElement> row(u_rows.empty() ? 0 : u_rows.front().size(), ae_zero());
    for (size_t i = 0; i < ideal.gens.size(); ++i) {
      if (ae_is_zero(over_basis[i])) continue;
      ae = ae_add(A, ae, ae_mul(A, over_basis[i], ideal.gens[i]));
      for (size_t k = 0; k < row.size(); ++k)
        row[k] = ae_add(A, row[k], ae_mul(A, over_basis[i], u_rows[i][k]));
    }
    Coeff norm(1);
    if (A.xring.domain == Domain::Integers) {
      if (red.final.lead().coeff < 0) norm = -1;
    } else {
      norm = Coeff(1) / red.final.lead().coeff;
    }
    if (norm != 1) {
      ae = ae_scale(ae, norm);
      for (auto& r : row) r = ae_scale(r, norm);
    }
    if (ae.value != p_scale(red.final, norm))
      throw std::logic_error("composed certificate does not match the reductum");
    bool known = false;
    for (const AlgebraElement& g : ideal.gens)
      if (g.value == ae.value) known = true;
    for (const AlgebraElement& g : out.adjoin)
      if (g.value == ae.value) known = true;
    if (!known) {
      out.adjoin.push_back(std::move(ae));
      out.adjoin_rows.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace

SgResult sg_construct(const SubalgebraPresentation& ambient, const std::vector<Poly>& gens,
                      int max_passes) {
  if (max_passes < 1) throw std::invalid_argument("max_passes must be at least 1");
  SgResult result;
  result.basis = make_ideal(ambient, gens);
  const size_t n0 = result.basis.gens.size();
  for (size_t i = 0; i < n0; ++i) {
    std::vector<AlgebraElement> row(n0, ae_zero());
    row[i] = ae_const(ambient, Coeff(1));
    result.u_rows.push_back(std::move(row));
  }
  while (result.passes < max_passes) {
    ++result.passes;
    SgPassOutcome out = run_sg_pass(result.basis, result.u_rows);
    result.trail.push_back(std::move(out.record));
    if (out.adjoin.empty()) {
      result.status = ConstructionStatus::Completed;
      result.basis.sg_verified = true;
      return result;
    }
    for (size_t k = 0; k < out.adjoin.size(); ++k) {
      result.basis.gens.push_back(std::move(out.adjoin[k]));
      result.u_rows.push_back(std::move(out.adjoin_rows[k]));
    }
  }
  result.status = ConstructionStatus::IterationCapReached;
  return result;
}

SgVerification sg_verify(const IdealPresentation& ideal) {
  SgVerification v;
  std::vector<LtSyzygyVector> qs = lt_syzygy_generators(ideal);
  for (const LtSyzygyVector& q : qs) {
    Poly value = evaluate_syzygy(ideal, q);
    SiReduction red = si_reduce(value, ideal);
    if (!red.final.is_zero()) {
      v.verified = false;
      v.failing_vector = q;
      v.failing_evaluation = value;
      v.failing_reductum = red.final;
      return v;
    }
  }
  v.verified = true;
  return v;
}

SgRepresentation representation_from_parts(const IdealPresentation& ideal, const Poly& h,
                                           const std::vector<SiPart>& parts) {
  const SubalgebraPresentation& A = ideal.ambient;
  SgRepresentation rep;
  rep.coeffs.assign(ideal.gens.size(), ae_zero());
  for (const SiPart& p : parts)
    rep.coeffs[p.gen_index] = ae_add(A, rep.coeffs[p.gen_index], p.coeff);
  if (!h.is_zero()) {
    // Height law: the representation's height must equal lp(h).
    std::optional<Monomial> height;
    for (size_t i = 0; i < rep.coeffs.size(); ++i) {
      if (ae_is_zero(rep.coeffs[i])) continue;
      Poly prod = p_mul(A.xring, rep.coeffs[i].value, ideal.gens[i].value);
      if (prod.is_zero()) continue;
      if (!height || A.xring.order.greater(prod.lead().mono, *height))
        height = prod.lead().mono;
    }
    if (!height || *height != h.lead().mono)
      throw std::logic_error("representation height differs from the leading monomial");
  }
  return rep;
}

std::optional<SgRepresentation> ideal_member(const Poly& a, const IdealPresentation& ideal) {
  if (!ideal.sg_verified)
    throw std::invalid_argument("ideal membership requires a verified basis");
  MembershipResult m = subalgebra_member(a, ideal.ambient);
  if (!m.is_member())
    throw std::invalid_argument("query polynomial is not certified in the subalgebra");
  SiReduction red = si_reduce(a, ideal);
  if (!red.final.is_zero()) return std::nullopt;
  return representation_from_parts(ideal, a, red.parts);
}

}  // namespace subalg
