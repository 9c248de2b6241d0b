#include "subalg/sagbi.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "subalg/diophantine.hpp"
#include "subalg/grading.hpp"
#include "subalg/groebner.hpp"

namespace subalg {

SubalgebraPresentation make_presentation(const PolyRing& xring, const std::vector<Poly>& gens) {
  SubalgebraPresentation p;
  p.xring = xring;
  for (const Poly& g : gens) {
    if (g.is_zero()) continue;
    if (is_constant(g)) {
      p.constant_notes.push_back(g.lead().coeff);
      continue;
    }
    if (std::find(p.gens.begin(), p.gens.end(), g) == p.gens.end()) p.gens.push_back(g);
  }
  p.tag_ring = make_tag_ring(xring.domain, static_cast<int>(p.gens.size()));
  for (const Poly& g : p.gens) {
    p.lead_monos.push_back(g.lead().mono);
    p.lead_coeffs.push_back(g.lead().coeff);
  }
  return p;
}

namespace {

// One elimination attempt at the term (c, m) of the working polynomial.
// Factorizations of m over the generator leading monomials are cached by
// the caller; the coefficient test runs fresh each time (coefficients at a
// monomial change as higher terms are eliminated).
std::optional<SReductionStep> try_step(const SubalgebraPresentation& pres, const Coeff& c,
                                       const Monomial& m,
                                       std::map<Monomial, std::vector<Monomial>>& solution_cache) {
  if (m.is_unit()) {
    // The empty power product would do it, but then the certificate carries
    // a bare ring constant; allowed over a field only.
    if (pres.xring.domain != Domain::Rationals) return std::nullopt;
    return SReductionStep{{c}, {Monomial::unit(static_cast<int>(pres.gens.size()))}, m};
  }
  auto it = solution_cache.find(m);
  if (it == solution_cache.end()) {
    std::vector<Monomial> sols = nonneg_solutions(DiophantineSystem{pres.lead_monos, m});
    // Fewest-factor products first, so a direct generator match wins the
    // single-divisor scan in the coefficient test.
    std::stable_sort(sols.begin(), sols.end(), [](const Monomial& a, const Monomial& b) {
      return a.total_degree() < b.total_degree();
    });
    it = solution_cache.emplace(m, std::move(sols)).first;
  }
  const std::vector<Monomial>& sols = it->second;
  if (sols.empty()) return std::nullopt;
  std::vector<Coeff> lcs;
  lcs.reserve(sols.size());
  for (const Monomial& e : sols) lcs.push_back(coeff_power_product(pres.lead_coeffs, e));
  auto witness = ideal_membership_witness(pres.xring.domain, c, lcs);
  if (!witness) return std::nullopt;
  SReductionStep step;
  step.at = m;
  for (size_t i = 0; i < sols.size(); ++i) {
    if ((*witness)[i] == 0) continue;
    step.coeffs.push_back((*witness)[i]);
    step.exps.push_back(sols[i]);
  }
  return step;
}

Poly step_combination(const SubalgebraPresentation& pres, const SReductionStep& step) {
  Poly acc;
  for (size_t i = 0; i < step.coeffs.size(); ++i) {
    acc = p_add(pres.xring, acc,
                p_scale(power_product(pres.xring, pres.gens, step.exps[i]), step.coeffs[i]));
  }
  return acc;
}

}  // namespace

SReductionCertificate s_reduce(const Poly& g, const SubalgebraPresentation& pres) {
  SReductionCertificate cert;
  Poly h = g;
  std::map<Monomial, std::vector<Monomial>> cache;
  bool stepped = true;
  while (stepped && !h.is_zero()) {
    stepped = false;
    for (const Term& t : h.terms()) {
      auto step = try_step(pres, t.coeff, t.mono, cache);
      if (!step) continue;
      h = p_sub(pres.xring, h, step_combination(pres, *step));
      cert.steps.push_back(std::move(*step));
      stepped = true;
      break;
    }
  }
  cert.final = h;
  return cert;
}

Poly certificate_combination(const SubalgebraPresentation& pres,
                             const SReductionCertificate& cert) {
  Poly acc;
  for (const SReductionStep& s : cert.steps)
    acc = p_add(pres.xring, acc, step_combination(pres, s));
  return acc;
}

Poly certificate_tag_form(const SubalgebraPresentation& pres, const SReductionCertificate& cert) {
  std::vector<Term> terms;
  for (const SReductionStep& s : cert.steps) {
    for (size_t i = 0; i < s.coeffs.size(); ++i) terms.push_back(Term{s.coeffs[i], s.exps[i]});
  }
  return make_poly(pres.tag_ring, std::move(terms));
}

namespace {

struct PassOutcome {
  SagbiPassRecord record;
  std::vector<Poly> adjoin;
  std::vector<Coeff> constants;
};

// Kernel generators of the leading terms, split homogeneous, evaluated and
// reduced. Nonzero nonconstant final reducta are what the pass adjoins.
PassOutcome run_pass(const SubalgebraPresentation& pres) {
  PassOutcome out;
  out.record.tag_count = static_cast<int>(pres.gens.size());
  std::vector<Poly> lt_targets;
  for (const Poly& g : pres.gens) lt_targets.push_back(leading_data(pres.xring, g).lt);
  GroebnerBasis kernel = evaluation_kernel(pres.xring, lt_targets);
  for (const Poly& kg : kernel.gens) {
    for (Poly& comp :
         tag_homogeneous_components(pres.tag_ring, pres.xring.order, pres.lead_monos, kg))
      out.record.kernel_gens.push_back(std::move(comp));
  }
  for (const Poly& pgen : out.record.kernel_gens) {
    Poly value = tag_evaluate(pres.xring, pgen, pres.gens);
    SReductionCertificate cert = s_reduce(value, pres);
    out.record.evaluations.push_back(value);
    out.record.reducta.push_back(cert.final);
    if (cert.final.is_zero()) continue;
    if (is_constant(cert.final)) {
      out.constants.push_back(cert.final.lead().coeff);
      continue;
    }
    Poly red = cert.final;
    if (pres.xring.domain == Domain::Integers) {
      if (red.lead().coeff < 0) red = p_neg(red);
    } else {
      red = p_scale(red, Coeff(1) / red.lead().coeff);
    }
    if (std::find(pres.gens.begin(), pres.gens.end(), red) == pres.gens.end() &&
        std::find(out.adjoin.begin(), out.adjoin.end(), red) == out.adjoin.end())
      out.adjoin.push_back(std::move(red));
  }
  return out;
}

}  // namespace

SagbiResult sagbi_construct(const PolyRing& xring, const std::vector<Poly>& gens,
                            int max_passes) {
  if (max_passes < 1) throw std::invalid_argument("max_passes must be at least 1");
  SagbiResult result;
  SubalgebraPresentation pres = make_presentation(xring, gens);
  while (result.passes < max_passes) {
    ++result.passes;
    PassOutcome out = run_pass(pres);
    result.trail.push_back(std::move(out.record));
    for (const Coeff& c : out.constants) pres.constant_notes.push_back(c);
    if (out.adjoin.empty()) {
      result.status = ConstructionStatus::Completed;
      pres.sagbi_verified = true;
      result.basis = std::move(pres);
      return result;
    }
    std::vector<Poly> next = pres.gens;
    next.insert(next.end(), out.adjoin.begin(), out.adjoin.end());
    std::vector<Coeff> notes = std::move(pres.constant_notes);
    pres = make_presentation(xring, next);
    pres.constant_notes.insert(pres.constant_notes.begin(), notes.begin(), notes.end());
  }
  result.status = ConstructionStatus::IterationCapReached;
  result.basis = std::move(pres);
  return result;
}

SagbiVerification sagbi_verify(const SubalgebraPresentation& pres) {
  SagbiVerification v;
  PassOutcome out = run_pass(pres);
  v.constant_notes = out.constants;
  if (!out.adjoin.empty()) {
    for (size_t i = 0; i < out.record.reducta.size(); ++i) {
      const Poly& red = out.record.reducta[i];
      if (!red.is_zero() && !is_constant(red)) {
        v.failing_kernel_gen = out.record.kernel_gens[i];
        v.failing_reductum = red;
        break;
      }
    }
    v.verified = false;
    return v;
  }
  v.verified = true;
  return v;
}

MembershipResult subalgebra_member(const Poly& p, const SubalgebraPresentation& pres) {
  if (!pres.sagbi_verified)
    throw std::invalid_argument("membership requires a verified basis");
  MembershipResult r;
  r.certificate = s_reduce(p, pres);
  if (r.certificate.final.is_zero()) {
    r.status = MembershipStatus::Member;
  } else if (is_constant(r.certificate.final)) {
    // Over a field this cannot happen (constants are absorbed); over the
    // integers the residual constant is surfaced.
    r.status = MembershipStatus::NonMemberModuloConstant;
    r.residual_constant = r.certificate.final.lead().coeff;
  } else {
    r.status = MembershipStatus::NonMember;
  }
  return r;
}

}  // namespace subalg
