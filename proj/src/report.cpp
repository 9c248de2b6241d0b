#include "subalg/report.hpp"

#include <json.hpp>
#include <sstream>

#include "subalg/sagbi.hpp"
#include "subalg/sgbasis.hpp"
#include "subalg/syzygy.hpp"

namespace subalg {

namespace {

using nlohmann::json;

PolyRing named_tag_ring(const SubalgebraPresentation& pres, const std::string& prefix) {
  PolyRing r = pres.tag_ring;
  r.vars.clear();
  for (size_t i = 0; i < pres.gens.size(); ++i)
    r.vars.push_back(prefix + std::to_string(i + 1));
  return r;
}

std::string ae_to_string(const PolyRing& named, const AlgebraElement& a) {
  return poly_to_string(named, a.tag_form);
}

std::string vector_to_string(const PolyRing& named, const std::vector<AlgebraElement>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += ae_to_string(named, v[i]);
  }
  out += ")";
  return out;
}

int resolve_passes(const ProblemFile& pf, const RunOptions& opts) {
  if (opts.max_passes > 0) return opts.max_passes;
  if (pf.max_passes > 0) return pf.max_passes;
  return kDefaultMaxPasses;
}

std::string status_name(ConstructionStatus s) {
  return s == ConstructionStatus::Completed ? "completed" : "iteration cap reached";
}

struct ReportBuilder {
  std::ostringstream text;
  json j;
  bool want_json;

  explicit ReportBuilder(bool as_json) : want_json(as_json) {}

  void line(const std::string& s) { text << s << "\n"; }
  std::string str() { return want_json ? j.dump(2) + "\n" : text.str(); }
};

void emit_header(ReportBuilder& rb, const ProblemFile& pf, const std::string& command) {
  rb.line("command: " + command);
  rb.line("ring: " + domain_name(pf.ring.domain));
  std::string vars;
  for (size_t i = 0; i < pf.ring.vars.size(); ++i) {
    if (i) vars += ", ";
    vars += pf.ring.vars[i];
  }
  rb.line("vars: " + vars);
  rb.line("order: " + order_kind_name(pf.ring.order.blocks().front().kind));
  rb.j["command"] = command;
  rb.j["ring"] = domain_name(pf.ring.domain);
  rb.j["vars"] = pf.ring.vars;
  rb.j["order"] = order_kind_name(pf.ring.order.blocks().front().kind);
}

void emit_named_list(ReportBuilder& rb, const PolyRing& ring, const std::string& heading,
                     const std::string& key, const std::string& prefix,
                     const std::vector<Poly>& polys) {
  rb.line(heading + ":");
  json arr = json::array();
  for (size_t i = 0; i < polys.size(); ++i) {
    std::string s = poly_to_string(ring, polys[i]);
    rb.line("  " + prefix + std::to_string(i + 1) + " = " + s);
    arr.push_back(s);
  }
  rb.j[key] = arr;
}

void emit_constant_notes(ReportBuilder& rb, const std::vector<Coeff>& notes) {
  if (notes.empty()) return;
  std::string s;
  json arr = json::array();
  for (size_t i = 0; i < notes.size(); ++i) {
    if (i) s += ", ";
    s += coeff_to_string(notes[i]);
    arr.push_back(coeff_to_string(notes[i]));
  }
  rb.line("constant subring note: " + s);
  rb.j["constant_notes"] = arr;
}

void emit_sagbi_trail(ReportBuilder& rb, const PolyRing& xring, const SagbiResult& res) {
  json trail = json::array();
  rb.line("trail:");
  for (size_t p = 0; p < res.trail.size(); ++p) {
    const SagbiPassRecord& rec = res.trail[p];
    rb.line("  pass " + std::to_string(p + 1) + ":");
    PolyRing tr = make_tag_ring(xring.domain, rec.tag_count);
    json jp;
    jp["kernel_generators"] = json::array();
    jp["evaluations"] = json::array();
    jp["reducta"] = json::array();
    for (size_t i = 0; i < rec.kernel_gens.size(); ++i) {
      std::string kg = poly_to_string(tr, rec.kernel_gens[i]);
      std::string ev = poly_to_string(xring, rec.evaluations[i]);
      std::string rd = poly_to_string(xring, rec.reducta[i]);
      rb.line("    kernel generator: " + kg);
      rb.line("      evaluation: " + ev);
      rb.line("      reductum: " + rd);
      jp["kernel_generators"].push_back(kg);
      jp["evaluations"].push_back(ev);
      jp["reducta"].push_back(rd);
    }
    trail.push_back(jp);
  }
  rb.j["trail"] = trail;
}

RunResult finish(ReportBuilder& rb, int status) {
  rb.j["exit"] = status;
  return RunResult{status, rb.str()};
}

RunResult run_sagbi(const ProblemFile& pf, const RunOptions& opts) {
  ReportBuilder rb(opts.json);
  emit_header(rb, pf, "sagbi");
  SagbiResult res = sagbi_construct(pf.ring, pf.f_section, resolve_passes(pf, opts));
  rb.line("status: " + status_name(res.status));
  rb.line("passes: " + std::to_string(res.passes));
  rb.j["status"] = status_name(res.status);
  rb.j["passes"] = res.passes;
  emit_named_list(rb, pf.ring, "basis", "basis", "f", res.basis.gens);
  rb.line(std::string("verified: ") + (res.basis.sagbi_verified ? "true" : "false"));
  rb.j["verified"] = res.basis.sagbi_verified;
  emit_constant_notes(rb, res.basis.constant_notes);
  if (opts.trail) emit_sagbi_trail(rb, pf.ring, res);
  return finish(rb, res.status == ConstructionStatus::Completed ? 0 : 3);
}

// Ambient construction shared by sg / syz / member.
SagbiResult build_ambient(const ProblemFile& pf, const RunOptions& opts, ReportBuilder& rb) {
  SagbiResult ambient = sagbi_construct(pf.ring, pf.f_section, resolve_passes(pf, opts));
  emit_named_list(rb, pf.ring, "ambient basis", "ambient_basis", "f", ambient.basis.gens);
  rb.line("ambient status: " + status_name(ambient.status));
  rb.j["ambient_status"] = status_name(ambient.status);
  emit_constant_notes(rb, ambient.basis.constant_notes);
  return ambient;
}

const std::vector<Poly>& section_for(const ProblemFile& pf, bool prefer_h,
                                     const std::string& command) {
  if (prefer_h) {
    if (pf.has_h) return pf.h_section;
    if (pf.has_g) return pf.g_section;
  } else {
    if (pf.has_g) return pf.g_section;
    if (pf.has_h) return pf.h_section;
  }
  throw std::invalid_argument("command '" + command + "' needs a [G] or [H] section");
}

// Membership certificates of the basis elements over the ambient generators.
void emit_basis_certificates(ReportBuilder& rb, const SubalgebraPresentation& ambient,
                             const SgResult& sg) {
  PolyRing named = named_tag_ring(ambient, "f");
  rb.line("certificates:");
  json arr = json::array();
  for (size_t i = 0; i < sg.basis.gens.size(); ++i) {
    std::string expr = poly_to_string(named, sg.basis.gens[i].tag_form);
    rb.line("  g" + std::to_string(i + 1) + " = " + expr);
    arr.push_back(expr);
  }
  rb.j["certificates"] = arr;
}

void emit_sg_trail(ReportBuilder& rb, const ProblemFile& pf,
                   const SubalgebraPresentation& ambient, const SgResult& sg) {
  PolyRing named = named_tag_ring(ambient, "f");
  rb.line("trail:");
  json trail = json::array();
  for (size_t p = 0; p < sg.trail.size(); ++p) {
    const SgPassRecord& rec = sg.trail[p];
    rb.line("  pass " + std::to_string(p + 1) + ":");
    json jp;
    jp["syzygy_vectors"] = json::array();
    jp["evaluations"] = json::array();
    jp["reducta"] = json::array();
    for (size_t i = 0; i < rec.syzygies.size(); ++i) {
      std::string qv = vector_to_string(named, rec.syzygies[i].coords);
      std::string ev = poly_to_string(pf.ring, rec.evaluations[i]);
      std::string rd = poly_to_string(pf.ring, rec.reducta[i]);
      rb.line("    syzygy vector: " + qv);
      rb.line("      evaluation: " + ev);
      rb.line("      reductum: " + rd);
      jp["syzygy_vectors"].push_back(qv);
      jp["evaluations"].push_back(ev);
      jp["reducta"].push_back(rd);
    }
    trail.push_back(jp);
  }
  rb.j["trail"] = trail;
}

RunResult run_sg(const ProblemFile& pf, const RunOptions& opts) {
  ReportBuilder rb(opts.json);
  emit_header(rb, pf, "sg");
  const std::vector<Poly>& gsec = section_for(pf, false, "sg");
  SagbiResult ambient = build_ambient(pf, opts, rb);
  if (ambient.status != ConstructionStatus::Completed) return finish(rb, 3);
  SgResult sg = sg_construct(ambient.basis, gsec, resolve_passes(pf, opts));
  rb.line("status: " + status_name(sg.status));
  rb.line("passes: " + std::to_string(sg.passes));
  rb.j["status"] = status_name(sg.status);
  rb.j["passes"] = sg.passes;
  std::vector<Poly> values;
  for (const AlgebraElement& g : sg.basis.gens) values.push_back(g.value);
  emit_named_list(rb, pf.ring, "sg basis", "sg_basis", "g", values);
  rb.line(std::string("verified: ") + (sg.basis.sg_verified ? "true" : "false"));
  rb.j["verified"] = sg.basis.sg_verified;
  if (opts.certificates) emit_basis_certificates(rb, ambient.basis, sg);
  if (opts.trail) emit_sg_trail(rb, pf, ambient.basis, sg);
  return finish(rb, sg.status == ConstructionStatus::Completed ? 0 : 3);
}

void emit_matrix(ReportBuilder& rb, const PolyRing& named, const std::string& name,
                 const std::string& key,
                 const std::vector<std::vector<AlgebraElement>>& rows) {
  rb.line(name + ":");
  json arr = json::array();
  for (const auto& row : rows) {
    rb.line("  " + vector_to_string(named, row));
    json jrow = json::array();
    for (const AlgebraElement& a : row) jrow.push_back(ae_to_string(named, a));
    arr.push_back(jrow);
  }
  rb.j[key] = arr;
}

RunResult run_syz(const ProblemFile& pf, const RunOptions& opts) {
  ReportBuilder rb(opts.json);
  emit_header(rb, pf, "syz");
  const std::vector<Poly>& hsec = section_for(pf, true, "syz");
  SagbiResult ambient = build_ambient(pf, opts, rb);
  if (ambient.status != ConstructionStatus::Completed) return finish(rb, 3);
  SubsetSyzygies syz = subset_syzygy_generators(ambient.basis, hsec, resolve_passes(pf, opts));
  emit_named_list(rb, pf.ring, "input", "input", "h", hsec);
  rb.line("status: " + status_name(syz.status));
  rb.j["status"] = status_name(syz.status);
  if (syz.status != ConstructionStatus::Completed) return finish(rb, 3);
  std::vector<Poly> values;
  for (const AlgebraElement& g : syz.sg.basis.gens) values.push_back(g.value);
  emit_named_list(rb, pf.ring, "sg basis", "sg_basis", "g", values);
  PolyRing named = named_tag_ring(ambient.basis, "f");
  emit_matrix(rb, named, "matrix W (input over sg basis)", "w", syz.matrices.w_rows);
  emit_matrix(rb, named, "matrix U (sg basis over input)", "u", syz.matrices.u_rows);
  rb.line("syzygy generators:");
  json gens = json::array();
  for (const SyzygyVector& v : syz.generators) {
    rb.line("  " + vector_to_string(named, v.coords));
    json jrow = json::array();
    for (const AlgebraElement& a : v.coords) jrow.push_back(ae_to_string(named, a));
    gens.push_back(jrow);
  }
  rb.j["generators"] = gens;
  rb.line("replay: all generators annihilate the input exactly");
  rb.j["replay"] = "exact";
  if (opts.certificates) emit_basis_certificates(rb, ambient.basis, syz.sg);
  if (opts.trail) emit_sg_trail(rb, pf, ambient.basis, syz.sg);
  return finish(rb, 0);
}

RunResult run_reduce(const ProblemFile& pf, const RunOptions& opts) {
  if (opts.poly.empty()) throw std::invalid_argument("reduce needs --poly");
  ReportBuilder rb(opts.json);
  emit_header(rb, pf, "reduce");
  Poly query = parse_poly(pf.ring, opts.poly);
  SubalgebraPresentation pres = make_presentation(pf.ring, pf.f_section);
  emit_named_list(rb, pf.ring, "generators", "generators", "f", pres.gens);
  SReductionCertificate cert = s_reduce(query, pres);
  rb.line("input: " + poly_to_string(pf.ring, query));
  rb.line("final reductum: " + poly_to_string(pf.ring, cert.final));
  rb.line("steps: " + std::to_string(cert.steps.size()));
  rb.j["input"] = poly_to_string(pf.ring, query);
  rb.j["final_reductum"] = poly_to_string(pf.ring, cert.final);
  rb.j["steps"] = cert.steps.size();
  if (opts.certificates) {
    PolyRing named = named_tag_ring(pres, "f");
    rb.line("certificate:");
    json steps = json::array();
    for (size_t i = 0; i < cert.steps.size(); ++i) {
      const SReductionStep& s = cert.steps[i];
      std::vector<Term> ts;
      for (size_t k = 0; k < s.coeffs.size(); ++k) ts.push_back(Term{s.coeffs[k], s.exps[k]});
      std::string combo = poly_to_string(named, make_poly(pres.tag_ring, std::move(ts)));
      std::string at = poly_to_string(pf.ring, p_term(pf.ring, Coeff(1), s.at));
      rb.line("  step " + std::to_string(i + 1) + " at " + at + ": " + combo);
      steps.push_back(json{{"at", at}, {"combination", combo}});
    }
    rb.j["certificate"] = steps;
  }
  return finish(rb, 0);
}

RunResult run_member(const ProblemFile& pf, const RunOptions& opts) {
  if (opts.poly.empty()) throw std::invalid_argument("member needs --poly");
  ReportBuilder rb(opts.json);
  emit_header(rb, pf, "member");
  Poly query = parse_poly(pf.ring, opts.poly);
  rb.line("query: " + poly_to_string(pf.ring, query));
  rb.j["query"] = poly_to_string(pf.ring, query);
  SagbiResult ambient = build_ambient(pf, opts, rb);
  if (ambient.status != ConstructionStatus::Completed) return finish(rb, 3);
  PolyRing named = named_tag_ring(ambient.basis, "f");

  if (pf.has_g || pf.has_h) {
    const std::vector<Poly>& gsec = section_for(pf, false, "member");
    SgResult sg = sg_construct(ambient.basis, gsec, resolve_passes(pf, opts));
    if (sg.status != ConstructionStatus::Completed) return finish(rb, 3);
    std::vector<Poly> values;
    for (const AlgebraElement& g : sg.basis.gens) values.push_back(g.value);
    emit_named_list(rb, pf.ring, "sg basis", "sg_basis", "g", values);
    auto rep = ideal_member(query, sg.basis);
    if (rep) {
      rb.line(query.is_zero() ? "result: member (trivially)" : "result: member");
      rb.j["result"] = "member";
      if (opts.certificates) {
        rb.line("representation over the sg basis:");
        rb.line("  " + vector_to_string(named, rep->coeffs));
        json jrow = json::array();
        for (const AlgebraElement& a : rep->coeffs) jrow.push_back(ae_to_string(named, a));
        rb.j["representation"] = jrow;
      }
    } else {
      rb.line("result: not a member");
      rb.j["result"] = "non-member";
    }
    return finish(rb, 0);
  }

  MembershipResult m = subalgebra_member(query, ambient.basis);
  switch (m.status) {
    case MembershipStatus::Member:
      rb.line(query.is_zero() ? "result: member (trivially)" : "result: member");
      rb.j["result"] = "member";
      break;
    case MembershipStatus::NonMember:
      rb.line("result: not a member");
      rb.j["result"] = "non-member";
      rb.line("final reductum: " + poly_to_string(pf.ring, m.certificate.final));
      rb.j["final_reductum"] = poly_to_string(pf.ring, m.certificate.final);
      break;
    case MembershipStatus::NonMemberModuloConstant:
      rb.line("result: not a member modulo constants (residual " +
              coeff_to_string(m.residual_constant) + ")");
      rb.j["result"] = "non-member-modulo-constants";
      rb.j["residual_constant"] = coeff_to_string(m.residual_constant);
      break;
  }
  if (opts.certificates && m.is_member()) {
    PolyRing fnamed = named_tag_ring(ambient.basis, "f");
    std::string combo = poly_to_string(fnamed, certificate_tag_form(ambient.basis, m.certificate));
    rb.line("representation: " + combo);
    rb.j["representation"] = combo;
  }
  return finish(rb, 0);
}

}  // namespace

RunResult run_command(const ProblemFile& pf, const std::string& command, const RunOptions& opts) {
  if ((pf.has_g || pf.has_h) && pf.f_section.empty())
    throw std::invalid_argument("[G] and [H] require [F]");
  if (command == "sagbi") return run_sagbi(pf, opts);
  if (command == "sg") return run_sg(pf, opts);
  if (command == "syz") return run_syz(pf, opts);
  if (command == "reduce") return run_reduce(pf, opts);
  if (command == "member") return run_member(pf, opts);
  throw std::invalid_argument("unknown command '" + command + "'");
}

}  // namespace subalg
