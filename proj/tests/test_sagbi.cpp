#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "subalg/groebner.hpp"
#include "subalg/sagbi.hpp"

using namespace subalg;
using namespace subalg::test;

namespace {

bool reduces_to_zero(const Poly& p, const SubalgebraPresentation& pres) {
  return s_reduce(p, pres).final.is_zero();
}

void check_replay(const PolyRing& r, const Poly& g, const SubalgebraPresentation& pres,
                  const SReductionCertificate& cert) {
  CHECK(p_add(r, certificate_combination(pres, cert), cert.final) == g);
}

}  // namespace

TEST_CASE("one step eliminates the quadratic head") {
  PolyRing r = zz_xy();
  SubalgebraPresentation pres =
      make_presentation(r, {P(r, "2*x^2 + x*y"), P(r, "2*y^2")});
  Poly g = P(r, "4*x^2*y^2 + 2*x*y^3 + 3*x*y");
  SReductionCertificate cert = s_reduce(g, pres);
  CHECK(cert.final == P(r, "3*x*y"));
  REQUIRE(cert.steps.size() == 1);
  CHECK(cert.steps[0].at == Monomial({2, 2}));
  check_replay(r, g, pres, cert);
}

TEST_CASE("zero reduces to zero with no steps") {
  PolyRing r = zz_xy();
  SubalgebraPresentation pres = make_presentation(r, {P(r, "x^2")});
  SReductionCertificate cert = s_reduce(Poly(), pres);
  CHECK(cert.final.is_zero());
  CHECK(cert.steps.empty());
}

TEST_CASE("generators reduce to zero in one unit step") {
  PolyRing r = zz_xy();
  std::vector<Poly> F{P(r, "4*x^2*y^2 + 2*x*y^3 + 3*x*y"), P(r, "2*x^2 + x*y"),
                      P(r, "2*y^2")};
  SubalgebraPresentation pres = make_presentation(r, F);
  for (const Poly& f : F) {
    SReductionCertificate cert = s_reduce(f, pres);
    CHECK(cert.final.is_zero());
    REQUIRE(cert.steps.size() == 1);
    CHECK(cert.steps[0].coeffs == std::vector<Coeff>{Coeff(1)});
    CHECK(cert.steps[0].exps[0].total_degree() == 1);
  }
}

TEST_CASE("reduction certificates replay and respect heights") {
  PolyRing r = zz_xy();
  SubalgebraPresentation pres =
      make_presentation(r, {P(r, "2*x^2 + x*y"), P(r, "2*y^2"), P(r, "3*x*y")});
  Rng rng(1618);
  for (int round = 0; round < 60; ++round) {
    Poly g = random_poly(rng, r, 5, 5, 9);
    SReductionCertificate cert = s_reduce(g, pres);
    check_replay(r, g, pres, cert);
    if (!g.is_zero()) {
      for (const SReductionStep& s : cert.steps) {
        CHECK_FALSE(r.order.greater(s.at, g.lead().mono));
        for (const Monomial& e : s.exps)
          CHECK(monomial_power_product(pres.lead_monos, e) == s.at);
      }
    }
    // A final reductum is stable under further reduction.
    SReductionCertificate again = s_reduce(cert.final, pres);
    CHECK(again.final == cert.final);
    CHECK(again.steps.empty());
  }
}

TEST_CASE("construction reproduces the quadratic example") {
  PolyRing r = zz_xy();
  std::vector<Poly> F0{P(r, "4*x^2*y^2 + 2*x*y^3 + 3*x*y"), P(r, "2*x^2 + x*y"),
                       P(r, "2*y^2")};
  SagbiResult res = sagbi_construct(r, F0);
  CHECK(res.status == ConstructionStatus::Completed);
  CHECK(res.passes == 2);
  REQUIRE(res.basis.gens.size() == 4);
  CHECK(res.basis.gens[3] == P(r, "3*x*y"));
  CHECK(res.basis.sagbi_verified);
  CHECK(sagbi_verify(res.basis).verified);

  // Same leading-term algebra as the four-element presentation.
  std::vector<Poly> fixture = F0;
  fixture.push_back(P(r, "3*x*y"));
  SubalgebraPresentation fixture_pres = make_presentation(r, fixture);
  for (const Poly& f : fixture) CHECK(reduces_to_zero(f, res.basis));
  for (const Poly& g : res.basis.gens) CHECK(reduces_to_zero(g, fixture_pres));
}

TEST_CASE("a single variable is its own basis") {
  PolyRing r = zz_xy();
  SagbiResult res = sagbi_construct(r, {P(r, "x")});
  CHECK(res.status == ConstructionStatus::Completed);
  CHECK(res.passes == 1);
  REQUIRE(res.basis.gens.size() == 1);
  CHECK(res.basis.gens[0] == P(r, "x"));
}

TEST_CASE("constant reducta are noted, not adjoined") {
  PolyRing r = make_ring(Domain::Integers, OrderKind::DegLex, {"x"});
  SagbiResult res = sagbi_construct(r, {P(r, "x^2"), P(r, "x^2 + 1")});
  CHECK(res.status == ConstructionStatus::Completed);
  CHECK(res.basis.gens.size() == 2);
  REQUIRE_FALSE(res.basis.constant_notes.empty());
  CHECK((res.basis.constant_notes[0] == 1 || res.basis.constant_notes[0] == -1));
  CHECK(sagbi_verify(res.basis).verified);
}

TEST_CASE("verification fails with the missing reductum") {
  PolyRing r = zz_xy();
  SubalgebraPresentation pres = make_presentation(
      r, {P(r, "4*x^2*y^2 + 2*x*y^3 + 3*x*y"), P(r, "2*x^2 + x*y"), P(r, "2*y^2")});
  SagbiVerification v = sagbi_verify(pres);
  CHECK_FALSE(v.verified);
  Poly red = v.failing_reductum;
  REQUIRE_FALSE(red.is_zero());
  if (red.lead().coeff < 0) red = p_neg(red);
  CHECK(red == P(r, "3*x*y"));
}

TEST_CASE("independent variables verify vacuously") {
  PolyRing r = zz_xy();
  SubalgebraPresentation pres = make_presentation(r, {P(r, "x"), P(r, "y")});
  CHECK(sagbi_verify(pres).verified);
}

TEST_CASE("membership demands a verified basis") {
  PolyRing r = zz_xy();
  SubalgebraPresentation pres = make_presentation(r, {P(r, "x")});
  CHECK_THROWS_AS(subalgebra_member(P(r, "x"), pres), std::invalid_argument);
}

TEST_CASE("membership over the verified quadratic basis") {
  PolyRing r = zz_xy();
  SagbiResult res = sagbi_construct(r, {P(r, "4*x^2*y^2 + 2*x*y^3 + 3*x*y"),
                                        P(r, "2*x^2 + x*y"), P(r, "2*y^2")});
  REQUIRE(res.status == ConstructionStatus::Completed);
  const SubalgebraPresentation& B = res.basis;

  SUBCASE("a constructed member is recognized with an exact certificate") {
    Poly p = p_add(r, p_mul(r, P(r, "2*x^2 + x*y"), P(r, "2*y^2")),
                   p_scale(P(r, "3*x*y"), Coeff(5)));
    MembershipResult m = subalgebra_member(p, B);
    REQUIRE(m.is_member());
    CHECK(certificate_combination(B, m.certificate) == p);
  }
  SUBCASE("x is not a member") {
    MembershipResult m = subalgebra_member(P(r, "x"), B);
    CHECK(m.status == MembershipStatus::NonMember);
    CHECK(m.certificate.final == P(r, "x"));
  }
  SUBCASE("zero is trivially a member") {
    MembershipResult m = subalgebra_member(Poly(), B);
    CHECK(m.is_member());
    CHECK(m.certificate.steps.empty());
  }
  SUBCASE("nonzero integer constants are surfaced, not claimed") {
    MembershipResult m = subalgebra_member(P(r, "5"), B);
    CHECK(m.status == MembershipStatus::NonMemberModuloConstant);
    CHECK(m.residual_constant == 5);
  }
  SUBCASE("random power-product combinations are members") {
    Rng rng(271828);
    for (int round = 0; round < 25; ++round) {
      Poly p;
      int parts = static_cast<int>(rng.pick(1, 4));
      for (int i = 0; i < parts; ++i) {
        Monomial e = random_monomial(rng, static_cast<int>(B.gens.size()), 3);
        Poly prod = power_product(r, B.gens, e);
        if (prod.lead().mono.total_degree() > 8) continue;
        long c = rng.pick(-5, 5);
        if (e.is_unit()) continue;  // stay away from bare constants
        p = p_add(r, p, p_scale(prod, Coeff(c)));
      }
      if (is_constant(p)) continue;
      CHECK(subalgebra_member(p, B).is_member());
    }
  }
}

TEST_CASE("rational constants are absorbed") {
  PolyRing r = qq_xy();
  SagbiResult res = sagbi_construct(r, {P(r, "x^2 + x")});
  REQUIRE(res.status == ConstructionStatus::Completed);
  MembershipResult m = subalgebra_member(P(r, "5"), res.basis);
  CHECK(m.is_member());
  CHECK(certificate_combination(res.basis, m.certificate) == P(r, "5"));
}

TEST_CASE("iteration cap is reported, not silently dropped") {
  PolyRing r = zz_xy();
  SagbiResult res = sagbi_construct(r, {P(r, "4*x^2*y^2 + 2*x*y^3 + 3*x*y"),
                                        P(r, "2*x^2 + x*y"), P(r, "2*y^2")},
                                    1);
  CHECK(res.status == ConstructionStatus::IterationCapReached);
  CHECK(res.passes == 1);
  CHECK_FALSE(res.basis.sagbi_verified);
}

TEST_CASE("membership agrees with the elimination oracle") {
  // Independent oracle: p lies in the generated subalgebra iff its normal
  // form by the basis of { y_i - f_i } under an elimination order has no
  // original variables. Over the integers the reduction machinery reports
  // residual constants separately, so agreement is modulo that convention.
  auto run_domain = [](Domain dom, unsigned long long seed) {
    PolyRing r = make_ring(dom, OrderKind::DegLex, {"x", "y"});
    Rng rng(seed);
    int checked = 0;
    for (int round = 0; round < 12; ++round) {
      std::vector<Poly> gens{random_poly(rng, r, 2, 2, 3, 1), random_poly(rng, r, 2, 2, 3, 1)};
      SagbiResult res = sagbi_construct(r, gens, 4);
      if (res.status != ConstructionStatus::Completed || res.basis.gens.empty()) continue;
      const SubalgebraPresentation& B = res.basis;

      // Elimination setup over the combined ring.
      const int n = r.arity();
      const int m = static_cast<int>(B.gens.size());
      PolyRing ering;
      ering.domain = dom;
      ering.vars = r.vars;
      for (int i = 0; i < m; ++i) ering.vars.push_back("t" + std::to_string(i + 1));
      std::vector<OrderBlock> blocks = r.order.blocks();
      OrderBlock tag_block{OrderKind::DegRevLex, {}};
      for (int i = 0; i < m; ++i) tag_block.vars.push_back(n + i);
      blocks.push_back(tag_block);
      ering.order = TermOrder::composite(blocks);
      auto embed = [&](const Poly& p) {
        std::vector<Term> ts;
        for (const Term& t : p.terms()) {
          std::vector<Exponent> e(t.mono.exps());
          e.resize(n + m, 0);
          ts.push_back(Term{t.coeff, Monomial(std::move(e))});
        }
        return make_poly(ering, std::move(ts));
      };
      std::vector<Poly> jgens;
      for (int i = 0; i < m; ++i)
        jgens.push_back(p_sub(ering, p_var(ering, n + i), embed(B.gens[i])));
      GroebnerBasis jgb = groebner_basis(ering, jgens);
      auto oracle_member = [&](const Poly& p) {
        Poly rem = normal_form(ering, embed(p), jgb).remainder;
        for (const Term& t : rem.terms())
          for (int v = 0; v < n; ++v)
            if (t.mono[v] != 0) return false;
        return true;
      };

      for (int t = 0; t < 8; ++t) {
        Poly p = random_poly(rng, r, 3, 4, 4);
        if (rng.pick(0, 1)) {
          // Bias half the samples toward actual members.
          Monomial e = random_monomial(rng, m, 2);
          p = p_add(r, p_mul(r, power_product(r, B.gens, e), p_const(r, Coeff(2))), Poly());
        }
        MembershipResult mine = subalgebra_member(p, B);
        bool oracle = oracle_member(p);
        if (mine.is_member()) CHECK(oracle);
        if (mine.status == MembershipStatus::NonMember) CHECK_FALSE(oracle);
        if (dom == Domain::Rationals) CHECK(mine.is_member() == oracle);
        if (mine.status == MembershipStatus::NonMemberModuloConstant) CHECK(oracle);
        ++checked;
      }
    }
    CHECK(checked >= 24);
  };
  run_domain(Domain::Integers, 1001);
  run_domain(Domain::Rationals, 2002);
}

TEST_CASE("an infinite basis marches through the cap one reductum per pass") {
  // The subalgebra generated by x+y, xy, xy^2 has no finite basis for this
  // order; every pass contributes the next x*y^k.
  PolyRing r = qq_xy();
  SagbiResult res = sagbi_construct(r, {P(r, "x + y"), P(r, "x*y"), P(r, "x*y^2")}, 3);
  CHECK(res.status == ConstructionStatus::IterationCapReached);
  CHECK(res.passes == 3);
  REQUIRE(res.basis.gens.size() == 6);
  CHECK(res.basis.gens[3] == P(r, "x*y^3"));
  CHECK(res.basis.gens[4] == P(r, "x*y^4"));
  CHECK(res.basis.gens[5] == P(r, "x*y^5"));
}

TEST_CASE("presentations strip constants and duplicates") {
  PolyRing r = zz_xy();
  SubalgebraPresentation pres =
      make_presentation(r, {P(r, "x"), P(r, "7"), P(r, "x"), Poly()});
  CHECK(pres.gens.size() == 1);
  REQUIRE(pres.constant_notes.size() == 1);
  CHECK(pres.constant_notes[0] == 7);
}
