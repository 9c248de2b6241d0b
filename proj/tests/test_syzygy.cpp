#include <doctest.h>

#include "helpers.hpp"
#include "subalg/groebner.hpp"
#include "subalg/syzygy.hpp"

using namespace subalg;
using namespace subalg::test;

namespace {

struct Setup {
  PolyRing r;
  SubalgebraPresentation A;
  Poly f2;
  std::vector<Poly> H;
};

Setup make_setup() {
  Setup s{zz_xy(), {}, {}, {}};
  SagbiResult res =
      sagbi_construct(s.r, {P(s.r, "2*x^2 + x*y"), P(s.r, "2*y^2"), P(s.r, "3*x*y")});
  REQUIRE(res.status == ConstructionStatus::Completed);
  s.A = res.basis;
  s.f2 = P(s.r, "2*y^2");
  s.H = {P(s.r, "4*x^2*y^2 + 2*x*y^3"), P(s.r, "10*x^2*y^4 - 4*x*y^5"), P(s.r, "36*x*y^5")};
  return s;
}

Poly apply_vector(const PolyRing& r, const std::vector<AlgebraElement>& v,
                  const std::vector<Poly>& targets) {
  Poly acc;
  for (size_t i = 0; i < targets.size(); ++i)
    acc = p_add(r, acc, p_mul(r, v[i].value, targets[i]));
  return acc;
}

}  // namespace

TEST_CASE("basis syzygies annihilate the basis") {
  Setup s = make_setup();
  SgResult sg = sg_construct(s.A, {P(s.r, "4*x^2*y^2 + 2*x*y^3"), P(s.r, "18*x^2*y^4")});
  REQUIRE(sg.status == ConstructionStatus::Completed);
  std::vector<Poly> values;
  for (const AlgebraElement& g : sg.basis.gens) values.push_back(g.value);
  std::vector<SyzygyVector> syz = sg_syzygy_generators(sg);
  REQUIRE_FALSE(syz.empty());
  for (const SyzygyVector& v : syz) {
    CHECK(apply_vector(s.r, v.coords, values).is_zero());
    for (const AlgebraElement& c : v.coords) CHECK(ae_consistent(s.A, c));
  }
}

TEST_CASE("exactly one basis syzygy gains the adjoined correction") {
  // The lt-vector whose evaluation is the adjoined element picks up a unit
  // coordinate against it; the rest pass through unchanged.
  Setup s = make_setup();
  SgResult sg = sg_construct(s.A, {P(s.r, "4*x^2*y^2 + 2*x*y^3"), P(s.r, "18*x^2*y^4")});
  REQUIRE(sg.status == ConstructionStatus::Completed);
  REQUIRE(sg.basis.gens.size() == 3);
  std::vector<SyzygyVector> syz = sg_syzygy_generators(sg);
  int corrected = 0;
  for (const SyzygyVector& v : syz) {
    const AlgebraElement& last = v.coords[2];
    if (ae_is_zero(last)) continue;
    if (is_constant(last.value)) {
      ++corrected;
      Coeff c = last.value.lead().coeff;
      CHECK((c == 1 || c == -1));
    }
  }
  CHECK(corrected == 1);
}

TEST_CASE("a lone generator has identity-shaped matrices") {
  Setup s = make_setup();
  SgResult sg = sg_construct(s.A, {s.H[0]});
  REQUIRE(sg.status == ConstructionStatus::Completed);
  BasisMatrices m = change_of_basis({s.H[0]}, sg);
  REQUIRE(m.w_rows.size() == 1);
  REQUIRE(m.u_rows.size() == 1);
  CHECK(m.w_rows[0][0].value == P(s.r, "1"));
  CHECK(m.u_rows[0][0].value == P(s.r, "1"));
}

TEST_CASE("change of basis replays both identities") {
  Setup s = make_setup();
  SgResult sg = sg_construct(s.A, s.H);
  REQUIRE(sg.status == ConstructionStatus::Completed);
  BasisMatrices m = change_of_basis(s.H, sg);  // throws on replay failure
  CHECK(m.w_rows.size() == s.H.size());
  CHECK(m.u_rows.size() == sg.basis.gens.size());
}

TEST_CASE("subset syzygies annihilate the subset exactly") {
  Setup s = make_setup();
  SubsetSyzygies out = subset_syzygy_generators(s.A, s.H);
  REQUIRE(out.status == ConstructionStatus::Completed);
  REQUIRE_FALSE(out.generators.empty());
  for (const SyzygyVector& v : out.generators)
    CHECK(apply_vector(s.r, v.coords, s.H).is_zero());
}

TEST_CASE("the four reference vectors annihilate the subset") {
  // Fixed regression identities, expanded directly.
  Setup s = make_setup();
  const Poly& f1 = s.A.gens[0];
  const Poly& f2 = s.A.gens[1];
  const Poly& f3 = s.A.gens[2];
  std::vector<std::vector<Poly>> vectors{
      {p_sub(s.r, p_mul(s.r, f3, f3), p_mul(s.r, f1, f2)), p_neg(f1), Poly()},
      {p_scale(p_mul(s.r, f2, f3), Coeff(3)), Poly(), p_neg(f1)},
      {p_scale(p_mul(s.r, f2, f2), Coeff(3)), p_scale(f2, Coeff(3)), p_neg(f3)},
      {p_scale(f2, Coeff(-5)), p_const(s.r, Coeff(4)), p_const(s.r, Coeff(1))}};
  for (const auto& v : vectors) {
    Poly acc;
    for (size_t i = 0; i < 3; ++i) acc = p_add(s.r, acc, p_mul(s.r, v[i], s.H[i]));
    CHECK(acc.is_zero());
  }
}

TEST_CASE("reference vectors lie in the emitted module") {
  Setup s = make_setup();
  SubsetSyzygies out = subset_syzygy_generators(s.A, s.H);
  REQUIRE(out.status == ConstructionStatus::Completed);
  // Lift everything to the tag ring and test membership modulo the full
  // evaluation kernel (coordinates are subalgebra elements).
  PolyRing tags = s.A.tag_ring;
  std::vector<std::vector<Poly>> gens;
  for (const SyzygyVector& v : out.generators) {
    std::vector<Poly> lift;
    for (const AlgebraElement& c : v.coords) lift.push_back(c.tag_form);
    gens.push_back(std::move(lift));
  }
  GroebnerBasis kernel = evaluation_kernel(s.r, s.A.gens);
  for (const Poly& k : kernel.gens) {
    for (size_t i = 0; i < 3; ++i) {
      std::vector<Poly> shift(3, Poly());
      shift[i] = k;
      gens.push_back(std::move(shift));
    }
  }
  ModuleBasis mb = module_groebner_basis(tags, 3, gens);
  std::vector<std::vector<Poly>> reference{
      {parse_poly(tags, "y3^2 - y1*y2"), parse_poly(tags, "-y1"), Poly()},
      {parse_poly(tags, "3*y2*y3"), Poly(), parse_poly(tags, "-y1")},
      {parse_poly(tags, "3*y2^2"), parse_poly(tags, "3*y2"), parse_poly(tags, "-y3")},
      {parse_poly(tags, "-5*y2"), parse_poly(tags, "4"), parse_poly(tags, "1")}};
  for (const auto& v : reference) {
    for (const Poly& c : module_normal_form(tags, v, mb)) CHECK(c.is_zero());
  }
}

TEST_CASE("a single element has no nontrivial syzygies") {
  Setup s = make_setup();
  SubsetSyzygies out = subset_syzygy_generators(s.A, {s.H[0]});
  REQUIRE(out.status == ConstructionStatus::Completed);
  for (const SyzygyVector& v : out.generators)
    for (const AlgebraElement& c : v.coords) CHECK(ae_is_zero(c));
}

TEST_CASE("a duplicated element yields the alternating syzygy") {
  Setup s = make_setup();
  SubsetSyzygies out = subset_syzygy_generators(s.A, {s.H[0], s.H[0]});
  REQUIRE(out.status == ConstructionStatus::Completed);
  REQUIRE_FALSE(out.generators.empty());
  for (const SyzygyVector& v : out.generators)
    CHECK(apply_vector(s.r, v.coords, {s.H[0], s.H[0]}).is_zero());
  // (1, -1) lies in the emitted module.
  PolyRing tags = s.A.tag_ring;
  std::vector<std::vector<Poly>> gens;
  for (const SyzygyVector& v : out.generators)
    gens.push_back({v.coords[0].tag_form, v.coords[1].tag_form});
  for (const Poly& k : evaluation_kernel(s.r, s.A.gens).gens) {
    gens.push_back({k, Poly()});
    gens.push_back({Poly(), k});
  }
  ModuleBasis mb = module_groebner_basis(tags, 2, gens);
  std::vector<Poly> target{parse_poly(tags, "1"), parse_poly(tags, "-1")};
  for (const Poly& c : module_normal_form(tags, target, mb)) CHECK(c.is_zero());
}

TEST_CASE("cap propagation surfaces as a status") {
  Setup s = make_setup();
  SubsetSyzygies out = subset_syzygy_generators(
      s.A, {P(s.r, "4*x^2*y^2 + 2*x*y^3"), P(s.r, "18*x^2*y^4")}, 1);
  CHECK(out.status == ConstructionStatus::IterationCapReached);
  CHECK(out.generators.empty());
}
