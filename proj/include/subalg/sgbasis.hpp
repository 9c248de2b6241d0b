#ifndef SUBALG_SGBASIS_HPP
#define SUBALG_SGBASIS_HPP

#include <optional>
#include <vector>

#include "subalg/sagbi.hpp"

namespace subalg {

/// Subalgebra element together with a tag-ring expression over the ambient
/// generators that evaluates to it. Arithmetic keeps both in step, so sums
/// and products of certified elements stay certified.
struct AlgebraElement {
  Poly value;
  Poly tag_form;
};

AlgebraElement ae_zero();
AlgebraElement ae_const(const SubalgebraPresentation& pres, const Coeff& c);
AlgebraElement ae_from_certificate(const SubalgebraPresentation& pres, const Poly& value,
                                   const SReductionCertificate& cert);
AlgebraElement ae_add(const SubalgebraPresentation& pres, const AlgebraElement& a,
                      const AlgebraElement& b);
AlgebraElement ae_sub(const SubalgebraPresentation& pres, const AlgebraElement& a,
                      const AlgebraElement& b);
AlgebraElement ae_mul(const SubalgebraPresentation& pres, const AlgebraElement& a,
                      const AlgebraElement& b);
AlgebraElement ae_neg(const AlgebraElement& a);
AlgebraElement ae_scale(const AlgebraElement& a, const Coeff& c);
bool ae_is_zero(const AlgebraElement& a);
/// tag_form evaluates to value (certificate replay).
bool ae_consistent(const SubalgebraPresentation& pres, const AlgebraElement& a);

/// Ideal of the subalgebra given by an ordered generator list, each with a
/// membership certificate. Duplicates are retained; zero values are invalid.
struct IdealPresentation {
  SubalgebraPresentation ambient;
  std::vector<AlgebraElement> gens;
  bool sg_verified = false;
};

IdealPresentation make_ideal(const SubalgebraPresentation& ambient,
                             const std::vector<Poly>& gens);

struct SiPart {
  AlgebraElement coeff;
  int gen_index;
};

/// h - final = sum parts.coeff * gens[parts.gen_index], exactly; no term of
/// final admits a further step.
struct SiReduction {
  std::vector<SiPart> parts;
  Poly final;
};

SiReduction si_reduce(const Poly& h, const IdealPresentation& ideal);

/// Vector over the subalgebra whose leading terms form a homogeneous syzygy
/// of the generator leading terms, of the stated degree.
struct LtSyzygyVector {
  std::vector<AlgebraElement> coords;
  Monomial degree;
};

std::vector<LtSyzygyVector> lt_syzygy_generators(const IdealPresentation& ideal);

struct SgPassRecord {
  std::vector<LtSyzygyVector> syzygies;
  std::vector<Poly> evaluations;
  std::vector<Poly> reducta;
};

struct SgResult {
  ConstructionStatus status = ConstructionStatus::Completed;
  IdealPresentation basis;
  int passes = 0;
  /// Row i expresses basis.gens[i] over the original generators.
  std::vector<std::vector<AlgebraElement>> u_rows;
  std::vector<SgPassRecord> trail;
};

SgResult sg_construct(const SubalgebraPresentation& ambient, const std::vector<Poly>& gens,
                      int max_passes = kDefaultMaxPasses);

struct SgVerification {
  bool verified = false;
  std::optional<LtSyzygyVector> failing_vector;
  Poly failing_evaluation;
  Poly failing_reductum;
};

SgVerification sg_verify(const IdealPresentation& ideal);

/// Representation h = sum coeffs[i] * gens[i] with height equal to lp(h).
struct SgRepresentation {
  std::vector<AlgebraElement> coeffs;
};

/// Decides membership of a (which must lie in the ambient subalgebra) in
/// the ideal; requires ideal.sg_verified.
std::optional<SgRepresentation> ideal_member(const Poly& a, const IdealPresentation& ideal);

/// Per-index sums of the parts of a zero-final reduction of h, checked
/// against the height law.
SgRepresentation representation_from_parts(const IdealPresentation& ideal, const Poly& h,
                                           const std::vector<SiPart>& parts);

}  // namespace subalg

#endif
