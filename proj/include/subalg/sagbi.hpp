#ifndef SUBALG_SAGBI_HPP
#define SUBALG_SAGBI_HPP

#include <optional>
#include <vector>

#include "subalg/poly.hpp"

namespace subalg {

/// Ordered generator list for a subalgebra. Generators are nonzero,
/// nonconstant and pairwise distinct; constants found in the input are
/// recorded aside (reduction cannot act at leading monomial 1).
struct SubalgebraPresentation {
  PolyRing xring;
  std::vector<Poly> gens;
  std::vector<Coeff> constant_notes;
  bool sagbi_verified = false;

  PolyRing tag_ring;
  std::vector<Monomial> lead_monos;
  std::vector<Coeff> lead_coeffs;
};

SubalgebraPresentation make_presentation(const PolyRing& xring, const std::vector<Poly>& gens);

/// One elimination step: the combination sum coeffs[k] * gens^exps[k]
/// whose leading monomial equals `at`, the monomial it removed.
struct SReductionStep {
  std::vector<Coeff> coeffs;
  std::vector<Monomial> exps;
  Monomial at;
};

/// input - final = sum over steps of the step combinations, exactly.
struct SReductionCertificate {
  std::vector<SReductionStep> steps;
  Poly final;
};

SReductionCertificate s_reduce(const Poly& g, const SubalgebraPresentation& pres);

/// Sum of all step combinations of a certificate (the reduced-away part).
Poly certificate_combination(const SubalgebraPresentation& pres,
                             const SReductionCertificate& cert);
/// The certificate's combination as a tag-ring polynomial.
Poly certificate_tag_form(const SubalgebraPresentation& pres, const SReductionCertificate& cert);

enum class ConstructionStatus { Completed, IterationCapReached };

struct SagbiPassRecord {
  std::vector<Poly> kernel_gens;  // homogeneous, over that pass's tag ring
  std::vector<Poly> evaluations;
  std::vector<Poly> reducta;
  int tag_count = 0;
};

struct SagbiResult {
  ConstructionStatus status = ConstructionStatus::Completed;
  SubalgebraPresentation basis;
  int passes = 0;
  std::vector<SagbiPassRecord> trail;
};

constexpr int kDefaultMaxPasses = 16;

SagbiResult sagbi_construct(const PolyRing& xring, const std::vector<Poly>& gens,
                            int max_passes = kDefaultMaxPasses);

struct SagbiVerification {
  bool verified = false;
  // On failure: the homogeneous kernel generator whose evaluation does not
  // reduce to zero, and its final reductum.
  Poly failing_kernel_gen;
  Poly failing_reductum;
  std::vector<Coeff> constant_notes;
};

SagbiVerification sagbi_verify(const SubalgebraPresentation& pres);

enum class MembershipStatus { Member, NonMember, NonMemberModuloConstant };

struct MembershipResult {
  MembershipStatus status = MembershipStatus::NonMember;
  SReductionCertificate certificate;
  Coeff residual_constant = Coeff(0);
  bool is_member() const { return status == MembershipStatus::Member; }
};

/// Decides p in R[gens]; requires pres.sagbi_verified.
MembershipResult subalgebra_member(const Poly& p, const SubalgebraPresentation& pres);

}  // namespace subalg

#endif
