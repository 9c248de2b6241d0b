#ifndef SUBALG_SYZYGY_HPP
#define SUBALG_SYZYGY_HPP

#include <vector>

#include "subalg/sgbasis.hpp"

namespace subalg {

/// Vector over the subalgebra annihilating its target list exactly.
struct SyzygyVector {
  std::vector<AlgebraElement> coords;
};

/// Generators of the syzygies of a completed basis: each lt-syzygy vector
/// minus a representation of its evaluation.
std::vector<SyzygyVector> sg_syzygy_generators(const SgResult& sg);

/// originals = W * basis and basis = U * originals, both replayed exactly.
struct BasisMatrices {
  std::vector<std::vector<AlgebraElement>> w_rows;  // |originals| x |basis|
  std::vector<std::vector<AlgebraElement>> u_rows;  // |basis| x |originals|
};

BasisMatrices change_of_basis(const std::vector<Poly>& originals, const SgResult& sg);

struct SubsetSyzygies {
  ConstructionStatus status = ConstructionStatus::Completed;
  SgResult sg;
  BasisMatrices matrices;
  std::vector<SyzygyVector> generators;  // over the original list
};

/// Syzygy generators of an arbitrary finite subset of the subalgebra:
/// basis syzygies pushed through the change of basis, plus the nonzero
/// rows of I - W*U.
SubsetSyzygies subset_syzygy_generators(const SubalgebraPresentation& ambient,
                                        const std::vector<Poly>& subset,
                                        int max_passes = kDefaultMaxPasses);

}  // namespace subalg

#endif
