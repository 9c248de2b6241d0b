#include "subalg/syzygy.hpp"

#include <stdexcept>

namespace subalg {

namespace {

void assert_annihilates(const SubalgebraPresentation& A, const std::vector<AlgebraElement>& v,
                        const std::vector<Poly>& targets) {
  Poly acc;
  for (size_t i = 0; i < targets.size(); ++i)
    acc = p_add(A.xring, acc, p_mul(A.xring, v[i].value, targets[i]));
  if (!acc.is_zero()) throw std::logic_error("emitted vector does not annihilate its targets");
}

}  // namespace

std::vector<SyzygyVector> sg_syzygy_generators(const SgResult& sg) {
  if (sg.status != ConstructionStatus::Completed || !sg.basis.sg_verified)
    throw std::invalid_argument("syzygy generators require a completed verified basis");
  const IdealPresentation& ideal = sg.basis;
  const SubalgebraPresentation& A = ideal.ambient;
  std::vector<Poly> values;
  for (const AlgebraElement& g : ideal.gens) values.push_back(g.value);

  std::vector<SyzygyVector> out;
  for (const LtSyzygyVector& q : lt_syzygy_generators(ideal)) {
    Poly value;
    for (size_t i = 0; i < ideal.gens.size(); ++i)
      value = p_add(A.xring, value, p_mul(A.xring, q.coords[i].value, values[i]));
    SiReduction red = si_reduce(value, ideal);
    if (!red.final.is_zero())
      throw std::logic_error("evaluation does not reduce to zero over a verified basis");
    SgRepresentation rep = representation_from_parts(ideal, value, red.parts);
    SyzygyVector v;
    for (size_t i = 0; i < ideal.gens.size(); ++i)
      v.coords.push_back(ae_sub(A, q.coords[i], rep.coeffs[i]));
    assert_annihilates(A, v.coords, values);
    out.push_back(std::move(v));
  }
  return out;
}

BasisMatrices change_of_basis(const std::vector<Poly>& originals, const SgResult& sg) {
  if (sg.status != ConstructionStatus::Completed)
    throw std::invalid_argument("change of basis requires a completed construction");
  const IdealPresentation& ideal = sg.basis;
  const SubalgebraPresentation& A = ideal.ambient;
  BasisMatrices m;
  m.u_rows = sg.u_rows;
  for (const Poly& h : originals) {
    auto rep = ideal_member(h, ideal);
    if (!rep) throw std::logic_error("original generator is not a member of the constructed basis");
    m.w_rows.push_back(std::move(rep->coeffs));
  }
  // Replay both identities.
  for (size_t i = 0; i < originals.size(); ++i) {
    Poly acc;
    for (size_t j = 0; j < ideal.gens.size(); ++j)
      acc = p_add(A.xring, acc, p_mul(A.xring, m.w_rows[i][j].value, ideal.gens[j].value));
    if (acc != originals[i]) throw std::logic_error("W does not replay the originals");
  }
  for (size_t j = 0; j < ideal.gens.size(); ++j) {
    Poly acc;
    for (size_t i = 0; i < originals.size(); ++i)
      acc = p_add(A.xring, acc, p_mul(A.xring, m.u_rows[j][i].value, originals[i]));
    if (acc != ideal.gens[j].value) throw std::logic_error("U does not replay the basis");
  }
  return m;
}

SubsetSyzygies subset_syzygy_generators(const SubalgebraPresentation& ambient,
                                        const std::vector<Poly>& subset, int max_passes) {
  SubsetSyzygies out;
  out.sg = sg_construct(ambient, subset, max_passes);
  out.status = out.sg.status;
  if (out.status != ConstructionStatus::Completed) return out;
  const SubalgebraPresentation& A = out.sg.basis.ambient;
  const size_t n = subset.size();
  const size_t m = out.sg.basis.gens.size();
  out.matrices = change_of_basis(subset, out.sg);

  std::vector<SyzygyVector> basis_syz = sg_syzygy_generators(out.sg);
  for (const SyzygyVector& p : basis_syz) {
    SyzygyVector v;
    v.coords.assign(n, ae_zero());
    for (size_t k = 0; k < n; ++k) {
      for (size_t i = 0; i < m; ++i)
        v.coords[k] = ae_add(A, v.coords[k], ae_mul(A, p.coords[i], out.matrices.u_rows[i][k]));
    }
    bool zero = true;
    for (const AlgebraElement& c : v.coords)
      if (!ae_is_zero(c)) zero = false;
    if (zero) continue;
    assert_annihilates(A, v.coords, subset);
    out.generators.push_back(std::move(v));
  }

  // Rows of I - W*U; zero rows are trivial syzygies and are dropped.
  for (size_t i = 0; i < n; ++i) {
    SyzygyVector v;
    v.coords.assign(n, ae_zero());
    for (size_t k = 0; k < n; ++k) {
      AlgebraElement acc = ae_zero();
      for (size_t j = 0; j < m; ++j)
        acc = ae_add(A, acc, ae_mul(A, out.matrices.w_rows[i][j], out.matrices.u_rows[j][k]));
      if (i == k) acc = ae_sub(A, ae_const(A, Coeff(1)), acc);
      else acc = ae_neg(acc);
      v.coords[k] = std::move(acc);
    }
    bool zero = true;
    for (const AlgebraElement& c : v.coords)
      if (!ae_is_zero(c)) zero = false;
    if (zero) continue;
    assert_annihilates(A, v.coords, subset);
    out.generators.push_back(std::move(v));
  }
  return out;
}

}  // namespace subalg
