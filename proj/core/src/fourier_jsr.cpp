#include "symwalk/errors.hpp"
#include "symwalk/jsr.hpp"
#include "symwalk/symrep.hpp"

#include <algorithm>

namespace symwalk {

FourierJsr fourier_jsr(const std::vector<GroupDistribution>& qs, const HomogeneousSpace& x,
                       const JsrOptions& opts, std::size_t dim_cap) {
  if (qs.empty()) throw DomainError("fourier_jsr: no distributions");
  for (const auto& q : qs) {
    if (q.n() != x.n()) throw DomainError("fourier_jsr: degree mismatch");
  }
  const bool all_class = std::all_of(qs.begin(), qs.end(),
                                     [](const GroupDistribution& q) { return q.is_class_invariant(); });

  FourierJsr out;
  for (const auto& [lambda, mult] : x.multiplicities()) {
    if (lambda.length() == 1) continue;
    IrrepJsr row;
    row.shape = lambda;
    row.multiplicity = mult;
    std::vector<ComplexMatrix> mats;
    if (all_class) {
      // Schur: every transform is r I, and the jsr of commuting scalars is max |r|
      row.route = "class";
      row.dim = static_cast<int>(to_u64(dim_irrep(lambda)));
      for (const auto& q : qs) {
        mats.push_back(ComplexMatrix::Constant(1, 1, class_scalar(q.to_class_distribution(), lambda)));
      }
    } else {
      row.route = "matrix";
      const Irrep rho(lambda, dim_cap);
      row.dim = rho.dim();
      for (const auto& q : qs) mats.push_back(fourier_transform(q, rho).entries);
    }
    row.matrices = MatrixSet(std::move(mats));
    row.estimate = jsr_estimate(row.matrices, opts);
    out.budget_exhausted = out.budget_exhausted || row.estimate.budget_exhausted;
    out.lower = std::max(out.lower, row.estimate.lower);
    out.upper = std::max(out.upper, row.estimate.upper);
    out.irreps.push_back(std::move(row));
  }
  out.verdict = mixing_verdict(out.lower, out.upper);
  return out;
}

}  // namespace symwalk
