#include "qsi/recovery.hpp"

#include <cmath>
#include <set>

namespace qsi {

namespace {

std::vector<std::string> concat(const std::vector<std::string>& a,
                                const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void require_partition(const MultipartiteState& state,
                       const std::vector<std::string>& c,
                       const std::vector<std::string>& s1,
                       const std::vector<std::string>& s2) {
  std::set<std::string> seen;
  for (const auto* group : {&c, &s1, &s2})
    for (const std::string& label : *group) {
      state.layout.index_of(label);
      if (!seen.insert(label).second)
        throw std::invalid_argument(
            "recovery: label \"" + label + "\" appears in more than one set");
    }
  if (c.empty() || s1.empty() || s2.empty())
    throw std::invalid_argument("recovery: c, s1, s2 must be non-empty");
  if (seen.size() != state.layout.size())
    throw std::invalid_argument(
        "recovery: c, s1, s2 must cover every layout subsystem");
}

struct PetzResult {
  MultipartiteState recovered;  // (c, s1, s2) order, trace 1
  MultipartiteState reference;  // input permuted to the same order
  double trace_deficiency = 0.0;
};

PetzResult petz_apply(const MultipartiteState& state,
                      const std::vector<std::string>& c,
                      const std::vector<std::string>& s1,
                      const std::vector<std::string>& s2) {
  require_partition(state, c, s1, s2);

  const MultipartiteState ordered =
      permute(state, concat(concat(c, s1), s2));
  const MultipartiteState on_cs1 = partial_trace(ordered, concat(c, s1));
  const MultipartiteState on_s1 = partial_trace(ordered, s1);
  const MultipartiteState on_s1s2 = partial_trace(ordered, concat(s1, s2));

  Eigen::Index dim_c = 1, dim_s2 = 1;
  for (const std::string& label : c)
    dim_c *= ordered.layout.subsystems()[ordered.layout.index_of(label)].dim;
  for (const std::string& label : s2)
    dim_s2 *= ordered.layout.subsystems()[ordered.layout.index_of(label)].dim;
  const Matrix id_c = Matrix::Identity(dim_c, dim_c);
  const Matrix id_s2 = Matrix::Identity(dim_s2, dim_s2);

  // (1_c ⊗ s1^{-1/2}) rho_{cs1} (1_c ⊗ s1^{-1/2}), then tensor the s2 slot
  // and conjugate by 1_c ⊗ (s1s2)^{1/2}.
  const Matrix normalizer = tensor(id_c, inv_sqrt_psd(on_s1.rho));
  const Matrix flattened = normalizer * on_cs1.rho * normalizer;
  const Matrix extend = tensor(id_c, sqrt_psd(on_s1s2.rho));
  Matrix raw = extend * tensor(flattened, id_s2) * extend;
  raw = 0.5 * (raw + raw.adjoint().eval());

  const double raw_trace = raw.trace().real();
  const double deficiency = 1.0 - raw_trace;

  // Clip spectral noise, then renormalize.
  const HermitianEigen eig = eig_hermitian(raw);
  const double cutoff =
      kRelativeZeroCutoff * eig.eigenvalues.cwiseAbs().maxCoeff();
  RealVector clipped(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < clipped.size(); ++i)
    clipped[i] = eig.eigenvalues[i] > cutoff ? eig.eigenvalues[i] : 0.0;
  Matrix cleaned = eig.eigenvectors * clipped.asDiagonal() *
                   eig.eigenvectors.adjoint();
  cleaned /= cleaned.trace().real();

  return PetzResult{MultipartiteState{ordered.layout, std::move(cleaned)},
                    ordered, deficiency};
}

}  // namespace

MultipartiteState petz_recover(const MultipartiteState& state,
                               const std::vector<std::string>& c,
                               const std::vector<std::string>& s1,
                               const std::vector<std::string>& s2) {
  return petz_apply(state, c, s1, s2).recovered;
}

RecoveryReport recovery_report(const MultipartiteState& state,
                               const std::vector<std::string>& c,
                               const std::vector<std::string>& s1,
                               const std::vector<std::string>& s2) {
  const PetzResult result = petz_apply(state, c, s1, s2);

  RecoveryReport report;
  report.qcmi = conditional_mutual_information(state, c, s2, s1);
  report.achieved_fidelity =
      fidelity(result.reference.rho, result.recovered.rho);
  report.bound = std::exp2(-0.5 * report.qcmi);
  report.bound_satisfied = report.achieved_fidelity >= report.bound - 1e-8;
  report.trace_deficiency = result.trace_deficiency;
  return report;
}

bool is_markov(const MultipartiteState& state,
               const std::vector<std::string>& c,
               const std::vector<std::string>& s1,
               const std::vector<std::string>& s2, double tol) {
  require_partition(state, c, s1, s2);
  return conditional_mutual_information(state, c, s2, s1) <= tol;
}

}  // namespace qsi
