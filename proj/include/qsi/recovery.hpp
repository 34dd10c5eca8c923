#pragma once

#include "qsi/entropy.hpp"

#include <string>
#include <vector>

namespace qsi {

/// Outcome of rebuilding the full state from its restriction to c + s1 via
/// the Petz map. `bound` is 2^(-qcmi/2); whether the achieved fidelity
/// clears it is reported, not guaranteed.
struct RecoveryReport {
  double qcmi = 0.0;
  double achieved_fidelity = 0.0;
  double bound = 0.0;
  bool bound_satisfied = false;
  double trace_deficiency = 0.0;
};

/// Applies the Petz map built from the s1s2 and s1 marginals to the state's
/// restriction on c + s1. The label sets must partition the layout. The
/// output is renormalized to trace 1 and laid out in (c, s1, s2) order.
MultipartiteState petz_recover(const MultipartiteState& state,
                               const std::vector<std::string>& c,
                               const std::vector<std::string>& s1,
                               const std::vector<std::string>& s2);

RecoveryReport recovery_report(const MultipartiteState& state,
                               const std::vector<std::string>& c,
                               const std::vector<std::string>& s1,
                               const std::vector<std::string>& s2);

/// True iff I(c; s2 | s1) <= tol.
bool is_markov(const MultipartiteState& state,
               const std::vector<std::string>& c,
               const std::vector<std::string>& s1,
               const std::vector<std::string>& s2, double tol);

}  // namespace qsi
