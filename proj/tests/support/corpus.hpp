#pragma once

// Seeded state corpora shared by the property tests and the acceptance
// suite. Every corpus is a pure function of the fixed seeds below, so a
// passing run pins the exact states that were verified.

#include "qsi/costs.hpp"
#include "support/oracle.hpp"

#include <cstdint>
#include <vector>

namespace corpus {

oracle::cmat to_oracle(const qsi::Matrix& m);
std::vector<std::size_t> dims_of(const qsi::SubsystemLayout& layout);

// 500 tripartite states, dims 2.2.2 and 2.3.2, pure and rank-2 mixed.
std::vector<qsi::MultipartiteState> tripartite();

// 200 pure 4-partite qubit states for the chain-rule audits.
std::vector<qsi::MultipartiteState> four_qubit_chain();

struct CostCase {
  qsi::MultipartiteState state;
  qsi::PartitionSpec partition;
};

// Random 4-partite states under (m,n) = (1,1), (2,1) and (1,2) partitions,
// pure and mixed, plus the named states: GHZ3, GHZ4, w(3) and the werner
// family. Grids, effects, decomposition and monotonicity run over this set.
std::vector<CostCase> cost_cases();

// The (m,n) = (2,1) / (1,2) subset used for the conditional-information
// closed forms of the additional effects.
std::vector<CostCase> two_step_cases();

// 100 seeded tripartite states on which the recovery bound is asserted.
std::vector<qsi::MultipartiteState> recovery_bound();

// Named builders reused across tests.
qsi::MultipartiteState bell_transfer();        // transfer + reference
qsi::MultipartiteState ghz3_bob();             // transfer, bob_qsi, reference
qsi::MultipartiteState ghz4_full();            // transfer, alice, bob, ref
qsi::MultipartiteState ghz4_two_bob();         // transfer, bob, bob, ref
qsi::MultipartiteState w3_alice();             // transfer, alice_qsi, reference
qsi::MultipartiteState werner_bob(double p);   // transfer + bob_qsi

}  // namespace corpus
