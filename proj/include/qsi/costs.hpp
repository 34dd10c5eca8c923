#pragma once

#include "qsi/entropy.hpp"

#include <string>
#include <vector>

namespace qsi {

enum class ChannelKind { quantum, classical };

const char* channel_kind_name(ChannelKind kind);

/// Assignment of subsystem labels to the transfer part, Alice's and Bob's
/// side information (in usage order), and the reference.
struct PartitionSpec {
  std::string transfer;
  std::vector<std::string> alice_qsi;
  std::vector<std::string> bob_qsi;
  std::vector<std::string> reference;

  int alice_count() const { return static_cast<int>(alice_qsi.size()); }
  int bob_count() const { return static_cast<int>(bob_qsi.size()); }

  /// Reads the partition off the layout roles, in layout order.
  static PartitionSpec from_roles(const SubsystemLayout& layout);
};

/// Checks that the partition labels are distinct and cover the layout.
void validate_partition(const MultipartiteState& state,
                        const PartitionSpec& partition);

/// How many of Alice's and Bob's side-information subsystems are used.
struct UsageSelection {
  int alice_used = 0;
  int bob_used = 0;
};

void validate_usage(const PartitionSpec& partition, const UsageSelection& use);

/// Channel and entanglement rates per copy. A negative ebit_rate means net
/// entanglement is generated rather than consumed.
struct ResourceVector {
  ChannelKind kind = ChannelKind::quantum;
  double channel_rate = 0.0;
  double ebit_rate = 0.0;
};

/// Optimal qubit-channel and ebit rates when the first `alice_used` /
/// `bob_used` side-information subsystems are exploited.
ResourceVector redistribution_costs(const MultipartiteState& state,
                                    const PartitionSpec& partition,
                                    const UsageSelection& use);

/// Optimal bit-channel and ebit rates for the classical-channel variant.
ResourceVector merging_costs(const MultipartiteState& state,
                             const PartitionSpec& partition,
                             const UsageSelection& use);

/// Qubit-channel rate computed along the independent conditional-information
/// route: half of I(transfer; unused-and-reference | used Bob QSI) on a
/// purification. Mixed states are purified with a fresh reference label
/// absorbed into the reference set.
double redistribution_channel_rate_via_qcmi(const MultipartiteState& state,
                                            const PartitionSpec& partition,
                                            const UsageSelection& use);

/// Teleportation accounting: one qubit channel = two bit channels + one ebit.
ResourceVector convert_quantum_to_classical(const ResourceVector& v);

/// Coherent-bit accounting: two bit channels = one qubit channel - one ebit.
/// Exact inverse of convert_quantum_to_classical.
ResourceVector convert_classical_to_quantum(const ResourceVector& v);

struct CostCell {
  UsageSelection usage;
  ResourceVector redistribution;  // quantum kind
  ResourceVector merging;         // classical kind
};

struct CostGrid {
  int alice_max = 0;
  int bob_max = 0;
  std::vector<CostCell> cells;  // row-major over (alice_used, bob_used)

  const CostCell& at(int alice_used, int bob_used) const;
};

/// All (alice_used, bob_used) cost pairs for the given partition.
CostGrid cost_grid(const MultipartiteState& state,
                   const PartitionSpec& partition);

}  // namespace qsi
