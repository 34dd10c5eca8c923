#include "qsi/costs.hpp"

#include <set>
#include <sstream>

namespace qsi {

const char* channel_kind_name(ChannelKind kind) {
  return kind == ChannelKind::quantum ? "quantum" : "classical";
}

PartitionSpec PartitionSpec::from_roles(const SubsystemLayout& layout) {
  PartitionSpec spec;
  const auto transfer = layout.labels_with_role(Role::transfer);
  if (transfer.size() != 1)
    throw std::invalid_argument(
        "partition: layout must carry exactly one transfer subsystem, found " +
        std::to_string(transfer.size()));
  spec.transfer = transfer.front();
  spec.alice_qsi = layout.labels_with_role(Role::alice_qsi);
  spec.bob_qsi = layout.labels_with_role(Role::bob_qsi);
  spec.reference = layout.labels_with_role(Role::reference);
  return spec;
}

void validate_partition(const MultipartiteState& state,
                        const PartitionSpec& partition) {
  std::vector<std::string> all{partition.transfer};
  all.insert(all.end(), partition.alice_qsi.begin(),
             partition.alice_qsi.end());
  all.insert(all.end(), partition.bob_qsi.begin(), partition.bob_qsi.end());
  all.insert(all.end(), partition.reference.begin(),
             partition.reference.end());

  std::set<std::string> seen;
  for (const std::string& label : all) {
    state.layout.index_of(label);  // throws on unknown label
    if (!seen.insert(label).second)
      throw std::invalid_argument("partition: label \"" + label +
                                  "\" appears in more than one field");
  }
  if (all.size() != state.layout.size())
    throw std::invalid_argument(
        "partition: fields do not cover every layout subsystem");
}

void validate_usage(const PartitionSpec& partition,
                    const UsageSelection& use) {
  if (use.alice_used < 0 || use.alice_used > partition.alice_count()) {
    std::ostringstream msg;
    msg << "usage: alice_used " << use.alice_used << " outside [0, "
        << partition.alice_count() << "]";
    throw std::invalid_argument(msg.str());
  }
  if (use.bob_used < 0 || use.bob_used > partition.bob_count()) {
    std::ostringstream msg;
    msg << "usage: bob_used " << use.bob_used << " outside [0, "
        << partition.bob_count() << "]";
    throw std::invalid_argument(msg.str());
  }
}

namespace {

std::vector<std::string> used_slice(const std::vector<std::string>& labels,
                                    int count) {
  return {labels.begin(), labels.begin() + count};
}

std::vector<std::string> unused_slice(const std::vector<std::string>& labels,
                                      int count) {
  return {labels.begin() + count, labels.end()};
}

// I(transfer; first `count` of labels), with the empty set contributing 0.
double transfer_correlation(const MultipartiteState& state,
                            const PartitionSpec& partition,
                            const std::vector<std::string>& labels,
                            int count) {
  if (count == 0) return 0.0;
  return mutual_information(state, {partition.transfer},
                            used_slice(labels, count));
}

}  // namespace

ResourceVector redistribution_costs(const MultipartiteState& state,
                                    const PartitionSpec& partition,
                                    const UsageSelection& use) {
  validate_partition(state, partition);
  validate_usage(partition, use);
  const double transfer_entropy =
      von_neumann_entropy(state, {partition.transfer});
  const double alice_info =
      transfer_correlation(state, partition, partition.alice_qsi,
                           use.alice_used);
  const double bob_info = transfer_correlation(state, partition,
                                               partition.bob_qsi,
                                               use.bob_used);
  return ResourceVector{ChannelKind::quantum,
                        transfer_entropy - 0.5 * alice_info - 0.5 * bob_info,
                        0.5 * alice_info - 0.5 * bob_info};
}

ResourceVector merging_costs(const MultipartiteState& state,
                             const PartitionSpec& partition,
                             const UsageSelection& use) {
  validate_partition(state, partition);
  validate_usage(partition, use);
  const double transfer_entropy =
      von_neumann_entropy(state, {partition.transfer});
  const double alice_info =
      transfer_correlation(state, partition, partition.alice_qsi,
                           use.alice_used);
  const double bob_info = transfer_correlation(state, partition,
                                               partition.bob_qsi,
                                               use.bob_used);
  return ResourceVector{ChannelKind::classical,
                        2.0 * transfer_entropy - alice_info - bob_info,
                        transfer_entropy - bob_info};
}

double redistribution_channel_rate_via_qcmi(const MultipartiteState& state,
                                            const PartitionSpec& partition,
                                            const UsageSelection& use) {
  validate_partition(state, partition);
  validate_usage(partition, use);

  MultipartiteState working = state;
  PartitionSpec extended = partition;
  if (purity(state) < 1.0 - 1e-10) {
    std::string ref = "_purification";
    while (working.layout.has_label(ref)) ref += "_";
    working = density_from_pure(purify(state, ref));
    extended.reference.push_back(ref);
  }

  std::vector<std::string> residual =
      unused_slice(extended.alice_qsi, use.alice_used);
  const auto unused_bob = unused_slice(extended.bob_qsi, use.bob_used);
  residual.insert(residual.end(), unused_bob.begin(), unused_bob.end());
  residual.insert(residual.end(), extended.reference.begin(),
                  extended.reference.end());

  if (residual.empty()) return 0.0;
  const auto used_bob = used_slice(extended.bob_qsi, use.bob_used);
  return 0.5 * conditional_mutual_information(working, {extended.transfer},
                                              residual, used_bob);
}

ResourceVector convert_quantum_to_classical(const ResourceVector& v) {
  if (v.kind != ChannelKind::quantum)
    throw std::invalid_argument(
        "convert_quantum_to_classical: input is not quantum");
  return ResourceVector{ChannelKind::classical, 2.0 * v.channel_rate,
                        v.ebit_rate + v.channel_rate};
}

ResourceVector convert_classical_to_quantum(const ResourceVector& v) {
  if (v.kind != ChannelKind::classical)
    throw std::invalid_argument(
        "convert_classical_to_quantum: input is not classical");
  return ResourceVector{ChannelKind::quantum, v.channel_rate / 2.0,
                        v.ebit_rate - v.channel_rate / 2.0};
}

const CostCell& CostGrid::at(int alice_used, int bob_used) const {
  if (alice_used < 0 || alice_used > alice_max || bob_used < 0 ||
      bob_used > bob_max)
    throw std::invalid_argument("cost grid: usage out of range");
  return cells[static_cast<std::size_t>(alice_used) * (bob_max + 1) +
               bob_used];
}

CostGrid cost_grid(const MultipartiteState& state,
                   const PartitionSpec& partition) {
  validate_partition(state, partition);
  CostGrid grid;
  grid.alice_max = partition.alice_count();
  grid.bob_max = partition.bob_count();
  for (int i = 0; i <= grid.alice_max; ++i)
    for (int j = 0; j <= grid.bob_max; ++j) {
      const UsageSelection use{i, j};
      grid.cells.push_back(CostCell{use,
                                    redistribution_costs(state, partition, use),
                                    merging_costs(state, partition, use)});
    }
  return grid;
}

}  // namespace qsi
