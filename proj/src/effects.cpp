#include "qsi/effects.hpp"

#include <cmath>
#include <stdexcept>

namespace qsi {

const char* resource_symbol(ResourceType type) {
  if (type.kind == ChannelKind::quantum)
    return type.component == RateComponent::channel ? "Q" : "E";
  return type.component == RateComponent::channel ? "c" : "e";
}

std::array<ResourceType, 4> all_resource_types() {
  return {ResourceType{ChannelKind::quantum, RateComponent::channel},
          ResourceType{ChannelKind::quantum, RateComponent::ebit},
          ResourceType{ChannelKind::classical, RateComponent::channel},
          ResourceType{ChannelKind::classical, RateComponent::ebit}};
}

double cost_value(const MultipartiteState& state,
                  const PartitionSpec& partition, const UsageSelection& use,
                  ResourceType type) {
  const ResourceVector v = type.kind == ChannelKind::quantum
                               ? redistribution_costs(state, partition, use)
                               : merging_costs(state, partition, use);
  return type.component == RateComponent::channel ? v.channel_rate
                                                  : v.ebit_rate;
}

namespace {

// Weights of the Alice/Bob correlation terms in each closed-form effect.
struct EffectWeights {
  double alice;
  double bob;
};

EffectWeights weights_for(ResourceType type) {
  if (type.kind == ChannelKind::quantum)
    return type.component == RateComponent::channel
               ? EffectWeights{0.5, 0.5}
               : EffectWeights{-0.5, 0.5};
  return type.component == RateComponent::channel ? EffectWeights{1.0, 1.0}
                                                  : EffectWeights{0.0, 1.0};
}

std::vector<std::string> slice(const std::vector<std::string>& labels,
                               int first, int last) {
  return {labels.begin() + first, labels.begin() + last};
}

// I(transfer; added | prior) with empty `added` giving 0 and empty `prior`
// reducing to plain mutual information.
double conditional_gain(const MultipartiteState& state,
                        const PartitionSpec& partition,
                        const std::vector<std::string>& labels, int from,
                        int to) {
  if (to == from) return 0.0;
  return conditional_mutual_information(state, {partition.transfer},
                                        slice(labels, from, to),
                                        slice(labels, 0, from));
}

double effect_by_definition(const MultipartiteState& state,
                            const PartitionSpec& partition, ResourceType type,
                            const UsageSelection& use) {
  return cost_value(state, partition, UsageSelection{0, 0}, type) -
         cost_value(state, partition, use, type);
}

}  // namespace

EffectReport effect(const MultipartiteState& state,
                    const PartitionSpec& partition, ResourceType type,
                    const UsageSelection& use) {
  validate_partition(state, partition);
  validate_usage(partition, use);

  const EffectWeights w = weights_for(type);
  const double alice_info =
      conditional_gain(state, partition, partition.alice_qsi, 0,
                       use.alice_used);
  const double bob_info =
      conditional_gain(state, partition, partition.bob_qsi, 0, use.bob_used);

  EffectReport report;
  report.resource = type;
  report.by_definition = effect_by_definition(state, partition, type, use);
  report.closed_form = w.alice * alice_info + w.bob * bob_info;
  report.alice_part = effect_by_definition(
      state, partition, type, UsageSelection{use.alice_used, 0});
  report.bob_part = effect_by_definition(state, partition, type,
                                         UsageSelection{0, use.bob_used});
  return report;
}

EffectReport additional_effect(const MultipartiteState& state,
                               const PartitionSpec& partition,
                               ResourceType type, const UsageSelection& from,
                               const UsageSelection& to) {
  validate_partition(state, partition);
  validate_usage(partition, from);
  validate_usage(partition, to);
  if (from.alice_used > to.alice_used || from.bob_used > to.bob_used)
    throw std::invalid_argument(
        "additional_effect: `from` usage must not exceed `to` usage");

  const EffectWeights w = weights_for(type);
  const double alice_cond = conditional_gain(
      state, partition, partition.alice_qsi, from.alice_used, to.alice_used);
  const double bob_cond = conditional_gain(state, partition, partition.bob_qsi,
                                           from.bob_used, to.bob_used);

  EffectReport report;
  report.resource = type;
  report.by_definition = effect_by_definition(state, partition, type, to) -
                         effect_by_definition(state, partition, type, from);
  report.closed_form = w.alice * alice_cond + w.bob * bob_cond;
  report.alice_part =
      effect_by_definition(state, partition, type,
                           UsageSelection{to.alice_used, 0}) -
      effect_by_definition(state, partition, type,
                           UsageSelection{from.alice_used, 0});
  report.bob_part = effect_by_definition(state, partition, type,
                                         UsageSelection{0, to.bob_used}) -
                    effect_by_definition(state, partition, type,
                                         UsageSelection{0, from.bob_used});
  return report;
}

void IdentityReport::add(const std::string& name, double residual,
                         double tol) {
  const bool pass = residual <= tol;
  checks.push_back(IdentityCheck{name, residual, pass});
  all_pass = all_pass && pass;
}

IdentityReport check_effect_identities(const MultipartiteState& state,
                                       const PartitionSpec& partition,
                                       const UsageSelection& use, double tol) {
  validate_partition(state, partition);
  validate_usage(partition, use);

  const auto alice_effect = [&](ResourceType type) {
    return effect_by_definition(state, partition, type,
                                UsageSelection{use.alice_used, 0});
  };
  const auto bob_effect = [&](ResourceType type) {
    return effect_by_definition(state, partition, type,
                                UsageSelection{0, use.bob_used});
  };

  const ResourceType qu_channel{ChannelKind::quantum, RateComponent::channel};
  const ResourceType qu_ebit{ChannelKind::quantum, RateComponent::ebit};
  const ResourceType cl_channel{ChannelKind::classical,
                                RateComponent::channel};
  const ResourceType cl_ebit{ChannelKind::classical, RateComponent::ebit};

  const double alice_info = conditional_gain(
      state, partition, partition.alice_qsi, 0, use.alice_used);
  const double bob_info =
      conditional_gain(state, partition, partition.bob_qsi, 0, use.bob_used);

  IdentityReport report;
  report.add("alice_merging_ebit_unchanged", std::abs(alice_effect(cl_ebit)),
             tol);
  report.add("alice_bit_rate_closed_form",
             std::abs(alice_effect(cl_channel) - alice_info), tol);
  report.add("alice_bit_vs_qubit_rate",
             std::abs(alice_effect(cl_channel) - 2.0 * alice_effect(qu_channel)),
             tol);
  report.add("alice_bit_vs_ebit_rate",
             std::abs(alice_effect(cl_channel) + 2.0 * alice_effect(qu_ebit)),
             tol);
  report.add("bob_bit_rate_closed_form",
             std::abs(bob_effect(cl_channel) - bob_info), tol);
  report.add("bob_bit_vs_merging_ebit",
             std::abs(bob_effect(cl_channel) - bob_effect(cl_ebit)), tol);
  report.add("bob_bit_vs_qubit_rate",
             std::abs(bob_effect(cl_channel) - 2.0 * bob_effect(qu_channel)),
             tol);
  report.add("bob_bit_vs_ebit_rate",
             std::abs(bob_effect(cl_channel) - 2.0 * bob_effect(qu_ebit)),
             tol);
  return report;
}

ChainRuleAudit chain_rule_audit(
    const MultipartiteState& state, const std::vector<std::string>& target,
    const std::vector<std::vector<std::string>>& chain, int split) {
  if (target.empty())
    throw std::invalid_argument("chain_rule_audit: empty target set");
  if (chain.empty())
    throw std::invalid_argument("chain_rule_audit: empty chain");
  const int n = static_cast<int>(chain.size());
  if (split < 1 || split > n)
    throw std::invalid_argument("chain_rule_audit: split outside [1, n]");

  const auto prefix = [&](int count) {
    std::vector<std::string> out;
    for (int k = 0; k < count; ++k)
      out.insert(out.end(), chain[k].begin(), chain[k].end());
    return out;
  };
  const auto range = [&](int first, int last) {
    std::vector<std::string> out;
    for (int k = first; k < last; ++k)
      out.insert(out.end(), chain[k].begin(), chain[k].end());
    return out;
  };

  ChainRuleAudit audit;
  audit.joint = mutual_information(state, target, prefix(n));

  audit.telescoped = mutual_information(state, target, chain[0]);
  for (int k = 1; k < n; ++k)
    audit.telescoped += conditional_mutual_information(state, target, chain[k],
                                                       prefix(k));

  audit.split_sum = mutual_information(state, target, prefix(split));
  if (split < n)
    audit.split_sum += conditional_mutual_information(
        state, target, range(split, n), prefix(split));

  audit.telescoped_residual = std::abs(audit.joint - audit.telescoped);
  audit.split_residual = std::abs(audit.joint - audit.split_sum);
  return audit;
}

}  // namespace qsi
