#pragma once

#include "qsi/costs.hpp"

#include <array>
#include <string>
#include <vector>

namespace qsi {

enum class RateComponent { channel, ebit };

/// One of the four tracked resources: qubit rate Q, redistribution ebit rate
/// E, bit rate c, or merging ebit rate e.
struct ResourceType {
  ChannelKind kind = ChannelKind::quantum;
  RateComponent component = RateComponent::channel;
};

const char* resource_symbol(ResourceType type);
std::array<ResourceType, 4> all_resource_types();

/// Value of the chosen resource cost at the given usage.
double cost_value(const MultipartiteState& state,
                  const PartitionSpec& partition, const UsageSelection& use,
                  ResourceType type);

/// Cost saving from using side information, evaluated two ways: as a
/// difference of costs and as the closed form in the correlations between
/// the transfer part and the used side information. alice_part/bob_part are
/// the savings with only one party's side information in use.
struct EffectReport {
  ResourceType resource;
  double by_definition = 0.0;
  double closed_form = 0.0;
  double alice_part = 0.0;
  double bob_part = 0.0;
};

EffectReport effect(const MultipartiteState& state,
                    const PartitionSpec& partition, ResourceType type,
                    const UsageSelection& use);

/// Extra saving from enlarging the used side information from `from` to
/// `to`; the closed form is conditional mutual information.
EffectReport additional_effect(const MultipartiteState& state,
                               const PartitionSpec& partition,
                               ResourceType type, const UsageSelection& from,
                               const UsageSelection& to);

struct IdentityCheck {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_pass = true;

  void add(const std::string& name, double residual, double tol);
};

/// Verifies the single-party effect identities at usage (alice_used, 0) and
/// (0, bob_used): the merging ebit rate is untouched by Alice's side
/// information, and every other single-party effect is a fixed multiple of
/// the corresponding mutual information.
IdentityReport check_effect_identities(const MultipartiteState& state,
                                       const PartitionSpec& partition,
                                       const UsageSelection& use, double tol);

/// Both decompositions of I(target; S_1...S_n): the full telescope of
/// conditional terms and the two-term split at `split`.
struct ChainRuleAudit {
  double joint = 0.0;
  double telescoped = 0.0;
  double split_sum = 0.0;
  double telescoped_residual = 0.0;
  double split_residual = 0.0;
};

ChainRuleAudit chain_rule_audit(const MultipartiteState& state,
                                const std::vector<std::string>& target,
                                const std::vector<std::vector<std::string>>& chain,
                                int split);

}  // namespace qsi
