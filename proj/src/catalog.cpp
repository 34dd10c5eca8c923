#include "qsi/catalog.hpp"

namespace qsi {

const char* protocol_name(Protocol protocol) {
  switch (protocol) {
    case Protocol::SC: return "SC";
    case Protocol::QT: return "QT";
    case Protocol::FQSW: return "FQSW";
    case Protocol::SM: return "SM";
    case Protocol::FQRS: return "FQRS";
    case Protocol::GQT: return "GQT";
    case Protocol::SR: return "SR";
    case Protocol::GSM: return "GSM";
  }
  return "?";
}

const char* protocol_long_name(Protocol protocol) {
  switch (protocol) {
    case Protocol::SC: return "Schumacher compression";
    case Protocol::QT: return "quantum teleportation";
    case Protocol::FQSW: return "fully quantum Slepian-Wolf";
    case Protocol::SM: return "state merging";
    case Protocol::FQRS: return "fully quantum reverse Shannon";
    case Protocol::GQT: return "generalized quantum teleportation";
    case Protocol::SR: return "state redistribution";
    case Protocol::GSM: return "generalized state merging";
  }
  return "?";
}

ProtocolTag classify(const UsageSelection& use, ChannelKind kind) {
  if (use.alice_used < 0 || use.bob_used < 0)
    throw std::invalid_argument("classify: negative usage");
  ProtocolTag tag;
  tag.kind = kind;
  tag.alice_uses = use.alice_used >= 1;
  tag.bob_uses = use.bob_used >= 1;
  if (kind == ChannelKind::quantum) {
    tag.name = tag.alice_uses ? (tag.bob_uses ? Protocol::SR : Protocol::FQRS)
                              : (tag.bob_uses ? Protocol::FQSW : Protocol::SC);
  } else {
    tag.name = tag.alice_uses ? (tag.bob_uses ? Protocol::GSM : Protocol::GQT)
                              : (tag.bob_uses ? Protocol::SM : Protocol::QT);
  }
  return tag;
}

std::vector<CatalogRow> catalog_report(const MultipartiteState& state,
                                       const PartitionSpec& partition) {
  validate_partition(state, partition);
  const int m = partition.alice_count();
  const int n = partition.bob_count();

  struct Candidate {
    UsageSelection usage;
    ChannelKind kind;
    bool applicable;
    bool full_usage;  // SR/GSM consume every offered subsystem
  };
  const std::vector<Candidate> candidates{
      {{0, 0}, ChannelKind::quantum, true, false},        // SC
      {{0, 1}, ChannelKind::quantum, n >= 1, false},      // FQSW
      {{1, 0}, ChannelKind::quantum, m >= 1, false},      // FQRS
      {{m, n}, ChannelKind::quantum, m >= 1 && n >= 1, true},   // SR
      {{0, 0}, ChannelKind::classical, true, false},      // QT
      {{0, 1}, ChannelKind::classical, n >= 1, false},    // SM
      {{1, 0}, ChannelKind::classical, m >= 1, false},    // GQT
      {{m, n}, ChannelKind::classical, m >= 1 && n >= 1, true}, // GSM
  };

  std::vector<CatalogRow> rows;
  for (const Candidate& cand : candidates) {
    if (!cand.applicable) continue;
    CatalogRow row;
    row.tag = classify(cand.usage, cand.kind);
    row.usage = cand.usage;
    row.costs = cand.kind == ChannelKind::quantum
                    ? redistribution_costs(state, partition, cand.usage)
                    : merging_costs(state, partition, cand.usage);
    row.restricted = !cand.full_usage &&
                     ((cand.usage.alice_used == 1 && m > 1) ||
                      (cand.usage.bob_used == 1 && n > 1));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qsi
