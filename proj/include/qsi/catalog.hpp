#pragma once

#include "qsi/costs.hpp"

#include <string>
#include <vector>

namespace qsi {

enum class Protocol { SC, QT, FQSW, SM, FQRS, GQT, SR, GSM };

const char* protocol_name(Protocol protocol);
const char* protocol_long_name(Protocol protocol);

/// Channel kind plus which parties use side information pins the protocol:
/// quantum x (no, no) = SC, (no, yes) = FQSW, (yes, no) = FQRS,
/// (yes, yes) = SR; classical x (no, no) = QT, (no, yes) = SM,
/// (yes, no) = GQT, (yes, yes) = GSM.
struct ProtocolTag {
  Protocol name = Protocol::SC;
  ChannelKind kind = ChannelKind::quantum;
  bool alice_uses = false;
  bool bob_uses = false;
};

ProtocolTag classify(const UsageSelection& use, ChannelKind kind);

struct CatalogRow {
  ProtocolTag tag;
  UsageSelection usage;
  ResourceVector costs;
  /// Set when the partition offers more side information than the protocol
  /// admits, so only the first Alice/Bob subsystem was used.
  bool restricted = false;
};

/// Costs of every named protocol the partition can host. Single-QSI
/// protocols (FQSW, FQRS, SM, GQT) use only the first subsystem of the
/// relevant party; SR and GSM use everything.
std::vector<CatalogRow> catalog_report(const MultipartiteState& state,
                                       const PartitionSpec& partition);

}  // namespace qsi
