#pragma once

#include "qsi/costs.hpp"

#include <cstdint>
#include <string>

namespace qsi {

/// A state document resolved into a concrete state and partition.
/// digest is a stable content hash of the canonicalized document.
struct ParsedDocument {
  MultipartiteState state;
  PartitionSpec partition;
  std::string digest;
};

/// Parses the JSON state document: a `subsystems` list of
/// {label, dim, role} and a `state` object whose `kind` is one of
/// bell | ghz | w | werner | pure | density | random_pure | random_mixed.
/// fallback_seed is used by the random kinds when the document carries no
/// seed of its own.
ParsedDocument parse_state_document(const std::string& text,
                                    std::uint64_t fallback_seed);

/// FNV-1a 64-bit hex digest.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace qsi
