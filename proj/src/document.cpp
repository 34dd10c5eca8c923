#include "qsi/document.hpp"

#include <json.hpp>

#include <sstream>

namespace qsi {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw std::invalid_argument("state document: field \"" + field + "\": " +
                              what);
}

SubsystemLayout parse_layout(const json& doc) {
  if (!doc.contains("subsystems") || !doc["subsystems"].is_array() ||
      doc["subsystems"].empty())
    fail("subsystems", "must be a non-empty array");
  std::vector<Subsystem> subs;
  for (const json& entry : doc["subsystems"]) {
    if (!entry.contains("label") || !entry["label"].is_string())
      fail("subsystems[].label", "must be a string");
    if (!entry.contains("dim") || !entry["dim"].is_number_integer())
      fail("subsystems[].dim", "must be an integer");
    const auto dim = entry["dim"].get<Eigen::Index>();
    if (dim < 2) fail("subsystems[].dim", "dim must be >= 2");
    if (!entry.contains("role") || !entry["role"].is_string())
      fail("subsystems[].role", "must be a string");
    subs.push_back(Subsystem{entry["label"].get<std::string>(), dim,
                             role_from_name(entry["role"].get<std::string>())});
  }
  SubsystemLayout layout(std::move(subs));
  if (layout.labels_with_role(Role::transfer).size() != 1)
    fail("subsystems[].role", "roles must cover exactly one transfer subsystem");
  return layout;
}

Vector parse_amplitudes(const json& state, Eigen::Index dim) {
  if (!state.contains("amplitudes") || !state["amplitudes"].is_array())
    fail("state.amplitudes", "must be an array of [re, im] pairs");
  const json& amp = state["amplitudes"];
  if (static_cast<Eigen::Index>(amp.size()) != dim)
    fail("state.amplitudes",
         "length " + std::to_string(amp.size()) +
             " does not match the product of dims " + std::to_string(dim));
  Vector psi(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const json& pair = amp[static_cast<std::size_t>(i)];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number())
      fail("state.amplitudes", "entries must be [re, im] number pairs");
    psi[i] = Complex(pair[0].get<double>(), pair[1].get<double>());
  }
  return psi;
}

Matrix parse_matrix(const json& state, Eigen::Index dim) {
  if (!state.contains("matrix") || !state["matrix"].is_array())
    fail("state.matrix", "must be a nested array of [re, im] pairs");
  const json& rows = state["matrix"];
  if (static_cast<Eigen::Index>(rows.size()) != dim)
    fail("state.matrix",
         "row count " + std::to_string(rows.size()) +
             " does not match the product of dims " + std::to_string(dim));
  Matrix rho(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim)
      fail("state.matrix", "rows must have length equal to the row count");
    for (Eigen::Index j = 0; j < dim; ++j) {
      const json& pair = row[static_cast<std::size_t>(j)];
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
          !pair[1].is_number())
        fail("state.matrix", "entries must be [re, im] number pairs");
      rho(i, j) = Complex(pair[0].get<double>(), pair[1].get<double>());
    }
  }
  return rho;
}

void require_qubits(const SubsystemLayout& layout, const std::string& kind,
                    std::size_t count) {
  if (count > 0 && layout.size() != count)
    fail("subsystems", "kind \"" + kind + "\" needs exactly " +
                           std::to_string(count) + " subsystems");
  for (const Subsystem& s : layout.subsystems())
    if (s.dim != 2)
      fail("subsystems[].dim",
           "kind \"" + kind + "\" needs every dim to be 2");
}

std::vector<Role> layout_roles(const SubsystemLayout& layout) {
  std::vector<Role> roles;
  for (const Subsystem& s : layout.subsystems()) roles.push_back(s.role);
  return roles;
}

MultipartiteState on_document_layout(const PureState& psi,
                                     const SubsystemLayout& layout) {
  MultipartiteState state = density_from_pure(psi);
  state = with_labels(state, layout.labels());
  return with_roles(state, layout_roles(layout));
}

MultipartiteState build_state(const json& doc, const SubsystemLayout& layout,
                              std::uint64_t fallback_seed) {
  if (!doc.contains("state") || !doc["state"].is_object())
    fail("state", "must be an object");
  const json& state = doc["state"];
  if (!state.contains("kind") || !state["kind"].is_string())
    fail("state.kind", "must be a string");
  const std::string kind = state["kind"].get<std::string>();
  const json params = state.value("params", json::object());

  const auto int_param = [&](const std::string& name,
                             std::optional<std::int64_t> fallback) {
    if (params.contains(name)) {
      if (!params[name].is_number_integer())
        fail("state.params." + name, "must be an integer");
      return params[name].get<std::int64_t>();
    }
    if (!fallback) fail("state.params." + name, "required for kind " + kind);
    return *fallback;
  };

  if (kind == "bell") {
    require_qubits(layout, kind, 2);
    return on_document_layout(bell_state(), layout);
  }
  if (kind == "ghz" || kind == "w") {
    require_qubits(layout, kind, 0);
    const auto n = int_param("n", static_cast<std::int64_t>(layout.size()));
    if (n != static_cast<std::int64_t>(layout.size()))
      fail("state.params.n", "does not match the subsystem count");
    const PureState psi = kind == "ghz" ? ghz_state(static_cast<int>(n))
                                        : w_state(static_cast<int>(n));
    return on_document_layout(psi, layout);
  }
  if (kind == "werner") {
    require_qubits(layout, kind, 2);
    if (!params.contains("p") || !params["p"].is_number())
      fail("state.params.p", "required for kind werner");
    MultipartiteState state_out = werner_state(params["p"].get<double>());
    state_out = with_labels(state_out, layout.labels());
    return with_roles(state_out, layout_roles(layout));
  }
  if (kind == "pure") {
    PureState psi{layout, parse_amplitudes(state, layout.total_dim())};
    validate_pure(psi);
    return density_from_pure(psi);
  }
  if (kind == "density") {
    MultipartiteState out{layout, parse_matrix(state, layout.total_dim())};
    validate_state(out);
    return out;
  }
  if (kind == "random_pure") {
    const auto seed =
        int_param("seed", static_cast<std::int64_t>(fallback_seed));
    return density_from_pure(
        random_pure_state(layout, static_cast<std::uint64_t>(seed)));
  }
  if (kind == "random_mixed") {
    const auto rank = int_param("rank", std::nullopt);
    if (rank < 1) fail("state.params.rank", "must be >= 1");
    const auto seed =
        int_param("seed", static_cast<std::int64_t>(fallback_seed));
    return random_mixed_state(layout, static_cast<Eigen::Index>(rank),
                              static_cast<std::uint64_t>(seed));
  }
  fail("state.kind", "unknown kind \"" + kind + "\"");
}

}  // namespace

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char byte : bytes) {
    hash ^= byte;
    hash *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4)
    out << ((hash >> shift) & 0xf);
  return out.str();
}

ParsedDocument parse_state_document(const std::string& text,
                                    std::uint64_t fallback_seed) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("state document: ") + e.what());
  }

  const SubsystemLayout layout = parse_layout(doc);
  MultipartiteState state = build_state(doc, layout, fallback_seed);
  PartitionSpec partition = PartitionSpec::from_roles(state.layout);

  ParsedDocument parsed{std::move(state), std::move(partition),
                        "fnv1a64:" + fnv1a64_hex(doc.dump())};
  return parsed;
}

}  // namespace qsi
