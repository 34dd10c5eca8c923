#include "qsi/cli.hpp"

#include "qsi/catalog.hpp"
#include "qsi/document.hpp"
#include "qsi/effects.hpp"
#include "qsi/recovery.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsi {
namespace {

using nlohmann::json;

std::string fmt10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fmt3e(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open state file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += ",";
    out += l;
  }
  return out;
}

// Chain groups may join several labels with '+': "q2+q3".
std::vector<std::string> split_group(const std::string& group) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : group) {
    if (ch == '+') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  if (out.empty()) throw std::invalid_argument("empty label group");
  return out;
}

struct CommandOutput {
  json report = json::object();
  std::vector<std::string> human;
  IdentityReport identities;
};

void merge_identities(IdentityReport& into, const IdentityReport& from) {
  for (const auto& c : from.checks) into.checks.push_back(c);
  into.all_pass = into.all_pass && from.all_pass;
}

json identities_to_json(const IdentityReport& rep) {
  json out = json::object();
  for (const auto& c : rep.checks)
    out[c.name] = json{{"residual", c.residual}, {"pass", c.pass}};
  return out;
}

json resource_to_json(const ResourceVector& v) {
  const bool q = v.kind == ChannelKind::quantum;
  return json{{q ? "Q" : "c", v.channel_rate}, {q ? "E" : "e", v.ebit_rate}};
}

std::string usage_text(const PartitionSpec& partition,
                       const UsageSelection& use) {
  return "alice " + std::to_string(use.alice_used) + " of " +
         std::to_string(partition.alice_count()) + ", bob " +
         std::to_string(use.bob_used) + " of " +
         std::to_string(partition.bob_count());
}

CommandOutput run_costs(const ParsedDocument& doc, const UsageSelection& use,
                        ChannelKind kind, double tol) {
  validate_usage(doc.partition, use);
  const ResourceVector redis =
      redistribution_costs(doc.state, doc.partition, use);
  const ResourceVector merge = merging_costs(doc.state, doc.partition, use);
  const ResourceVector& primary =
      kind == ChannelKind::quantum ? redis : merge;
  const ProtocolTag tag = classify(use, kind);

  CommandOutput out;
  out.report["options"] = json{{"use_alice", use.alice_used},
                               {"use_bob", use.bob_used},
                               {"channel", channel_kind_name(kind)}};
  out.report["protocol"] = json{{"name", protocol_name(tag.name)},
                                {"long_name", protocol_long_name(tag.name)},
                                {"channel", channel_kind_name(tag.kind)},
                                {"alice_uses", tag.alice_uses},
                                {"bob_uses", tag.bob_uses}};
  out.report["results"] = resource_to_json(primary);

  const ResourceVector as_classical = convert_quantum_to_classical(redis);
  const ResourceVector round_trip = convert_classical_to_quantum(as_classical);
  const double rt_resid =
      std::max(std::abs(round_trip.channel_rate - redis.channel_rate),
               std::abs(round_trip.ebit_rate - redis.ebit_rate));
  const double cross_resid =
      std::max(std::abs(as_classical.channel_rate - merge.channel_rate),
               std::abs(as_classical.ebit_rate - merge.ebit_rate));
  const double via_qcmi =
      redistribution_channel_rate_via_qcmi(doc.state, doc.partition, use);
  out.identities.add("conversion_round_trip", rt_resid, tol);
  out.identities.add("teleportation_consistency", cross_resid, tol);
  out.identities.add("qubit_rate_conditional_route",
                     std::abs(redis.channel_rate - via_qcmi), tol);

  out.human.push_back(std::string("protocol  ") + protocol_name(tag.name) +
                      " (" + protocol_long_name(tag.name) + "), " +
                      channel_kind_name(tag.kind) + " channel");
  out.human.push_back("usage     " + usage_text(doc.partition, use));
  out.human.push_back("results");
  const bool q = kind == ChannelKind::quantum;
  out.human.push_back(std::string("  ") + (q ? "Q" : "c") + "  " +
                      fmt10(primary.channel_rate));
  out.human.push_back(std::string("  ") + (q ? "E" : "e") + "  " +
                      fmt10(primary.ebit_rate));
  if (primary.ebit_rate < 0.0)
    out.human.push_back("  (negative ebit rate: entanglement is generated)");
  return out;
}

CommandOutput run_grid(const ParsedDocument& doc, double tol) {
  const CostGrid grid = cost_grid(doc.state, doc.partition);

  CommandOutput out;
  out.report["options"] = json::object();
  json cells = json::array();
  for (const auto& cell : grid.cells) {
    cells.push_back(json{{"alice_used", cell.usage.alice_used},
                         {"bob_used", cell.usage.bob_used},
                         {"Q", cell.redistribution.channel_rate},
                         {"E", cell.redistribution.ebit_rate},
                         {"c", cell.merging.channel_rate},
                         {"e", cell.merging.ebit_rate}});
  }
  out.report["grid"] = json{{"alice_max", grid.alice_max},
                            {"bob_max", grid.bob_max},
                            {"cells", cells}};

  auto Q = [&](int i, int j) {
    return grid.at(i, j).redistribution.channel_rate;
  };
  auto E = [&](int i, int j) { return grid.at(i, j).redistribution.ebit_rate; };
  auto c = [&](int i, int j) { return grid.at(i, j).merging.channel_rate; };
  auto e = [&](int i, int j) { return grid.at(i, j).merging.ebit_rate; };

  double doubling = 0.0, ebit_sum = 0.0;
  double mono_q_alice = 0.0, mono_q_bob = 0.0;
  double mono_c_alice = 0.0, mono_c_bob = 0.0;
  double mono_e_bob = 0.0, const_e_alice = 0.0;
  for (int i = 0; i <= grid.alice_max; ++i) {
    for (int j = 0; j <= grid.bob_max; ++j) {
      doubling = std::max(doubling, std::abs(c(i, j) - 2.0 * Q(i, j)));
      ebit_sum = std::max(ebit_sum, std::abs(e(i, j) - (Q(i, j) + E(i, j))));
      if (i < grid.alice_max) {
        mono_q_alice = std::max(mono_q_alice, Q(i + 1, j) - Q(i, j));
        mono_c_alice = std::max(mono_c_alice, c(i + 1, j) - c(i, j));
        const_e_alice =
            std::max(const_e_alice, std::abs(e(i + 1, j) - e(i, j)));
      }
      if (j < grid.bob_max) {
        mono_q_bob = std::max(mono_q_bob, Q(i, j + 1) - Q(i, j));
        mono_c_bob = std::max(mono_c_bob, c(i, j + 1) - c(i, j));
        mono_e_bob = std::max(mono_e_bob, e(i, j + 1) - e(i, j));
      }
    }
  }
  out.identities.add("bit_rate_doubling", doubling, tol);
  out.identities.add("ebit_rate_sum", ebit_sum, tol);
  out.identities.add("qubit_rate_monotone_alice", mono_q_alice, tol);
  out.identities.add("qubit_rate_monotone_bob", mono_q_bob, tol);
  out.identities.add("bit_rate_monotone_alice", mono_c_alice, tol);
  out.identities.add("bit_rate_monotone_bob", mono_c_bob, tol);
  out.identities.add("merging_ebit_monotone_bob", mono_e_bob, tol);
  out.identities.add("merging_ebit_constant_alice", const_e_alice, tol);

  char line[256];
  std::snprintf(line, sizeof line, "%-6s%-6s%-18s%-18s%-18s%-18s", "alice",
                "bob", "Q", "E", "c", "e");
  out.human.push_back(line);
  for (const auto& cell : grid.cells) {
    std::snprintf(line, sizeof line, "%-6d%-6d%-18s%-18s%-18s%-18s",
                  cell.usage.alice_used, cell.usage.bob_used,
                  fmt10(cell.redistribution.channel_rate).c_str(),
                  fmt10(cell.redistribution.ebit_rate).c_str(),
                  fmt10(cell.merging.channel_rate).c_str(),
                  fmt10(cell.merging.ebit_rate).c_str());
    out.human.push_back(line);
  }
  return out;
}

CommandOutput run_effects(const ParsedDocument& doc, const UsageSelection& to,
                          const std::optional<UsageSelection>& from,
                          double tol) {
  validate_usage(doc.partition, to);

  CommandOutput out;
  out.report["options"] =
      json{{"i", to.alice_used}, {"j", to.bob_used}};
  if (from)
    out.report["options"]["from"] =
        json::array({from->alice_used, from->bob_used});

  json effects = json::object();
  std::vector<EffectReport> reports;
  for (const ResourceType type : all_resource_types()) {
    const EffectReport rep =
        from ? additional_effect(doc.state, doc.partition, type, *from, to)
             : effect(doc.state, doc.partition, type, to);
    reports.push_back(rep);
    effects[resource_symbol(type)] = json{{"by_definition", rep.by_definition},
                                          {"closed_form", rep.closed_form},
                                          {"alice_part", rep.alice_part},
                                          {"bob_part", rep.bob_part}};
    const std::string symbol = resource_symbol(type);
    out.identities.add("closed_form_" + symbol,
                       std::abs(rep.by_definition - rep.closed_form), tol);
    out.identities.add(
        "decomposition_" + symbol,
        std::abs(rep.by_definition - (rep.alice_part + rep.bob_part)), tol);
  }
  out.report["effects"] = effects;
  merge_identities(out.identities,
                   check_effect_identities(doc.state, doc.partition, to, tol));

  out.human.push_back(
      from ? "additional savings when usage grows from (" +
                 std::to_string(from->alice_used) + "," +
                 std::to_string(from->bob_used) + ") to (" +
                 std::to_string(to.alice_used) + "," +
                 std::to_string(to.bob_used) +
                 "); closed forms are conditional informations"
           : "savings at usage (" + std::to_string(to.alice_used) + "," +
                 std::to_string(to.bob_used) + ") relative to no usage");
  char line[256];
  std::snprintf(line, sizeof line, "%-10s%-18s%-18s%-18s%-18s", "resource",
                "by_definition", "closed_form", "alice_part", "bob_part");
  out.human.push_back(line);
  const auto types = all_resource_types();
  for (std::size_t k = 0; k < reports.size(); ++k) {
    std::snprintf(line, sizeof line, "%-10s%-18s%-18s%-18s%-18s",
                  resource_symbol(types[k]),
                  fmt10(reports[k].by_definition).c_str(),
                  fmt10(reports[k].closed_form).c_str(),
                  fmt10(reports[k].alice_part).c_str(),
                  fmt10(reports[k].bob_part).c_str());
    out.human.push_back(line);
  }
  out.human.push_back(
      "bob's side information lowers every rate; alice's lowers the channel");
  out.human.push_back(
      "rates, raises the quantum protocol's ebit rate, and leaves the merging");
  out.human.push_back("ebit rate unchanged");
  return out;
}

CommandOutput run_chain(const ParsedDocument& doc,
                        const std::vector<std::string>& target,
                        const std::vector<std::string>& chain_groups,
                        int split, double tol) {
  std::vector<std::vector<std::string>> chain;
  for (const auto& group : chain_groups) chain.push_back(split_group(group));
  const ChainRuleAudit audit =
      chain_rule_audit(doc.state, target, chain, split);

  CommandOutput out;
  json groups = json::array();
  for (const auto& g : chain) groups.push_back(join_labels(g));
  out.report["options"] = json{{"target", join_labels(target)},
                               {"chain", groups},
                               {"split", split}};
  out.report["results"] = json{{"joint", audit.joint},
                               {"telescoped", audit.telescoped},
                               {"split_sum", audit.split_sum}};
  out.identities.add("telescoped_agreement", audit.telescoped_residual, tol);
  out.identities.add("split_agreement", audit.split_residual, tol);

  out.human.push_back("joint mutual information   " + fmt10(audit.joint));
  out.human.push_back("telescoped conditional sum " + fmt10(audit.telescoped));
  out.human.push_back("two-term split at " + std::to_string(split) +
                      "         " + fmt10(audit.split_sum));
  return out;
}

CommandOutput run_recover(const ParsedDocument& doc,
                          const std::vector<std::string>& c,
                          const std::vector<std::string>& s1,
                          const std::vector<std::string>& s2, double tol) {
  const RecoveryReport rep = recovery_report(doc.state, c, s1, s2);
  const MultipartiteState recovered = petz_recover(doc.state, c, s1, s2);

  CommandOutput out;
  out.report["options"] = json{{"c", join_labels(c)},
                               {"s1", join_labels(s1)},
                               {"s2", join_labels(s2)}};
  out.report["results"] = json{{"qcmi", rep.qcmi},
                               {"achieved_fidelity", rep.achieved_fidelity},
                               {"bound", rep.bound},
                               {"trace_deficiency", rep.trace_deficiency}};
  out.report["flags"] =
      json{{"bound_satisfied", rep.bound_satisfied},
           {"markov", is_markov(doc.state, c, s1, s2, tol)},
           {"trace_deficiency_flagged",
            std::abs(rep.trace_deficiency) > 1e-6}};

  const double herm = hermiticity_deviation(recovered.rho);
  const double tr_dev = std::abs(trace(recovered.rho).real() - 1.0);
  const HermitianEigen eig = eig_hermitian(recovered.rho);
  const double negativity = std::max(0.0, -eig.eigenvalues.minCoeff());
  out.identities.add("recovered_hermitian", herm, tol);
  out.identities.add("recovered_unit_trace", tr_dev, tol);
  out.identities.add("recovered_positive", negativity, tol);
  out.identities.add("fidelity_within_unit",
                     std::max(0.0, rep.achieved_fidelity - 1.0), tol);

  out.human.push_back("conditional information  " + fmt10(rep.qcmi));
  out.human.push_back("achieved fidelity        " +
                      fmt10(rep.achieved_fidelity));
  out.human.push_back("fidelity bound           " + fmt10(rep.bound));
  out.human.push_back(std::string("bound satisfied          ") +
                      (rep.bound_satisfied ? "yes" : "no"));
  out.human.push_back(std::string("markov within tol        ") +
                      (is_markov(doc.state, c, s1, s2, tol) ? "yes" : "no"));
  out.human.push_back("trace deficiency         " +
                      fmt3e(rep.trace_deficiency));
  return out;
}

CommandOutput run_catalog(const ParsedDocument& doc, double tol) {
  const std::vector<CatalogRow> rows = catalog_report(doc.state, doc.partition);

  CommandOutput out;
  out.report["options"] = json::object();
  json jrows = json::array();
  for (const auto& row : rows) {
    const bool q = row.tag.kind == ChannelKind::quantum;
    jrows.push_back(json{{"protocol", protocol_name(row.tag.name)},
                         {"long_name", protocol_long_name(row.tag.name)},
                         {"channel", channel_kind_name(row.tag.kind)},
                         {"alice_used", row.usage.alice_used},
                         {"bob_used", row.usage.bob_used},
                         {q ? "Q" : "c", row.costs.channel_rate},
                         {q ? "E" : "e", row.costs.ebit_rate},
                         {"restricted", row.restricted}});
  }
  out.report["catalog"] = jrows;

  for (const auto& qr : rows) {
    if (qr.tag.kind != ChannelKind::quantum) continue;
    for (const auto& cr : rows) {
      if (cr.tag.kind != ChannelKind::classical) continue;
      if (cr.usage.alice_used != qr.usage.alice_used ||
          cr.usage.bob_used != qr.usage.bob_used)
        continue;
      const ResourceVector conv = convert_quantum_to_classical(qr.costs);
      const double resid =
          std::max(std::abs(conv.channel_rate - cr.costs.channel_rate),
                   std::abs(conv.ebit_rate - cr.costs.ebit_rate));
      out.identities.add(std::string("teleportation_consistency_") +
                             protocol_name(qr.tag.name) + "_" +
                             protocol_name(cr.tag.name),
                         resid, tol);
    }
    if (qr.tag.name == Protocol::FQSW)
      out.identities.add("fqsw_generates_entanglement",
                         std::max(0.0, qr.costs.ebit_rate), tol);
    if (qr.tag.name == Protocol::FQRS)
      out.identities.add("fqrs_consumes_entanglement",
                         std::max(0.0, -qr.costs.ebit_rate), tol);
  }

  char line[256];
  std::snprintf(line, sizeof line, "%-6s%-34s%-10s%-7s%-6s%-18s%-18s%s",
                "name", "protocol", "channel", "alice", "bob", "channel_rate",
                "ebit_rate", "note");
  out.human.push_back(line);
  for (const auto& row : rows) {
    std::snprintf(line, sizeof line, "%-6s%-34s%-10s%-7d%-6d%-18s%-18s%s",
                  protocol_name(row.tag.name),
                  protocol_long_name(row.tag.name),
                  channel_kind_name(row.tag.kind), row.usage.alice_used,
                  row.usage.bob_used, fmt10(row.costs.channel_rate).c_str(),
                  fmt10(row.costs.ebit_rate).c_str(),
                  row.restricted ? "restricted" : "");
    out.human.push_back(line);
  }
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "resource costs of quantum state transfer with side information"};
  app.require_subcommand(1);

  std::string state_path;
  bool as_json = false;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--state", state_path, "state document (JSON file)")
        ->required();
    sub->add_flag("--json", as_json, "emit a single JSON report");
    sub->add_option("--tol", tol, "identity-check tolerance (default 1e-8)");
    sub->add_option("--seed", seed,
                    "seed for random state kinds without one of their own");
  };

  auto* costs_cmd = app.add_subcommand(
      "costs", "resource rates at a chosen usage of side information");
  int use_alice = 0, use_bob = 0;
  std::string channel = "quantum";
  costs_cmd->add_option("--use-alice", use_alice,
                        "Alice side-information subsystems used");
  costs_cmd->add_option("--use-bob", use_bob,
                        "Bob side-information subsystems used");
  costs_cmd->add_option("--channel", channel, "quantum | classical")
      ->check(CLI::IsMember({"quantum", "classical"}));
  add_common(costs_cmd);

  auto* grid_cmd =
      app.add_subcommand("grid", "cost table over every usage combination");
  add_common(grid_cmd);

  auto* effects_cmd = app.add_subcommand(
      "effects", "cost savings from side information, evaluated two ways");
  int eff_i = 0, eff_j = 0;
  std::vector<int> eff_from;
  effects_cmd->add_option("--i", eff_i, "Alice subsystems used")->required();
  effects_cmd->add_option("--j", eff_j, "Bob subsystems used")->required();
  effects_cmd
      ->add_option("--from", eff_from,
                   "baseline usage pair for additional savings")
      ->expected(2);
  add_common(effects_cmd);

  auto* chain_cmd =
      app.add_subcommand("chain", "chain-rule decomposition audit");
  std::vector<std::string> chain_target, chain_groups;
  int chain_split = 1;
  chain_cmd->add_option("--target", chain_target, "target subsystem labels")
      ->required()
      ->delimiter(',');
  chain_cmd
      ->add_option("--chain", chain_groups,
                   "ordered labels; join a group with '+'")
      ->required()
      ->delimiter(',');
  chain_cmd->add_option("--split", chain_split,
                        "two-term split position (default 1)");
  add_common(chain_cmd);

  auto* recover_cmd = app.add_subcommand(
      "recover", "rebuild the state from a marginal and check the "
                 "fidelity bound");
  std::vector<std::string> rec_c, rec_s1, rec_s2;
  recover_cmd->add_option("--c", rec_c, "system to recover correlations with")
      ->required()
      ->delimiter(',');
  recover_cmd->add_option("--s1", rec_s1, "retained side system")
      ->required()
      ->delimiter(',');
  recover_cmd->add_option("--s2", rec_s2, "lost system to reconstruct")
      ->required()
      ->delimiter(',');
  add_common(recover_cmd);

  auto* catalog_cmd = app.add_subcommand(
      "catalog", "named protocols this partition can host, with costs");
  add_common(catalog_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    const ParsedDocument doc =
        parse_state_document(read_file(state_path), seed);

    CommandOutput result;
    std::string command;
    if (costs_cmd->parsed()) {
      command = "costs";
      const ChannelKind kind = channel == "classical" ? ChannelKind::classical
                                                      : ChannelKind::quantum;
      result = run_costs(doc, UsageSelection{use_alice, use_bob}, kind, tol);
    } else if (grid_cmd->parsed()) {
      command = "grid";
      result = run_grid(doc, tol);
    } else if (effects_cmd->parsed()) {
      command = "effects";
      std::optional<UsageSelection> from;
      if (!eff_from.empty())
        from = UsageSelection{eff_from[0], eff_from[1]};
      result = run_effects(doc, UsageSelection{eff_i, eff_j}, from, tol);
    } else if (chain_cmd->parsed()) {
      command = "chain";
      result = run_chain(doc, chain_target, chain_groups, chain_split, tol);
    } else if (recover_cmd->parsed()) {
      command = "recover";
      result = run_recover(doc, rec_c, rec_s1, rec_s2, tol);
    } else if (catalog_cmd->parsed()) {
      command = "catalog";
      result = run_catalog(doc, tol);
    } else {
      err << "error: no command given\n";
      return 1;
    }

    result.report["command"] = command;
    result.report["input_digest"] = doc.digest;
    json& opts = result.report["options"];
    opts["state"] = state_path;
    opts["tol"] = tol;
    opts["seed"] = seed;
    result.report["identities"] = identities_to_json(result.identities);
    result.report["pass"] = result.identities.all_pass;

    if (as_json) {
      out << result.report.dump(2) << "\n";
    } else {
      out << "command   " << command << "\n";
      out << "input     " << doc.digest << "\n";
      for (const auto& line : result.human) out << line << "\n";
      if (!result.identities.checks.empty()) {
        out << "identity checks\n";
        for (const auto& c : result.identities.checks)
          out << "  " << (c.pass ? "pass" : "FAIL") << "  residual "
              << fmt3e(c.residual) << "  " << c.name << "\n";
      }
      out << "status    " << (result.identities.all_pass ? "pass" : "FAIL")
          << "\n";
    }
    return result.identities.all_pass ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qsi
