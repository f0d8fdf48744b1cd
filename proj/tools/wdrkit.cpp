// wdrkit command-line front end.
//
// Exit codes: 0 success or agreement, 1 mathematical disagreement,
// 2 usage / parse error, 3 invalid parameters.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wdrkit/census.hpp"
#include "wdrkit/dot.hpp"
#include "wdrkit/error.hpp"
#include "wdrkit/families.hpp"
#include "wdrkit/iso.hpp"
#include "wdrkit/json_io.hpp"
#include "wdrkit/quotient.hpp"
#include "wdrkit/scheme.hpp"
#include "wdrkit/spec_string.hpp"
#include "wdrkit/sweep.hpp"

namespace {

using namespace wdrkit;

constexpr int kExitOk = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalid = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
      return kExitUsage;
    default:
      return kExitInvalid;
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path.string() + "'");
  out << text;
}

// A family spec string, or a path to a DOT file.
Digraph load_input(const std::string& input) {
  if (input.find(':') != std::string::npos && !std::filesystem::exists(input)) return build_from_spec(input);
  if (!std::filesystem::exists(input)) throw UsageError("'" + input + "' is neither a family spec nor a readable file");
  return parse_dot(read_file(input));
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string dot_for(const Digraph& d) {
  // typed labels need distances, which need strong connectivity
  if (!is_strongly_connected(d)) return to_dot_untyped(d);
  return to_dot(d, DistancePairMatrix::compute(d));
}

// "<1,g-1>" and "<1,q-1>" resolve through the two arc types; anything else is
// read as a list of explicit pairs "(a,b)(c,d)" or "(a,b),(c,d)".
std::vector<DistancePair> resolve_generators(const std::string& text, const ArcTypeCensus* census) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact == "<1,g-1>" || compact == "<1,q-1>") {
    const auto two = census ? two_arc_types(*census) : std::nullopt;
    if (!two) throw Error(ErrorCode::kInvalidParameters, "symbolic F needs exactly two arc types of valencies 1 and 2");
    return {compact == "<1,g-1>" ? two->pair : two->single};
  }
  std::vector<DistancePair> out;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    if (compact[pos] == ',') {
      ++pos;
      continue;
    }
    int a = 0, b = 0, consumed = 0;
    if (std::sscanf(compact.c_str() + pos, "(%d,%d)%n", &a, &b, &consumed) != 2 || consumed == 0) {
      throw Error(ErrorCode::kParse, "cannot read relation list '" + text + "'");
    }
    out.push_back({a, b});
    pos += static_cast<std::size_t>(consumed);
  }
  if (out.empty()) throw Error(ErrorCode::kParse, "empty relation list");
  return out;
}

int cmd_construct(const std::string& spec, const std::string& out, const std::string& format) {
  const Digraph d = build_from_spec(spec);
  if (out.empty()) {
    std::cout << (format == "json" ? dump(construct_metadata(d)) : dot_for(d));
    return kExitOk;
  }
  write_file(out + ".dot", dot_for(d));
  write_file(out + ".json", dump(construct_metadata(d)));
  std::cerr << "wrote " << out << ".dot and " << out << ".json (" << d.vertex_count() << " vertices)\n";
  return kExitOk;
}

int cmd_analyze(const std::string& input) {
  const Digraph d = load_input(input);
  const auto report = analyze(d);
  std::cout << dump(report_to_json(report, d));
  return report.is_wdr ? kExitOk : kExitDisagree;
}

int cmd_sweep(const SweepSpec& spec, const std::string& format) {
  const auto rows = sweep_tuples(spec);
  if (rows.empty()) {
    std::cout << "no tuples\n";
    return kExitOk;
  }
  const auto result = run_sweep(spec);
  const auto first = result.first_disagreement();
  if (format == "json") {
    std::cout << dump(sweep_to_json(spec, result));
  } else {
    for (const auto& row : result.rows) {
      std::cout << row.label;
      if (spec.law == Law::kGammaQsk) std::cout << " condition=" << to_string(row.condition);
      std::cout << " wdr=" << (row.is_wdr ? "yes" : "no") << " expected=" << (row.expected_wdr ? "yes" : "no")
                << (row.agree ? " agree" : " DISAGREE") << "\n";
    }
    std::size_t wdr = 0;
    for (const auto& row : result.rows) wdr += row.is_wdr ? 1 : 0;
    std::cout << result.rows.size() << " tuples, " << wdr << " WDR, "
              << (first ? "disagreement found" : "all agree with " + std::string(to_string(spec.law))) << "\n";
  }
  if (first) {
    std::cerr << "FIRST DISAGREEMENT: " << result.rows[*first].label << " analyze says "
              << (result.rows[*first].is_wdr ? "WDR" : "not WDR") << "\n";
    return kExitDisagree;
  }
  return kExitOk;
}

int cmd_census(const CensusSpec& spec) {
  const auto result = run_census(spec);
  std::cout << dump(census_to_json(result));
  std::cerr << "census up to order " << spec.max_order << ": " << result.counts.subsets << " subsets, "
            << result.counts.not_strongly_connected << " skipped as not strongly connected, "
            << result.hits.size() << " hit classes, " << result.unmatched() << " unmatched\n";
  return result.unmatched() == 0 ? kExitOk : kExitDisagree;
}

int cmd_verify_iso(const std::string& params_text, std::optional<int> u) {
  const auto qsk = parse_qsk_arguments(params_text);
  const auto params = GammaQskParams::make(qsk.q, qsk.s, qsk.k);
  const auto result = verify_iso(params, u);
  std::cout << dump(verify_iso_to_json(params, result));
  return result.ok() ? kExitOk : kExitDisagree;
}

int cmd_quotient(const std::string& input, const std::string& f_text, const std::string& format) {
  const Digraph d = load_input(input);
  const auto m = DistancePairMatrix::compute(d);
  const auto part = RelationPartition::build(m);
  std::optional<ArcTypeCensus> census;
  try {
    census = arc_type_census(d, m);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotTypeRegular) throw;
  }
  const auto generators = resolve_generators(f_text, census ? &*census : nullptr);
  std::vector<RelationId> ids;
  for (auto g : generators) ids.push_back(part.id_of(g));
  const auto vp = equivalence_closure(part, ids);
  const Digraph quotient = quotient_digraph(d, part, vp);
  const auto circuit = is_circuit(quotient);
  if (format == "json") {
    std::cout << dump(quotient_to_json(d, generators, vp, quotient, circuit));
  } else {
    std::cout << quotient_to_dot(quotient, vp);
  }
  std::cerr << vp.block_count() << " blocks; "
            << (circuit ? "quotient is the circuit C_" + std::to_string(*circuit) : std::string("quotient is not a circuit"))
            << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weakly distance-regular digraph toolkit"};
  app.require_subcommand(1);

  std::string spec, out, format = "dot";
  auto* construct = app.add_subcommand("construct", "build a family member and emit DOT / JSON metadata");
  construct->add_option("spec", spec, "family spec, e.g. gamma-qsk:q=3,s=6,k=1")->required();
  construct->add_option("--out", out, "output prefix; writes PREFIX.dot and PREFIX.json");
  construct->add_option("--format", format, "stdout format when --out is absent")->check(CLI::IsMember({"dot", "json"}));

  std::string input;
  auto* analyze_cmd = app.add_subcommand("analyze", "decide weak distance-regularity; JSON report on stdout");
  analyze_cmd->add_option("input", input, "family spec or DOT file")->required();

  SweepSpec sweep;
  std::string law = "prop2.4", q_range = "3..5", s_range = "3..20", k_range = "1..1000000", g_range = "3..12",
              sweep_format = "text";
  auto* sweep_cmd = app.add_subcommand("sweep", "compare analyze against the classification law over a box");
  sweep_cmd->add_option("--law", law, "prop2.4 (Γ_{q,s,k}) or prop2.1 (Γ_g)")->check(CLI::IsMember({"prop2.1", "prop2.4"}));
  sweep_cmd->add_option("--q", q_range, "q range, e.g. 3..5");
  sweep_cmd->add_option("--s", s_range, "s range");
  sweep_cmd->add_option("--k", k_range, "k range (clipped to the valid interval)");
  sweep_cmd->add_option("--g", g_range, "g range for the Γ_g law");
  sweep_cmd->add_option("--jobs", sweep.jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--format", sweep_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  CensusSpec census;
  auto* census_cmd = app.add_subcommand("census", "abelian Cayley census checked against the classification");
  census_cmd->add_option("--max-order", census.max_order, "largest group order");
  census_cmd->add_option("--cap", census.cap, "refuse orders above this");
  census_cmd->add_option("--jobs", census.jobs, "worker threads")->check(CLI::PositiveNumber);

  std::string iso_params;
  std::optional<int> iso_u;
  auto* iso_cmd = app.add_subcommand("verify-iso", "check the explicit Cayley isomorphism for a WDR Γ_{q,s,k}");
  iso_cmd->add_option("params", iso_params, "q=3,s=8,k=3 or gamma-qsk:q=3,s=8,k=3")->required();
  iso_cmd->add_option("--u", iso_u, "override the least admissible u (C3 only)");

  std::string q_input, f_text = "<1,g-1>", q_format = "dot";
  auto* quotient_cmd = app.add_subcommand("quotient", "quotient digraph over the closure of a relation set");
  quotient_cmd->add_option("input", q_input, "family spec or DOT file")->required();
  quotient_cmd->add_option("--F", f_text, "\"<1,g-1>\", \"<1,q-1>\" or explicit pairs like \"(1,2),(2,2)\"");
  quotient_cmd->add_option("--format", q_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(spec, out, format);
    if (*analyze_cmd) return cmd_analyze(input);
    if (*sweep_cmd) {
      sweep.law = parse_law(law);
      sweep.q = parse_range(q_range);
      sweep.s = parse_range(s_range);
      sweep.k = parse_range(k_range);
      sweep.g = parse_range(g_range);
      return cmd_sweep(sweep, sweep_format);
    }
    if (*census_cmd) return cmd_census(census);
    if (*iso_cmd) return cmd_verify_iso(iso_params, iso_u);
    if (*quotient_cmd) return cmd_quotient(q_input, f_text, q_format);
  } catch (const UsageError& e) {
    std::cerr << "wdrkit: error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "wdrkit: error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitUsage;
}
