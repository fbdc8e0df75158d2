#include "tset/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "tset/bounds.hpp"
#include "tset/completeness.hpp"
#include "tset/error.hpp"
#include "tset/harness.hpp"
#include "tset/serialize.hpp"
#include "tset/topology.hpp"

namespace tset::cli {
namespace {

using nlohmann::ordered_json;

constexpr std::string_view kEmptySet = "\xE2\x88\x85";  // ∅

/// Usage problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

Subset parse_subset(const FiniteTSet& t, std::string_view text) {
  const std::string body = trim(text);
  Subset result = Subset::empty(t.size());
  if (body.empty() || body == kEmptySet) return result;
  std::stringstream stream(body);
  std::string token;
  while (std::getline(stream, token, ',')) {
    const std::string label = trim(token);
    const auto index = t.index_of(label);
    if (!index) {
      throw Error(label.empty() ? Errc::malformed_document : Errc::unknown_label,
                  label.empty() ? "empty label in subset list"
                                : "unknown element '" + label + "' in subset");
    }
    result = result.with(*index);
  }
  return result;
}

std::vector<std::string> sorted_labels(const FiniteTSet& t, Subset s) {
  std::vector<std::string> labels;
  for (std::size_t i : s.members()) labels.push_back(t.label(i));
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::string format_subset(const FiniteTSet& t, Subset s) {
  const auto labels = sorted_labels(t, s);
  if (labels.empty()) return std::string(kEmptySet);
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += ',';
    out += l;
  }
  return out;
}

Topology load_topology_file(const FiniteTSet& t, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::malformed_document, "cannot read '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::malformed_document, std::string("malformed topology file: ") + e.what());
  }
  if (!doc.is_object() || doc.size() != 1 || !doc.contains("opens") ||
      !doc["opens"].is_array()) {
    throw Error(Errc::malformed_document,
                "topology file must be an object with a single \"opens\" array");
  }
  std::vector<Subset> family;
  for (const auto& open : doc["opens"]) {
    if (!open.is_array()) {
      throw Error(Errc::malformed_document, "each open must be an array of labels");
    }
    Subset s = Subset::empty(t.size());
    for (const auto& label : open) {
      if (!label.is_string()) {
        throw Error(Errc::malformed_document, "open members must be label strings");
      }
      const auto index = t.index_of(label.get<std::string>());
      if (!index) {
        throw Error(Errc::unknown_label,
                    "unknown element '" + label.get<std::string>() + "' in topology file");
      }
      s = s.with(*index);
    }
    family.push_back(s);
  }
  return build_topology(t.size(), std::move(family));
}

struct TopologyChoice {
  std::string name;
  std::string file;

  bool given() const { return !name.empty() || !file.empty(); }
  std::string label() const { return file.empty() ? name : "file:" + file; }

  Topology resolve(const FiniteTSet& t) const {
    if (!file.empty()) return load_topology_file(t, file);
    return make_topology(*parse_topology_kind(name), t);
  }
};

void add_topology_flags(CLI::App* cmd, TopologyChoice& choice) {
  auto* named = cmd->add_option("--topology", choice.name, "Built-in topology")
                    ->check(CLI::IsMember({"alexandroff", "scott-star"}));
  auto* file = cmd->add_option("--topology-file", choice.file,
                               "JSON file {\"opens\": [[labels...], ...]}");
  named->excludes(file);
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text << '\n';
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text << '\n';
}

// ---------------------------------------------------------------------------

int cmd_classify(const FiniteTSet& t, bool as_json, std::ostream& out) {
  const ClassificationReport r = classify(t);
  const std::vector<std::pair<const char*, bool>> rows = {
      {"reflexive", r.reflexive},
      {"symmetric", r.symmetric},
      {"antisymmetric", r.antisymmetric},
      {"interpolative", r.interpolative},
      {"abstract_base", r.abstract_base},
      {"poset", r.poset},
      {"preorder", r.preorder},
      {"equivalence", r.equivalence},
      {"continuous_information_system", r.continuous_information_system},
  };
  if (as_json) {
    ordered_json doc;
    for (auto [name, value] : rows) doc[name] = value;
    out << doc.dump() << '\n';
  } else {
    for (auto [name, value] : rows) out << name << ": " << (value ? "true" : "false") << '\n';
  }
  return kOk;
}

int cmd_compute(const FiniteTSet& t, const std::string& op, const std::string& subset_text,
                bool as_json, std::ostream& out) {
  static const std::map<std::string, std::function<Subset(const FiniteTSet&, Subset)>> ops = {
      {"ub", ub}, {"lb", lb}, {"le", le},   {"la", la},
      {"sup", sup}, {"inf", inf}, {"up", up}, {"down", down},
  };
  const Subset input = parse_subset(t, subset_text);
  const Subset result = ops.at(op)(t, input);
  if (as_json) {
    ordered_json doc;
    doc["op"] = op;
    doc["subset"] = sorted_labels(t, input);
    doc["result"] = sorted_labels(t, result);
    out << doc.dump() << '\n';
  } else {
    out << format_subset(t, result) << '\n';
  }
  return kOk;
}

struct PredicateSpec {
  bool needs_subset;
  bool needs_topology;
  std::function<bool(const FiniteTSet&, Subset, const Topology*)> eval;
};

const std::map<std::string, PredicateSpec>& predicates() {
  static const std::map<std::string, PredicateSpec> table = {
      {"bounded-complete", {false, false, [](auto& t, Subset, auto*) { return is_bounded_complete(t); }}},
      {"domain", {false, false, [](auto& t, Subset, auto*) { return is_domain(t); }}},
      {"bounded-complete-domain", {false, false, [](auto& t, Subset, auto*) { return is_bounded_complete_domain(t); }}},
      {"finitely-complete", {false, false, [](auto& t, Subset, auto*) { return is_finitely_complete(t); }}},
      {"complete-domain", {false, false, [](auto& t, Subset, auto*) { return is_complete_domain(t); }}},
      {"finitarily-complete", {false, false, [](auto& t, Subset, auto*) { return is_finitarily_complete(t); }}},
      {"strongly-compactly-complete", {false, true, [](auto& t, Subset, auto* tau) { return is_strongly_compactly_complete(t, *tau); }}},
      {"compactly-complete", {false, true, [](auto& t, Subset, auto* tau) { return is_compactly_complete(t, *tau); }}},
      {"finitary", {true, false, [](auto& t, Subset a, auto*) { return is_finitary(t, a); }}},
      {"directed", {true, false, [](auto& t, Subset a, auto*) { return is_directed(t, a); }}},
      {"upper-cone", {true, false, [](auto& t, Subset a, auto*) { return is_upper_cone(t, a); }}},
      {"upper-set", {true, false, [](auto& t, Subset a, auto*) { return is_upper_set(t, a); }}},
      {"strongly-compact", {true, true, [](auto& t, Subset a, auto* tau) { return is_strongly_compact(a, t, *tau); }}},
      {"compact", {true, true, [](auto&, Subset a, auto* tau) { return is_compact(a, *tau); }}},
  };
  return table;
}

int cmd_check(const FiniteTSet& t, const std::string& pred, const std::optional<std::string>& subset_text,
              const TopologyChoice& topology, bool as_json, std::ostream& out) {
  const PredicateSpec& spec = predicates().at(pred);
  if (spec.needs_subset && !subset_text) throw UsageError("--pred " + pred + " requires --subset");
  if (!spec.needs_subset && subset_text) throw UsageError("--pred " + pred + " takes no --subset");
  if (spec.needs_topology && !topology.given()) {
    throw UsageError("--pred " + pred + " requires --topology or --topology-file");
  }
  if (!spec.needs_topology && topology.given()) {
    throw UsageError("--pred " + pred + " takes no topology");
  }

  const Subset subset = subset_text ? parse_subset(t, *subset_text) : Subset::empty(t.size());
  std::optional<Topology> tau;
  if (spec.needs_topology) tau = topology.resolve(t);
  const bool value = spec.eval(t, subset, tau ? &*tau : nullptr);

  if (as_json) {
    ordered_json doc;
    doc["predicate"] = pred;
    if (subset_text) doc["subset"] = sorted_labels(t, subset);
    if (tau) doc["topology"] = topology.label();
    doc["value"] = value;
    out << doc.dump() << '\n';
  } else {
    out << (value ? "true" : "false") << '\n';
  }
  return value ? kOk : kFalse;
}

int cmd_topology(const FiniteTSet& t, const TopologyChoice& topology, bool as_json,
                 std::ostream& out) {
  if (!topology.given()) throw UsageError("topology requires --topology or --topology-file");
  const Topology tau = topology.resolve(t);
  if (as_json) {
    ordered_json doc;
    doc["topology"] = topology.label();
    ordered_json opens = ordered_json::array();
    for (Subset s : tau.opens()) opens.push_back(sorted_labels(t, s));
    doc["opens"] = opens;
    out << doc.dump() << '\n';
  } else {
    for (Subset s : tau.opens()) out << format_subset(t, s) << '\n';
  }
  return kOk;
}

int cmd_sweep_list(bool as_json, std::ostream& out) {
  ordered_json list = ordered_json::array();
  for (const TheoremInfo& info : theorem_registry()) {
    if (as_json) {
      ordered_json e;
      e["id"] = info.id;
      e["kind"] = info.kind == TheoremKind::equivalence ? "equivalence" : "implication";
      e["clauses"] = info.clause_count;
      e["precondition"] = info.precondition;
      e["topology_dependent"] = info.topology_dependent;
      e["self_test"] = info.self_test;
      e["summary"] = info.summary;
      list.push_back(e);
    } else {
      out << info.id << '\t' << info.summary << '\n';
    }
  }
  if (as_json) out << list.dump() << '\n';
  return kOk;
}

int cmd_sweep(const std::string& theorem, std::size_t n,
              const std::vector<std::string>& topology_names, unsigned jobs,
              bool allow_n5, const std::string& report_path, std::ostream& out,
              std::ostream& err) {
  SweepOptions options;
  options.jobs = jobs;
  options.allow_large = allow_n5;
  for (const auto& name : topology_names) options.topologies.push_back(*parse_topology_kind(name));

  const TheoremInfo& info = find_theorem(theorem);
  if (!info.topology_dependent && !options.topologies.empty()) {
    throw UsageError(theorem + " takes no --topology");
  }
  if (n == kMaxSweepSize && !allow_n5) {
    throw UsageError("n = 5 requires --allow-n5");
  }
  const SweepReport report = sweep(theorem, n, options);
  write_text(report_path, to_json(report), out);
  err << report.theorem << " n=" << report.n << ": " << report.structures_checked
      << " checked, " << report.structures_passing_precondition << " evaluated, "
      << report.violations.size() << " violations\n";
  return report.violations.empty() ? kOk : kFalse;
}

int cmd_example(const std::string& id, const std::string& out_path, std::ostream& out) {
  write_text(out_path, to_json(builtin_example(id)), out);
  return kOk;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::unknown_theorem:
    case Errc::unknown_example:
    case Errc::infinite_carrier_unsupported:
    case Errc::size_out_of_range:
    case Errc::missing_topology:
    case Errc::unexpected_topology:
      return kUsage;
    default:
      return kBadInput;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision procedures and theorem sweeps for finite transitive relations",
               "tset"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;
  bool close = false;
  auto add_file_flags = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "Relation document (JSON)")->required();
    cmd->add_flag("--close", close, "Transitively close instead of rejecting");
    cmd->add_flag("--json", as_json, "Machine-readable output");
  };

  auto* classify_cmd = app.add_subcommand("classify", "Report relation-class axioms");
  add_file_flags(classify_cmd);

  std::string op;
  std::string subset_text;
  auto* compute_cmd = app.add_subcommand("compute", "Evaluate a bound or closure operator");
  add_file_flags(compute_cmd);
  compute_cmd->add_option("--op", op, "Operator")
      ->required()
      ->check(CLI::IsMember({"ub", "lb", "le", "la", "sup", "inf", "up", "down"}));
  compute_cmd->add_option("--subset", subset_text, "Comma-separated labels (empty or ∅ for none)")
      ->required();

  std::string pred;
  TopologyChoice topology;
  auto* check_cmd = app.add_subcommand("check", "Decide a predicate; exit 0 if true, 1 if false");
  add_file_flags(check_cmd);
  std::vector<std::string> pred_names;
  for (const auto& [name, spec] : predicates()) pred_names.push_back(name);
  check_cmd->add_option("--pred", pred, "Predicate name")->required()->check(CLI::IsMember(pred_names));
  auto* check_subset = check_cmd->add_option("--subset", subset_text, "Comma-separated labels");
  add_topology_flags(check_cmd, topology);

  auto* topology_cmd = app.add_subcommand("topology", "List the opens of a topology");
  add_file_flags(topology_cmd);
  add_topology_flags(topology_cmd, topology);

  std::string theorem;
  std::size_t n = 0;
  std::vector<std::string> sweep_topologies;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  std::string report_path;
  bool allow_n5 = false;
  bool list = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "Verify a registered theorem on all t-sets of size n");
  auto* theorem_opt = sweep_cmd->add_option("--theorem", theorem, "Theorem id");
  auto* n_opt = sweep_cmd->add_option("--n", n, "Carrier size")->check(CLI::Range(1, 5));
  sweep_cmd->add_option("--topology", sweep_topologies, "Topologies to sweep (repeatable)")
      ->check(CLI::IsMember({"alexandroff", "scott-star"}));
  sweep_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--report", report_path, "Write the JSON report here instead of stdout");
  sweep_cmd->add_flag("--allow-n5", allow_n5, "Permit n = 5");
  auto* list_flag = sweep_cmd->add_flag("--list", list, "List registered theorem ids");
  sweep_cmd->add_flag("--json", as_json, "JSON output for --list");
  list_flag->excludes(theorem_opt)->excludes(n_opt);

  std::string example_id;
  std::string example_out;
  auto* example_cmd = app.add_subcommand("example", "Emit a built-in fixture as JSON");
  example_cmd->add_option("--id", example_id, "3.2, 3.3 or 5.1")->required();
  example_cmd->add_option("--out", example_out, "Output path (default stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(load_tset(file, close), as_json, out);
    if (compute_cmd->parsed()) {
      return cmd_compute(load_tset(file, close), op, subset_text, as_json, out);
    }
    if (check_cmd->parsed()) {
      std::optional<std::string> subset;
      if (check_subset->count() > 0) subset = subset_text;
      return cmd_check(load_tset(file, close), pred, subset, topology, as_json, out);
    }
    if (topology_cmd->parsed()) return cmd_topology(load_tset(file, close), topology, as_json, out);
    if (sweep_cmd->parsed()) {
      if (list) return cmd_sweep_list(as_json, out);
      if (theorem.empty() || n_opt->count() == 0) {
        throw UsageError("sweep requires --theorem and --n (or --list)");
      }
      return cmd_sweep(theorem, n, sweep_topologies, jobs, allow_n5, report_path, out, err);
    }
    if (example_cmd->parsed()) return cmd_example(example_id, example_out, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kUsage;
}

}  // namespace tset::cli
