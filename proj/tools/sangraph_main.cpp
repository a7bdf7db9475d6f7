// Command-line front end: ingest | rsi | motif | network | nulltest | synth.
// Subcommands read a local event file, run one analytics module and write
// CSV reports plus a JSON run manifest into the output directory.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sangraph/csv.hpp"
#include "sangraph/event_io.hpp"
#include "sangraph/events.hpp"
#include "sangraph/motifs.hpp"
#include "sangraph/networks.hpp"
#include "sangraph/null_model.hpp"
#include "sangraph/rsi.hpp"
#include "sangraph/synth.hpp"
#include "sangraph/temporal_graph.hpp"
#include "sangraph/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace sangraph;

namespace {

// Partial outputs never land under their final name: write to a sibling tmp
// file, then rename.
void atomic_write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + tmp.string());
    out << content;
    if (!out) throw IoError("failed writing: " + tmp.string());
  }
  fs::rename(tmp, path);
}

json base_manifest(const std::string& command) {
  json m;
  m["tool"] = "sangraph";
  m["version"] = std::string(kVersion);
  m["command"] = command;
  return m;
}

json input_stamp(const fs::path& path) {
  return json{{"path", path.string()}, {"fnv1a64", hex64(fnv1a64_file(path))}};
}

void write_manifest(const fs::path& path, const json& manifest) {
  atomic_write_file(path, manifest.dump(2) + "\n");
}

// Loads a dataset, printing line-numbered schema issues to stderr.
// Any issue is a hard error (exit 2 via the Error handler).
std::vector<SanctionEvent> load_events(const fs::path& path, RecordFormat format) {
  ReadEventsResult result = read_events(path, format);
  for (const ParseIssue& issue : result.issues) {
    std::cerr << path.string() << ":" << issue.line << ": " << issue.message << "\n";
  }
  if (!result.issues.empty()) {
    throw Error(std::to_string(result.issues.size()) + " invalid record(s) in " + path.string());
  }
  return result.events;
}

TemporalGraph load_graph(const fs::path& path, RecordFormat format) {
  LinkResult linked = link_lifecycles(load_events(path, format));
  return TemporalGraph::build(linked.lifecycles);
}

std::vector<std::string> parse_country_list(const std::string& text) {
  std::vector<std::string> out;
  for (const std::string& piece : csv::split_list(text, ',')) {
    out.push_back(normalize_country(piece));
  }
  return out;
}

// Default country set for reports: everything in the graph except the
// unknown-target placeholder.
std::vector<std::string> report_countries(const TemporalGraph& g, const std::string& requested) {
  if (!requested.empty()) return parse_country_list(requested);
  std::vector<std::string> all = g.countries();
  std::erase(all, std::string(kUnknownCountry));
  return all;
}

RecordFormat format_from_flag(const std::string& flag) {
  if (flag == "jsonl") return RecordFormat::Jsonl;
  if (flag == "csv") return RecordFormat::Csv;
  return RecordFormat::Auto;
}

struct YearSpan {
  int first = 0;
  int last = 0;
};

YearSpan parse_year_span(const std::string& text) {
  const auto parts = csv::split_list(text, ':');
  if (parts.size() != 2) throw InvalidParams("expected YEAR:YEAR, got \"" + text + "\"");
  try {
    YearSpan span{std::stoi(parts[0]), std::stoi(parts[1])};
    if (span.first > span.last) throw InvalidParams("year span is inverted: \"" + text + "\"");
    return span;
  } catch (const std::invalid_argument&) {
    throw InvalidParams("expected YEAR:YEAR, got \"" + text + "\"");
  } catch (const std::out_of_range&) {
    throw InvalidParams("year out of range in \"" + text + "\"");
  }
}

std::optional<YearSpan> data_year_span(const TemporalGraph& g) {
  if (g.empty()) return std::nullopt;
  return YearSpan{g.min_t_add()->year(), g.max_t_add()->year()};
}

json interval_json(const DateInterval& bin) {
  return json{{"start", bin.start.to_string()}, {"end", bin.end.to_string()}};
}

// ---------------------------------------------------------------------------
// ingest

struct IngestOptions {
  std::string input;
  std::string out_dir;
  std::string format = "auto";
  std::string edges_out;
};

int cmd_ingest(const IngestOptions& opt) {
  const std::vector<SanctionEvent> events = load_events(opt.input, format_from_flag(opt.format));
  const LinkResult linked = link_lifecycles(events);
  const DatasetSummary summary = summarize(events);

  for (const LinkWarning& warning : linked.warnings) {
    std::cerr << warning_record(warning).dump() << "\n";
  }

  fs::create_directories(opt.out_dir);
  const fs::path dataset_path = fs::path(opt.out_dir) / "events.jsonl";
  {
    std::ostringstream body;
    write_events_jsonl(body, events);
    atomic_write_file(dataset_path, body.str());
  }

  BuildDiagnostics diagnostics;
  const TemporalGraph graph = TemporalGraph::build(linked.lifecycles, diagnostics);
  for (const std::string& key : diagnostics.never_active_keys) {
    std::cerr << json{{"kind", "NeverActiveEdge"}, {"edge_key", key}}.dump() << "\n";
  }
  if (!opt.edges_out.empty()) {
    std::ostringstream body;
    graph.write_edge_list(body);
    atomic_write_file(opt.edges_out, body.str());
  }

  long long open_count = 0;
  for (const Lifecycle& lc : linked.lifecycles) {
    if (!lc.t_remove) ++open_count;
  }

  std::cout << "events: " << summary.total() << " (Add " << summary.adds << ", Revise "
            << summary.revises << ", Remove " << summary.removes << ")\n";
  std::cout << "countries: " << summary.intermediate_countries << " intermediate, "
            << summary.final_countries << " final\n";
  if (summary.first_date) {
    std::cout << "date range: " << summary.first_date->to_string() << " .. "
              << summary.last_date->to_string() << "\n";
  }
  std::cout << "lifecycles: " << linked.lifecycles.size() << " (open " << open_count
            << "), warnings: " << linked.warnings.size() << "\n";
  std::cout << "wrote " << dataset_path.string() << "\n";

  json manifest = base_manifest("ingest");
  manifest["input"] = input_stamp(opt.input);
  manifest["parameters"] = json{{"format", opt.format}};
  manifest["summary"] = json{{"add", summary.adds},
                             {"revise", summary.revises},
                             {"remove", summary.removes},
                             {"lifecycles", linked.lifecycles.size()},
                             {"warnings", linked.warnings.size()}};
  manifest["outputs"] = json::array({dataset_path.string()});
  if (!opt.edges_out.empty()) manifest["outputs"].push_back(opt.edges_out);
  write_manifest(fs::path(opt.out_dir) / "ingest.manifest.json", manifest);
  return 0;
}

// ---------------------------------------------------------------------------
// rsi

struct RsiOptions {
  std::string input;
  std::string out_dir;
  std::string at;
  std::string bins = "yearly";
  std::string countries;
};

int cmd_rsi(const RsiOptions& opt) {
  const TemporalGraph graph = load_graph(opt.input, RecordFormat::Auto);
  std::vector<RsiPoint> points;
  json bins_echo = json::array();

  if (!opt.at.empty()) {
    const Date t = Date::parse(opt.at);
    const auto snapshot = rsi_snapshot(graph, t);
    if (opt.countries.empty()) {
      for (const auto& [country, point] : snapshot) points.push_back(point);
    } else {
      for (const std::string& country : parse_country_list(opt.countries)) {
        auto it = snapshot.find(country);
        if (it != snapshot.end()) points.push_back(it->second);
      }
    }
    bins_echo.push_back(t.to_string());
  } else {
    std::vector<Date> bins;
    if (opt.bins == "yearly") {
      if (const auto span = data_year_span(graph)) {
        bins = year_end_bins(span->first, span->last);
      }
    } else {
      for (const std::string& piece : csv::split_list(opt.bins, ',')) {
        bins.push_back(Date::parse(piece));
      }
    }
    for (Date b : bins) bins_echo.push_back(b.to_string());
    if (!bins.empty()) {
      for (const std::string& country : report_countries(graph, opt.countries)) {
        auto series = rsi_series(graph, country, bins);
        points.insert(points.end(), series.begin(), series.end());
      }
    }
  }

  fs::create_directories(opt.out_dir);
  const fs::path report_path = fs::path(opt.out_dir) / "rsi.csv";
  std::ostringstream body;
  write_rsi_csv(body, points);
  atomic_write_file(report_path, body.str());
  std::cout << "wrote " << report_path.string() << " (" << points.size() << " rows)\n";

  json manifest = base_manifest("rsi");
  manifest["input"] = input_stamp(opt.input);
  manifest["parameters"] = json{{"at", opt.at},
                                {"bins", bins_echo},
                                {"countries", opt.countries}};
  manifest["outputs"] = json::array({report_path.string()});
  write_manifest(fs::path(opt.out_dir) / "rsi.manifest.json", manifest);
  return 0;
}

// ---------------------------------------------------------------------------
// motif

struct MotifOptions {
  std::string input;
  std::string out_dir;
  int delta_days = 1461;
  std::string bins = "yearly";
  std::string obs_rule = "bin-end";
  std::string same_day = "on";
  std::string countries;
};

MotifParams motif_params_from(const TemporalGraph& graph, int delta_days,
                              const std::string& bins_flag, const std::string& obs_rule,
                              const std::string& same_day) {
  MotifParams params;
  params.delta_days = delta_days;
  params.observation_rule =
      obs_rule == "event-time" ? ObservationRule::LaterEventTime : ObservationRule::BinEnd;
  params.include_same_day = same_day != "off";
  if (bins_flag == "yearly") {
    if (const auto span = data_year_span(graph)) {
      params.bins = yearly_bins(span->first, span->last);
    }
  } else {
    const YearSpan span = parse_year_span(bins_flag);
    params.bins = yearly_bins(span.first, span.last);
  }
  return params;
}

int cmd_motif(const MotifOptions& opt) {
  const TemporalGraph graph = load_graph(opt.input, RecordFormat::Auto);
  const MotifParams params =
      motif_params_from(graph, opt.delta_days, opt.bins, opt.obs_rule, opt.same_day);

  std::vector<MotifCount> rows;
  if (!params.bins.empty()) {
    rows = campaign_table(graph, report_countries(graph, opt.countries), params);
  }

  fs::create_directories(opt.out_dir);
  const fs::path report_path = fs::path(opt.out_dir) / "motifs.csv";
  std::ostringstream body;
  write_motif_csv(body, rows);
  atomic_write_file(report_path, body.str());
  std::cout << "wrote " << report_path.string() << " (" << rows.size() << " rows)\n";

  json bins_echo = json::array();
  for (const DateInterval& bin : params.bins) bins_echo.push_back(interval_json(bin));
  json manifest = base_manifest("motif");
  manifest["input"] = input_stamp(opt.input);
  manifest["parameters"] = json{{"delta_days", params.delta_days},
                                {"bins", bins_echo},
                                {"observation_rule", observation_rule_name(params.observation_rule)},
                                {"include_same_day", params.include_same_day},
                                {"countries", opt.countries}};
  manifest["outputs"] = json::array({report_path.string()});
  write_manifest(fs::path(opt.out_dir) / "motifs.manifest.json", manifest);
  return 0;
}

// ---------------------------------------------------------------------------
// network

struct NetworkOptions {
  std::string input;
  std::string out_dir;
  std::string at;
  std::string coverage = "active";
  std::string countries;
};

int cmd_network(const NetworkOptions& opt) {
  const TemporalGraph graph = load_graph(opt.input, RecordFormat::Auto);
  const Date t = Date::parse(opt.at);
  const Coverage coverage =
      opt.coverage == "cumulative" ? Coverage::CumulativeThrough : Coverage::ActiveAt;

  const auto rows = network_table(graph, report_countries(graph, opt.countries), t, coverage);

  fs::create_directories(opt.out_dir);
  const fs::path report_path = fs::path(opt.out_dir) / "networks.csv";
  std::ostringstream body;
  write_network_csv(body, rows, t);
  atomic_write_file(report_path, body.str());
  std::cout << "wrote " << report_path.string() << " (" << rows.size() << " rows)\n";

  json manifest = base_manifest("network");
  manifest["input"] = input_stamp(opt.input);
  manifest["parameters"] = json{{"at", t.to_string()},
                                {"coverage", opt.coverage},
                                {"countries", opt.countries}};
  manifest["outputs"] = json::array({report_path.string()});
  write_manifest(fs::path(opt.out_dir) / "networks.manifest.json", manifest);
  return 0;
}

// ---------------------------------------------------------------------------
// nulltest

struct NulltestOptions {
  std::string input;
  std::string out_dir;
  std::string terms_file;
  std::string countries;
  int replicates = 1000;
  std::uint64_t seed = 1;
  int delta_days = 1461;
  std::string obs_rule = "bin-end";
  std::string same_day = "on";
  std::string null_kind = "case";
  int threads = 0;
};

int cmd_nulltest(const NulltestOptions& opt) {
  const TemporalGraph graph = load_graph(opt.input, RecordFormat::Auto);
  if (graph.empty()) throw EmptyGraph("nulltest: dataset produced no edges");

  const std::vector<Term> terms =
      opt.terms_file.empty() ? default_us_terms() : load_terms(opt.terms_file);
  const NullKind kind = opt.null_kind == "time" ? NullKind::TimeShuffled : NullKind::CaseShuffled;

  MotifParams params;
  params.delta_days = opt.delta_days;
  params.observation_rule =
      opt.obs_rule == "event-time" ? ObservationRule::LaterEventTime : ObservationRule::BinEnd;
  params.include_same_day = opt.same_day != "off";

  const auto span = data_year_span(graph);
  std::vector<Term> usable_terms;
  for (const Term& term : terms) {
    if (term.end_year < span->first || term.start_year > span->last) {
      std::cerr << "skipping term \"" << term.label << "\": outside the data range\n";
      continue;
    }
    usable_terms.push_back(term);
  }
  const std::vector<PermutationReport> reports =
      permutation_test_batch(graph, report_countries(graph, opt.countries), usable_terms,
                             params, opt.replicates, opt.seed, kind, opt.threads);

  fs::create_directories(opt.out_dir);
  const fs::path report_path = fs::path(opt.out_dir) / "nulltest.csv";
  std::ostringstream body;
  write_permutation_csv(body, reports);
  atomic_write_file(report_path, body.str());
  std::cout << "wrote " << report_path.string() << " (" << reports.size() << " rows)\n";

  json terms_echo = json::array();
  for (const Term& term : terms) {
    terms_echo.push_back(json{{"label", term.label},
                              {"start_year", term.start_year},
                              {"end_year", term.end_year}});
  }
  json manifest = base_manifest("nulltest");
  manifest["input"] = input_stamp(opt.input);
  manifest["parameters"] = json{{"terms", terms_echo},
                                {"countries", opt.countries},
                                {"replicates", opt.replicates},
                                {"seed", opt.seed},
                                {"delta_days", opt.delta_days},
                                {"observation_rule", params.observation_rule ==
                                                             ObservationRule::BinEnd
                                                         ? "bin-end"
                                                         : "event-time"},
                                {"include_same_day", params.include_same_day},
                                {"null", opt.null_kind}};
  manifest["outputs"] = json::array({report_path.string()});
  write_manifest(fs::path(opt.out_dir) / "nulltest.manifest.json", manifest);
  return 0;
}

// ---------------------------------------------------------------------------
// synth

struct SynthOptions {
  std::string out;
  int n_events = 1000;
  std::uint64_t seed = 1;
  std::string mix = "0.8,0.15,0.05";
  std::string years = "2000:2024";
  std::string pool;
  std::vector<std::string> bursts;
};

SynthConfig synth_config_from(const SynthOptions& opt) {
  SynthConfig config;
  config.seed = opt.seed;
  config.n_events = opt.n_events;

  const auto mix = csv::split_list(opt.mix, ',');
  if (mix.size() != 3) throw InvalidParams("--mix expects add,revise,remove proportions");
  try {
    config.p_add = std::stod(mix[0]);
    config.p_revise = std::stod(mix[1]);
    config.p_remove = std::stod(mix[2]);
  } catch (const std::exception&) {
    throw InvalidParams("--mix expects three numbers");
  }

  const YearSpan span = parse_year_span(opt.years);
  config.year_first = span.first;
  config.year_last = span.last;

  try {
    if (!opt.pool.empty()) {
      for (const std::string& entry : csv::split_list(opt.pool, ',')) {
        const auto parts = csv::split_list(entry, ':');
        if (parts.size() != 2) throw InvalidParams("--pool expects CODE:WEIGHT entries");
        config.country_pool.emplace_back(normalize_country(parts[0]), std::stod(parts[1]));
      }
    }
    for (const std::string& entry : opt.bursts) {
      const auto parts = csv::split_list(entry, ':');
      if (parts.size() != 4) throw InvalidParams("--burst expects CODE:ROLE:YEAR:SIZE");
      BurstSpec burst;
      burst.country = normalize_country(parts[0]);
      burst.role = role_from_name(parts[1]);
      burst.year = std::stoi(parts[2]);
      burst.size = std::stoi(parts[3]);
      config.bursts.push_back(std::move(burst));
    }
  } catch (const std::invalid_argument&) {
    throw InvalidParams("malformed number in --pool/--burst");
  } catch (const std::out_of_range&) {
    throw InvalidParams("number out of range in --pool/--burst");
  }
  return config;
}

int cmd_synth(const SynthOptions& opt) {
  const SynthConfig config = synth_config_from(opt);
  const std::vector<SanctionEvent> events = generate(config);
  const DatasetSummary summary = summarize(events);

  std::ostringstream body;
  if (detect_format(opt.out) == RecordFormat::Csv) {
    write_events_csv(body, events);
  } else {
    write_events_jsonl(body, events);
  }
  atomic_write_file(opt.out, body.str());
  std::cout << "wrote " << opt.out << ": " << summary.total() << " events (Add " << summary.adds
            << ", Revise " << summary.revises << ", Remove " << summary.removes << ")\n";

  json bursts_echo = json::array();
  for (const BurstSpec& burst : config.bursts) {
    bursts_echo.push_back(json{{"country", burst.country},
                               {"role", role_name(burst.role)},
                               {"year", burst.year},
                               {"size", burst.size}});
  }
  json pool_echo = json::array();
  for (const auto& [code, weight] : config.country_pool) {
    pool_echo.push_back(json{{"code", code}, {"weight", weight}});
  }
  json manifest = base_manifest("synth");
  manifest["parameters"] = json{{"n_events", config.n_events},
                                {"seed", config.seed},
                                {"mix", {config.p_add, config.p_revise, config.p_remove}},
                                {"years", opt.years},
                                {"pool", pool_echo},
                                {"bursts", bursts_echo}};
  manifest["outputs"] = json::array({opt.out});
  write_manifest(fs::path(opt.out).string() + ".manifest.json", manifest);
  return 0;
}

// ---------------------------------------------------------------------------

template <typename Fn>
int run_guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const IoError& e) {
    std::cerr << "IoError: " << e.what() << "\n";
    return 1;
  } catch (const MalformedDate& e) {
    std::cerr << "MalformedDate: " << e.what() << "\n";
    return 2;
  } catch (const BadCountryCode& e) {
    std::cerr << "BadCountryCode: " << e.what() << "\n";
    return 2;
  } catch (const MissingFinal& e) {
    std::cerr << "MissingFinal: " << e.what() << "\n";
    return 2;
  } catch (const UnknownAction& e) {
    std::cerr << "UnknownAction: " << e.what() << "\n";
    return 2;
  } catch (const EmptyBins& e) {
    std::cerr << "EmptyBins: " << e.what() << "\n";
    return 2;
  } catch (const InvalidParams& e) {
    std::cerr << "InvalidParams: " << e.what() << "\n";
    return 2;
  } catch (const InfeasibleConfig& e) {
    std::cerr << "InfeasibleConfig: " << e.what() << "\n";
    return 2;
  } catch (const UnknownEdge& e) {
    std::cerr << "UnknownEdge: " << e.what() << "\n";
    return 3;
  } catch (const EmptyGraph& e) {
    std::cerr << "EmptyGraph: " << e.what() << "\n";
    return 3;
  } catch (const EmptyTerm& e) {
    std::cerr << "EmptyTerm: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temporal bipartite graph analytics for sanction-event data"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  IngestOptions ingest_opt;
  auto* ingest = app.add_subcommand("ingest", "Validate, normalize and link an event file");
  ingest->add_option("--input", ingest_opt.input, "Event file (JSONL or CSV)")->required();
  ingest->add_option("--out-dir", ingest_opt.out_dir, "Output directory")->required();
  ingest->add_option("--format", ingest_opt.format, "Input format: auto|jsonl|csv")
      ->check(CLI::IsMember({"auto", "jsonl", "csv"}));
  ingest->add_option("--edges-out", ingest_opt.edges_out, "Also export the temporal edge list");

  RsiOptions rsi_opt;
  auto* rsi = app.add_subcommand("rsi", "Role Skew Index series or snapshot");
  rsi->add_option("--input", rsi_opt.input, "Event file")->required();
  rsi->add_option("--out-dir", rsi_opt.out_dir, "Output directory")->required();
  rsi->add_option("--at", rsi_opt.at, "Snapshot date YYYY-MM-DD (omit for a series)");
  rsi->add_option("--bins", rsi_opt.bins, "\"yearly\" or comma-separated dates");
  rsi->add_option("--countries", rsi_opt.countries, "Comma-separated country codes");

  MotifOptions motif_opt;
  auto* motif = app.add_subcommand("motif", "Campaign-intensity motif counts per bin");
  motif->add_option("--input", motif_opt.input, "Event file")->required();
  motif->add_option("--out-dir", motif_opt.out_dir, "Output directory")->required();
  motif->add_option("--delta-days", motif_opt.delta_days, "Pairing window in days");
  motif->add_option("--bins", motif_opt.bins, "\"yearly\" or YEAR:YEAR");
  motif->add_option("--obs-rule", motif_opt.obs_rule, "bin-end|event-time")
      ->check(CLI::IsMember({"bin-end", "event-time"}));
  motif->add_option("--same-day", motif_opt.same_day, "on|off")
      ->check(CLI::IsMember({"on", "off"}));
  motif->add_option("--countries", motif_opt.countries, "Comma-separated country codes");

  NetworkOptions network_opt;
  auto* network = app.add_subcommand("network", "Intermediate/final target networks");
  network->add_option("--input", network_opt.input, "Event file")->required();
  network->add_option("--out-dir", network_opt.out_dir, "Output directory")->required();
  network->add_option("--at", network_opt.at, "Observation date YYYY-MM-DD")->required();
  network->add_option("--coverage", network_opt.coverage, "active|cumulative")
      ->check(CLI::IsMember({"active", "cumulative"}));
  network->add_option("--countries", network_opt.countries, "Comma-separated country codes");

  NulltestOptions nulltest_opt;
  auto* nulltest = app.add_subcommand("nulltest", "Permutation test of term-level motif peaks");
  nulltest->add_option("--input", nulltest_opt.input, "Event file")->required();
  nulltest->add_option("--out-dir", nulltest_opt.out_dir, "Output directory")->required();
  nulltest->add_option("--terms-file", nulltest_opt.terms_file,
                       "JSON terms file (default: built-in US terms)");
  nulltest->add_option("--countries", nulltest_opt.countries, "Comma-separated country codes");
  nulltest->add_option("--replicates", nulltest_opt.replicates, "Number of permutations")
      ->check(CLI::PositiveNumber);
  nulltest->add_option("--seed", nulltest_opt.seed, "Random seed");
  nulltest->add_option("--delta-days", nulltest_opt.delta_days, "Pairing window in days");
  nulltest->add_option("--obs-rule", nulltest_opt.obs_rule, "bin-end|event-time")
      ->check(CLI::IsMember({"bin-end", "event-time"}));
  nulltest->add_option("--same-day", nulltest_opt.same_day, "on|off")
      ->check(CLI::IsMember({"on", "off"}));
  nulltest->add_option("--null", nulltest_opt.null_kind, "case|time")
      ->check(CLI::IsMember({"case", "time"}));
  nulltest->add_option("--threads", nulltest_opt.threads, "Worker threads (0 = auto)");

  SynthOptions synth_opt;
  auto* synth = app.add_subcommand("synth", "Generate a deterministic synthetic event file");
  synth->add_option("--out", synth_opt.out, "Output event file (JSONL or CSV)")->required();
  synth->add_option("--n", synth_opt.n_events, "Number of events");
  synth->add_option("--seed", synth_opt.seed, "Random seed");
  synth->add_option("--mix", synth_opt.mix, "add,revise,remove proportions");
  synth->add_option("--years", synth_opt.years, "YEAR:YEAR range");
  synth->add_option("--pool", synth_opt.pool, "CODE:WEIGHT,... country pool");
  synth->add_option("--burst", synth_opt.bursts, "CODE:ROLE:YEAR:SIZE (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (ingest->parsed()) return run_guarded([&] { return cmd_ingest(ingest_opt); });
  if (rsi->parsed()) return run_guarded([&] { return cmd_rsi(rsi_opt); });
  if (motif->parsed()) return run_guarded([&] { return cmd_motif(motif_opt); });
  if (network->parsed()) return run_guarded([&] { return cmd_network(network_opt); });
  if (nulltest->parsed()) return run_guarded([&] { return cmd_nulltest(nulltest_opt); });
  if (synth->parsed()) return run_guarded([&] { return cmd_synth(synth_opt); });
  return 2;
}
