#include "anchorrec_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "anchorrec/anchorrec.hpp"

namespace anchorrec::cli {
namespace {

struct Options {
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string format = "csv";
  std::optional<std::uint64_t> trials;
  std::string n;
  std::string m;
  bool timing = false;
  bool drop_pair = false;
  bool scan = false;
  std::uint64_t samples = 0;
  std::vector<std::string> files;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  return value;
}

void apply_m(ExperimentConfig& config, const std::string& text, MRule fallback) {
  if (text.empty()) {
    config.m_rule = fallback;
  } else if (text == "auto") {
    config.m_rule = MRule::kThreeLog2;
  } else if (text == "auto-2") {
    config.m_rule = MRule::kThreeLog2MinusTwo;
  } else {
    config.m_rule = MRule::kExplicit;
    config.m_explicit = parse_int(text);
  }
}

ExperimentConfig make_config(const std::string& name, const Options& o, const std::string& default_n,
                             std::uint64_t default_trials, MRule default_m) {
  ExperimentConfig config;
  config.name = name;
  config.n_values = parse_n_list(o.n.empty() ? default_n : o.n);
  apply_m(config, o.m, default_m);
  config.trials = o.trials.value_or(default_trials);
  config.seed = o.seed;
  config.output_path = o.out;
  config.format = o.format == "json" ? ReportFormat::kJson : ReportFormat::kCsv;
  config.record_timing = o.timing;
  return config;
}

void emit(const ExperimentConfig& config, const Table& table, std::ostream& out) {
  std::ostringstream text;
  if (config.format == ReportFormat::kJson) {
    write_json(text, config, table);
  } else {
    write_csv(text, table);
  }
  if (config.output_path.empty()) {
    out << text.str();
    return;
  }
  std::ofstream file(config.output_path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + config.output_path + "'");
  file << text.str();
}

void emit_text(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + o.out + "'");
  file << text;
}

std::vector<Graph> read_graphs(const std::string& path) {
  if (path == "-") return read_graph6(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return read_graph6(in);
}

Graph read_single_graph(const std::string& path) {
  auto graphs = read_graphs(path);
  if (graphs.size() != 1) throw UsageError("'" + path + "' must hold exactly one graph6 line");
  return std::move(graphs.front());
}

Cell cell(int v) { return static_cast<std::int64_t>(v); }
Cell cell(std::uint64_t v) { return v; }
Cell cell(double v) { return v; }

int run_gen(const Options& o, std::ostream& out) {
  auto config = make_config("gen", o, "", 1, MRule::kExplicit);
  std::string text;
  for (int n : config.n_values) {
    if (n < 0) throw UsageError("--n must be non-negative");
    for (std::uint64_t t = 0; t < config.trials; ++t) text += graph6_encode(random_graph(n, trial_seed(config.seed, t))) + '\n';
  }
  emit_text(o, text, out);
  return kExitOk;
}

int run_anchor_scan(const Options& o, std::ostream& out, std::ostream& err) {
  const auto config = make_config("anchor-scan", o, "20,30,40", 200, MRule::kThreeLog2);
  config.validate();
  std::vector<TrialRecord> records;
  for (int n : config.n_values) {
    const int m = config.m_for(n);
    const auto est = estimate_stable_anchor_prob(n, m, config.trials, config.seed, config.record_timing);
    err << "anchor-scan n=" << n << " m=" << m << " stable=" << est.stable.successes << '/' << est.stable.trials
        << " (" << format_double(est.stable.estimate) << " [" << format_double(est.stable.lower) << ", "
        << format_double(est.stable.upper) << "]) anchor=" << est.anchor.successes
        << " asymmetric=" << est.asymmetric.successes << '\n';
    records.insert(records.end(), est.records.begin(), est.records.end());
  }
  emit(config, trial_table(records), out);
  return kExitOk;
}

int run_recon_roundtrip(const Options& o, std::ostream& out, std::ostream& err) {
  const auto config = make_config("recon-roundtrip", o, "20,24,28,32", 50, MRule::kThreeLog2MinusTwo);
  config.validate();
  std::vector<TrialRecord> records;
  bool ok = true;
  for (int n : config.n_values) {
    RoundtripOptions options;
    options.m = config.m_for(n);
    options.drop_pair_graph = o.drop_pair;
    options.record_timing = config.record_timing;
    const auto report = roundtrip_experiment(n, config.trials, config.seed, options);
    err << "recon-roundtrip n=" << n << " m=" << report.m << " anchors=" << report.anchors_found << '/'
        << report.trials << " reconstructed=" << report.reconstructed << " mismatches=" << report.mismatches;
    for (const auto& [what, count] : report.errors) err << ' ' << what << '=' << count;
    err << '\n';
    ok = ok && report.ok();
    records.insert(records.end(), report.records.begin(), report.records.end());
  }
  emit(config, trial_table(records), out);
  return ok ? kExitOk : kExitFailure;
}

int run_kelly_check(const Options& o, std::ostream& out, std::ostream& err) {
  auto config = make_config("kelly-check", o, "5,6,7,8", 10, MRule::kExplicit);
  const bool all_m = o.m.empty();
  Table table{{"n", "m", "k", "graphs", "checks", "mismatches"}, {}};
  std::uint64_t total_mismatches = 0;
  for (int n : config.n_values) {
    if (n < 3) throw UsageError("kelly-check needs n >= 3");
    std::vector<int> ms;
    if (all_m) {
      for (int m = 2; m < n; ++m) ms.push_back(m);
    } else {
      ms.push_back(config.m_for(n));
      if (ms.back() < 2 || ms.back() >= n) throw UsageError("kelly-check needs 2 <= m < n");
    }
    std::vector<Graph> graphs;
    for (std::uint64_t t = 0; t < config.trials; ++t) graphs.push_back(random_graph(n, trial_seed(config.seed, t)));
    for (int m : ms) {
      std::vector<Deck> decks;
      for (const auto& g : graphs) decks.push_back(full_deck(g, m));
      for (int k = 1; k < m && k <= 7; ++k) {
        std::uint64_t checks = 0;
        std::uint64_t mismatches = 0;
        for (const auto& h : enumerate_classes(k)) {
          const Graph pattern = h.graph();
          for (std::size_t i = 0; i < graphs.size(); ++i) {
            ++checks;
            if (kelly_count(decks[i], pattern, n) != count_induced_copies(graphs[i], pattern)) ++mismatches;
          }
        }
        table.rows.push_back({cell(n), cell(m), cell(k), cell(static_cast<std::uint64_t>(graphs.size())), cell(checks),
                              cell(mismatches)});
        total_mismatches += mismatches;
      }
    }
  }
  err << "kelly-check mismatches=" << total_mismatches << '\n';
  emit(config, table, out);
  return total_mismatches == 0 ? kExitOk : kExitFailure;
}

int run_deck(const Options& o, std::ostream& out) {
  if (o.files.size() != 1) throw UsageError("deck takes one graph6 file ('-' for stdin)");
  if (o.m.empty()) throw UsageError("deck needs --m");
  std::ostringstream text;
  for (const auto& g : read_graphs(o.files.front())) {
    ExperimentConfig config;
    config.n_values = {g.order()};
    apply_m(config, o.m, MRule::kExplicit);
    const int m = config.m_for(g.order());
    if (m < 0 || m > g.order()) throw UsageError("deck needs 0 <= m <= n");
    write_deck(text, o.samples == 0 ? full_deck(g, m) : sampled_deck(g, m, o.samples, o.seed));
  }
  emit_text(o, text.str(), out);
  return kExitOk;
}

int run_iso_scan(const Options& o, std::ostream& out) {
  auto config = make_config("iso-scan", o, "6", 1, MRule::kExplicit);
  Table table{{"n", "m", "classes", "pairs", "colliding_pairs", "groups", "largest_group"}, {}};
  for (int n : config.n_values) {
    if (n < 1 || n > 7) throw UsageError("iso --scan supports 1 <= n <= 7");
    std::vector<int> ms;
    if (o.m.empty()) {
      for (int m = 3; m < n; ++m) ms.push_back(m);
    } else {
      ms.push_back(config.m_for(n));
    }
    for (int m : ms) {
      if (m < 1 || m > n) throw UsageError("iso --scan needs 1 <= m <= n");
      const auto report = deck_collisions(n, m);
      std::uint64_t largest = 0;
      for (auto g : report.collision_groups) largest = std::max(largest, g);
      table.rows.push_back({cell(n), cell(m), cell(report.classes), cell(report.pairs), cell(report.colliding_pairs),
                            cell(static_cast<std::uint64_t>(report.collision_groups.size())), cell(largest)});
    }
  }
  emit(config, table, out);
  return kExitOk;
}

int run_iso(const Options& o, std::ostream& out) {
  if (o.scan) return run_iso_scan(o, out);
  if (o.files.size() != 2) throw UsageError("iso takes two graph6 files");
  const Graph a = read_single_graph(o.files[0]);
  const Graph b = read_single_graph(o.files[1]);
  if (a.order() != b.order()) {
    emit_text(o, "different-orders " + std::to_string(a.order()) + ' ' + std::to_string(b.order()) + '\n', out);
    return kExitOk;
  }
  ExperimentConfig config;
  apply_m(config, o.m, MRule::kThreeLog2);
  const int m = std::min(config.m_for(a.order()), a.order());
  if (m < 0) throw UsageError("iso needs m >= 0");
  const auto result = decide_iso_by_deck(a, b, m);
  std::ostringstream text;
  if (result.conclusive()) {
    text << "different-decks m=" << m << " witness=" << result.witness->graph6() << ' ' << result.first_count << ' '
         << result.second_count << '\n';
  } else {
    text << "equal-decks m=" << m << '\n';
  }
  emit_text(o, text.str(), out);
  return kExitOk;
}

std::string default_prob_grid() {
  std::string grid;
  for (int e = 4; e <= 30; ++e) grid += (grid.empty() ? "" : ",") + std::to_string(1 << e);
  return grid;
}

int run_prob_curves(const Options& o, std::ostream& out) {
  auto config = make_config("prob-curves", o, default_prob_grid(), 1, MRule::kThreeLog2);
  Table table{{"n", "m", "bound_second_copy", "shadow_uniqueness", "log10_hit_bound", "hit_vacuous"}, {}};
  for (int n : config.n_values) {
    if (n < 1) throw UsageError("--n must be positive");
    const int m = config.m_for(n);
    if (m < 1) throw UsageError("prob-curves needs m >= 1");
    std::vector<Cell> row{cell(n), cell(m), cell(bound_second_copy(n, m))};
    if (m <= n && std::ldexp(1.0, m) >= n - m) {
      row.push_back(cell(shadow_uniqueness_prob(static_cast<std::uint64_t>(n), m)));
    } else {
      row.emplace_back(std::monostate{});
    }
    if (m <= n) {
      const auto hit = subgraph_hit_prob(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m));
      row.push_back(cell(hit.log10_bound));
      row.emplace_back(hit.vacuous);
    } else {
      row.emplace_back(std::monostate{});
      row.emplace_back(std::monostate{});
    }
    table.rows.push_back(std::move(row));
  }
  emit(config, table, out);
  return kExitOk;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "Master seed (default 20170101)");
  sub->add_option("--out", o.out, "Output file (default stdout)");
  sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--trials", o.trials, "Trials (graphs) per n");
  sub->add_option("--n", o.n, "Vertex counts: 20 | 20,24,28 | 20:32:4");
  sub->add_option("--m", o.m, "Anchor/deck order: integer | auto | auto-2");
}

}  // namespace

std::vector<int> parse_n_list(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("--n is required");
  std::vector<int> values;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto colon = item.find(':', 1);
    if (colon == std::string::npos) {
      values.push_back(parse_int(item));
      continue;
    }
    const auto second = item.find(':', colon + 1);
    const int first = parse_int(item.substr(0, colon));
    const int last = parse_int(item.substr(colon + 1, second == std::string::npos ? std::string::npos : second - colon - 1));
    const int step = second == std::string::npos ? 1 : parse_int(item.substr(second + 1));
    if (step <= 0 || last < first) throw std::invalid_argument("bad range '" + item + "'");
    for (int v = first; v <= last; v += step) values.push_back(v);
  }
  return values;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"anchorrec: graph reconstruction from stable anchors"};
  app.name("anchorrec");
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Emit G(n,1/2) graphs as graph6");
  auto* scan = app.add_subcommand("anchor-scan", "Estimate the stable-anchor probability");
  auto* recon = app.add_subcommand("recon-roundtrip", "Build and reconstruct 2-adjacent bundles");
  auto* kelly = app.add_subcommand("kelly-check", "Compare deck-derived and direct subgraph counts");
  auto* deck = app.add_subcommand("deck", "Print the m-deck of each graph in a graph6 file");
  auto* iso = app.add_subcommand("iso", "Compare two graphs by their m-decks");
  auto* prob = app.add_subcommand("prob-curves", "Tabulate the closed-form probability bounds");
  for (auto* sub : {gen, scan, recon, kelly, deck, iso, prob}) add_common(sub, o);
  scan->add_flag("--timing", o.timing, "Record per-trial wall time (not reproducible)");
  recon->add_flag("--timing", o.timing, "Record per-trial wall time (not reproducible)");
  recon->add_flag("--drop-pair", o.drop_pair, "Drop one pair-graph from every bundle");
  deck->add_option("--samples", o.samples, "Sampled deck of this many subsets (0 = full deck)");
  deck->add_option("graph", o.files, "graph6 file, '-' for stdin")->expected(1);
  iso->add_option("graphs", o.files, "Two graph6 files")->expected(0, 2);
  iso->add_flag("--scan", o.scan, "Count deck collisions over all classes of order --n");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(o, out);
    if (scan->parsed()) return run_anchor_scan(o, out, err);
    if (recon->parsed()) return run_recon_roundtrip(o, out, err);
    if (kelly->parsed()) return run_kelly_check(o, out, err);
    if (deck->parsed()) return run_deck(o, out);
    if (iso->parsed()) return run_iso(o, out);
    if (prob->parsed()) return run_prob_curves(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace anchorrec::cli
