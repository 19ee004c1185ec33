#include "anchorrec/report.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace anchorrec {

namespace {

template <class T>
Cell optional_cell(const std::optional<T>& v) {
  if (!v) return std::monostate{};
  return *v;
}

std::string csv_text(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(bool b) const { return b ? "1" : "0"; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(std::uint64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string quoted = "\"";
      for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      return quoted + '"';
    }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json json_value(const Cell& cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(std::uint64_t v) const { return v; }
    // Round-trip through the fixed format so JSON and CSV agree digit for digit.
    nlohmann::ordered_json operator()(double v) const { return std::stod(format_double(v)); }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

Table trial_table(const std::vector<TrialRecord>& records) {
  Table t;
  t.columns = kTrialColumns;
  for (const auto& r : records) {
    t.rows.push_back({r.experiment, static_cast<std::int64_t>(r.n), static_cast<std::int64_t>(r.m), r.trial, r.seed,
                      optional_cell(r.asymmetric), optional_cell(r.anchor), optional_cell(r.stable),
                      optional_cell(r.reconstructed), optional_cell(r.ms)});
  }
  return t;
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_text(row[i]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const ExperimentConfig& config, const Table& table) {
  nlohmann::ordered_json doc;
  auto& cfg = doc["config"];
  cfg["experiment"] = config.name;
  cfg["n"] = config.n_values;
  cfg["m_rule"] = to_string(config.m_rule);
  if (config.m_rule == MRule::kExplicit) cfg["m"] = config.m_explicit;
  cfg["trials"] = config.trials;
  cfg["seed"] = config.seed;
  cfg["format"] = "json";
  cfg["timing"] = config.record_timing;

  auto& rows = doc["rows"];
  rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) obj[table.columns[i]] = json_value(row[i]);
    rows.push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace anchorrec
