#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "anchorrec/experiments.hpp"

namespace anchorrec {

using Cell = std::variant<std::monostate, bool, std::int64_t, std::uint64_t, double, std::string>;

/// Column-named rows rendered as CSV or as JSON objects. Rendering is
/// byte-stable: doubles use a fixed %.10g format.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

inline const std::vector<std::string> kTrialColumns = {"experiment", "n", "m", "trial", "seed",
                                                       "asymmetric", "anchor", "stable", "reconstructed", "ms"};

Table trial_table(const std::vector<TrialRecord>& records);

void write_csv(std::ostream& out, const Table& table);
/// {"config": {...}, "rows": [{column: value, ...}, ...]}
void write_json(std::ostream& out, const ExperimentConfig& config, const Table& table);

std::string format_double(double value);

}  // namespace anchorrec
