#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "agme/repertoire.hpp"

namespace agme {

// Shortest decimal form that parses back to the identical double.
std::string format_double(double v);

// Inverse of format_double; rejects trailing garbage.
double parse_double(std::string_view text);

struct MetricsRow {
  int trial = 0;
  double perf = 0.0;
  double dispersion = 0.0;
  std::size_t repertoire_size = 0;
};

// metrics.csv: header trial,perf,dispersion,repertoire_size; LF endings.
void write_metrics_csv(const std::filesystem::path& path,
                       const std::vector<MetricsRow>& rows);
std::vector<MetricsRow> read_metrics_csv(const std::filesystem::path& path);

// Repertoire dump: header index,outcome_0..,policy_0.., one row per stored
// pair, values round-tripping exactly.
void write_repertoire_csv(const std::filesystem::path& path,
                          const Repertoire& repertoire);
Repertoire read_repertoire_csv(const std::filesystem::path& path);

}  // namespace agme
