#include "agme/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "agme/types.hpp"

namespace agme {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

long long parse_int(std::string_view text) {
  long long value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // binary keeps LF endings
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

void write_metrics_csv(const std::filesystem::path& path,
                       const std::vector<MetricsRow>& rows) {
  std::ofstream out = open_out(path);
  out << "trial,perf,dispersion,repertoire_size\n";
  for (const MetricsRow& row : rows) {
    out << row.trial << ',' << format_double(row.perf) << ','
        << format_double(row.dispersion) << ',' << row.repertoire_size << '\n';
  }
}

std::vector<MetricsRow> read_metrics_csv(const std::filesystem::path& path) {
  const std::vector<std::string> lines = read_lines(path);
  if (lines.empty() || lines[0] != "trial,perf,dispersion,repertoire_size") {
    throw ParseError(path.string() + ": missing metrics header");
  }
  std::vector<MetricsRow> rows;
  rows.reserve(lines.size() - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split(lines[i], ',');
    if (fields.size() != 4) {
      throw ParseError(path.string() + ": bad metrics row '" + lines[i] + "'");
    }
    MetricsRow row;
    row.trial = static_cast<int>(parse_int(fields[0]));
    row.perf = parse_double(fields[1]);
    row.dispersion = parse_double(fields[2]);
    row.repertoire_size = static_cast<std::size_t>(parse_int(fields[3]));
    rows.push_back(row);
  }
  return rows;
}

void write_repertoire_csv(const std::filesystem::path& path,
                          const Repertoire& repertoire) {
  if (repertoire.empty()) {
    throw EmptyRepertoireError("write_repertoire_csv: empty repertoire");
  }
  std::ofstream out = open_out(path);
  const std::size_t outcome_dim = repertoire.outcome(0).size();
  const std::size_t policy_dim = repertoire.policy(0).size();
  out << "index";
  for (std::size_t d = 0; d < outcome_dim; ++d) out << ",outcome_" << d;
  for (std::size_t d = 0; d < policy_dim; ++d) out << ",policy_" << d;
  out << '\n';
  std::string line;
  for (std::size_t i = 0; i < repertoire.size(); ++i) {
    line.clear();
    line += std::to_string(i);
    for (double v : repertoire.outcome(i)) {
      line += ',';
      line += format_double(v);
    }
    for (double v : repertoire.policy(i)) {
      line += ',';
      line += format_double(v);
    }
    line += '\n';
    out << line;
  }
}

Repertoire read_repertoire_csv(const std::filesystem::path& path) {
  const std::vector<std::string> lines = read_lines(path);
  if (lines.empty()) throw ParseError(path.string() + ": empty dump");
  const auto header = split(lines[0], ',');
  if (header.empty() || header[0] != "index") {
    throw ParseError(path.string() + ": missing dump header");
  }
  std::size_t outcome_dim = 0;
  std::size_t policy_dim = 0;
  for (std::size_t c = 1; c < header.size(); ++c) {
    if (header[c].starts_with("outcome_")) {
      if (policy_dim > 0) {
        throw ParseError(path.string() + ": outcome column after policy");
      }
      ++outcome_dim;
    } else if (header[c].starts_with("policy_")) {
      ++policy_dim;
    } else {
      throw ParseError(path.string() + ": unknown column '" +
                       std::string(header[c]) + "'");
    }
  }
  if (outcome_dim == 0 || policy_dim == 0) {
    throw ParseError(path.string() + ": dump needs outcome and policy columns");
  }
  Repertoire repertoire;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split(lines[i], ',');
    if (fields.size() != 1 + outcome_dim + policy_dim) {
      throw ParseError(path.string() + ": row " + std::to_string(i) +
                       " has " + std::to_string(fields.size()) + " fields");
    }
    if (static_cast<std::size_t>(parse_int(fields[0])) != i - 1) {
      throw ParseError(path.string() + ": row " + std::to_string(i) +
                       " index out of order");
    }
    SensorVector outcome(outcome_dim);
    for (std::size_t d = 0; d < outcome_dim; ++d) {
      outcome[d] = parse_double(fields[1 + d]);
    }
    PolicyParams policy(policy_dim);
    for (std::size_t d = 0; d < policy_dim; ++d) {
      policy[d] = parse_double(fields[1 + outcome_dim + d]);
    }
    repertoire.add(std::move(outcome), std::move(policy));
  }
  if (repertoire.empty()) throw ParseError(path.string() + ": no data rows");
  return repertoire;
}

}  // namespace agme
