#include "fluxtri/cli/csv.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <iomanip>

namespace fluxtri::cli {

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_metadata(std::ostream& os, const CsvMetadata& meta) {
  os << "# command: " << meta.command << '\n';
  os << "# params:";
  for (const auto& [key, value] : meta.params) os << ' ' << key << '=' << value;
  os << '\n';
  os << "# seed: " << meta.seed << '\n';
  os << "# version: " << meta.version << '\n';
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  os << "# generated: " << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ") << '\n';
}

void write_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << cells[i];
  }
  os << '\n';
}

}  // namespace fluxtri::cli
