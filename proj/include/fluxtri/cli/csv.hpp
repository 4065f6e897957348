#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace fluxtri::cli {

/// Shortest round-trippable text at 12 significant digits.
std::string format_number(double value);

struct CsvMetadata {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  unsigned long long seed = 0;
  std::string version;
};

/// Writes the '#'-prefixed metadata block. The last line carries the generation time and
/// is the only line that varies between identical runs.
void write_metadata(std::ostream& os, const CsvMetadata& meta);

void write_row(std::ostream& os, const std::vector<std::string>& cells);

}  // namespace fluxtri::cli
