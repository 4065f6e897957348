/**
 * @file commands.hpp
 * @brief Subcommand implementations behind the fluxtri executable. Each writes its CSV
 *        (or text report) to the given stream.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fluxtri::cli {

/// Failure to open or write an output file.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  double coupling = 1.4;
  double eps_min = -6.0;
  double eps_max = 6.0;
  int steps = 601;
  std::uint64_t seed = 42;
  int starts = 64;
  std::string out_path;  ///< empty: standard output

  // entangle-sweep
  std::string selector = "E2";
  std::vector<std::string> observables;

  // fidelity-report
  std::optional<double> eps_star;
  int curve_points = 101;

  // bell-optimize
  std::string state_id;

  // prepare
  double omega1 = 1.0;
  double omega2 = 0.0;
  double phi = 0.0;

  /// Throws std::invalid_argument on inconsistent values.
  void validate() const;
};

inline const std::vector<std::string>& known_observables() {
  static const std::vector<std::string> names{"tau",         "witness_ghz1", "witness_ghz2",
                                              "witness_wbar", "bell_ghzbar",  "bell_wbar",
                                              "global_ent"};
  return names;
}

void run_spectrum(const RunConfig& cfg, std::ostream& os);
void run_entangle_sweep(const RunConfig& cfg, std::ostream& os);
void run_fidelity_report(const RunConfig& cfg, std::ostream& os);
void run_bell_optimize(const RunConfig& cfg, std::ostream& os);
void run_prepare(const RunConfig& cfg, std::ostream& os);

}  // namespace fluxtri::cli
