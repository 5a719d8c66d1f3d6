#pragma once

// The hlog command-line front end as a library, so tests can drive it
// without spawning a process.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hlog::cli {

enum class OutputFormat { Csv, Json };

struct RunConfig {
  double tolerance = 1e-8;
  std::size_t truncation = 2048;
  std::vector<double> alpha_grid{1.5};
  OutputFormat output_format = OutputFormat::Csv;
  std::uint64_t seed = 20240601;
  /// Rows per curve.
  std::size_t points = 512;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNonConvergence = 3;

struct RegistryEntry {
  std::string name;
  std::string description;
};

const std::vector<RegistryEntry>& curve_registry();
const std::vector<RegistryEntry>& table_registry();

/// Throws std::invalid_argument on an out-of-range field.
void validate(const RunConfig& config);

/// Applies a JSON config file on top of `config`. Keys: tolerance,
/// truncation, alpha_grid, output_format ("csv" | "json"), seed, points.
/// Throws std::invalid_argument on unreadable files and unknown keys.
void apply_config_file(const std::string& path, RunConfig& config);

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_curve(const std::string& name, const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_table(const std::string& name, const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_list(std::ostream& out);

/// Parses argv and dispatches; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hlog::cli
