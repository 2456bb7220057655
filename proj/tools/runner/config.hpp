#pragma once

#include "burgers/analysis.hpp"
#include "burgers/convergence.hpp"
#include "burgers/errors.hpp"

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace burgers::cli {

enum class Command { solve, converge, check_stability };

std::string_view to_string(Command c);

/// Grid given directly as cell and step counts.
struct ExplicitGrid {
  int M = 0;
  int N = 0;
  friend bool operator==(const ExplicitGrid&, const ExplicitGrid&) = default;
};

/// Grid given as one or more spacings plus the rule deriving k from h.
struct CoupledGrid {
  std::vector<double> h;
  Coupling coupling = Coupling::k_eq_R_half_h2;
  friend bool operator==(const CoupledGrid&, const CoupledGrid&) = default;
};

struct RunConfig {
  Command command = Command::solve;
  std::string problem = "traveling-wave";
  double R = 0.0;
  double T = 1.0;
  std::variant<ExplicitGrid, CoupledGrid> grid;
  int substeps = 1; // 0 selects min_substeps automatically
  std::string out;
  TableFormat format = TableFormat::csv;
  std::vector<double> snapshot_t;
  TimeSum time_sum = TimeSum::include_initial;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Config problem; `line()` is the 1-based source line, or 0 for values that
/// came from command-line overrides or from missing keys.
class ConfigError : public ValidationError {
public:
  ConfigError(int line, std::string key, const std::string& what);
  int line() const noexcept { return line_; }

private:
  int line_;
};

struct ConfigEntry {
  std::string value;
  int line = 0;
};

/// Raw `key = value` pairs. Keys are normalized so `snapshot-t` and
/// `snapshot_t` are the same key.
using ConfigMap = std::map<std::string, ConfigEntry, std::less<>>;

/// Parses one `key = value` pair per line; `#` starts a comment; blank lines
/// are skipped. Duplicate or unknown keys and lines without `=` throw
/// ConfigError.
ConfigMap parse_key_values(std::string_view text);

/// Applies command-line overrides. Setting M or N drops h and coupling from
/// the file (and the other way round) so an override never conflicts with the
/// file's grid form.
void apply_overrides(ConfigMap& map, const std::map<std::string, std::string>& overrides);

/// Validates and fills defaults (T = 1, format = csv, problem =
/// traveling-wave, command = solve).
RunConfig resolve_config(const ConfigMap& map);

RunConfig parse_config(std::string_view text);

/// Text that parse_config maps back to an equal RunConfig.
std::string serialize(const RunConfig& cfg);

/// Reads a number written as a decimal literal or as `2^-p`.
double parse_number(std::string_view text);

} // namespace burgers::cli
