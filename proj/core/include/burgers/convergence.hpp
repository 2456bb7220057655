#pragma once

#include "burgers/analysis.hpp"
#include "burgers/stepper.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace burgers {

/// Rule tying the time step to the spacing along a refinement ladder.
enum class Coupling {
  k_eq_R_half_h2, // k = (R/2) h^2
  k_eq_quarter_h, // k = h/4
  k_eq_h,         // k = h
};

std::string_view to_string(Coupling c);

/// Parses the names printed by to_string; nullopt for anything else.
std::optional<Coupling> parse_coupling(std::string_view name);

double coupled_time_step(Coupling c, double h, double R);

struct LadderSpec {
  Coupling coupling = Coupling::k_eq_R_half_h2;
  std::vector<double> h_list; // strictly decreasing powers of two
  double R = 1.0;
  double T = 1.0;
  std::string problem = "traveling-wave";
  RunOptions options;
};

/// Resolves one (h, k) pair to a grid. Throws ValidationError naming the pair
/// when 1/h or T/k is not an integer.
GridSpec grid_for_pair(double h, double k, double T);

struct ConvergenceRow {
  double h = 0.0;
  double k = 0.0;
  ErrorReport errors;
  StabilityVerdict stability;
  std::optional<double> observed_order_vs_prev; // from L2_u against the previous row
};

/// One row per spacing, in order. Every pair runs regardless of its stability
/// verdict; diverged runs produce rows with non-finite norms.
std::vector<ConvergenceRow> run_ladder(const LadderSpec& spec);

enum class TableFormat { csv, json };

std::optional<TableFormat> parse_table_format(std::string_view name);
std::string_view to_string(TableFormat f);

/// Deterministic serialization of a ladder.
///
/// CSV header: h,k,L2_u,L2_v,Linf_u,Linf_v,L1_u,L1_v,order_L2_u,stable,diverged_at
/// Numbers use %.6e; non-finite values print as NaN / Inf; an absent order is
/// an empty cell; diverged_at is `n:stage` or empty. Throws ValidationError on
/// empty input.
std::string emit_table(const std::vector<ConvergenceRow>& rows, TableFormat format);

/// As above with the format given by name; unknown names throw ValidationError.
std::string emit_table(const std::vector<ConvergenceRow>& rows, std::string_view format);

/// Convenience: formats a value the way table cells do (%.6e, NaN, Inf, -Inf).
std::string format_cell(double value);

} // namespace burgers
