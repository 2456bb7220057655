#include "burgers/convergence.hpp"

#include "burgers/errors.hpp"
#include "burgers/problems.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace burgers {

std::string_view to_string(Coupling c) {
  switch (c) {
  case Coupling::k_eq_R_half_h2:
    return "k_eq_R_half_h2";
  case Coupling::k_eq_quarter_h:
    return "k_eq_quarter_h";
  case Coupling::k_eq_h:
    return "k_eq_h";
  }
  return "?";
}

std::optional<Coupling> parse_coupling(std::string_view name) {
  for (Coupling c : {Coupling::k_eq_R_half_h2, Coupling::k_eq_quarter_h, Coupling::k_eq_h}) {
    if (to_string(c) == name) {
      return c;
    }
  }
  return std::nullopt;
}

double coupled_time_step(Coupling c, double h, double R) {
  switch (c) {
  case Coupling::k_eq_R_half_h2:
    return 0.5 * R * h * h;
  case Coupling::k_eq_quarter_h:
    return 0.25 * h;
  case Coupling::k_eq_h:
    return h;
  }
  return h;
}

namespace {

std::optional<int> as_integer(double x) {
  if (!std::isfinite(x) || x < 0.5 || x > 1e9) {
    return std::nullopt;
  }
  const double r = std::round(x);
  if (std::abs(r - x) > 1e-9 * r) {
    return std::nullopt;
  }
  return static_cast<int>(r);
}

std::string pair_name(double h, double k) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(h=%g, k=%g)", h, k);
  return buf;
}

} // namespace

GridSpec grid_for_pair(double h, double k, double T) {
  if (!(h > 0.0) || !(k > 0.0)) {
    throw ValidationError("h,k", pair_name(h, k) + " needs positive spacing and step");
  }
  const auto M = as_integer(1.0 / h);
  const auto N = as_integer(T / k);
  if (!M) {
    throw ValidationError("h", pair_name(h, k) + ": 1/h is not an integer");
  }
  if (!N) {
    throw ValidationError("k", pair_name(h, k) + ": T/k is not an integer");
  }
  return make_grid(*M, *N, T);
}

std::vector<ConvergenceRow> run_ladder(const LadderSpec& spec) {
  if (spec.h_list.empty()) {
    throw ValidationError("h", "ladder needs at least one spacing");
  }
  for (std::size_t q = 0; q < spec.h_list.size(); ++q) {
    const double h = spec.h_list[q];
    const auto M = h > 0.0 ? as_integer(1.0 / h) : std::nullopt;
    if (!M || (*M & (*M - 1)) != 0) {
      throw ValidationError("h", "spacing " + format_cell(h) + " is not 2^-p");
    }
    if (q > 0 && !(h < spec.h_list[q - 1])) {
      throw ValidationError("h", "spacings must be strictly decreasing");
    }
  }
  const ProblemSpec problem = make_problem(spec.problem, spec.R, spec.T);

  std::vector<ConvergenceRow> rows;
  rows.reserve(spec.h_list.size());
  for (const double h : spec.h_list) {
    const double k = coupled_time_step(spec.coupling, h, spec.R);
    const GridSpec g = grid_for_pair(h, k, spec.T);
    ConvergenceRow row;
    row.h = g.h;
    row.k = g.k;
    RunOptions options = spec.options;
    if (options.substeps == 0) {
      options.substeps = min_substeps(spec.R, g);
    }
    row.stability = check_stability(spec.R, g, options.substeps);
    row.errors = run_with_errors(problem, g, options);
    if (!rows.empty()) {
      const ConvergenceRow& prev = rows.back();
      row.observed_order_vs_prev = observed_order(prev.errors.l2_spacetime_u,
                                                  row.errors.l2_spacetime_u, prev.h / row.h);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<TableFormat> parse_table_format(std::string_view name) {
  if (name == "csv") {
    return TableFormat::csv;
  }
  if (name == "json") {
    return TableFormat::json;
  }
  return std::nullopt;
}

std::string_view to_string(TableFormat f) { return f == TableFormat::csv ? "csv" : "json"; }

std::string format_cell(double value) {
  if (std::isnan(value)) {
    return "NaN";
  }
  if (std::isinf(value)) {
    return value > 0 ? "Inf" : "-Inf";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", value);
  return buf;
}

namespace {

std::string divergence_cell(const ErrorReport& e) {
  if (!e.diverged_at) {
    return {};
  }
  return std::to_string(e.diverged_at->step) + ":" + std::string(to_string(e.diverged_at->stage));
}

std::string emit_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream out;
  out << "h,k,L2_u,L2_v,Linf_u,Linf_v,L1_u,L1_v,order_L2_u,stable,diverged_at\n";
  for (const auto& r : rows) {
    const auto& e = r.errors;
    out << format_cell(r.h) << ',' << format_cell(r.k) << ',' << format_cell(e.l2_spacetime_u)
        << ',' << format_cell(e.l2_spacetime_v) << ',' << format_cell(e.linf_l2_u) << ','
        << format_cell(e.linf_l2_v) << ',' << format_cell(e.l1_l2_u) << ','
        << format_cell(e.l1_l2_v) << ','
        << (r.observed_order_vs_prev ? format_cell(*r.observed_order_vs_prev) : std::string())
        << ',' << (r.stability.satisfied ? "true" : "false") << ',' << divergence_cell(e) << '\n';
  }
  return out.str();
}

nlohmann::ordered_json number_or_token(double value) {
  if (std::isfinite(value)) {
    return value;
  }
  return format_cell(value);
}

std::string emit_json(const std::vector<ConvergenceRow>& rows) {
  auto doc = nlohmann::ordered_json::object();
  auto& list = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    const auto& e = r.errors;
    nlohmann::ordered_json row;
    row["h"] = r.h;
    row["k"] = r.k;
    row["L2_u"] = number_or_token(e.l2_spacetime_u);
    row["L2_v"] = number_or_token(e.l2_spacetime_v);
    row["Linf_u"] = number_or_token(e.linf_l2_u);
    row["Linf_v"] = number_or_token(e.linf_l2_v);
    row["L1_u"] = number_or_token(e.l1_l2_u);
    row["L1_v"] = number_or_token(e.l1_l2_v);
    row["order_L2_u"] =
        r.observed_order_vs_prev ? nlohmann::ordered_json(*r.observed_order_vs_prev)
                                 : nlohmann::ordered_json(nullptr);
    row["stable"] = r.stability.satisfied;
    row["diffusive_ratio"] = r.stability.diffusive_ratio;
    row["convective_ratio"] = r.stability.convective_ratio;
    row["steps_used"] = e.steps_used;
    const std::string site = divergence_cell(e);
    row["diverged_at"] = site.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(site);
    list.push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

} // namespace

std::string emit_table(const std::vector<ConvergenceRow>& rows, TableFormat format) {
  if (rows.empty()) {
    throw ValidationError("rows", "nothing to tabulate");
  }
  return format == TableFormat::csv ? emit_csv(rows) : emit_json(rows);
}

std::string emit_table(const std::vector<ConvergenceRow>& rows, std::string_view format) {
  const auto parsed = parse_table_format(format);
  if (!parsed) {
    throw ValidationError("format", "unknown table format '" + std::string(format) + "'");
  }
  return emit_table(rows, *parsed);
}

} // namespace burgers
