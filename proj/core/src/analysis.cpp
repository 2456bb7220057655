#include "burgers/analysis.hpp"

#include "burgers/errors.hpp"
#include "burgers/stencil.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace burgers {
namespace {

void require_finite(const Field& f, const char* what) {
  if (!f.is_finite()) {
    throw NonFiniteError(std::string(what) + ": field holds NaN or Inf");
  }
}

void require_same_grid(const Field& a, const Field& b) {
  if (!a.same_grid(b)) {
    throw ValidationError("grid", "fields have " + std::to_string(a.cells()) + " and " +
                                      std::to_string(b.cells()) + " cells");
  }
}

} // namespace

double l2_spatial(const Field& f) {
  require_finite(f, "l2_spatial");
  const int M = f.cells();
  double sum = 0.0;
  for (int i = 1; i < M; ++i) {
    for (int j = 1; j < M; ++j) {
      sum += f(i, j) * f(i, j);
    }
  }
  return f.spacing() * std::sqrt(sum);
}

double l2_spatial_difference(const Field& a, const Field& b) {
  require_same_grid(a, b);
  require_finite(a, "l2_spatial_difference");
  require_finite(b, "l2_spatial_difference");
  const int M = a.cells();
  double sum = 0.0;
  for (int i = 1; i < M; ++i) {
    for (int j = 1; j < M; ++j) {
      const double d = a(i, j) - b(i, j);
      sum += d * d;
    }
  }
  return a.spacing() * std::sqrt(sum);
}

double inner_product(const Field& f, const Field& g) {
  require_same_grid(f, g);
  const int M = f.cells();
  double sum = 0.0;
  for (int i = 1; i < M; ++i) {
    for (int j = 1; j < M; ++j) {
      sum += f(i, j) * g(i, j);
    }
  }
  const double h = f.spacing();
  return h * h * sum;
}

double grad_inner_x(const Field& f, const Field& g) {
  require_same_grid(f, g);
  const int M = f.cells();
  double sum = 0.0;
  for (int i = 0; i < M; ++i) {
    for (int j = 1; j < M; ++j) {
      sum += stencil::forward_x(f, i, j) * stencil::forward_x(g, i, j);
    }
  }
  const double h = f.spacing();
  return h * h * sum;
}

double grad_inner_y(const Field& f, const Field& g) {
  require_same_grid(f, g);
  const int M = f.cells();
  double sum = 0.0;
  for (int i = 1; i < M; ++i) {
    for (int j = 0; j < M; ++j) {
      sum += stencil::forward_y(f, i, j) * stencil::forward_y(g, i, j);
    }
  }
  const double h = f.spacing();
  return h * h * sum;
}

double l2_grad_x(const Field& f) { return std::sqrt(grad_inner_x(f, f)); }
double l2_grad_y(const Field& f) { return std::sqrt(grad_inner_y(f, f)); }

double l2_second_x(const Field& f) {
  const int M = f.cells();
  double sum = 0.0;
  for (int i = 1; i < M; ++i) {
    for (int j = 1; j < M; ++j) {
      const double d = stencil::second_x(f, i, j);
      sum += d * d;
    }
  }
  return f.spacing() * std::sqrt(sum);
}

double l2_second_y(const Field& f) {
  const int M = f.cells();
  double sum = 0.0;
  for (int i = 1; i < M; ++i) {
    for (int j = 1; j < M; ++j) {
      const double d = stencil::second_y(f, i, j);
      sum += d * d;
    }
  }
  return f.spacing() * std::sqrt(sum);
}

SpaceTimeNorms spacetime_norms(std::span<const double> history, double k, TimeSum convention) {
  const std::size_t first = convention == TimeSum::include_initial ? 0 : 1;
  if (history.size() <= first) {
    throw ValidationError("history", "no time levels to sum");
  }
  SpaceTimeNorms out;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t n = first; n < history.size(); ++n) {
    const double e = history[n];
    if (!std::isfinite(e)) {
      throw NonFiniteError("history entry " + std::to_string(n) + " is not finite");
    }
    sum += e;
    sum_sq += e * e;
    out.linf = std::max(out.linf, e);
  }
  out.l2 = std::sqrt(k * sum_sq);
  out.l1 = k * sum;
  return out;
}

ErrorReport run_with_errors(const ProblemSpec& p, const GridSpec& g, const RunOptions& opts) {
  if (!p.has_exact()) {
    throw UnsupportedOperation("error report needs an exact solution");
  }
  const int substeps = opts.substeps == 0 ? min_substeps(p.reynolds(), g) : opts.substeps;
  StageBuffers bufs(sample_initial(p, g));
  std::vector<double> eu;
  std::vector<double> ev;
  eu.reserve(static_cast<std::size_t>(g.N) + 1);
  ev.reserve(static_cast<std::size_t>(g.N) + 1);

  auto record = [&](int n) {
    const State exact = exact_state(p, g, g.time(n));
    eu.push_back(l2_spatial_difference(bufs.state_n.u, exact.u));
    ev.push_back(l2_spatial_difference(bufs.state_n.v, exact.v));
  };

  ErrorReport report;
  record(0);
  for (int n = 0; n < g.N; ++n) {
    const StepOutcome outcome = composite_step(bufs, g, substeps, n, p);
    if (!outcome.ok()) {
      constexpr double nan = std::numeric_limits<double>::quiet_NaN();
      constexpr double inf = std::numeric_limits<double>::infinity();
      report.l2_spacetime_u = report.l2_spacetime_v = nan;
      report.l1_l2_u = report.l1_l2_v = nan;
      report.linf_l2_u = report.linf_l2_v = inf;
      report.steps_used = n;
      report.diverged = true;
      report.diverged_at = outcome.diverged_at;
      return report;
    }
    bufs.advance();
    record(n + 1);
  }

  const SpaceTimeNorms nu = spacetime_norms(eu, g.k, opts.convention);
  const SpaceTimeNorms nv = spacetime_norms(ev, g.k, opts.convention);
  report.l2_spacetime_u = nu.l2;
  report.l2_spacetime_v = nv.l2;
  report.linf_l2_u = nu.linf;
  report.linf_l2_v = nv.linf;
  report.l1_l2_u = nu.l1;
  report.l1_l2_v = nv.l1;
  report.steps_used = g.N;
  return report;
}

std::optional<double> observed_order(double e_coarse, double e_fine, double refinement) {
  const bool usable = std::isfinite(e_coarse) && std::isfinite(e_fine) && e_coarse > 0.0 &&
                      e_fine > 0.0 && refinement > 1.0 && std::isfinite(refinement);
  if (!usable) {
    return std::nullopt;
  }
  return std::log(e_coarse / e_fine) / std::log(refinement);
}

} // namespace burgers
