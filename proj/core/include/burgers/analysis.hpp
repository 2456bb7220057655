#pragma once

#include "burgers/grid.hpp"
#include "burgers/problems.hpp"
#include "burgers/stepper.hpp"

#include <optional>
#include <span>

namespace burgers {

// Discrete norms. All sums run sequentially in i-major order (and increasing
// time level) so results are bit-reproducible.

/// h * sqrt(sum over interior nodes i,j = 1..M-1 of f_ij^2). Throws
/// NonFiniteError if any interior entry is NaN/Inf.
double l2_spatial(const Field& f);

/// l2_spatial(a - b) without materializing the difference.
double l2_spatial_difference(const Field& a, const Field& b);

/// h^2 * sum over interior nodes of f_ij g_ij.
double inner_product(const Field& f, const Field& g);

/// h^2 * sum_{j=1}^{M-1} sum_{i=0}^{M-1} dx f_{i+1/2,j} dx g_{i+1/2,j}.
double grad_inner_x(const Field& f, const Field& g);

/// h^2 * sum_{j=0}^{M-1} sum_{i=1}^{M-1} dy f_{i,j+1/2} dy g_{i,j+1/2}.
double grad_inner_y(const Field& f, const Field& g);

/// sqrt(grad_inner_x(f, f)) and sqrt(grad_inner_y(f, f)).
double l2_grad_x(const Field& f);
double l2_grad_y(const Field& f);

/// h * sqrt(sum over interior nodes of (second difference along axis)^2).
double l2_second_x(const Field& f);
double l2_second_y(const Field& f);

/// Which time levels enter the space-time sums.
enum class TimeSum {
  include_initial, // n = 0..N, weighted by k (default)
  exclude_initial, // n = 1..N
};

struct SpaceTimeNorms {
  double l2 = 0.0;   // sqrt(k * sum e_n^2)
  double linf = 0.0; // max e_n
  double l1 = 0.0;   // k * sum e_n
};

/// Space-time norms of a per-level history e_0..e_N of spatial L2 values.
/// Throws ValidationError on an empty history (or one with only e_0 when
/// excluding it) and NonFiniteError on a non-finite entry.
SpaceTimeNorms spacetime_norms(std::span<const double> history, double k,
                               TimeSum convention = TimeSum::include_initial);

/// Space-time error norms of one run against the exact solution.
///
/// When the run diverges the norm fields hold NaN (L2, L1) and +Inf (Linf),
/// matching how blown-up runs are tabulated, and `steps_used` is the last
/// time level whose state was finite.
struct ErrorReport {
  double l2_spacetime_u = 0.0;
  double l2_spacetime_v = 0.0;
  double linf_l2_u = 0.0;
  double linf_l2_v = 0.0;
  double l1_l2_u = 0.0;
  double l1_l2_v = 0.0;
  int steps_used = 0;
  bool diverged = false;
  std::optional<DivergenceSite> diverged_at;
};

struct RunOptions {
  int substeps = 1; // m of the composite operator; 1 is the plain step, 0 picks min_substeps
  TimeSum convention = TimeSum::include_initial;
};

/// Advances `p` on `g` for N steps, measuring e_n = ||numerical - exact||
/// at every level n = 0..N. Throws UnsupportedOperation without an exact
/// solution.
ErrorReport run_with_errors(const ProblemSpec& p, const GridSpec& g, const RunOptions& opts = {});

/// log(e_coarse / e_fine) / log(refinement); nullopt unless both errors are
/// finite and positive and refinement > 1.
std::optional<double> observed_order(double e_coarse, double e_fine, double refinement);

} // namespace burgers
