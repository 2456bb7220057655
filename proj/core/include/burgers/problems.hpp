#pragma once

#include "burgers/grid.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace burgers {

using SpaceTimeFunction = std::function<double(double, double, double)>;

/// Closed-form (u, v) used for error measurement.
struct ExactSolution {
  SpaceTimeFunction u;
  SpaceTimeFunction v;
};

/// Initial-boundary value problem for the coupled viscous Burgers system on
/// the unit square with Dirichlet data.
///
/// Immutable after construction. The constructor checks that boundary data at
/// t = 0 agrees with the initial data (to 1e-12) on a probe grid;
/// sample_initial repeats the check on the grid actually used.
class ProblemSpec {
public:
  ProblemSpec(double reynolds, double final_time, SpatialFunction ic_u, SpatialFunction ic_v,
              SpaceTimeFunction bc_u, SpaceTimeFunction bc_v,
              std::optional<ExactSolution> exact = std::nullopt);

  double reynolds() const noexcept { return reynolds_; }
  double final_time() const noexcept { return final_time_; }

  const SpatialFunction& ic_u() const noexcept { return ic_u_; }
  const SpatialFunction& ic_v() const noexcept { return ic_v_; }
  const SpaceTimeFunction& bc_u() const noexcept { return bc_u_; }
  const SpaceTimeFunction& bc_v() const noexcept { return bc_v_; }

  bool has_exact() const noexcept { return exact_.has_value(); }
  const std::optional<ExactSolution>& exact() const noexcept { return exact_; }

  /// Same data with a different final time.
  ProblemSpec with_final_time(double T) const;

private:
  double reynolds_;
  double final_time_;
  SpatialFunction ic_u_;
  SpatialFunction ic_v_;
  SpaceTimeFunction bc_u_;
  SpaceTimeFunction bc_v_;
  std::optional<ExactSolution> exact_;
};

/// Max over boundary nodes of |bc(x,y,0) - ic(x,y)| for both components.
double compatibility_defect(const ProblemSpec& p, const GridSpec& g);

/// Throws ValidationError if compatibility_defect exceeds 1e-12.
void check_compatibility(const ProblemSpec& p, const GridSpec& g);

namespace traveling_wave_solution {

// Exact traveling-wave pair: with e = 1 / (1 + exp(R (-t - 4x + 4y) / 32)),
//   u = (3 - e) / 4,   v = (3 + e) / 4,   so u + v = 3/2 everywhere.

double u(double R, double x, double y, double t);
double v(double R, double x, double y, double t);

} // namespace traveling_wave_solution

/// Front moving along the diagonal; IC and BC are sampled from the exact
/// pair. Throws ValidationError for R <= 0 or T <= 0.
ProblemSpec traveling_wave(double R, double T = 1.0);

/// Problem with u and v held at constants everywhere, for all time.
ProblemSpec constant_problem(double R, double u_value, double v_value, double T = 1.0);

/// Built-in problem names accepted by make_problem.
std::vector<std::string> problem_names();

/// Looks up a built-in problem. Throws ValidationError for unknown names.
ProblemSpec make_problem(const std::string& name, double R, double T);

/// u = ic_u, v = ic_v sampled on g. Throws NonFiniteError on NaN/Inf samples
/// and ValidationError on incompatible boundary data.
State sample_initial(const ProblemSpec& p, const GridSpec& g);

/// Nodal exact solution at time t. Throws UnsupportedOperation if the problem
/// has no exact solution and ValidationError if t is outside [0, T].
State exact_state(const ProblemSpec& p, const GridSpec& g, double t);

} // namespace burgers
