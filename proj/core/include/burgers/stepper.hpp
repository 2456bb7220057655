#pragma once

#include "burgers/grid.hpp"
#include "burgers/problems.hpp"

#include <optional>
#include <string_view>

namespace burgers {

// Three-level explicit time-split MacCormack stepping.
//
// One step advances (u, v) from t^n to t^{n+1} through the symmetric product
//
//   state*   = Lx(k/2) state^n
//   state**  = Ly(k)   state*
//   state^n+1 = Lx(k/2) state**
//
// where each one-dimensional operator is the collapsed MacCormack update
//
//   Lx(dt):  u <- u + dt [ -u du/dx + (1/R) d2u/dx2 ],  v <- v + dt [ -u dv/dx + (1/R) d2v/dx2 ]
//   Ly(dt):  u <- u + dt [ -v du/dy + (1/R) d2u/dy2 ],  v <- v + dt [ -v dv/dy + (1/R) d2v/dy2 ]
//
// with central first differences and the three-point second difference. Every
// stage output gets all four Dirichlet sides from the problem at t^{n+1}.

/// Stability restriction max{2k/(R h^2), k^{3/4}/h} <= 1.
struct StabilityVerdict {
  enum class Term { diffusive, convective };

  double diffusive_ratio = 0.0;  // 2k / (R h^2)
  double convective_ratio = 0.0; // k^{3/4} / h
  bool satisfied = false;
  Term binding_term = Term::diffusive;
};

std::string_view to_string(StabilityVerdict::Term term);

/// Throws ValidationError for R <= 0.
StabilityVerdict check_stability(double R, const GridSpec& g);

/// Verdict for the substep k/m of the composite operator.
StabilityVerdict check_stability(double R, const GridSpec& g, int substeps);

/// Smallest m >= 1 with max{2k/(m R h^2), k^{3/4}/(m^{3/4} h)} <= 1.
int min_substeps(double R, const GridSpec& g);

enum class Stage { Lx1, Ly, Lx2 };

std::string_view to_string(Stage stage);

struct DivergenceSite {
  int step = 0;
  Stage stage = Stage::Lx1;

  friend bool operator==(const DivergenceSite&, const DivergenceSite&) = default;
};

struct StepOutcome {
  enum class Status { ok, diverged };

  Status status = Status::ok;
  std::optional<DivergenceSite> diverged_at;

  bool ok() const noexcept { return status == Status::ok; }

  static StepOutcome success() { return {}; }
  static StepOutcome divergence(int step, Stage stage) {
    return {Status::diverged, DivergenceSite{step, stage}};
  }
};

/// Work states for the three dummy levels of one step. The four states never
/// share storage; stages read one level and write the next.
struct StageBuffers {
  State state_n;
  State state_star;
  State state_dstar;
  State state_next;

  explicit StageBuffers(int M);
  explicit StageBuffers(State initial);

  /// Moves state_next into state_n after a successful step.
  void advance() noexcept;
};

/// Overwrites all four boundary sides of u with bc_u(., ., t) and of v with
/// bc_v(., ., t); corners are written once, interior untouched. Throws
/// NonFiniteError naming the node if a sample is not finite.
void apply_bc(State& s, double t, const ProblemSpec& p);

/// Lx(dt): for i = 1..M-1 and j = 0..M. Columns i = 0 and i = M are copied
/// from `in`. Non-finite results are left in `out` for the caller to detect.
void stage_x(const State& in, State& out, double dt, double R);
State stage_x(const State& in, double dt, double R);

/// Ly(dt): for j = 1..M-1 and i = 0..M. Rows j = 0 and j = M are copied.
void stage_y(const State& in, State& out, double dt, double R);
State stage_y(const State& in, double dt, double R);

/// Two-step MacCormack in x (forward-difference predictor from `in`,
/// backward-difference corrector from the predictor, output their mean).
/// Used to check the collapsed stage_x, not for time stepping.
void pc_stage_x(const State& in, State& out, double dt, double R);
State pc_stage_x(const State& in, double dt, double R);

/// One step n -> n+1 of Lx(k/2) Ly(k) Lx(k/2). Fills state_star,
/// state_dstar and state_next; state_n is left unchanged.
StepOutcome full_step(StageBuffers& bufs, const GridSpec& g, int n, const ProblemSpec& p);

/// [Lx(k/2m) Ly(k/m) Lx(k/2m)]^m. Substep q = 1..m takes boundary data at
/// t^n + (q/m) k. state_n is left unchanged; the result is in state_next.
/// m = 1 reproduces full_step bit for bit. Throws ValidationError for m < 1.
StepOutcome composite_step(StageBuffers& bufs, const GridSpec& g, int substeps, int n,
                           const ProblemSpec& p);

} // namespace burgers
