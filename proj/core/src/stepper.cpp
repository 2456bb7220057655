#include "burgers/stepper.hpp"

#include "burgers/errors.hpp"
#include "burgers/stencil.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace burgers {

using stencil::backward_x;
using stencil::central_x;
using stencil::central_y;
using stencil::forward_x;
using stencil::second_x;
using stencil::second_y;

std::string_view to_string(StabilityVerdict::Term term) {
  return term == StabilityVerdict::Term::diffusive ? "diffusive" : "convective";
}

std::string_view to_string(Stage stage) {
  switch (stage) {
  case Stage::Lx1:
    return "Lx1";
  case Stage::Ly:
    return "Ly";
  case Stage::Lx2:
    return "Lx2";
  }
  return "?";
}

namespace {

void require_reynolds(double R) {
  if (!(R > 0.0) || !std::isfinite(R)) {
    throw ValidationError("R", "Reynolds number must be positive and finite");
  }
}

StabilityVerdict verdict_for(double R, double h, double dt) {
  StabilityVerdict s;
  s.diffusive_ratio = (2.0 / R) * dt / (h * h);
  s.convective_ratio = std::pow(dt, 0.75) / h;
  s.satisfied = std::max(s.diffusive_ratio, s.convective_ratio) <= 1.0;
  s.binding_term = s.convective_ratio > s.diffusive_ratio ? StabilityVerdict::Term::convective
                                                          : StabilityVerdict::Term::diffusive;
  return s;
}

void prepare_output(const State& in, State& out) {
  if (&in == &out) {
    throw ValidationError("out", "stage output must not alias its input");
  }
  if (out.u.cells() != in.cells() || out.v.cells() != in.cells()) {
    out = State(in.cells());
  }
}

} // namespace

StabilityVerdict check_stability(double R, const GridSpec& g) {
  require_reynolds(R);
  return verdict_for(R, g.h, g.k);
}

StabilityVerdict check_stability(double R, const GridSpec& g, int substeps) {
  require_reynolds(R);
  if (substeps < 1) {
    throw ValidationError("m", "substep count must be at least 1");
  }
  return verdict_for(R, g.h, g.k / substeps);
}

int min_substeps(double R, const GridSpec& g) {
  require_reynolds(R);
  // Both ratios fall monotonically in m, so start from a lower bound that
  // ignores rounding and walk up.
  const StabilityVerdict base = verdict_for(R, g.h, g.k);
  const double bound = std::max(base.diffusive_ratio, std::pow(base.convective_ratio, 4.0 / 3.0));
  int m = std::max(1, static_cast<int>(std::floor(bound)) - 1);
  while (!verdict_for(R, g.h, g.k / m).satisfied) {
    ++m;
  }
  return m;
}

StageBuffers::StageBuffers(int M) : state_n(M), state_star(M), state_dstar(M), state_next(M) {}

StageBuffers::StageBuffers(State initial)
    : state_n(std::move(initial)), state_star(state_n.cells()), state_dstar(state_n.cells()),
      state_next(state_n.cells()) {}

void StageBuffers::advance() noexcept { std::swap(state_n, state_next); }

void apply_bc(State& s, double t, const ProblemSpec& p) {
  const int M = s.cells();
  const auto& bu = p.bc_u();
  const auto& bv = p.bc_v();
  auto set = [&](int i, int j) {
    const double x = static_cast<double>(i) / M;
    const double y = static_cast<double>(j) / M;
    const double u = bu(x, y, t);
    const double v = bv(x, y, t);
    if (!std::isfinite(u) || !std::isfinite(v)) {
      throw NonFiniteError("boundary sample at node (" + std::to_string(i) + ", " +
                           std::to_string(j) + "), t=" + std::to_string(t) + " is not finite");
    }
    s.u(i, j) = u;
    s.v(i, j) = v;
  };
  for (int q = 0; q <= M; ++q) {
    set(0, q);
    set(M, q);
  }
  for (int q = 1; q < M; ++q) {
    set(q, 0);
    set(q, M);
  }
}

void stage_x(const State& in, State& out, double dt, double R) {
  prepare_output(in, out);
  const int M = in.cells();
  const double inv_r = 1.0 / R;
  const Field& u = in.u;
  const Field& v = in.v;
  std::ranges::copy(u.line(0), out.u.line(0).begin());
  std::ranges::copy(v.line(0), out.v.line(0).begin());
  std::ranges::copy(u.line(M), out.u.line(M).begin());
  std::ranges::copy(v.line(M), out.v.line(M).begin());
  for (int i = 1; i < M; ++i) {
    for (int j = 0; j <= M; ++j) {
      const double a = u(i, j);
      out.u(i, j) = a + dt * (-a * central_x(u, i, j) + inv_r * second_x(u, i, j));
      out.v(i, j) = v(i, j) + dt * (-a * central_x(v, i, j) + inv_r * second_x(v, i, j));
    }
  }
}

State stage_x(const State& in, double dt, double R) {
  State out(in.cells());
  stage_x(in, out, dt, R);
  return out;
}

void stage_y(const State& in, State& out, double dt, double R) {
  prepare_output(in, out);
  const int M = in.cells();
  const double inv_r = 1.0 / R;
  const Field& u = in.u;
  const Field& v = in.v;
  for (int i = 0; i <= M; ++i) {
    out.u(i, 0) = u(i, 0);
    out.v(i, 0) = v(i, 0);
    for (int j = 1; j < M; ++j) {
      const double a = v(i, j);
      out.u(i, j) = u(i, j) + dt * (-a * central_y(u, i, j) + inv_r * second_y(u, i, j));
      out.v(i, j) = a + dt * (-a * central_y(v, i, j) + inv_r * second_y(v, i, j));
    }
    out.u(i, M) = u(i, M);
    out.v(i, M) = v(i, M);
  }
}

State stage_y(const State& in, double dt, double R) {
  State out(in.cells());
  stage_y(in, out, dt, R);
  return out;
}

void pc_stage_x(const State& in, State& out, double dt, double R) {
  prepare_output(in, out);
  const int M = in.cells();
  const double inv_r = 1.0 / R;
  const Field& u = in.u;
  const Field& v = in.v;

  State pred = in;
  for (int i = 1; i < M; ++i) {
    for (int j = 0; j <= M; ++j) {
      const double a = u(i, j);
      pred.u(i, j) = a + dt * (-a * forward_x(u, i, j) + inv_r * second_x(u, i, j));
      pred.v(i, j) = v(i, j) + dt * (-a * forward_x(v, i, j) + inv_r * second_x(v, i, j));
    }
  }

  out = in;
  for (int i = 1; i < M; ++i) {
    for (int j = 0; j <= M; ++j) {
      const double a = pred.u(i, j);
      const double cu =
          u(i, j) + dt * (-a * backward_x(pred.u, i, j) + inv_r * second_x(pred.u, i, j));
      const double cv =
          v(i, j) + dt * (-a * backward_x(pred.v, i, j) + inv_r * second_x(pred.v, i, j));
      out.u(i, j) = 0.5 * (pred.u(i, j) + cu);
      out.v(i, j) = 0.5 * (pred.v(i, j) + cv);
    }
  }
}

State pc_stage_x(const State& in, double dt, double R) {
  State out(in.cells());
  pc_stage_x(in, out, dt, R);
  return out;
}

StepOutcome full_step(StageBuffers& bufs, const GridSpec& g, int n, const ProblemSpec& p) {
  return composite_step(bufs, g, 1, n, p);
}

StepOutcome composite_step(StageBuffers& bufs, const GridSpec& g, int substeps, int n,
                           const ProblemSpec& p) {
  if (substeps < 1) {
    throw ValidationError("m", "substep count must be at least 1");
  }
  if (bufs.state_n.cells() != g.M) {
    throw ValidationError("StageBuffers", "buffers do not match the grid");
  }
  const double R = p.reynolds();
  const double m = substeps;
  const double dt_x = g.k / (2.0 * m);
  const double dt_y = g.k / m;

  // Substep q reads state_n (q = 1) or the previous substep's state_next; no
  // stage ever writes the state it reads.
  for (int q = 1; q <= substeps; ++q) {
    const double t = (static_cast<double>(n) * m + q) * g.k / m;
    const State& input = q == 1 ? bufs.state_n : bufs.state_next;

    stage_x(input, bufs.state_star, dt_x, R);
    apply_bc(bufs.state_star, t, p);
    if (!bufs.state_star.is_finite()) {
      return StepOutcome::divergence(n, Stage::Lx1);
    }
    stage_y(bufs.state_star, bufs.state_dstar, dt_y, R);
    apply_bc(bufs.state_dstar, t, p);
    if (!bufs.state_dstar.is_finite()) {
      return StepOutcome::divergence(n, Stage::Ly);
    }
    stage_x(bufs.state_dstar, bufs.state_next, dt_x, R);
    apply_bc(bufs.state_next, t, p);
    if (!bufs.state_next.is_finite()) {
      return StepOutcome::divergence(n, Stage::Lx2);
    }
  }
  return StepOutcome::success();
}

} // namespace burgers
