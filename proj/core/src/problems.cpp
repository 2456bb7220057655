#include "burgers/problems.hpp"

#include "burgers/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace burgers {
namespace {

constexpr double kCompatibilityTolerance = 1e-12;
constexpr int kProbeCells = 16;

void require_positive(const char* field, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ValidationError(field, "must be positive and finite");
  }
}

template <class Visit>
void for_each_boundary_node(int M, Visit&& visit) {
  for (int q = 0; q <= M; ++q) {
    visit(0, q);
    visit(M, q);
  }
  for (int q = 1; q < M; ++q) {
    visit(q, 0);
    visit(q, M);
  }
}

double defect_on(const ProblemSpec& p, int M) {
  double worst = 0.0;
  for_each_boundary_node(M, [&](int i, int j) {
    const double x = static_cast<double>(i) / M;
    const double y = static_cast<double>(j) / M;
    const double du = std::abs(p.bc_u()(x, y, 0.0) - p.ic_u()(x, y));
    const double dv = std::abs(p.bc_v()(x, y, 0.0) - p.ic_v()(x, y));
    // NaN must not compare as compatible.
    worst = std::isnan(du) || std::isnan(dv) ? INFINITY : std::max({worst, du, dv});
  });
  return worst;
}

} // namespace

ProblemSpec::ProblemSpec(double reynolds, double final_time, SpatialFunction ic_u,
                         SpatialFunction ic_v, SpaceTimeFunction bc_u, SpaceTimeFunction bc_v,
                         std::optional<ExactSolution> exact)
    : reynolds_(reynolds), final_time_(final_time), ic_u_(std::move(ic_u)),
      ic_v_(std::move(ic_v)), bc_u_(std::move(bc_u)), bc_v_(std::move(bc_v)),
      exact_(std::move(exact)) {
  require_positive("R", reynolds_);
  require_positive("T", final_time_);
  if (!ic_u_ || !ic_v_ || !bc_u_ || !bc_v_) {
    throw ValidationError("ProblemSpec", "initial and boundary samplers are required");
  }
  if (exact_ && (!exact_->u || !exact_->v)) {
    throw ValidationError("exact", "both components of the exact solution are required");
  }
  if (defect_on(*this, kProbeCells) > kCompatibilityTolerance) {
    throw ValidationError("ProblemSpec", "boundary data at t=0 disagrees with initial data");
  }
}

ProblemSpec ProblemSpec::with_final_time(double T) const {
  return ProblemSpec(reynolds_, T, ic_u_, ic_v_, bc_u_, bc_v_, exact_);
}

double compatibility_defect(const ProblemSpec& p, const GridSpec& g) { return defect_on(p, g.M); }

void check_compatibility(const ProblemSpec& p, const GridSpec& g) {
  const double d = compatibility_defect(p, g);
  if (d > kCompatibilityTolerance) {
    throw ValidationError("ProblemSpec", "boundary data at t=0 differs from initial data by " +
                                             std::to_string(d) + " on M=" +
                                             std::to_string(g.M));
  }
}

namespace traveling_wave_solution {

namespace {
double front(double R, double x, double y, double t) {
  return 1.0 / (1.0 + std::exp(R * (-t - 4.0 * x + 4.0 * y) / 32.0));
}
} // namespace

double u(double R, double x, double y, double t) { return 0.25 * (3.0 - front(R, x, y, t)); }
double v(double R, double x, double y, double t) { return 0.25 * (3.0 + front(R, x, y, t)); }

} // namespace traveling_wave_solution

ProblemSpec traveling_wave(double R, double T) {
  require_positive("R", R);
  namespace tw = traveling_wave_solution;
  auto u = [R](double x, double y, double t) { return tw::u(R, x, y, t); };
  auto v = [R](double x, double y, double t) { return tw::v(R, x, y, t); };
  return ProblemSpec(
      R, T, [R](double x, double y) { return tw::u(R, x, y, 0.0); },
      [R](double x, double y) { return tw::v(R, x, y, 0.0); }, u, v, ExactSolution{u, v});
}

ProblemSpec constant_problem(double R, double u_value, double v_value, double T) {
  auto cu = [u_value](double, double, double) { return u_value; };
  auto cv = [v_value](double, double, double) { return v_value; };
  return ProblemSpec(
      R, T, [u_value](double, double) { return u_value; },
      [v_value](double, double) { return v_value; }, cu, cv, ExactSolution{cu, cv});
}

std::vector<std::string> problem_names() { return {"traveling-wave"}; }

ProblemSpec make_problem(const std::string& name, double R, double T) {
  if (name == "traveling-wave") {
    return traveling_wave(R, T);
  }
  throw ValidationError("problem", "unknown problem '" + name + "'");
}

State sample_initial(const ProblemSpec& p, const GridSpec& g) {
  check_compatibility(p, g);
  State s(sample_field(g, p.ic_u()), sample_field(g, p.ic_v()));
  if (!s.is_finite()) {
    throw NonFiniteError("initial data has a non-finite sample");
  }
  return s;
}

State exact_state(const ProblemSpec& p, const GridSpec& g, double t) {
  if (!p.has_exact()) {
    throw UnsupportedOperation("problem has no exact solution");
  }
  const double T = p.final_time();
  if (!(t >= 0.0) || t > T * (1.0 + 1e-12)) {
    throw ValidationError("t", "time " + std::to_string(t) + " outside [0, T]");
  }
  const auto& ex = *p.exact();
  return State(sample_field(g, [&](double x, double y) { return ex.u(x, y, t); }),
               sample_field(g, [&](double x, double y) { return ex.v(x, y, t); }));
}

} // namespace burgers
