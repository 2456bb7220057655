#include "runner/commands.hpp"

#include "burgers/analysis.hpp"
#include "burgers/convergence.hpp"
#include "burgers/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace burgers::cli {
namespace {

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Writes to a sibling temporary and renames it into place, so readers never
// see a partial file.
void write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) {
      throw IoError("cannot open '" + tmp + "' for writing");
    }
    f << content;
    f.flush();
    if (!f) {
      throw IoError("write to '" + tmp + "' failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move '" + tmp + "' to '" + path + "'");
  }
}

double max_abs_difference(const Field& a, const Field& b) {
  double worst = 0.0;
  const auto x = a.values();
  const auto y = b.values();
  for (std::size_t q = 0; q < x.size(); ++q) {
    worst = std::max(worst, std::abs(x[q] - y[q]));
  }
  return worst;
}

std::string ratio_line(const StabilityVerdict& v, int m) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "diffusive=%.6f convective=%.6f %s m=%d binding=%s",
                v.diffusive_ratio, v.convective_ratio, v.satisfied ? "satisfied" : "unsatisfied",
                m, std::string(to_string(v.binding_term)).c_str());
  return buf;
}

std::vector<GridSpec> grids_of(const RunConfig& cfg) {
  if (const auto* g = std::get_if<ExplicitGrid>(&cfg.grid)) {
    return {make_grid(g->M, g->N, cfg.T)};
  }
  const auto& c = std::get<CoupledGrid>(cfg.grid);
  std::vector<GridSpec> grids;
  for (const double h : c.h) {
    grids.push_back(grid_for_pair(h, coupled_time_step(c.coupling, h, cfg.R), cfg.T));
  }
  return grids;
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

} // namespace

GridSpec resolve_grid(const RunConfig& cfg) {
  const auto grids = grids_of(cfg);
  if (grids.size() != 1) {
    throw ConfigError(0, "h", "solve needs exactly one spacing, got " + std::to_string(grids.size()));
  }
  return grids.front();
}

std::vector<int> snapshot_steps(const RunConfig& cfg, const GridSpec& g) {
  std::vector<int> steps;
  if (cfg.snapshot_t.empty()) {
    steps.push_back(g.N);
    return steps;
  }
  for (const double t : cfg.snapshot_t) {
    if (t < 0.0 || t > g.T * (1.0 + 1e-12)) {
      throw ConfigError(0, "snapshot_t", "time " + std::to_string(t) + " outside [0, T]");
    }
    steps.push_back(std::clamp(static_cast<int>(std::lround(t / g.k)), 0, g.N));
  }
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  return steps;
}

SolveResult run_solve(const RunConfig& cfg, const ProblemSpec& problem) {
  SolveResult result;
  result.grid = resolve_grid(cfg);
  const GridSpec& g = result.grid;
  result.substeps = cfg.substeps == 0 ? min_substeps(cfg.R, g) : cfg.substeps;
  const auto wanted = snapshot_steps(cfg, g);
  auto next_snapshot = wanted.begin();

  StageBuffers bufs(sample_initial(problem, g));
  auto capture = [&](int n) {
    while (next_snapshot != wanted.end() && *next_snapshot == n) {
      result.snapshots.push_back(Snapshot{n, bufs.state_n});
      ++next_snapshot;
    }
  };

  capture(0);
  for (int n = 0; n < g.N; ++n) {
    result.outcome = composite_step(bufs, g, result.substeps, n, problem);
    if (!result.outcome.ok()) {
      break;
    }
    bufs.advance();
    result.steps_completed = n + 1;
    capture(n + 1);
  }

  if (problem.has_exact()) {
    const State exact = exact_state(problem, g, g.time(result.steps_completed));
    result.max_error_u = max_abs_difference(bufs.state_n.u, exact.u);
    result.max_error_v = max_abs_difference(bufs.state_n.v, exact.v);
  }
  result.final_state = std::move(bufs.state_n);
  return result;
}

std::string snapshot_path(const std::string& out, int step, bool single) {
  if (single) {
    return out;
  }
  const std::filesystem::path p(out);
  auto name = p.stem().string() + "_n" + std::to_string(step) + p.extension().string();
  return (p.parent_path() / name).string();
}

int cmd_solve(const RunConfig& cfg, const ProblemSpec& problem, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const SolveResult r = run_solve(cfg, problem);
    const std::string base = cfg.out.empty() ? "snapshot.dat" : cfg.out;
    const bool single = r.snapshots.size() == 1;
    for (const auto& snap : r.snapshots) {
      std::ostringstream text;
      write_snapshot(text, snap.state);
      const std::string path = snapshot_path(base, snap.step, single);
      write_file(path, text.str());
      out << "snapshot n=" << snap.step << " t=" << format_cell(r.grid.time(snap.step)) << " -> "
          << path << '\n';
    }
    if (!r.outcome.ok()) {
      const auto& site = *r.outcome.diverged_at;
      err << "diverged at step " << site.step << ", stage " << to_string(site.stage) << '\n';
      return static_cast<int>(kExitFailed);
    }
    out << "completed " << r.steps_completed << " steps (M=" << r.grid.M << ", k="
        << format_cell(r.grid.k) << ", m=" << r.substeps << ")\n";
    if (r.max_error_u) {
      out << "max_error_u=" << format_cell(*r.max_error_u)
          << " max_error_v=" << format_cell(*r.max_error_v) << '\n';
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    return cmd_solve(cfg, make_problem(cfg.problem, cfg.R, cfg.T), out, err);
  });
}

int cmd_check_stability(const RunConfig& cfg, std::ostream& out) {
  return guarded(out, [&] {
    const auto grids = grids_of(cfg);
    bool all = true;
    for (const auto& g : grids) {
      const StabilityVerdict v = check_stability(cfg.R, g);
      all = all && v.satisfied;
      if (grids.size() > 1) {
        out << "h=" << format_cell(g.h) << " k=" << format_cell(g.k) << ' ';
      }
      out << ratio_line(v, min_substeps(cfg.R, g)) << '\n';
    }
    return static_cast<int>(all ? kExitOk : kExitFailed);
  });
}

int cmd_converge(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto* c = std::get_if<CoupledGrid>(&cfg.grid);
    if (c == nullptr) {
      throw ConfigError(0, "grid", "converge needs h (a list) and coupling, not M and N");
    }
    LadderSpec spec;
    spec.coupling = c->coupling;
    spec.h_list = c->h;
    spec.R = cfg.R;
    spec.T = cfg.T;
    spec.problem = cfg.problem;
    spec.options.substeps = cfg.substeps;
    spec.options.convention = cfg.time_sum;
    const std::string table = emit_table(run_ladder(spec), cfg.format);
    if (cfg.out.empty()) {
      out << table;
    } else {
      write_file(cfg.out, table);
      out << "wrote " << cfg.out << '\n';
    }
    return static_cast<int>(kExitOk);
  });
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
  case Command::solve:
    return cmd_solve(cfg, out, err);
  case Command::converge:
    return cmd_converge(cfg, out, err);
  case Command::check_stability:
    return cmd_check_stability(cfg, out);
  }
  return kExitConfig;
}

} // namespace burgers::cli
