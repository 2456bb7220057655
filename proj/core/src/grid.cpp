#include "burgers/grid.hpp"

#include "burgers/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace burgers {

GridSpec make_grid(int M, int N, double T) {
  if (M < 2) {
    throw ValidationError("M", "need at least 2 cells per axis, got " + std::to_string(M));
  }
  if (N < 1) {
    throw ValidationError("N", "need at least 1 time step, got " + std::to_string(N));
  }
  if (!(T > 0.0) || !std::isfinite(T)) {
    throw ValidationError("T", "final time must be positive and finite");
  }
  GridSpec g;
  g.M = M;
  g.N = N;
  g.T = T;
  g.h = 1.0 / M;
  g.k = T / N;
  return g;
}

Field::Field(int M, double fill)
    : cells_(M), values_(static_cast<std::size_t>(M + 1) * static_cast<std::size_t>(M + 1), fill) {
  if (M < 1) {
    throw ValidationError("M", "field needs at least one cell per axis");
  }
}

bool Field::is_finite() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double x) { return std::isfinite(x); });
}

State::State(Field u_in, Field v_in) : u(std::move(u_in)), v(std::move(v_in)) {
  if (!u.same_grid(v)) {
    throw ValidationError("State", "u and v live on different grids");
  }
}

bool bitwise_equal(const Field& a, const Field& b) noexcept {
  if (!a.same_grid(b)) {
    return false;
  }
  const auto x = a.values();
  const auto y = b.values();
  return std::memcmp(x.data(), y.data(), x.size_bytes()) == 0;
}

bool bitwise_equal(const State& a, const State& b) noexcept {
  return bitwise_equal(a.u, b.u) && bitwise_equal(a.v, b.v);
}

Field sample_field(const GridSpec& g, const SpatialFunction& f) {
  Field out(g.M);
  for (int i = 0; i <= g.M; ++i) {
    const double x = g.coordinate(i);
    for (int j = 0; j <= g.M; ++j) {
      out(i, j) = f(x, g.coordinate(j));
    }
  }
  return out;
}

void write_snapshot(std::ostream& out, const State& s) {
  const int M = s.cells();
  out << "# x y u v\n";
  char buf[128];
  for (int i = 0; i <= M; ++i) {
    const double x = static_cast<double>(i) / M;
    for (int j = 0; j <= M; ++j) {
      const double y = static_cast<double>(j) / M;
      std::snprintf(buf, sizeof buf, "%.12e %.12e %.12e %.12e\n", x, y, s.u(i, j), s.v(i, j));
      out << buf;
    }
  }
}

State read_snapshot(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "# x y u v") {
    throw ValidationError("snapshot", "missing '# x y u v' header");
  }
  std::vector<double> us;
  std::vector<double> vs;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) {
      continue;
    }
    std::istringstream ls(line);
    double x = 0, y = 0, u = 0, v = 0;
    if (!(ls >> x >> y >> u >> v)) {
      throw ValidationError("snapshot", "line " + std::to_string(lineno) + " is not four numbers");
    }
    us.push_back(u);
    vs.push_back(v);
  }
  const auto nodes = static_cast<int>(std::lround(std::sqrt(static_cast<double>(us.size()))));
  if (nodes < 2 || static_cast<std::size_t>(nodes) * static_cast<std::size_t>(nodes) != us.size()) {
    throw ValidationError("snapshot", "node count " + std::to_string(us.size()) +
                                          " is not a square grid");
  }
  State s(nodes - 1);
  std::copy(us.begin(), us.end(), s.u.values().begin());
  std::copy(vs.begin(), vs.end(), s.v.values().begin());
  return s;
}

} // namespace burgers
