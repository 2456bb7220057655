#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

namespace burgers {

/// Discretization of the unit square [0,1]^2 x [0,T].
///
/// Nodes are x_i = i*h, y_j = j*h for 0 <= i,j <= M, time levels t^n = n*k
/// for 0 <= n <= N. Grids are square (one spacing for both axes).
struct GridSpec {
  int M = 0;      // cells per axis
  int N = 0;      // time steps
  double h = 0.0; // 1/M
  double k = 0.0; // T/N
  double T = 0.0;

  int nodes() const noexcept { return M + 1; }

  /// Node coordinate along either axis; exact 0 at i = 0 and exact 1 at i = M.
  double coordinate(int i) const noexcept { return static_cast<double>(i) / M; }

  double time(int n) const noexcept { return static_cast<double>(n) * k; }
};

/// Builds a grid, throwing ValidationError naming M, N or T on bad input.
GridSpec make_grid(int M, int N, double T);

/// Scalar grid function on the (M+1) x (M+1) nodes, stored dense and i-major:
/// node (i, j) lives at offset i*(M+1) + j, so a fixed-i line is contiguous.
class Field {
public:
  Field() = default;
  explicit Field(int M, double fill = 0.0);

  int cells() const noexcept { return cells_; }
  int nodes() const noexcept { return cells_ + 1; }
  double spacing() const noexcept { return 1.0 / cells_; }

  double& operator()(int i, int j) noexcept { return values_[offset(i, j)]; }
  double operator()(int i, int j) const noexcept { return values_[offset(i, j)]; }

  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }

  /// Nodes (i, 0..M).
  std::span<double> line(int i) noexcept {
    return std::span<double>(values_).subspan(offset(i, 0), static_cast<std::size_t>(nodes()));
  }
  std::span<const double> line(int i) const noexcept {
    return std::span<const double>(values_).subspan(offset(i, 0),
                                                    static_cast<std::size_t>(nodes()));
  }

  /// True iff no entry is NaN or infinite.
  bool is_finite() const noexcept;

  bool same_grid(const Field& other) const noexcept { return cells_ == other.cells_; }

  friend bool operator==(const Field&, const Field&) = default;

private:
  std::size_t offset(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cells_ + 1) +
           static_cast<std::size_t>(j);
  }

  int cells_ = 0;
  std::vector<double> values_;
};

/// Velocity pair (u, v) on one grid.
struct State {
  Field u;
  Field v;

  State() = default;
  explicit State(int M, double fill_u = 0.0, double fill_v = 0.0) : u(M, fill_u), v(M, fill_v) {}
  State(Field u_in, Field v_in);

  int cells() const noexcept { return u.cells(); }
  bool is_finite() const noexcept { return u.is_finite() && v.is_finite(); }

  friend bool operator==(const State&, const State&) = default;
};

/// Compares storage bit patterns; NaN payloads and signed zeros are significant.
bool bitwise_equal(const Field& a, const Field& b) noexcept;
bool bitwise_equal(const State& a, const State& b) noexcept;

using SpatialFunction = std::function<double(double, double)>;

/// values(i, j) = f(x_i, y_j). Non-finite samples are kept as-is; callers
/// check `is_finite()` on the result.
Field sample_field(const GridSpec& g, const SpatialFunction& f);

/// Writes `# x y u v` followed by one `%.12e` line per node, i-major.
void write_snapshot(std::ostream& out, const State& s);

/// Parses the format produced by write_snapshot. Throws ValidationError on a
/// malformed header, a non-square node count, or a bad line.
State read_snapshot(std::istream& in);

} // namespace burgers
