#pragma once

#include "burgers/grid.hpp"

#include <cassert>
#include <span>

namespace burgers {

enum class Axis { x, y };

/// Inclusive index bounds on the differencing axis, within 1..M-1.
struct InteriorRange {
  Axis axis = Axis::x;
  int lo = 1;
  int hi = 1;

  /// All interior nodes 1..M-1 of `f` along `axis`.
  static InteriorRange full(const Field& f, Axis axis);
};

/// Throws ValidationError unless 1 <= lo <= hi <= M-1 for a grid with M cells.
void validate(const InteriorRange& r, int M);

namespace stencil {

// Pointwise one-dimensional difference operators. Indices are checked only by
// assert; boundary nodes never get a stencil value.

inline double central_x(const Field& f, int i, int j) {
  assert(i >= 1 && i <= f.cells() - 1);
  return (f(i + 1, j) - f(i - 1, j)) / (2.0 * f.spacing());
}

inline double second_x(const Field& f, int i, int j) {
  assert(i >= 1 && i <= f.cells() - 1);
  const double h = f.spacing();
  return (f(i + 1, j) - 2.0 * f(i, j) + f(i - 1, j)) / (h * h);
}

inline double forward_x(const Field& f, int i, int j) {
  assert(i >= 0 && i <= f.cells() - 1);
  return (f(i + 1, j) - f(i, j)) / f.spacing();
}

inline double backward_x(const Field& f, int i, int j) {
  assert(i >= 1 && i <= f.cells());
  return (f(i, j) - f(i - 1, j)) / f.spacing();
}

inline double central_y(const Field& f, int i, int j) {
  assert(j >= 1 && j <= f.cells() - 1);
  return (f(i, j + 1) - f(i, j - 1)) / (2.0 * f.spacing());
}

inline double second_y(const Field& f, int i, int j) {
  assert(j >= 1 && j <= f.cells() - 1);
  const double h = f.spacing();
  return (f(i, j + 1) - 2.0 * f(i, j) + f(i, j - 1)) / (h * h);
}

inline double forward_y(const Field& f, int i, int j) {
  assert(j >= 0 && j <= f.cells() - 1);
  return (f(i, j + 1) - f(i, j)) / f.spacing();
}

inline double backward_y(const Field& f, int i, int j) {
  assert(j >= 1 && j <= f.cells());
  return (f(i, j) - f(i, j - 1)) / f.spacing();
}

// Line sweeps: evaluate an operator at every index of `range` along its axis,
// on the grid line `line` of the other axis (j for Axis::x, i for Axis::y).
// out[q] receives the value at index range.lo + q; `out` must hold
// range.hi - range.lo + 1 entries.

void central_sweep(const Field& f, const InteriorRange& range, int line, std::span<double> out);
void second_sweep(const Field& f, const InteriorRange& range, int line, std::span<double> out);
void forward_sweep(const Field& f, const InteriorRange& range, int line, std::span<double> out);
void backward_sweep(const Field& f, const InteriorRange& range, int line, std::span<double> out);

} // namespace stencil
} // namespace burgers
