#include "burgers/stencil.hpp"

#include "burgers/errors.hpp"

#include <string>

namespace burgers {

InteriorRange InteriorRange::full(const Field& f, Axis axis) {
  return InteriorRange{axis, 1, f.cells() - 1};
}

void validate(const InteriorRange& r, int M) {
  if (r.lo < 1 || r.hi > M - 1 || r.lo > r.hi) {
    throw ValidationError("InteriorRange", "bounds [" + std::to_string(r.lo) + ", " +
                                               std::to_string(r.hi) + "] outside 1.." +
                                               std::to_string(M - 1));
  }
}

namespace stencil {
namespace {

template <class PointOp>
void sweep(const Field& f, const InteriorRange& range, int line, std::span<double> out,
           PointOp x_op, PointOp y_op) {
  validate(range, f.cells());
  if (line < 0 || line > f.cells()) {
    throw ValidationError("line", "index " + std::to_string(line) + " outside the grid");
  }
  const auto count = static_cast<std::size_t>(range.hi - range.lo + 1);
  if (out.size() < count) {
    throw ValidationError("out", "buffer holds " + std::to_string(out.size()) + " values, need " +
                                     std::to_string(count));
  }
  if (range.axis == Axis::x) {
    for (int i = range.lo; i <= range.hi; ++i) {
      out[static_cast<std::size_t>(i - range.lo)] = x_op(f, i, line);
    }
  } else {
    for (int j = range.lo; j <= range.hi; ++j) {
      out[static_cast<std::size_t>(j - range.lo)] = y_op(f, line, j);
    }
  }
}

using Op = double (*)(const Field&, int, int);

} // namespace

void central_sweep(const Field& f, const InteriorRange& range, int line, std::span<double> out) {
  sweep<Op>(f, range, line, out, &central_x, &central_y);
}

void second_sweep(const Field& f, const InteriorRange& range, int line, std::span<double> out) {
  sweep<Op>(f, range, line, out, &second_x, &second_y);
}

void forward_sweep(const Field& f, const InteriorRange& range, int line, std::span<double> out) {
  sweep<Op>(f, range, line, out, &forward_x, &forward_y);
}

void backward_sweep(const Field& f, const InteriorRange& range, int line, std::span<double> out) {
  sweep<Op>(f, range, line, out, &backward_x, &backward_y);
}

} // namespace stencil
} // namespace burgers
