#include "burgers/errors.hpp"
#include "burgers/stencil.hpp"

#include "random_fields.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

using namespace burgers;
using namespace burgers::stencil;

namespace {

// M = 2 field whose x-line at j is [0, 1, 0] (h = 0.5).
Field bump_x() {
  Field f(2, 0.0);
  for (int j = 0; j <= 2; ++j) {
    f(1, j) = 1.0;
  }
  return f;
}

Field bump_y() {
  Field f(2, 0.0);
  for (int i = 0; i <= 2; ++i) {
    f(i, 1) = 1.0;
  }
  return f;
}

Field from(const GridSpec& g, double (*fn)(double, double)) { return sample_field(g, fn); }

} // namespace

TEST_CASE("central difference") {
  const GridSpec g2 = make_grid(2, 1, 1.0);
  CHECK(central_x(from(g2, [](double x, double) { return x; }), 1, 0) == 1.0);
  CHECK(central_x(Field(2, 3.5), 1, 1) == 0.0);
  CHECK(central_x(bump_x(), 1, 0) == 0.0);
  CHECK(central_y(from(g2, [](double, double y) { return y; }), 0, 1) == 1.0);
  CHECK(central_y(bump_y(), 2, 1) == 0.0);
}

TEST_CASE("second difference") {
  const GridSpec g4 = make_grid(4, 1, 1.0);
  const Field sq = from(g4, [](double x, double) { return x * x; });
  for (int i = 1; i <= 3; ++i) {
    CHECK(second_x(sq, i, 2) == doctest::Approx(2.0).epsilon(1e-13));
  }
  CHECK(second_x(Field(4, -2.0), 2, 2) == 0.0);
  CHECK(second_x(bump_x(), 1, 2) == -8.0);
  CHECK(second_y(bump_y(), 0, 1) == -8.0);
  const Field sqy = from(g4, [](double, double y) { return y * y; });
  CHECK(second_y(sqy, 3, 2) == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("one-sided differences") {
  const GridSpec g4 = make_grid(4, 1, 1.0);
  const Field lin = from(g4, [](double x, double) { return x; });
  for (int i = 0; i <= 3; ++i) {
    CHECK(forward_x(lin, i, 1) == doctest::Approx(1.0).epsilon(1e-14));
  }
  for (int i = 1; i <= 4; ++i) {
    CHECK(backward_x(lin, i, 1) == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK(forward_x(Field(4, 9.0), 0, 0) == 0.0);
  CHECK(backward_x(Field(4, 9.0), 4, 0) == 0.0);
  CHECK(forward_x(bump_x(), 1, 0) == -2.0);
  CHECK(backward_x(bump_x(), 1, 0) == 2.0);
  CHECK(forward_y(bump_y(), 1, 1) == -2.0);
  CHECK(backward_y(bump_y(), 1, 1) == 2.0);
}

TEST_CASE("central equals mean of one-sided differences on random fields") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    const int M = testing::random_cells(rng);
    const Field f = testing::random_field(rng, M, -10.0, 10.0);
    const double h = f.spacing();
    for (int i = 1; i < M; ++i) {
      for (int j = 1; j < M; ++j) {
        const double scale_x =
            (std::abs(f(i + 1, j)) + 2 * std::abs(f(i, j)) + std::abs(f(i - 1, j))) / h;
        const double scale_y =
            (std::abs(f(i, j + 1)) + 2 * std::abs(f(i, j)) + std::abs(f(i, j - 1))) / h;
        const double eps = std::numeric_limits<double>::epsilon();
        REQUIRE(std::abs(central_x(f, i, j) - 0.5 * (forward_x(f, i, j) + backward_x(f, i, j))) <=
                2 * eps * scale_x);
        REQUIRE(std::abs(central_y(f, i, j) - 0.5 * (forward_y(f, i, j) + backward_y(f, i, j))) <=
                2 * eps * scale_y);
      }
    }
  }
}

TEST_CASE("operators are linear") {
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  using Op = double (*)(const Field&, int, int);
  const Op ops[] = {central_x, second_x, forward_x, backward_x,
                    central_y, second_y, forward_y, backward_y};
  for (int trial = 0; trial < 1000; ++trial) {
    const int M = testing::random_cells(rng, 2, 12);
    const Field f = testing::random_field(rng, M);
    const Field g = testing::random_field(rng, M);
    const double a = coef(rng);
    const double b = coef(rng);
    Field combo(M);
    for (std::size_t q = 0; q < combo.values().size(); ++q) {
      combo.values()[q] = a * f.values()[q] + b * g.values()[q];
    }
    const double scale = (std::abs(a) + std::abs(b)) / (f.spacing() * f.spacing());
    for (Op op : ops) {
      for (int i = 1; i < M; ++i) {
        for (int j = 1; j < M; ++j) {
          REQUIRE(std::abs(op(combo, i, j) - (a * op(f, i, j) + b * op(g, i, j))) <=
                  1e-12 * scale);
        }
      }
    }
  }
}

TEST_CASE("exactness on affine and quadratic profiles") {
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int M = testing::random_cells(rng, 2, 40);
    const GridSpec g = make_grid(M, 1, 1.0);
    const double a = coef(rng), b = coef(rng), c = coef(rng);
    const Field affine = sample_field(g, [&](double x, double y) { return a * x + b + c * y; });
    const Field quad = sample_field(g, [&](double x, double) { return a * x * x + b * x + c; });
    for (int i = 1; i < M; ++i) {
      const int j = M / 2;
      CHECK(central_x(affine, i, j) == doctest::Approx(a).epsilon(1e-9));
      CHECK(second_x(quad, i, j) == doctest::Approx(2 * a).epsilon(1e-7));
    }
  }
}

TEST_CASE("line sweeps match pointwise evaluation") {
  std::mt19937_64 rng(404);
  const Field f = testing::random_field(rng, 9);
  std::vector<double> out(8);
  const auto rx = InteriorRange::full(f, Axis::x);
  const auto ry = InteriorRange::full(f, Axis::y);

  central_sweep(f, rx, 3, out);
  for (int i = 1; i <= 8; ++i) {
    CHECK(out[static_cast<std::size_t>(i - 1)] == central_x(f, i, 3));
  }
  second_sweep(f, ry, 5, out);
  for (int j = 1; j <= 8; ++j) {
    CHECK(out[static_cast<std::size_t>(j - 1)] == second_y(f, 5, j));
  }
  forward_sweep(f, InteriorRange{Axis::x, 2, 4}, 0, out);
  CHECK(out[0] == forward_x(f, 2, 0));
  CHECK(out[2] == forward_x(f, 4, 0));
  backward_sweep(f, InteriorRange{Axis::y, 8, 8}, 9, out);
  CHECK(out[0] == backward_y(f, 9, 8));
}

TEST_CASE("interior ranges are validated") {
  const Field f(6);
  std::vector<double> out(10);
  CHECK_THROWS_AS(central_sweep(f, InteriorRange{Axis::x, 0, 3}, 1, out), ValidationError);
  CHECK_THROWS_AS(central_sweep(f, InteriorRange{Axis::x, 1, 6}, 1, out), ValidationError);
  CHECK_THROWS_AS(central_sweep(f, InteriorRange{Axis::x, 4, 3}, 1, out), ValidationError);
  CHECK_THROWS_AS(central_sweep(f, InteriorRange{Axis::x, 1, 5}, 7, out), ValidationError);
  std::vector<double> small(2);
  CHECK_THROWS_AS(central_sweep(f, InteriorRange{Axis::y, 1, 5}, 1, small), ValidationError);
}
