#include <doctest.h>

#include <cmath>

#include "siegel/fixedset.hpp"
#include "siegel/rng.hpp"

using namespace siegel;
using namespace siegel::fixedset;

namespace {
const double kTwoSqrt2 = 2.0 * std::sqrt(2.0);
}

TEST_CASE("omega values") {
  const auto at0 = omega(0.0);
  CHECK(at0.omega1.real() == doctest::Approx(-1.0 / kTwoSqrt2).epsilon(1e-15));
  CHECK(at0.omega1.imag() == doctest::Approx(-std::sqrt(7.0 / 8.0)).epsilon(1e-15));
  CHECK(at0.omega2.real() == doctest::Approx(1.0 / kTwoSqrt2).epsilon(1e-15));
  CHECK(at0.omega2.imag() == doctest::Approx(-std::sqrt(7.0 / 8.0)).epsilon(1e-15));

  // Right endpoint: omega2 reaches 1.
  const auto edge = omega(kTwoSqrt2 - 1.0);
  CHECK(edge.omega2.real() == doctest::Approx(1.0));
  CHECK(edge.omega2.imag() == doctest::Approx(0.0));

  for (double lambda : lambda_grid(100, 0.0)) {
    const auto om = omega(lambda);
    CHECK(std::abs(std::abs(om.omega1) - 1.0) < 1e-12);
    CHECK(std::abs(std::abs(om.omega2) - 1.0) < 1e-12);
    CHECK(om.omega1.imag() <= 0.0);
    CHECK(om.omega2.imag() <= 0.0);
  }

  CHECK_THROWS_AS(omega(kTwoSqrt2 - 1.0 + 1e-6), OutOfInterval);
  CHECK_THROWS_AS(omega(-kTwoSqrt2 + 1.0 - 1e-6), OutOfInterval);
}

TEST_CASE("Im U11 obstruction") {
  // Both Im omega's coincide at lambda = 0, so theta drops out.
  for (double theta : {0.0, 0.4, 1.0, 1.5707963267948966})
    CHECK(im_u11(theta, 0.0) == doctest::Approx(-std::sqrt(7.0 / 8.0)).epsilon(1e-14));
  CHECK(-std::sqrt(7.0 / 8.0) == doctest::Approx(-0.93541434669348533));

  // theta = 0 reduces to Im omega2.
  for (double lambda : {-1.2, 0.3, 1.4})
    CHECK(im_u11(0.0, lambda) == doctest::Approx(omega(lambda).omega2.imag()).epsilon(1e-15));

  double top = -1.0;
  for (double lambda : lambda_grid(200))
    for (int i = 0; i < 200; ++i)
      top = std::max(top, im_u11(3.141592653589793 * i / 199.0, lambda));
  CHECK(top < -1e-6);
}

TEST_CASE("corner no-go residual") {
  // theta = 0: the expression collapses to s1 s2 (1 + p^2).
  for (double lambda : {-1.0, 0.0, 0.8}) {
    const auto rot = contraction::psi_blocks(lambda);
    for (double p : {0.0, 0.7, -2.0})
      CHECK(nogo_residual_corner(0.33, p, 0.0, lambda) ==
            doctest::Approx(rot.s1 * rot.s2 * (1.0 + p * p)).epsilon(1e-14));
  }

  // lambda = 0, theta = pi/4, p = 0: by hand the value is exactly 1.
  const auto rot0 = contraction::psi_blocks(0.0);
  const double dc = rot0.c1 - rot0.c2;
  const double byhand =
      0.25 * (rot0.s1 * rot0.s1 + rot0.s2 * rot0.s2 + dc * dc) + 0.5 * rot0.s1 * rot0.s2;
  CHECK(nogo_residual_corner(3.0, 0.0, 3.141592653589793 / 4.0, 0.0) ==
        doctest::Approx(byhand).epsilon(1e-14));
  CHECK(byhand == doctest::Approx(1.0).epsilon(1e-15));

  rng::Xoshiro256pp g(51);
  const auto grid = lambda_grid(50);
  for (int i = 0; i < 2000; ++i) {
    const double lambda = grid[static_cast<size_t>(g.uniform(0.0, grid.size()))];
    CHECK(nogo_residual_corner(g.uniform(-3, 3), g.uniform(-3, 3),
                               g.uniform(0, 3.141592653589793), lambda) > 0.0);
  }
}

TEST_CASE("real no-go residual and its lower bound") {
  for (double lambda : {-1.0, 0.3}) {
    const auto rot = contraction::psi_blocks(lambda);
    for (double r : {0.0, 1.1})
      for (double p : {0.0, -0.6})
        CHECK(nogo_residual_real(r, p, 0.0, lambda) ==
              doctest::Approx(rot.s1 * r * r + rot.s2 * (1.0 + p * p)).epsilon(1e-14));
  }

  rng::Xoshiro256pp g(52);
  const auto grid = lambda_grid(50);
  for (int i = 0; i < 2000; ++i) {
    const double lambda = grid[static_cast<size_t>(g.uniform(0.0, grid.size()))];
    const double r = g.uniform(-3, 3), p = g.uniform(-3, 3);
    const double theta = g.uniform(0.0, 3.141592653589793);
    const double value = nogo_residual_real(r, p, theta, lambda);
    const auto rot = contraction::psi_blocks(lambda);
    const double bound = std::min(rot.s1, rot.s2) * (1.0 + r * r + p * p);
    CHECK(value > 0.0);
    CHECK(value >= bound - 1e-12 * std::max(1.0, bound));
  }
}

TEST_CASE("boundary fixed scan") {
  const auto rep = boundary_fixed_scan(lambda_grid(20), 200, 7);
  CHECK(rep.fixed_point_residual == 0.0);
  CHECK(rep.global_min > 1e-3);
  CHECK(rep.per_lambda.size() == 20);
  for (const auto& pt : rep.per_lambda) CHECK(pt.min_residual > 0.0);

  // Same seed reproduces the scan exactly.
  const auto again = boundary_fixed_scan(lambda_grid(20), 200, 7);
  CHECK(again.global_min == rep.global_min);
  CHECK(again.argmin_lambda == rep.argmin_lambda);
  CHECK(again.argmin_sample == rep.argmin_sample);

  // Endpoints are rejected.
  CHECK_THROWS_AS(boundary_fixed_scan({kTwoSqrt2 - 1.0}, 10, 1), OutOfInterval);
}

TEST_CASE("boundary samples sit on the unit sphere") {
  rng::Xoshiro256pp g(53);
  for (int i = 0; i < 200; ++i) {
    const auto w = rng::sample_boundary_ball_point(g);
    CHECK(std::abs(w.norm() - 1.0) < 1e-12);
    CHECK((w.w() - w.w().transpose()).frob() < 1e-13);
  }
}
