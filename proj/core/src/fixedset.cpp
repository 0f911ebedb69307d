#include "siegel/fixedset.hpp"

#include <cmath>

#include "siegel/rng.hpp"

namespace siegel::fixedset {

namespace {

constexpr double kTwoSqrt2 = 2.8284271247461903;
constexpr double kLo = -kTwoSqrt2 + 1.0;
constexpr double kHi = kTwoSqrt2 - 1.0;

void check_interval(double lambda) {
  if (lambda < kLo - 1e-12 || lambda > kHi + 1e-12)
    throw OutOfInterval("lambda outside the closed admissible interval");
}

cplx omega_of(double shifted) {
  const double c = shifted / kTwoSqrt2;
  const double rad = std::max(0.0, 1.0 - c * c);
  return {c, -std::sqrt(rad)};
}

}  // namespace

OmegaPair omega(double lambda) {
  check_interval(lambda);
  return {omega_of(lambda - 1.0), omega_of(lambda + 1.0)};
}

double im_u11(double theta, double lambda) {
  const OmegaPair o = omega(lambda);
  const double s = std::sin(theta), c = std::cos(theta);
  return s * s * o.omega1.imag() + c * c * o.omega2.imag();
}

double nogo_residual_corner(double r, double p, double theta, double lambda) {
  (void)r;
  const auto rot = contraction::psi_blocks(lambda);
  const double c = std::cos(theta), s = std::sin(theta);
  const double c2 = c * c, s2 = s * s;
  const double dc = rot.c1 - rot.c2;
  return c2 * s2 * (rot.s1 * rot.s1 + rot.s2 * rot.s2 + dc * dc) +
         rot.s1 * rot.s2 * (c2 * c2 + s2 * s2) + rot.s1 * rot.s2 * p * p;
}

double nogo_residual_real(double r, double p, double theta, double lambda) {
  const auto rot = contraction::psi_blocks(lambda);
  const double c = std::cos(theta), s = std::sin(theta);
  const double t1 = r * c + p * s;
  const double t2 = r * s - p * c;
  return rot.s1 * (s * s + t1 * t1) + rot.s2 * (c * c + t2 * t2);
}

std::vector<double> lambda_grid(int points, double end_margin) {
  const double span = kHi - kLo;
  const double lo = kLo + end_margin * span;
  const double hi = kHi - end_margin * span;
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i)
    grid[i] = points == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (points - 1);
  return grid;
}

ScanReport boundary_fixed_scan(const std::vector<double>& lambda_grid, int sample_count,
                               std::uint64_t seed) {
  ScanReport rep;
  rep.seed = seed;
  rep.sample_count = sample_count;
  rep.global_min = std::numeric_limits<double>::infinity();

  rng::Xoshiro256pp gen(seed);
  std::vector<geo::BallPoint> samples;
  samples.reserve(sample_count);
  for (int i = 0; i < sample_count; ++i) samples.push_back(rng::sample_boundary_ball_point(gen));

  for (double lambda : lambda_grid) {
    if (lambda <= kLo || lambda >= kHi)
      throw OutOfInterval("boundary_fixed_scan: grid must stay inside the open interval");
    const auto rot = contraction::psi_blocks(lambda);
    double lo = std::numeric_limits<double>::infinity();
    int lo_idx = -1;
    for (int i = 0; i < sample_count; ++i) {
      const geo::BallPoint image = contraction::psi_ball_apply(rot, samples[i]);
      const double res = (image.w() - samples[i].w()).frob();
      if (res < lo) { lo = res; lo_idx = i; }
    }
    rep.per_lambda.push_back({lambda, lo});
    if (lo < rep.global_min) {
      rep.global_min = lo;
      rep.argmin_lambda = lambda;
      rep.argmin_sample = lo_idx;
    }
  }

  if (!lambda_grid.empty()) {
    const auto rot = contraction::psi_blocks(lambda_grid.front());
    const geo::BallPoint origin = geo::BallPoint::origin();
    rep.fixed_point_residual = (contraction::psi_ball_apply(rot, origin).w() - origin.w()).frob();
  }
  return rep;
}

}  // namespace siegel::fixedset
