#pragma once

#include <cstdint>
#include <vector>

#include "siegel/contraction.hpp"

// Numeric verification of the no-fixed-set facts for the rotation family with
// the default configuration (Delta_G spectrum {+1, -1}): the unit-circle
// omega values, the Im U_{1,1} obstruction, and the two positivity residuals
// that rule out boundary relations.

namespace siegel::fixedset {

using mat::cplx;

struct OmegaPair {
  cplx omega1;  // for Delta_G eigenvalue +1
  cplx omega2;  // for Delta_G eigenvalue -1
};

// omega_k(lambda) = (lambda -/+ 1)/(2 sqrt 2) - i sqrt(1 - (lambda -/+ 1)^2/8);
// both lie on the unit circle for lambda in the closed admissible interval.
OmegaPair omega(double lambda);

// sin^2(theta) Im omega1 + cos^2(theta) Im omega2; strictly negative for
// lambda in the open interval.
double im_u11(double theta, double lambda);

// c^2 s^2 (s1^2 + s2^2 + (c1-c2)^2) + s1 s2 (c^4 + s^4) + s1 s2 p^2.
// The parameter r does not enter this entry; it is kept for the caller's
// boundary-point bookkeeping.
double nogo_residual_corner(double r, double p, double theta, double lambda);

// s1 (s^2 + (r c + p s)^2) + s2 (c^2 + (r s - p c)^2)
//   >= min(s1, s2) (1 + r^2 + p^2).
double nogo_residual_real(double r, double p, double theta, double lambda);

struct ScanPoint {
  double lambda = 0.0;
  double min_residual = 0.0;
};

struct ScanReport {
  std::vector<ScanPoint> per_lambda;
  double global_min = 0.0;
  double argmin_lambda = 0.0;
  int argmin_sample = -1;
  double fixed_point_residual = 0.0;  // residual at W = 0, i.e. at iI
  std::uint64_t seed = 0;
  int sample_count = 0;
};

// For each lambda in the grid (which must avoid the interval endpoints),
// draws seeded symmetric boundary ball points and reports the minimum of
// ||psi_ball_apply(rot, W) - W||_F.
ScanReport boundary_fixed_scan(const std::vector<double>& lambda_grid, int sample_count,
                               std::uint64_t seed);

// Uniform lambda grid over the open interval with a relative end margin.
std::vector<double> lambda_grid(int points, double end_margin = 1e-3);

}  // namespace siegel::fixedset
