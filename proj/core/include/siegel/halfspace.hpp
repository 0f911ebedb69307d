#pragma once

#include <optional>

#include "siegel/matkernel.hpp"

// The 2x2 Siegel upper half-space, its ball (disk) model, the boundary map
// U(Z) = Y^{-1/2}(Z - iI), the functional w_p, and the polar data (eps, S, T).

namespace siegel::geo {

using mat::CMat;
using mat::cplx;
using mat::Mat2;
using mat::RealSym2;

inline constexpr double kInteriorTol = 1e-12;  // default min-eigenvalue threshold for Y

// A point Z = X + iY with X, Y real symmetric and Y positive (semi)definite.
class SiegelPoint {
 public:
  // Interior point: min eig(Y) must exceed tol (default 1e-12; pass a smaller
  // tol for near-boundary studies, it only has to stay positive).
  static SiegelPoint interior(const RealSym2& x, const RealSym2& y, double tol = kInteriorTol);

  // Closure point: Y may be merely PSD. Eigenvalues in [-1e-12, 0) are
  // clamped to zero; anything lower is rejected.
  static SiegelPoint closure(const RealSym2& x, const RealSym2& y);

  const RealSym2& x() const { return x_; }
  const RealSym2& y() const { return y_; }
  bool boundary_flag() const { return closure_; }
  bool is_interior(double tol = kInteriorTol) const { return y_.min_eig() > tol; }

  CMat to_cmat() const { return CMat::complex2(Mat2(x_), Mat2(y_)); }

  static SiegelPoint midpoint(const SiegelPoint& a, const SiegelPoint& b);

  static SiegelPoint i_identity() { return interior(RealSym2::zero(), RealSym2::identity()); }

 private:
  SiegelPoint(const RealSym2& x, const RealSym2& y, bool closure)
      : x_(x), y_(y), closure_(closure) {}
  RealSym2 x_, y_;
  bool closure_;
};

// Disk-model point: complex symmetric 2x2 with operator norm <= 1 (+ slack).
class BallPoint {
 public:
  // Symmetrizes the input; rejects pre-symmetrization asymmetry beyond
  // asym_tol and operator norm beyond 1 + norm_slack. The defaults are the
  // desk-scale invariants; to_ball widens both in proportion to the
  // conditioning of the source point, where the slack is honest rounding.
  static BallPoint from(const CMat& w, double asym_tol = 1e-11, double norm_slack = 1e-10);
  static BallPoint origin() { return from(CMat::zero(2, 2)); }

  const CMat& w() const { return w_; }
  double norm() const { return norm_; }
  bool is_interior() const { return norm_ < 1.0; }

 private:
  explicit BallPoint(const CMat& w, double n) : w_(w), norm_(n) {}
  CMat w_;
  double norm_;
};

// The triple (eps, S, T) with U(Z) = eps^{-1}(S + iT), ||S + iT||_{2(1+p)} = 1.
struct PolarData {
  double eps;
  Mat2 s;       // need not be symmetric
  RealSym2 t;
  double p;

  PolarData(double eps_, const Mat2& s_, const RealSym2& t_, double p_);
  CMat s_plus_it() const { return CMat::complex2(s, Mat2(t)); }
};

// U(Z) = Y^{-1/2}(Z - iI) = Y^{-1/2} X + i (Y^{1/2} - Y^{-1/2}).
CMat u_of(const SiegelPoint& z);

// w_p(Z, iI) = ||U(Z)||_{2(1+p)}^{2(1+p)}.
double wp(const SiegelPoint& z, double p);

// W = (Z + iI)^{-1} (Z - iI); interior points map strictly inside the ball.
BallPoint to_ball(const SiegelPoint& z);

// Z = i (I + W)(I - W)^{-1}; refuses boundary W (use to_halfspace_closure).
SiegelPoint to_halfspace(const BallPoint& w);

// Closure-aware inverse Cayley: boundary W with I - W invertible produces a
// closure point, and a singular I - W is tagged as the point at infinity.
struct ClosureImage {
  bool at_infinity = false;
  std::optional<SiegelPoint> point;  // set when not at infinity
};
ClosureImage to_halfspace_closure(const BallPoint& w);

// R(t, eps) = t/2 + sqrt(t^2/4 + eps^2), evaluated without cancellation.
double r_scalar(double t, double eps);

// R applied spectrally to T; positive definite for eps > 0.
RealSym2 r_matrix(const RealSym2& t, double eps);

// Polar data of an interior Z != iI: eps = 1 / ||U(Z)||_{2(1+p)}.
PolarData polar(const SiegelPoint& z, double p);

// Principal PSD square root / inverse square root.
RealSym2 sqrt_psd(const RealSym2& m);
RealSym2 inv_sqrt_pd(const RealSym2& m);

}  // namespace siegel::geo
