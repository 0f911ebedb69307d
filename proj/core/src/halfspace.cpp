#include "siegel/halfspace.hpp"

#include <cmath>

namespace siegel::geo {

using mat::apply_spectral;
using mat::op_norm;
using mat::schatten;

SiegelPoint SiegelPoint::interior(const RealSym2& x, const RealSym2& y, double tol) {
  if (!x.is_finite() || !y.is_finite()) throw Error("SiegelPoint: non-finite entries");
  if (!(y.min_eig() > tol))
    throw DegenerateY("SiegelPoint::interior: min eig(Y) not above threshold");
  return SiegelPoint(x, y, false);
}

SiegelPoint SiegelPoint::closure(const RealSym2& x, const RealSym2& y) {
  if (!x.is_finite() || !y.is_finite()) throw Error("SiegelPoint: non-finite entries");
  const double lo = y.min_eig();
  if (lo < -1e-12) throw NotPSD("SiegelPoint::closure: Y has eigenvalue below -1e-12");
  RealSym2 yc = y;
  if (lo < 0.0) yc = apply_spectral(y, [](double v) { return v < 0.0 ? 0.0 : v; });
  return SiegelPoint(x, yc, true);
}

SiegelPoint SiegelPoint::midpoint(const SiegelPoint& a, const SiegelPoint& b) {
  // Sum of positive definite matrices is positive definite; no projection needed.
  return SiegelPoint((a.x_ + b.x_) * 0.5, (a.y_ + b.y_) * 0.5,
                     a.closure_ || b.closure_);
}

BallPoint BallPoint::from(const CMat& w, double asym_tol, double norm_slack) {
  if (w.rows() != 2 || w.cols() != 2) throw Error("BallPoint: expected 2x2");
  if (!w.is_finite()) throw Error("BallPoint: non-finite entries");
  const double defect = w.symmetry_defect();
  const double scale = std::max(1.0, w.frob());
  if (defect > asym_tol * scale)
    throw ConsistencyError("BallPoint: asymmetry beyond tolerance before symmetrization");
  const CMat sym = w.symmetrized();
  const double n = op_norm(sym);
  if (n > 1.0 + norm_slack) throw Error("BallPoint: operator norm exceeds 1 + slack");
  return BallPoint(sym, n);
}

PolarData::PolarData(double eps_, const Mat2& s_, const RealSym2& t_, double p_)
    : eps(eps_), s(s_), t(t_), p(p_) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw Error("PolarData: eps must be positive");
  if (!(p > 0.0)) throw Error("PolarData: p must be positive");
  // The checks are exact identities at desk scale; far out (eps << 1) the
  // rounding floor grows with the implied conditioning of Y, so the slack
  // scales with 1/eps there.
  const double slack = std::max(1.0, 1e-3 / eps);
  const double unit = schatten(s_plus_it(), 2.0 * (1.0 + p));
  if (std::abs(unit - 1.0) > 1e-12 * slack)
    throw ConsistencyError("PolarData: ||S + iT|| not 1 within tolerance");
  const Mat2 rs = Mat2(r_matrix(t, eps)) * s;
  if (rs.asym() > 1e-12 * slack * std::max(1.0, rs.frob()))
    throw ConsistencyError("PolarData: R(T,eps) S not symmetric within tolerance");
}

RealSym2 sqrt_psd(const RealSym2& m) {
  return apply_spectral(m, [](double v) {
    if (v < 0.0) return std::numeric_limits<double>::quiet_NaN();
    return std::sqrt(v);
  });
}

RealSym2 inv_sqrt_pd(const RealSym2& m) {
  return apply_spectral(m, [](double v) {
    if (v <= 0.0) return std::numeric_limits<double>::quiet_NaN();
    return 1.0 / std::sqrt(v);
  });
}

CMat u_of(const SiegelPoint& z) {
  if (!(z.y().min_eig() > 0.0))
    throw DegenerateY("u_of: Y not positive definite");
  RealSym2 rt, irt;
  try {
    rt = sqrt_psd(z.y());
    irt = inv_sqrt_pd(z.y());
  } catch (const DomainError&) {
    throw DegenerateY("u_of: Y not invertible");
  }
  const Mat2 re = Mat2(irt) * Mat2(z.x());
  const Mat2 im = Mat2(rt) - Mat2(irt);
  return CMat::complex2(re, im);
}

double wp(const SiegelPoint& z, double p) {
  if (!(p > 0.0)) throw Error("wp: p must be positive");
  const double q = 2.0 * (1.0 + p);
  const double nrm = schatten(u_of(z), q);
  return std::pow(nrm, q);
}

BallPoint to_ball(const SiegelPoint& z) {
  const CMat zc = z.to_cmat();
  const CMat ii = cplx(0.0, 1.0) * CMat::identity(2);
  const CMat num = zc - ii;
  const CMat den = zc + ii;
  CMat den_inv(2, 2);
  if (!den.try_inv2(den_inv, 1e-14))
    throw SingularCayley("to_ball: Z + iI not invertible");
  // The image of a well-conditioned point is symmetric to ~1e-15 and inside
  // the closed ball to the same accuracy; both defects grow in proportion to
  // the eigenvalue spread of Y and the size of the entries, so the guards
  // scale with them.
  const double y_lo = z.y().min_eig();
  const double cond = y_lo > 0.0 ? z.y().max_eig() / y_lo
                                 : std::numeric_limits<double>::infinity();
  const double size = z.x().frob() + z.y().frob();
  const double slack =
      std::min(1e-2, 50.0 * 2.2e-16 * std::max({1.0, cond, size}));
  return BallPoint::from(den_inv * num, std::max(1e-11, slack), std::max(1e-10, slack));
}

SiegelPoint to_halfspace(const BallPoint& w) {
  if (w.norm() >= 1.0 - 1e-12)
    throw BoundaryPole("to_halfspace: boundary point, use to_halfspace_closure");
  const CMat id = CMat::identity(2);
  CMat inv(2, 2);
  if (!(id - w.w()).try_inv2(inv, 1e-14))
    throw BoundaryPole("to_halfspace: I - W singular");
  const CMat zc = cplx(0.0, 1.0) * ((id + w.w()) * inv);
  const Mat2 re = zc.real_part2();
  const Mat2 im = zc.imag_part2();
  return SiegelPoint::interior(re.symmetric_part(), im.symmetric_part(), 0.0);
}

ClosureImage to_halfspace_closure(const BallPoint& w) {
  const CMat id = CMat::identity(2);
  CMat inv(2, 2);
  if (!(id - w.w()).try_inv2(inv, 1e-12)) return ClosureImage{true, std::nullopt};
  const CMat zc = cplx(0.0, 1.0) * ((id + w.w()) * inv);
  const Mat2 re = zc.real_part2();
  const Mat2 im = zc.imag_part2();
  RealSym2 y = im.symmetric_part();
  // Rounding can push a boundary image slightly negative; clamp within slack.
  const double slack = 1e-9 * std::max(1.0, y.frob());
  if (y.min_eig() < 0.0 && y.min_eig() > -slack)
    y = apply_spectral(y, [](double v) { return v < 0.0 ? 0.0 : v; });
  return ClosureImage{false, SiegelPoint::closure(re.symmetric_part(), y)};
}

double r_scalar(double t, double eps) {
  const double h = std::hypot(0.5 * t, eps);  // sqrt(t^2/4 + eps^2)
  if (t >= 0.0) return 0.5 * t + h;
  // For t < 0 the direct form cancels; use R(t,e) R(-t,e) = e^2.
  const double denom = h - 0.5 * t;  // == h + |t|/2 > 0
  return eps == 0.0 ? 0.0 : eps * (eps / denom);
}

RealSym2 r_matrix(const RealSym2& t, double eps) {
  return apply_spectral(t, [eps](double v) { return r_scalar(v, eps); });
}

PolarData polar(const SiegelPoint& z, double p) {
  if (!(p > 0.0)) throw Error("polar: p must be positive");
  const CMat u = u_of(z);
  const double q = 2.0 * (1.0 + p);
  const double nrm = schatten(u, q);
  if (!(nrm > 0.0) || !std::isfinite(1.0 / nrm))
    throw DegeneratePoint("polar: U(Z) = 0, eps undefined (Z = iI)");
  const double eps = 1.0 / nrm;
  const CMat su = eps * u;
  const Mat2 s = su.real_part2();
  // Imaginary part is eps (Y^{1/2} - Y^{-1/2}), symmetric up to rounding.
  const RealSym2 t = su.imag_part2().symmetric_part();
  return PolarData(eps, s, t, p);
}

}  // namespace siegel::geo
