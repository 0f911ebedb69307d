#include "siegel/contraction.hpp"

#include <cmath>

namespace siegel::contraction {

using geo::sqrt_psd;
using mat::apply_spectral;
using mat::cplx;
using mat::Mat2;
using mat::schatten;
using mat::sym_eig2;

namespace {
constexpr double kTwoSqrt2 = 2.8284271247461903;  // 2 sqrt(2)
}

std::pair<double, double> admissible_interval(const RealSym2& delta_g) {
  return {delta_g.max_eig() - kTwoSqrt2, delta_g.min_eig() + kTwoSqrt2};
}

CMat SymplecticRotation::assembled() const {
  const CMat c(cos_block), s(sin_block);
  CMat m(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m(i, j) = c(i, j);
      m(i, j + 2) = -s(i, j);
      m(i + 2, j) = s(i, j);
      m(i + 2, j + 2) = c(i, j);
    }
  return m;
}

CMat SymplecticRotation::exp_minus_i_theta() const {
  return CMat(cos_block) - cplx(0.0, 1.0) * CMat(sin_block);
}

SymplecticRotation psi_blocks(double lambda, const RealSym2& delta_g) {
  SymplecticRotation rot;
  rot.lambda = lambda;
  rot.delta_g = delta_g;

  const auto eig = sym_eig2(delta_g);
  rot.v1 = eig.v;
  rot.c1 = (lambda - eig.d[0]) / kTwoSqrt2;
  rot.c2 = (lambda - eig.d[1]) / kTwoSqrt2;
  if (std::abs(rot.c1) > 1.0 + 1e-12 || std::abs(rot.c2) > 1.0 + 1e-12)
    throw OutOfInterval("psi_blocks: a cos eigenvalue exceeds 1 in magnitude");
  const auto sin_of = [](double c) { return std::sqrt(std::max(0.0, 1.0 - c * c)); };
  rot.s1 = sin_of(rot.c1);
  rot.s2 = sin_of(rot.c2);
  rot.cos_block = eig.v.conjugate_diag(rot.c1, rot.c2);
  rot.sin_block = eig.v.conjugate_diag(rot.s1, rot.s2);
  return rot;
}

CMat symplectic_form() {
  CMat j(4, 4);
  j(0, 2) = -1.0; j(1, 3) = -1.0;
  j(2, 0) = 1.0;  j(3, 1) = 1.0;
  return j;
}

CMat mid_projector(const SiegelPoint& z1, const SiegelPoint& z2) {
  const CMat stacked = CMat::vstack(CMat(sqrt_psd(z1.y())), CMat(sqrt_psd(z2.y())));
  return mat::col_projector(stacked);
}

CMat gram_mid(const SiegelPoint& z1, const SiegelPoint& z2) {
  const CMat p = mid_projector(z1, z2);
  const CMat u = CMat::vstack(geo::u_of(z1), geo::u_of(z2));
  return cplx(0.5, 0.0) * (u.adjoint() * (p * u));
}

ContractionReport mu_star(const SiegelPoint& z1, const SiegelPoint& z2, double p) {
  if (!(p > 0.0)) throw Error("mu_star: p must be positive");
  const double q = 2.0 * (1.0 + p);

  const double w1 = geo::wp(z1, p);
  const double w2 = geo::wp(z2, p);
  const double denom = 0.5 * (w1 + w2);
  if (!(denom > 0.0))
    throw DegeneratePoint("mu_star: w_p(Z1) + w_p(Z2) = 0 (both points are iI)");

  ContractionReport rep;
  const CMat gram = gram_mid(z1, z2);
  rep.mu_raw = std::pow(schatten(gram, 1.0 + p), 1.0 + p);
  rep.mu_star = rep.mu_raw / denom;

  // Normalization factors: r_k^{2(1+p)} = w_p(Z_k) / ((w1 + w2)/2), so that
  // r_k eps_k is a common scale and r1^{2(1+p)} + r2^{2(1+p)} = 2.
  rep.r1 = std::pow(w1 / denom, 1.0 / q);
  rep.r2 = std::pow(w2 / denom, 1.0 / q);

  const CMat pmat = mid_projector(z1, z2);
  const CMat u = CMat::vstack(geo::u_of(z1), geo::u_of(z2));
  rep.range_residual = (u - pmat * u).frob();
  const CMat u1 = geo::u_of(z1), u2 = geo::u_of(z2);
  rep.eq_residual = (u1.adjoint() * u1 - u2.adjoint() * u2).frob();
  return rep;
}

SiegelPoint psi_apply(const SymplecticRotation& rot, const SiegelPoint& z) {
  const CMat zc = z.to_cmat();
  const CMat c(rot.cos_block), s(rot.sin_block);
  const CMat num = c * zc - s;
  const CMat den = s * zc + c;
  // Catch both a singular resolvent and the cancellation case where the sum
  // collapses far below its natural scale (possible only on the closure).
  const double den_scale = s.frob() * zc.frob() + c.frob();
  CMat den_inv(2, 2);
  if (den.frob() <= 1e-14 * den_scale || !den.try_inv2(den_inv, 1e-14))
    throw SingularDenominator("psi_apply: sin Theta Z + cos Theta singular");
  const CMat image = num * den_inv;
  const RealSym2 rex = image.real_part2().symmetric_part();
  const RealSym2 imx = image.imag_part2().symmetric_part();
  if (z.boundary_flag()) return SiegelPoint::closure(rex, imx);
  return SiegelPoint::interior(rex, imx, 0.0);
}

BallPoint psi_ball_apply(const SymplecticRotation& rot, const BallPoint& w) {
  const CMat e = rot.exp_minus_i_theta();
  return BallPoint::from(e * w.w() * e);
}

SiegelPoint translate_imag(const SiegelPoint& z, double t) {
  if (!(t >= 0.0)) throw Error("translate_imag: t must be >= 0");
  const RealSym2 y{z.y().xx + t, z.y().xy, z.y().yy + t};
  if (z.boundary_flag() && t == 0.0) return SiegelPoint::closure(z.x(), y);
  return SiegelPoint::interior(z.x(), y, 0.0);
}

std::pair<double, double> mainformula_gap(const SiegelPoint& z1, const SiegelPoint& z2,
                                          const SymplecticRotation& rot, double p, double t) {
  if (!(t >= 0.0)) throw Error("mainformula_gap: t must be >= 0");
  const SiegelPoint mid = SiegelPoint::midpoint(z1, z2);
  const SiegelPoint moved = translate_imag(psi_apply(rot, mid), t);
  const double lhs = geo::wp(moved, p);
  const double rhs = std::pow(schatten(gram_mid(z1, z2), 1.0 + p), 1.0 + p);
  return {lhs, rhs};
}

}  // namespace siegel::contraction
