#pragma once

#include <utility>

#include "siegel/halfspace.hpp"

// The midpoint projector P(Y1, Y2), the Gram matrix of the averaged point,
// the contraction ratio mu*_{2,p}, and the symplectic family Psi_lambda.

namespace siegel::contraction {

using geo::BallPoint;
using geo::SiegelPoint;
using mat::CMat;
using mat::RealSym2;
using mat::Rotation2;

// Default configuration matrix for the rotation family, spectrum {+1, -1}.
inline RealSym2 default_delta() { return RealSym2{0.0, 1.0, 0.0}; }

// Closed admissible interval for lambda: [max eig(D) - 2 sqrt(2), min eig(D) + 2 sqrt(2)].
std::pair<double, double> admissible_interval(const RealSym2& delta_g);

// Block rotation with cos Theta = (lambda I - Delta_G) / (2 sqrt(2)) and
// sin Theta the principal PSD root of I - cos^2 Theta. Both blocks are
// spectral functions of Delta_G, so they commute.
struct SymplecticRotation {
  double lambda = 0.0;
  RealSym2 delta_g;
  RealSym2 cos_block;
  RealSym2 sin_block;
  // Spectral data, paired through the eigenbasis of Delta_G (descending).
  Rotation2 v1;
  double c1 = 0.0, c2 = 0.0;  // cos eigenvalues for Delta_G eigenvalues d1 >= d2
  double s1 = 0.0, s2 = 0.0;  // matching sin eigenvalues, >= 0

  // 4x4 block matrix [[cos, -sin], [sin, cos]].
  CMat assembled() const;
  // e^{-i Theta} = cos Theta - i sin Theta (complex symmetric unitary).
  CMat exp_minus_i_theta() const;
};

// Throws OutOfInterval when a cos eigenvalue exceeds 1 in magnitude beyond
// 1e-12 slack.
SymplecticRotation psi_blocks(double lambda, const RealSym2& delta_g = default_delta());

// Standard symplectic form J = [[0, -I], [I, 0]].
CMat symplectic_form();

// Rank-2 projector onto Ran [Y1^{1/2}; Y2^{1/2}].
CMat mid_projector(const SiegelPoint& z1, const SiegelPoint& z2);

// (1/2) [U1*, U2*] P [U1; U2]; Hermitian PSD, equals U(mid)* U(mid).
CMat gram_mid(const SiegelPoint& z1, const SiegelPoint& z2);

struct ContractionReport {
  double mu_star = 0.0;        // normalized ratio, in [0, 1]
  double mu_raw = 0.0;         // ||gram_mid||_{1+p}^{1+p} = w_p of the midpoint
  double r1 = 0.0, r2 = 0.0;   // normalization factors, r1^{2(1+p)} + r2^{2(1+p)} = 2
  double range_residual = 0.0; // ||(I - P)[U1; U2]||_F
  double eq_residual = 0.0;    // ||U1*U1 - U2*U2||_F
};

// mu* = w_p(midpoint) / ((w_p(Z1) + w_p(Z2)) / 2). Throws DegeneratePoint when
// both inputs are iI.
ContractionReport mu_star(const SiegelPoint& z1, const SiegelPoint& z2, double p);

// Moebius action (cos Theta Z - sin Theta)(sin Theta Z + cos Theta)^{-1}.
SiegelPoint psi_apply(const SymplecticRotation& rot, const SiegelPoint& z);

// Ball-model action W -> e^{-i Theta} W e^{-i Theta}; preserves the operator norm.
BallPoint psi_ball_apply(const SymplecticRotation& rot, const BallPoint& w);

// Z -> Z + i t I, t >= 0.
SiegelPoint translate_imag(const SiegelPoint& z, double t);

// lhs = w_p(translate_imag(psi_apply(rot, (Z1+Z2)/2), t)),
// rhs = ||gram_mid(Z1, Z2)||_{1+p}^{1+p}. At t = 0 the two sides agree.
std::pair<double, double> mainformula_gap(const SiegelPoint& z1, const SiegelPoint& z2,
                                          const SymplecticRotation& rot, double p, double t);

}  // namespace siegel::contraction
