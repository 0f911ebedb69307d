#include "siegel/matkernel.hpp"

#include <algorithm>

namespace siegel::mat {

SymEig2 sym_eig2(const RealSym2& m) {
  if (!m.is_finite()) throw Error("sym_eig2: non-finite input");
  const double a = m.xx, b = m.xy, c = m.yy;

  // Rotation angle: atan2(0,0) = 0, so exactly-degenerate inputs come back
  // with the identity rotation.
  double theta = 0.5 * std::atan2(2.0 * b, a - c);
  double cs = std::cos(theta), sn = std::sin(theta);

  // This ordering puts the larger eigenvalue first for the angle above.
  SymEig2 out;
  out.d = m.eig_pair();

  // Fix the sign of the first column: largest-magnitude entry positive.
  const double lead = std::abs(cs) >= std::abs(sn) ? cs : sn;
  if (lead < 0.0) { cs = -cs; sn = -sn; }
  out.v = Rotation2{cs, sn};
  return out;
}

RealSym2 apply_spectral(const RealSym2& m, const std::function<double(double)>& f) {
  const SymEig2 e = sym_eig2(m);
  const double f0 = f(e.d[0]);
  const double f1 = f(e.d[1]);
  if (!std::isfinite(f0) || !std::isfinite(f1))
    throw DomainError("apply_spectral: function not finite at an eigenvalue");
  return e.v.conjugate_diag(f0, f1);
}

namespace {

// Eigenvalues of a 2x2 Hermitian matrix given as (p, q, r) = (H00, H01, H11).
std::array<double, 2> herm2_eig(double p, cplx q, double r) {
  const double mean = 0.5 * (p + r);
  const double h = std::hypot(0.5 * (p - r), std::abs(q));
  return {mean + h, mean - h};
}

// Cyclic Jacobi for a 4x4 Hermitian matrix; eigenvalues only. Used solely for
// square inputs of singular_values; the 2-column shapes go through the closed
// form above.
std::array<double, 4> herm4_eig(CMat h) {
  constexpr int kMaxSweeps = 60;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) off += std::norm(h(i, j));
    double diag = 0.0;
    for (int i = 0; i < 4; ++i) diag += std::norm(h(i, i));
    if (off <= 1e-30 * (diag + off) || off == 0.0) break;

    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const cplx hpq = h(p, q);
        const double apq = std::abs(hpq);
        if (apq == 0.0) continue;
        const double app = h(p, p).real();
        const double aqq = h(q, q).real();
        // Complex Jacobi rotation zeroing h(p,q).
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const cplx s = (t * c) * (hpq / apq);
        // Apply J^* H J with J acting on rows/cols p,q.
        for (int k = 0; k < 4; ++k) {
          const cplx hkp = h(k, p), hkq = h(k, q);
          h(k, p) = c * hkp - std::conj(s) * hkq;
          h(k, q) = s * hkp + c * hkq;
        }
        for (int k = 0; k < 4; ++k) {
          const cplx hpk = h(p, k), hqk = h(q, k);
          h(p, k) = c * hpk - s * hqk;
          h(q, k) = std::conj(s) * hpk + c * hqk;
        }
      }
    }
  }
  return {h(0, 0).real(), h(1, 1).real(), h(2, 2).real(), h(3, 3).real()};
}

std::vector<double> gram_eigs_to_singulars(std::vector<double> lam, double gram_scale) {
  const double clamp = 1e-14 * gram_scale;
  for (double& l : lam) {
    if (l < 0.0 && l > -clamp) l = 0.0;
    if (l < 0.0) l = 0.0;  // beyond-threshold negatives are rounding of exact zeros
  }
  std::vector<double> s(lam.size());
  std::transform(lam.begin(), lam.end(), s.begin(), [](double l) { return std::sqrt(l); });
  std::sort(s.begin(), s.end(), std::greater<double>());
  return s;
}

}  // namespace

std::vector<double> singular_values(const CMat& a) {
  if (!a.is_finite()) throw Error("singular_values: non-finite input");
  const bool two_cols = a.cols() == 2;
  const bool two_rows = a.rows() == 2;

  if (two_cols || two_rows) {
    const CMat b = two_cols ? a : a.adjoint();   // sigma(A) = sigma(A*)
    const CMat g = b.adjoint() * b;              // 2x2 Hermitian PSD
    const double p = g(0, 0).real(), r = g(1, 1).real();
    const auto lam = herm2_eig(p, g(0, 1), r);
    return gram_eigs_to_singulars({lam[0], lam[1]}, std::max(std::abs(lam[0]), std::abs(lam[1])));
  }

  // 4x4. Hermitian inputs (projectors, assembled rotations) go through the
  // eigenvalues directly; squaring through the Gram would put an ~1e-8 floor
  // under the zero singular values.
  if (a.hermitian_defect() <= 1e-14 * a.frob()) {
    const auto lam = herm4_eig(a);
    std::vector<double> s{std::abs(lam[0]), std::abs(lam[1]), std::abs(lam[2]),
                          std::abs(lam[3])};
    std::sort(s.begin(), s.end(), std::greater<double>());
    return s;
  }
  const CMat g = a.adjoint() * a;
  const auto lam = herm4_eig(g);
  double scale = 0.0;
  for (double l : lam) scale = std::max(scale, std::abs(l));
  return gram_eigs_to_singulars({lam[0], lam[1], lam[2], lam[3]}, scale);
}

double schatten(const CMat& a, double q) {
  if (!(q >= 1.0)) throw InvalidNorm("schatten: q must be >= 1");
  const auto s = singular_values(a);
  const double smax = s.front();
  if (smax == 0.0) return 0.0;
  double acc = 0.0;
  for (double v : s) acc += std::pow(v / smax, q);
  return smax * std::pow(acc, 1.0 / q);
}

double op_norm(const CMat& a) { return singular_values(a).front(); }

CMat col_projector(const CMat& m) {
  if (m.rows() != 4 || m.cols() != 2) throw Error("col_projector: expected 4x2");
  if (!m.is_real(0.0)) throw Error("col_projector: expected real entries");
  if (!m.is_finite()) throw Error("col_projector: non-finite input");

  // Rank test on the column-normalized Gram, so boundary-going stacks with
  // tiny but independent columns still pass; only near-parallel columns are
  // rejected.
  const CMat g = m.adjoint() * m;
  const double n1 = std::sqrt(g(0, 0).real());
  const double n2 = std::sqrt(g(1, 1).real());
  if (n1 == 0.0 || n2 == 0.0) throw RankDeficient("col_projector: zero column");
  const RealSym2 gs{1.0, 0.5 * (g(0, 1).real() + g(1, 0).real()) / (n1 * n2), 1.0};
  if (gs.min_eig() <= 1e-12 * gs.frob())
    throw RankDeficient("col_projector: M^t M nearly singular");

  // Build an orthonormal basis of the span by modified Gram-Schmidt with one
  // reorthogonalization pass, then P = Q Q^t. Algebraically identical to
  // M (M^t M)^{-1} M^t but does not square the condition number.
  std::array<std::array<double, 4>, 2> q{};
  for (int col = 0; col < 2; ++col) {
    std::array<double, 4> w{};
    for (int i = 0; i < 4; ++i) w[i] = m(i, col).real();
    for (int pass = 0; pass < 2; ++pass) {
      for (int prev = 0; prev < col; ++prev) {
        double dot = 0.0;
        for (int i = 0; i < 4; ++i) dot += q[prev][i] * w[i];
        for (int i = 0; i < 4; ++i) w[i] -= dot * q[prev][i];
      }
    }
    double nrm = 0.0;
    for (int i = 0; i < 4; ++i) nrm += w[i] * w[i];
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) throw RankDeficient("col_projector: dependent columns");
    for (int i = 0; i < 4; ++i) q[col][i] = w[i] / nrm;
  }

  CMat p(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      p(i, j) = q[0][i] * q[0][j] + q[1][i] * q[1][j];
  return p;
}

}  // namespace siegel::mat
