#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "siegel/errors.hpp"

// Closed-form dense linear algebra for the small shapes this library needs:
// real symmetric 2x2, rotations, general real 2x2, and complex matrices of
// size 2x2, 4x2, 2x4 and 4x4.

namespace siegel::mat {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Real symmetric 2x2, stored as the three independent entries.
struct RealSym2 {
  double xx = 0.0;  // (0,0)
  double xy = 0.0;  // (0,1) == (1,0)
  double yy = 0.0;  // (1,1)

  constexpr RealSym2() = default;
  constexpr RealSym2(double a00, double a01, double a11) : xx(a00), xy(a01), yy(a11) {}

  static constexpr RealSym2 identity() { return {1.0, 0.0, 1.0}; }
  static constexpr RealSym2 diag(double a, double b) { return {a, 0.0, b}; }
  static constexpr RealSym2 zero() { return {}; }

  double operator()(int i, int j) const { return i == j ? (i == 0 ? xx : yy) : xy; }

  RealSym2 operator+(const RealSym2& o) const { return {xx + o.xx, xy + o.xy, yy + o.yy}; }
  RealSym2 operator-(const RealSym2& o) const { return {xx - o.xx, xy - o.xy, yy - o.yy}; }
  RealSym2 operator*(double s) const { return {xx * s, xy * s, yy * s}; }
  RealSym2 operator-() const { return {-xx, -xy, -yy}; }

  double trace() const { return xx + yy; }
  double det() const { return xx * yy - xy * xy; }
  double frob() const { return std::sqrt(xx * xx + 2.0 * xy * xy + yy * yy); }
  // Eigenvalues {hi, lo}. The larger-magnitude one comes from mean +- h,
  // which never cancels; the other comes from det / big, which stays exact
  // for (near-)diagonal matrices with extreme eigenvalue spread, where the
  // textbook mean - h form loses everything.
  std::array<double, 2> eig_pair() const {
    const double mean = 0.5 * (xx + yy);
    const double h = std::hypot(0.5 * (xx - yy), xy);
    const double big = mean >= 0.0 ? mean + h : mean - h;
    const double other = big == 0.0 ? 0.0 : det() / big;
    return {std::max(big, other), std::min(big, other)};
  }
  double min_eig() const { return eig_pair()[1]; }
  double max_eig() const { return eig_pair()[0]; }
  bool is_finite() const { return std::isfinite(xx) && std::isfinite(xy) && std::isfinite(yy); }
};

inline RealSym2 operator*(double s, const RealSym2& m) { return m * s; }

// ---------------------------------------------------------------------------
// Proper rotation (det = +1), columns (c,s) and (-s,c).
struct Rotation2 {
  double c = 1.0;
  double s = 0.0;

  static Rotation2 from_angle(double theta) { return {std::cos(theta), std::sin(theta)}; }
  double angle() const { return std::atan2(s, c); }
  Rotation2 transpose() const { return {c, -s}; }

  double operator()(int i, int j) const {
    return i == 0 ? (j == 0 ? c : -s) : (j == 0 ? s : c);
  }

  // V * diag(d0, d1) * V^t
  RealSym2 conjugate_diag(double d0, double d1) const {
    return {c * c * d0 + s * s * d1, c * s * (d0 - d1), s * s * d0 + c * c * d1};
  }
};

// ---------------------------------------------------------------------------
// General real 2x2.
struct Mat2 {
  std::array<double, 4> a{0.0, 0.0, 0.0, 0.0};  // row major

  Mat2() = default;
  Mat2(double a00, double a01, double a10, double a11) : a{a00, a01, a10, a11} {}
  explicit Mat2(const RealSym2& m) : a{m.xx, m.xy, m.xy, m.yy} {}
  explicit Mat2(const Rotation2& v) : a{v.c, -v.s, v.s, v.c} {}

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  double& operator()(int i, int j) { return a[2 * i + j]; }
  double operator()(int i, int j) const { return a[2 * i + j]; }

  Mat2 operator+(const Mat2& o) const { return {a[0] + o.a[0], a[1] + o.a[1], a[2] + o.a[2], a[3] + o.a[3]}; }
  Mat2 operator-(const Mat2& o) const { return {a[0] - o.a[0], a[1] - o.a[1], a[2] - o.a[2], a[3] - o.a[3]}; }
  Mat2 operator*(double s) const { return {a[0] * s, a[1] * s, a[2] * s, a[3] * s}; }
  Mat2 operator*(const Mat2& o) const {
    return {a[0] * o.a[0] + a[1] * o.a[2], a[0] * o.a[1] + a[1] * o.a[3],
            a[2] * o.a[0] + a[3] * o.a[2], a[2] * o.a[1] + a[3] * o.a[3]};
  }
  Mat2 transpose() const { return {a[0], a[2], a[1], a[3]}; }
  double frob() const { return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]); }
  double asym() const { return std::abs(a[1] - a[2]); }
  RealSym2 symmetric_part() const { return {a[0], 0.5 * (a[1] + a[2]), a[3]}; }
  bool is_finite() const {
    return std::isfinite(a[0]) && std::isfinite(a[1]) && std::isfinite(a[2]) && std::isfinite(a[3]);
  }
};

inline Mat2 operator*(double s, const Mat2& m) { return m * s; }

// ---------------------------------------------------------------------------
// Complex matrix with rows, cols in {2, 4}. Fixed capacity, no allocation.
class CMat {
 public:
  CMat() : rows_(2), cols_(2) {}
  CMat(int rows, int cols) : rows_(rows), cols_(cols) {
    if ((rows != 2 && rows != 4) || (cols != 2 && cols != 4))
      throw Error("CMat: dimensions must be 2 or 4");
  }
  CMat(const RealSym2& m) : rows_(2), cols_(2) {
    (*this)(0, 0) = m.xx; (*this)(0, 1) = m.xy; (*this)(1, 0) = m.xy; (*this)(1, 1) = m.yy;
  }
  CMat(const Mat2& m) : rows_(2), cols_(2) {
    (*this)(0, 0) = m(0, 0); (*this)(0, 1) = m(0, 1); (*this)(1, 0) = m(1, 0); (*this)(1, 1) = m(1, 1);
  }

  static CMat zero(int rows, int cols) { return CMat(rows, cols); }
  static CMat identity(int n) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
  // Z = X + iY
  static CMat complex2(const Mat2& re, const Mat2& im) {
    CMat m(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = cplx(re(i, j), im(i, j));
    return m;
  }
  static CMat vstack(const CMat& top, const CMat& bottom) {
    if (top.cols_ != bottom.cols_ || top.rows_ + bottom.rows_ != 4)
      throw Error("CMat::vstack: incompatible shapes");
    CMat m(4, top.cols_);
    for (int i = 0; i < top.rows_; ++i)
      for (int j = 0; j < top.cols_; ++j) m(i, j) = top(i, j);
    for (int i = 0; i < bottom.rows_; ++i)
      for (int j = 0; j < bottom.cols_; ++j) m(top.rows_ + i, j) = bottom(i, j);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  cplx& operator()(int i, int j) { return a_[4 * i + j]; }
  cplx operator()(int i, int j) const { return a_[4 * i + j]; }

  CMat operator+(const CMat& o) const {
    check_same(o);
    CMat r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j) + o(i, j);
    return r;
  }
  CMat operator-(const CMat& o) const {
    check_same(o);
    CMat r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j) - o(i, j);
    return r;
  }
  CMat operator*(const CMat& o) const {
    if (cols_ != o.rows_) throw Error("CMat: inner dimensions mismatch");
    CMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < o.cols_; ++j) {
        cplx acc = 0.0;
        for (int k = 0; k < cols_; ++k) acc += (*this)(i, k) * o(k, j);
        r(i, j) = acc;
      }
    return r;
  }
  friend CMat operator*(cplx s, const CMat& m) {
    CMat r(m.rows_, m.cols_);
    for (int i = 0; i < m.rows_; ++i)
      for (int j = 0; j < m.cols_; ++j) r(i, j) = s * m(i, j);
    return r;
  }
  friend CMat operator*(double s, const CMat& m) { return cplx(s, 0.0) * m; }

  CMat adjoint() const {
    CMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }
  CMat transpose() const {
    CMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  double frob() const {
    double acc = 0.0;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) acc += std::norm((*this)(i, j));
    return std::sqrt(acc);
  }
  double max_abs() const {
    double m = 0.0;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m = std::max(m, std::abs((*this)(i, j)));
    return m;
  }
  bool is_finite() const {
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        const cplx v = (*this)(i, j);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
      }
    return true;
  }
  bool is_real(double tol = 0.0) const {
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (std::abs((*this)(i, j).imag()) > tol) return false;
    return true;
  }
  double hermitian_defect() const {
    return (*this - adjoint()).frob();
  }
  double symmetry_defect() const {
    return (*this - transpose()).frob();
  }
  CMat symmetrized() const {
    return 0.5 * (*this + transpose());
  }

  // 2x2 only
  cplx det2() const {
    if (rows_ != 2 || cols_ != 2) throw Error("det2: 2x2 only");
    return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
  }
  // Inverse of a 2x2. The singularity test compares |det| against the size of
  // the products it is a difference of, so scale-mixed but well-invertible
  // matrices pass while genuine cancellation is caught.
  bool try_inv2(CMat& out, double rel_tol = 1e-14) const {
    const cplx d = det2();
    const double scale = std::abs((*this)(0, 0)) * std::abs((*this)(1, 1)) +
                         std::abs((*this)(0, 1)) * std::abs((*this)(1, 0));
    if (std::abs(d) <= rel_tol * scale || std::abs(d) == 0.0) return false;
    out = CMat(2, 2);
    out(0, 0) = (*this)(1, 1) / d;
    out(0, 1) = -(*this)(0, 1) / d;
    out(1, 0) = -(*this)(1, 0) / d;
    out(1, 1) = (*this)(0, 0) / d;
    return true;
  }

  Mat2 real_part2() const {
    if (rows_ != 2 || cols_ != 2) throw Error("real_part2: 2x2 only");
    return {(*this)(0, 0).real(), (*this)(0, 1).real(), (*this)(1, 0).real(), (*this)(1, 1).real()};
  }
  Mat2 imag_part2() const {
    if (rows_ != 2 || cols_ != 2) throw Error("imag_part2: 2x2 only");
    return {(*this)(0, 0).imag(), (*this)(0, 1).imag(), (*this)(1, 0).imag(), (*this)(1, 1).imag()};
  }

 private:
  void check_same(const CMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("CMat: shape mismatch");
  }
  int rows_, cols_;
  std::array<cplx, 16> a_{};
};

// ---------------------------------------------------------------------------
// Operations

struct SymEig2 {
  std::array<double, 2> d{};  // descending
  Rotation2 v;                // columns are eigenvectors, det +1
};

// Eigendecomposition of a real symmetric 2x2 by a single rotation.
// d[0] >= d[1]; equal-eigenvalue matrices return the identity rotation; the
// first column is signed so its largest-magnitude entry is positive.
SymEig2 sym_eig2(const RealSym2& m);

// V f(D) V^t. Throws DomainError when f is not finite at an eigenvalue.
RealSym2 apply_spectral(const RealSym2& m, const std::function<double(double)>& f);

// Descending singular values; length min(rows, cols) for 2-column inputs,
// 4 for a 4x4. Tiny negative Gram eigenvalues are clamped to zero.
std::vector<double> singular_values(const CMat& a);

// Schatten q-norm, q >= 1 (InvalidNorm otherwise).
double schatten(const CMat& a, double q);

// Largest singular value.
double op_norm(const CMat& a);

// Orthogonal projector P = M (M^t M)^{-1} M^t onto the column span of a real
// full-rank 4x2 matrix. Throws RankDeficient when M^t M is nearly singular.
CMat col_projector(const CMat& m);

}  // namespace siegel::mat
