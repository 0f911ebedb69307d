#pragma once

#include <cstdint>

#include "siegel/halfspace.hpp"

// Deterministic, platform-independent sampling. xoshiro256++ (Blackman/Vigna),
// seeded through splitmix64; uniform doubles take the top 53 bits. The stream
// is a pure function of the seed, so seeded runs are reproducible bit-for-bit
// on any IEEE-754 platform.

namespace siegel::rng {

class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) {
    // splitmix64 expansion of the seed
    std::uint64_t x = seed;
    for (auto& word : s_) {
      x += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      word = z ^ (z >> 31);
    }
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }
  std::uint64_t s_[4];
};

// Sampling distribution for random interior points: X = (A + A^t)/2 with
// entries of A uniform in [-2, 2]; Y = B B^t + 1e-2 I with entries of B
// uniform in [-1, 1]. Draw order is row-major A then row-major B.
inline geo::SiegelPoint sample_interior_point(Xoshiro256pp& g) {
  double a[4], b[4];
  for (double& v : a) v = g.uniform(-2.0, 2.0);
  for (double& v : b) v = g.uniform(-1.0, 1.0);
  const mat::RealSym2 x{a[0], 0.5 * (a[1] + a[2]), a[3]};
  const mat::RealSym2 y{b[0] * b[0] + b[1] * b[1] + 1e-2,
                        b[0] * b[2] + b[1] * b[3],
                        b[2] * b[2] + b[3] * b[3] + 1e-2};
  return geo::SiegelPoint::interior(x, y);
}

inline mat::Rotation2 sample_rotation(Xoshiro256pp& g) {
  return mat::Rotation2::from_angle(g.uniform(0.0, 3.141592653589793));
}

// Symmetric boundary ball point V diag(e^{i phi}, w) V^t with |w| <= 1, so the
// largest singular value is exactly 1.
inline geo::BallPoint sample_boundary_ball_point(Xoshiro256pp& g) {
  const mat::Rotation2 v = sample_rotation(g);
  const double phi = g.uniform(0.0, 6.283185307179586);
  const double rw = g.uniform(0.0, 1.0);
  const double aw = g.uniform(0.0, 6.283185307179586);
  const mat::cplx d0(std::cos(phi), std::sin(phi));
  const mat::cplx d1 = rw * mat::cplx(std::cos(aw), std::sin(aw));
  mat::CMat w(2, 2);
  const mat::Mat2 vm{v.c, -v.s, v.s, v.c};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      w(i, j) = vm(i, 0) * d0 * vm(j, 0) + vm(i, 1) * d1 * vm(j, 1);
  return geo::BallPoint::from(w);
}

}  // namespace siegel::rng
