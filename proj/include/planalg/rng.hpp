#pragma once

#include <cmath>
#include <cstdint>

#include "planalg/types.hpp"

namespace planalg {

/// Counter-based splittable generator. A stream is keyed by (seed, stream,
/// substream); two streams with different keys are independent, and the draw
/// sequence of a stream depends only on its key. Parallel sampling that
/// assigns one stream per sample index is therefore deterministic no matter
/// how samples are distributed over threads.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream = 0)
      : state_(mix(mix(mix(0x9e3779b97f4a7c15ull ^ seed) + stream) + substream)) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  /// Uniform in [0, 1).
  Real u01() { return static_cast<Real>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  /// Standard complex Gaussian (variance 1 per component), via Box-Muller.
  Complex cgauss() {
    Real u1 = u01();
    while (u1 <= 0) u1 = u01();
    const Real r = std::sqrt(-2.0 * std::log(u1));
    const Real t = 2.0 * kPi * u01();
    return {r * std::cos(t), r * std::sin(t)};
  }

  /// Uniform point on the unit circle.
  Complex unit_phase() {
    const Real t = 2.0 * kPi * u01();
    return {std::cos(t), std::sin(t)};
  }

  /// Area-uniform point in the centered disk of radius rmax.
  Complex disk_point(Real rmax) {
    const Real rho = rmax * std::sqrt(u01());
    return rho * unit_phase();
  }

  /// Point in {rlo + margin <= |z| <= rhi - margin}, radius-uniform.
  Complex annulus_point(Real rlo, Real rhi, Real margin) {
    const Real rho = rlo + margin + (rhi - rlo - 2 * margin) * u01();
    return rho * unit_phase();
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace planalg
