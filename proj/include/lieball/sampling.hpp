#pragma once

#include <cstdint>
#include <random>

#include "lieball/domains.hpp"

namespace lieball {

/// Seeded source of sample points and random group data. All draws go through
/// one mt19937_64 so a seed fixes every sample sequence.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  double normal();
  Complex complex_normal();

  /// Uniform point of the polydisc {|z_j| < radius}.
  Point polydisc(int dim, double radius);
  /// Polydisc draws rejected into the interior of `d` (bounded kinds and the
  /// generalized ball). Throws NoConvergence after `max_tries` rejections.
  Point interior(const DomainSpec& d, double radius, int max_tries = 100000);
  /// Uniform point on the unit sphere of C^n.
  Point sphere(int n);
  /// Point on the smooth stratum of the Type IV boundary (m >= 2).
  Point type_iv_smooth_boundary(int m);
  /// Boundary point: sphere, generalized-ball hypersurface, smooth Type IV
  /// stratum, or a Heisenberg model point with |z| <= radius and |u| <= radius^2.
  Point boundary(const DomainSpec& d, double radius = 0.5);

  RealMatrix orthogonal(int n);
  ComplexMatrix unitary(int n);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace lieball
