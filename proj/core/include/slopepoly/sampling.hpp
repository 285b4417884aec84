#pragma once

#include <cstdint>
#include <random>

#include "slopepoly/cyclic_duality.hpp"
#include "slopepoly/geometry.hpp"

namespace slopepoly {

/// Independent generator for trial `index` of a seeded run. The stream does
/// not depend on how trials are scheduled across threads.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform random directions, rejecting systems where two lines are closer
/// than `min_separation` radians.
SlopeSystem random_slope_system(std::mt19937_64& rng, std::size_t n,
                                double min_separation = deg_to_rad(3.0));

/// Directions sorted counterclockwise with every consecutive turn below pi:
/// the edge directions of a convex counterclockwise polygon.
SlopeSystem random_convex_slope_system(std::mt19937_64& rng, std::size_t n,
                                       double min_separation = deg_to_rad(3.0));

struct CyclicSamplerOptions {
  /// Minimum distance of each central increment from 0, pi and 2*pi.
  double min_gap = 0.05;
  /// Minimum separation of tangent lines at any two vertices.
  double min_line_separation = deg_to_rad(3.0);
  /// Rejects |sum eps tan alpha| below this fraction of sum tan alpha.
  double min_relative_bifurcation = 0.02;
  /// Probability of drawing a star-shaped polygon (winding >= 2) when n >= 5.
  double star_probability = 0.35;
};

/// Random generic cyclic polygon: non-bifurcating, with a well-defined dual.
CyclicPolygon random_cyclic_polygon(std::mt19937_64& rng, std::size_t n,
                                    const CyclicSamplerOptions& options = {});

}  // namespace slopepoly
