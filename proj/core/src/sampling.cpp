#include "slopepoly/sampling.hpp"

#include <algorithm>

#include "slopepoly/errors.hpp"

namespace slopepoly {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in [0, 1) from the top 53 bits; portable across standard libraries.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

bool lines_separated(const std::vector<double>& angles, double min_separation) {
  for (std::size_t i = 0; i < angles.size(); ++i) {
    for (std::size_t j = i + 1; j < angles.size(); ++j) {
      double d = std::fmod(std::abs(angles[i] - angles[j]), kPi);
      if (std::min(d, kPi - d) < min_separation) return false;
    }
  }
  return true;
}

constexpr int kMaxAttempts = 100000;

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ index));
}

SlopeSystem random_slope_system(std::mt19937_64& rng, std::size_t n, double min_separation) {
  std::vector<double> angles(n);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    for (double& a : angles) a = uniform(rng, 0.0, kTwoPi);
    if (lines_separated(angles, min_separation)) return SlopeSystem::from_radians(angles);
  }
  throw GeometryError(ErrorCode::InvalidInput, "could not sample a separated slope system");
}

SlopeSystem random_convex_slope_system(std::mt19937_64& rng, std::size_t n, double min_separation) {
  std::vector<double> angles(n);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    for (double& a : angles) a = uniform(rng, 0.0, kTwoPi);
    std::sort(angles.begin(), angles.end());
    bool convex = true;
    for (std::size_t i = 0; i < n; ++i) {
      const double turn = wrap_two_pi(angles[(i + 1) % n] - angles[i]);
      if (turn >= kPi - min_separation) convex = false;
    }
    if (convex && lines_separated(angles, min_separation)) {
      // random cyclic relabelling so slope 0 is not always the smallest angle
      const auto shift = static_cast<std::ptrdiff_t>(rng() % n);
      std::rotate(angles.begin(), angles.begin() + shift, angles.end());
      return SlopeSystem::from_radians(angles);
    }
  }
  throw GeometryError(ErrorCode::InvalidInput, "could not sample a convex slope system");
}

CyclicPolygon random_cyclic_polygon(std::mt19937_64& rng, std::size_t n,
                                    const CyclicSamplerOptions& options) {
  std::vector<double> phis(n);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const double radius = uniform(rng, 0.5, 2.0);
    const Vec2 center{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
    const bool star = n >= 5 && uniform01(rng) < options.star_probability;
    if (star) {
      const auto max_winding = static_cast<int>((n - 1) / 2);
      const int w = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_winding - 1));
      const double step = kTwoPi * w / static_cast<double>(n);
      const double jitter = 0.35 * kTwoPi / static_cast<double>(n);
      const double start = uniform(rng, 0.0, kTwoPi);
      for (std::size_t i = 0; i < n; ++i) {
        phis[i] = start + step * static_cast<double>(i) + uniform(rng, -jitter, jitter);
      }
    } else {
      for (double& p : phis) p = uniform(rng, 0.0, kTwoPi);
    }

    bool ok = true;
    double bif = 0.0;
    double tan_sum = 0.0;
    std::vector<double> signed_tan(n);
    for (std::size_t i = 0; i < n && ok; ++i) {
      const double d = wrap_two_pi(phis[(i + 1) % n] - phis[i]);
      if (d < options.min_gap || kTwoPi - d < options.min_gap || std::abs(d - kPi) < options.min_gap) {
        ok = false;
        break;
      }
      const double t = std::tan(0.5 * std::min(d, kTwoPi - d));
      signed_tan[i] = d < kPi ? t : -t;
      bif += signed_tan[i];
      tan_sum += t;
    }
    if (!ok || std::abs(bif) < options.min_relative_bifurcation * tan_sum) continue;
    // dual edges must have nonzero length
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (std::abs(signed_tan[i] + signed_tan[(i + n - 1) % n]) <
          options.min_relative_bifurcation * tan_sum / static_cast<double>(n)) {
        ok = false;
      }
    }
    if (!ok || !lines_separated(phis, options.min_line_separation)) continue;
    return CyclicPolygon(center, radius, phis);
  }
  throw GeometryError(ErrorCode::InvalidInput, "could not sample a generic cyclic polygon");
}

}  // namespace slopepoly
