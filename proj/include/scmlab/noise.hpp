#pragma once

#include <string>
#include <variant>

#include "scmlab/errors.hpp"
#include "scmlab/rng.hpp"

namespace scmlab {

struct GaussianNoise {
  double mean = 0.0;
  double variance = 1.0;
};

// scale * chi2(df) + shift, e.g. chi2(1, 1000, -1000) has mean 0.
struct Chi2Noise {
  int df = 1;
  double scale = 1.0;
  double shift = 0.0;
};

struct DegenerateNoise {
  double value = 0.0;
};

using NoiseDistribution = std::variant<GaussianNoise, Chi2Noise, DegenerateNoise>;

inline NoiseDistribution gaussian(double mean, double variance) {
  if (!(variance >= 0.0)) throw ValidationError("gaussian noise: variance must be >= 0");
  return GaussianNoise{mean, variance};
}

inline NoiseDistribution chi_squared(int df, double scale, double shift) {
  if (df < 1) throw ValidationError("chi-squared noise: df must be >= 1");
  return Chi2Noise{df, scale, shift};
}

inline NoiseDistribution degenerate(double value) { return DegenerateNoise{value}; }

inline double noise_mean(const NoiseDistribution& d) {
  if (const auto* g = std::get_if<GaussianNoise>(&d)) return g->mean;
  if (const auto* c = std::get_if<Chi2Noise>(&d)) return c->scale * c->df + c->shift;
  return std::get<DegenerateNoise>(d).value;
}

inline double noise_variance(const NoiseDistribution& d) {
  if (const auto* g = std::get_if<GaussianNoise>(&d)) return g->variance;
  if (const auto* c = std::get_if<Chi2Noise>(&d)) return c->scale * c->scale * 2.0 * c->df;
  return 0.0;
}

// Uniform draws consumed per realization; fixed so counter-based streams can
// be positioned per unit.
inline int noise_draw_count(const NoiseDistribution& d) {
  if (std::holds_alternative<GaussianNoise>(d)) return 1;
  if (const auto* c = std::get_if<Chi2Noise>(&d)) return c->df;
  return 0;
}

// Chi-squared(df) is drawn as the sum of df squared standard normals.
inline double draw_noise(const NoiseDistribution& d, RngStream& stream) {
  if (const auto* g = std::get_if<GaussianNoise>(&d)) {
    return g->mean + std::sqrt(g->variance) * stream.next_normal();
  }
  if (const auto* c = std::get_if<Chi2Noise>(&d)) {
    double sum = 0.0;
    for (int i = 0; i < c->df; ++i) {
      const double z = stream.next_normal();
      sum += z * z;
    }
    return c->scale * sum + c->shift;
  }
  return std::get<DegenerateNoise>(d).value;
}

}  // namespace scmlab
