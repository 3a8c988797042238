#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "fg/moebius.hpp"
#include "fg/representation.hpp"
#include "fg/surface.hpp"

namespace testing {

using fg::Complex;
using fg::moebius::Moebius;

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Complex random_complex(std::mt19937_64& rng, double r = 2.0) {
  return {uniform(rng, -r, r), uniform(rng, -r, r)};
}

inline Moebius random_moebius(std::mt19937_64& rng) {
  for (;;) {
    const Complex a = random_complex(rng), b = random_complex(rng), c = random_complex(rng), d = random_complex(rng);
    if (std::abs(a * d - b * c) > 0.3) return Moebius(a, b, c, d);
  }
}

// Upper half-plane distance, written out.
inline double h2_distance(Complex z, Complex w) {
  return std::acosh(1.0 + std::norm(z - w) / (2.0 * z.imag() * w.imag()));
}

// Upper half-space distance, written out.
inline double h3_distance(Complex z, double t, Complex w, double s) {
  return std::acosh(1.0 + (std::norm(z - w) + (t - s) * (t - s)) / (2.0 * t * s));
}

// Coordinates |x| = e^U[-1,1]; with bend, arguments +-U[0.2, pi-0.2].
inline fg::representation::FGCoordinates random_coordinates(std::mt19937_64& rng, int edges, bool bend) {
  fg::representation::FGCoordinates x;
  for (int e = 0; e < edges; ++e) {
    const double r = std::exp(uniform(rng, -1.0, 1.0));
    if (!bend) {
      x.values.emplace_back(r);
      continue;
    }
    const double sign = (rng() & 1) ? 1.0 : -1.0;
    x.values.push_back(std::polar(r, sign * uniform(rng, 0.2, std::numbers::pi - 0.2)));
  }
  return x;
}

inline double max_entry_distance(const std::vector<Moebius>& a, const std::vector<Moebius>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, a[i].projective_distance(b[i]));
  return worst;
}

}  // namespace testing
