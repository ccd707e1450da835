#include "evasion/rng.hpp"

#include <cmath>

#include "evasion/errors.hpp"

namespace evasion {

double SeededGenerator::gamma(double shape, double scale) {
  if (!(shape >= 1.0)) {
    throw InvalidParameter("gamma sampler requires shape >= 1");
  }
  if (!(scale > 0.0)) {
    throw InvalidParameter("gamma sampler requires scale > 0");
  }
  // Marsaglia & Tsang (2000): squeeze-accelerated rejection from a squashed
  // normal. Expected acceptance rate is above 95% for shape >= 1.
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform01();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return scale * d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return scale * d * v;
  }
}

}  // namespace evasion
