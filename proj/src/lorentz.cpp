#include "maxsurf/lorentz.hpp"

#include <stdexcept>

namespace maxsurf {

const char* to_string(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::Spacelike:
      return "spacelike";
    case CausalCharacter::Timelike:
      return "timelike";
    case CausalCharacter::Lightlike:
      return "lightlike";
  }
  return "unknown";
}

double default_causal_tolerance(const Vec3R& v) { return 1e-10 * (1.0 + euclid_dot(v, v)); }

CausalCharacter causal_character(const Vec3R& v, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("causal_character: tolerance must be positive");
  const double q = lorentz_dot(v, v);
  if (q > tol) return CausalCharacter::Spacelike;
  if (q < -tol) return CausalCharacter::Timelike;
  return CausalCharacter::Lightlike;
}

CausalCharacter causal_character(const Vec3R& v) {
  return causal_character(v, default_causal_tolerance(v));
}

}  // namespace maxsurf
