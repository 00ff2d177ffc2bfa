#include "combdyn/itinerary.hpp"

namespace combdyn {

Affine compose(std::span<const ItineraryStep> steps) {
  Affine acc{Rational(1), Rational(0)};
  for (const auto& step : steps) acc = step.map.after(acc);
  return acc;
}

std::optional<std::pair<Rational, Rational>> cylinder(std::span<const ItineraryStep> steps) {
  if (steps.empty()) return std::nullopt;
  Rational lo = steps.front().lo, hi = steps.front().hi;
  Affine acc{Rational(1), Rational(0)};
  for (const auto& step : steps) {
    // constraint: step.lo <= acc(x) <= step.hi
    const int s = acc.slope.sign();
    if (s == 0) {
      if (acc.intercept < step.lo || acc.intercept > step.hi) return std::nullopt;
    } else {
      Rational a = (step.lo - acc.intercept) / acc.slope;
      Rational b = (step.hi - acc.intercept) / acc.slope;
      if (s < 0) std::swap(a, b);
      if (a > lo) lo = a;
      if (b < hi) hi = b;
    }
    if (lo > hi) return std::nullopt;
    acc = step.map.after(acc);
  }
  return std::make_pair(lo, hi);
}

}  // namespace combdyn
