#pragma once

#include <optional>
#include <span>
#include <utility>

#include "combdyn/pattern.hpp"

namespace combdyn {

/// One leg of an itinerary: the point must lie in [lo, hi] and is then sent
/// through map.
struct ItineraryStep {
  Affine map;
  Rational lo;
  Rational hi;
};

/// Composition of all legs, first leg applied first.
Affine compose(std::span<const ItineraryStep> steps);

/// {x : every iterate lies in its leg's interval}, as a closed interval.
std::optional<std::pair<Rational, Rational>> cylinder(std::span<const ItineraryStep> steps);

}  // namespace combdyn
