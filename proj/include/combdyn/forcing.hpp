#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "combdyn/pattern.hpp"
#include "combdyn/rotation.hpp"
#include "combdyn/sharkovsky.hpp"

namespace combdyn {

/// Closed walk in a Markov graph, stored as its lexicographically least
/// rotation. Vertices are 0-based P-interval indices.
struct Loop {
  std::vector<std::size_t> vertices;

  std::size_t length() const { return vertices.size(); }
  /// 1-based text form, e.g. "(1 2 2)".
  std::string str() const;
  friend bool operator==(const Loop&, const Loop&) = default;
  friend auto operator<=>(const Loop& a, const Loop& b) {
    if (auto c = a.vertices.size() <=> b.vertices.size(); c != 0) return c;
    return a.vertices <=> b.vertices;
  }
};

/// A periodic orbit with exact coordinates, listed in dynamical order.
struct ExactCycle {
  std::vector<Rational> points;
  int period = 0;
  Pattern pattern{std::vector<int>{1}};
  /// The orbit is one representative of an interval of periodic points that
  /// all share its pattern (compositions with slope +1, or -1 traversed twice).
  bool continuum = false;
};

/// True iff vertices, read cyclically, is its own least rotation and not a
/// repetition of a shorter word.
bool is_canonical_primitive(const std::vector<std::size_t>& vertices);

/// Every canonical primitive loop of length <= max_length, ordered by length
/// and then lexicographically.
std::vector<Loop> enumerate_loops(const TransitionMatrix& matrix, int max_length);

/// The fixed point of the loop's affine composition and its orbit.
/// Composition x -> a x + b along the loop:
///   a != 1         unique fixed point b / (1 - a), kept if it lies in the
///                  loop's cylinder and its minimal period equals the length;
///   a == 1, b == 0 the whole cylinder is periodic, a representative interior
///                  point is returned with continuum set;
///   a == 1, b != 0 no periodic point.
/// Orbits through a breakpoint are kept only if they are the breakpoint cycle.
std::optional<ExactCycle> resolve_loop(const PLMap& map, const Loop& loop);

/// For a loop whose composition has slope -1: the period-2L family around the
/// fixed point, represented by the point halfway between the cylinder's left
/// end and the fixed point. Empty for any other slope.
std::optional<ExactCycle> resolve_doubled_loop(const PLMap& map, const Loop& loop);

/// All cycles of the P-linear map of the pattern with period <= max_period,
/// one per orbit (one representative per continuum), sorted by period and
/// then by pattern.
std::vector<ExactCycle> enumerate_cycles(const Pattern& pattern, int max_period);

/// Patterns of all cycles of the P-linear map with period <= max_period.
std::vector<Pattern> forced_cycles(const Pattern& pattern, int max_period);

/// a forces b: the P-linear map of a has a cycle with pattern b.
bool forces(const Pattern& a, const Pattern& b);

/// Minimal periods of all cycles of the P-linear map, up to cap.
std::vector<int> periods(const Pattern& pattern, int cap);

/// Spiral cycle of odd period m >= 3 whose period set is S(m).
Pattern stefan_pattern(int m);

/// Period doubling: the left half maps order-reversingly onto the right half
/// and the right half returns by sigma, so the periods become {1} and 2 P(sigma).
Pattern double_pattern(const Pattern& pattern);

/// Pattern whose P-linear map has period set S(n); rejects 2^inf.
Pattern realizing_pattern(const SharkovskyElement& n);
PLMap realize_period_set(const SharkovskyElement& n);

bool is_primary(const Pattern& pattern);

/// No forced pattern of period <= cap, other than the pattern itself, shares
/// its over-rotation number. Only a bounded check: a same-number pattern of
/// longer period would go unnoticed.
bool is_twist_up_to(const Pattern& pattern, int cap);

struct PeriodSelector {
  int period;
};
struct PairSelector {
  OverRotationPair pair;
};
using PatternSelector = std::variant<PeriodSelector, PairSelector>;

struct EntropyMinimizer {
  Pattern pattern;
  double entropy;
};

/// Exhaustive search over flip-canonical patterns matching the selector;
/// ties go to the lexicographically smallest pattern. Empty when no pattern
/// matches. Rejects periods above period_bound.
std::optional<EntropyMinimizer> min_entropy_search(const PatternSelector& selector, int period_bound = 10);

struct ForcingPoset {
  std::vector<Pattern> nodes;
  /// (i, j): nodes[i] forces nodes[j], i != j.
  std::vector<std::pair<std::size_t, std::size_t>> relation;
  /// Transitive reduction of relation.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

/// Forcing among all patterns of period <= max_period (at most 7).
ForcingPoset forcing_poset(int max_period);

}  // namespace combdyn
