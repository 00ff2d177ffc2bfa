#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "combdyn/pattern.hpp"
#include "combdyn/rational.hpp"
#include "combdyn/sharkovsky.hpp"

namespace combdyn {

/// Piecewise-linear lift F of a degree-one circle map, given by breakpoints
/// 0 <= t_1 < ... < t_n < 1 and values F(t_i). F is affine between breakpoints
/// and on the wrap piece [t_n, t_1 + 1], where F(t_1 + 1) = F(t_1) + 1.
class LiftedCircleMap {
 public:
  LiftedCircleMap(std::vector<Rational> breakpoints, std::vector<Rational> values);

  /// Vertices (x, F(x)) of one period, in any position on the line; they are
  /// folded into [0, 1) and sorted.
  static LiftedCircleMap from_vertices(std::vector<std::pair<Rational, Rational>> vertices);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t pieces() const { return breakpoints_.size(); }

  /// Piece i covers [t_i, t_{i+1}] with t_{n+1} = t_1 + 1 (0-based i).
  Rational piece_left(std::size_t i) const;
  Rational piece_right(std::size_t i) const;
  Affine branch(std::size_t i) const;

  Rational operator()(const Rational& x) const;
  bool is_nondecreasing() const;
  /// Some x with F(x) = y; precondition: is_nondecreasing().
  Rational preimage(const Rational& y) const;

  /// F + d.
  LiftedCircleMap shifted(const Rational& d) const;
  /// x -> -F(-x); swaps the roles of the two monotone envelopes.
  LiftedCircleMap reflected() const;

 private:
  Rational value_at_vertex(std::size_t i) const;  // i in [0, n]

  std::vector<Rational> breakpoints_;
  std::vector<Rational> values_;
};

/// F_u(x) = max{F(y) : y <= x}.
LiftedCircleMap upper_envelope(const LiftedCircleMap& lift);
/// F_l(x) = min{F(y) : y >= x}.
LiftedCircleMap lower_envelope(const LiftedCircleMap& lift);

/// Sign of rho(G) - p/q for a nondecreasing lift G: decided exactly by
/// whether G^q(x) - x - p changes sign, evaluated at every breakpoint of G^q.
int rotation_sign(const LiftedCircleMap& monotone, const Rational& p, long q);

/// Rotation number of a nondecreasing lift: exact when the Stern-Brocot
/// search finds it, otherwise a certified enclosure.
struct RotationNumber {
  std::optional<Rational> exact;
  Rational lower;  // certified bounds; both equal *exact when exact
  Rational upper;

  bool is_exact() const { return exact.has_value(); }
  double width() const { return (upper - lower).to_double(); }
  std::string str() const;
};

struct SternBrocotOptions {
  double tolerance = 1e-9;
  long max_denominator = 1'000'000;
};

RotationNumber monotone_rotation_number(const LiftedCircleMap& monotone, const SternBrocotOptions& options = {});

/// Certified bounds (G^n(0) - 1)/n <= rho <= (G^n(0) + 1)/n from n exact iterations.
std::pair<Rational, Rational> iteration_enclosure(const LiftedCircleMap& monotone, int iterations);

struct RotationInterval {
  RotationNumber lower;
  RotationNumber upper;
};

/// [rho(F_l), rho(F_u)]; endpoints exact where Stern-Brocot succeeds.
RotationInterval rotation_interval(const LiftedCircleMap& lift, double tolerance = 1e-9);

/// Average displacement F(y) - y over the cycle through the given points of
/// [0, 1). Throws DomainError unless the points form one cycle.
Rational rotation_number_of_cycle(const LiftedCircleMap& lift, std::span<const Rational> points);

struct CircleCycle {
  std::vector<Rational> points;  // in [0, 1), dynamical order
  int period = 0;
  Rational rotation_number;
  /// Representative of an interval of periodic points (e.g. rigid rotations).
  bool continuum = false;
};

/// All cycles of the projected map with period <= cap, found by solving the
/// affine fixed-point equation along every admissible branch itinerary.
std::vector<CircleCycle> enumerate_circle_cycles(const LiftedCircleMap& lift, int cap);

/// Periods of a degree-one map with rotation interval [lower, upper] and the
/// given Sharkovsky choices at the endpoints: denominators q <= cap of
/// fractions strictly inside the interval, plus q1 * S(left) and q2 * S(right)
/// for the reduced endpoint denominators. A degenerate interval uses only
/// the left choice.
std::vector<std::uint64_t> circle_period_set(const Rational& lower, const Rational& upper,
                                             const SharkovskyElement& left, const SharkovskyElement& right,
                                             std::uint64_t cap);

/// Same, from a computed interval; both endpoints must be exact.
std::vector<std::uint64_t> circle_period_set(const RotationInterval& interval, const SharkovskyElement& left,
                                             const SharkovskyElement& right, std::uint64_t cap);

}  // namespace combdyn
