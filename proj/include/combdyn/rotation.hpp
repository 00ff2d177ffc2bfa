#pragma once

#include <string>
#include <vector>

#include "combdyn/pattern.hpp"
#include "combdyn/rational.hpp"

namespace combdyn {

/// (p, q): q the period, p half the number of sign changes of f(x) - x along
/// the orbit. Kept unreduced; (1, 4) and (2, 8) are different pairs.
class OverRotationPair {
 public:
  /// Requires q >= 2, p >= 1 and 2p <= q.
  OverRotationPair(long p, long q);

  long p() const { return p_; }
  long q() const { return q_; }
  Rational number() const { return Rational(p_, q_); }
  std::string str() const { return "(" + std::to_string(p_) + "," + std::to_string(q_) + ")"; }

  friend bool operator==(const OverRotationPair&, const OverRotationPair&) = default;

 private:
  long p_;
  long q_;
};

OverRotationPair over_rotation_pair(const Pattern& pattern);
Rational over_rotation_number(const Pattern& pattern);

enum class OrpOrder { AForcesB, BForcesA, Equal };

/// Forcing between over-rotation pairs. A smaller ratio forces a larger one
/// (spectra are intervals reaching up to 1/2); on equal ratios with reduced
/// denominator k the pair whose q/k is Sharkovsky-greater forces the other.
OrpOrder orp_compare(const OverRotationPair& a, const OverRotationPair& b);

/// Over-rotation numbers of all forced patterns of period 2..cap, ascending.
std::vector<Rational> over_rotation_spectrum(const Pattern& pattern, int cap);

}  // namespace combdyn
