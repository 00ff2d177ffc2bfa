#include "combdyn/rotation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "combdyn/error.hpp"
#include "combdyn/forcing.hpp"
#include "combdyn/sharkovsky.hpp"

namespace combdyn {

OverRotationPair::OverRotationPair(long p, long q) : p_(p), q_(q) {
  if (q < 2) throw DomainError("over-rotation pairs need period >= 2");
  if (p < 1 || 2 * p > q) {
    throw DomainError("invalid over-rotation pair " + str() + ": need 1 <= p <= q/2");
  }
}

OverRotationPair over_rotation_pair(const Pattern& pattern) {
  const int q = pattern.period();
  if (q < 2) throw DomainError("fixed points have no over-rotation pair");
  // walk the orbit 1, sigma(1), ... and count sign changes of sigma(x) - x
  std::vector<bool> up;
  int x = 1;
  for (int t = 0; t < q; ++t) {
    up.push_back(pattern(x) > x);
    x = pattern(x);
  }
  long changes = 0;
  for (int t = 0; t < q; ++t) {
    if (up[static_cast<std::size_t>(t)] != up[static_cast<std::size_t>((t + 1) % q)]) ++changes;
  }
  return OverRotationPair(changes / 2, q);
}

Rational over_rotation_number(const Pattern& pattern) { return over_rotation_pair(pattern).number(); }

OrpOrder orp_compare(const OverRotationPair& a, const OverRotationPair& b) {
  if (a == b) return OrpOrder::Equal;
  const Rational ra = a.number(), rb = b.number();
  if (ra != rb) return ra < rb ? OrpOrder::AForcesB : OrpOrder::BForcesA;
  const long k = rb.denominator_i64();
  const auto c = sharkovsky_compare(static_cast<std::uint64_t>(a.q() / k), static_cast<std::uint64_t>(b.q() / k));
  return c == std::strong_ordering::greater ? OrpOrder::AForcesB : OrpOrder::BForcesA;
}

std::vector<Rational> over_rotation_spectrum(const Pattern& pattern, int cap) {
  if (cap < 2) throw DomainError("spectrum cap must be >= 2");
  std::set<Rational> out;
  for (const auto& b : forced_cycles(pattern, cap)) {
    if (b.period() >= 2) out.insert(over_rotation_number(b));
  }
  return {out.begin(), out.end()};
}

}  // namespace combdyn
