#include "combdyn/forcing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "combdyn/entropy.hpp"
#include "combdyn/error.hpp"
#include "combdyn/itinerary.hpp"

namespace combdyn {

std::string Loop::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vertices[i] + 1);
  }
  return out + ")";
}

bool is_canonical_primitive(const std::vector<std::size_t>& v) {
  const std::size_t n = v.size();
  for (std::size_t r = 1; r < n; ++r) {
    // compare rotation starting at r against the word itself
    int cmp = 0;
    for (std::size_t i = 0; i < n && cmp == 0; ++i) {
      const std::size_t a = v[(r + i) % n], b = v[i];
      cmp = a < b ? -1 : (a > b ? 1 : 0);
    }
    if (cmp <= 0) return false;  // smaller rotation, or a repetition
  }
  return true;
}

namespace {

using Int = __int128;
constexpr Int kMagnitudeLimit = Int(1) << 96;

Int iabs(Int v) { return v < 0 ? -v : v; }

// Depth-first walk over canonical primitive loops of one fixed length,
// carrying the composed branch x -> a x + b of the P-linear map in integers.
class LoopWalker {
 public:
  explicit LoopWalker(const Pattern& pattern)
      : sigma_(pattern.images().begin(), pattern.images().end()), matrix_(markov_graph(pattern)) {
    for (std::size_t i = 0; i < matrix_.size(); ++i) {
      auto& row = successors_.emplace_back();
      for (std::size_t j = 0; j < matrix_.size(); ++j) {
        if (matrix_(i, j)) row.push_back(j);
      }
    }
  }

  /// visit(vertices, a, b, exact) -> bool (false stops the walk). exact is
  /// false when the integer composition left the safe range.
  template <class Visit>
  bool walk(std::size_t length, Visit&& visit) {
    path_.clear();
    for (std::size_t v0 = 0; v0 < matrix_.size(); ++v0) {
      path_.assign(1, v0);
      if (!extend(length, 1, 0, true, visit)) return false;
    }
    return true;
  }

 private:
  template <class Visit>
  bool extend(std::size_t length, Int a, Int b, bool exact, Visit& visit) {
    const std::size_t v = path_.back();
    if (exact) {
      const Int s = sigma_[v + 1] - sigma_[v];
      const Int left = static_cast<Int>(v) + 1;
      a = s * a;
      b = sigma_[v] + s * (b - left);
      exact = iabs(a) < kMagnitudeLimit && iabs(b) < kMagnitudeLimit;
    }
    if (path_.size() == length) {
      if (!matrix_(v, path_.front()) || !is_canonical_primitive(path_)) return true;
      return visit(static_cast<const std::vector<std::size_t>&>(path_), a, b, exact);
    }
    for (std::size_t w : successors_[v]) {
      if (w < path_.front()) continue;
      path_.push_back(w);
      const bool go_on = extend(length, a, b, exact, visit);
      path_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  std::vector<Int> sigma_;
  TransitionMatrix matrix_;
  std::vector<std::vector<std::size_t>> successors_;
  std::vector<std::size_t> path_;
};

// The P-linear map acting on numerators over a fixed positive denominator.
class IntegerMap {
 public:
  explicit IntegerMap(const Pattern& pattern) : sigma_(pattern.images().begin(), pattern.images().end()) {}

  Int operator()(Int num, Int den) const {
    const Int n = static_cast<Int>(sigma_.size());
    Int piece = num / den - 1;  // points lie in [1, n], so num > 0
    piece = std::clamp<Int>(piece, 0, n - 2);
    const auto p = static_cast<std::size_t>(piece);
    const Int s = sigma_[p + 1] - sigma_[p];
    return sigma_[p] * den + s * (num - (piece + 1) * den);
  }

 private:
  std::vector<Int> sigma_;
};

// Orbit numerators of num/den when its minimal period is exactly `period`.
// Integer points belong to the pattern's own cycle, which callers add
// separately.
std::optional<std::vector<Int>> integer_orbit(const IntegerMap& f, Int num, Int den, int period) {
  if (num % den == 0) return std::nullopt;
  std::vector<Int> orbit{num};
  Int x = num;
  for (int t = 1; t <= period; ++t) {
    x = f(x, den);
    if (x == num) return t == period ? std::optional(std::move(orbit)) : std::nullopt;
    orbit.push_back(x);
  }
  return std::nullopt;
}

Pattern pattern_of_numerators(const std::vector<Int>& orbit) {
  const std::size_t n = orbit.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return orbit[a] < orbit[b]; });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;
  std::vector<int> images(n);
  for (std::size_t t = 0; t < n; ++t) images[rank[t]] = static_cast<int>(rank[(t + 1) % n]) + 1;
  return Pattern(std::move(images));
}

Rational to_rational(Int num, Int den) {
  // |num|, den < 2^127; go through decimal strings to reach GMP.
  auto to_string = [](Int v) {
    if (v == 0) return std::string("0");
    const bool neg = v < 0;
    std::string s;
    for (Int u = neg ? -v : v; u > 0; u /= 10) s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
  };
  return Rational::parse(to_string(num) + "/" + to_string(den));
}

struct FoundOrbit {
  int period = 0;
  bool continuum = false;
  // Exactly one of the two representations is populated.
  std::vector<Int> numerators;
  Int denominator = 1;
  std::optional<ExactCycle> exact;

  Pattern pattern() const { return exact ? exact->pattern : pattern_of_numerators(numerators); }

  ExactCycle cycle() const {
    if (exact) return *exact;
    ExactCycle c;
    for (Int v : numerators) c.points.push_back(to_rational(v, denominator));
    c.period = period;
    c.pattern = pattern();
    c.continuum = continuum;
    return c;
  }
};

struct ScanRequest {
  std::size_t length;
  bool fixed_points = true;  // cycles of period `length`
  bool doubled = false;      // slope -1 families of period 2 * length
};

// Every cycle obtainable from a canonical primitive loop of the requested
// length. emit(FoundOrbit) -> bool; false stops the scan early.
template <class Emit>
void scan_loops(const Pattern& pattern, const ScanRequest& request, Emit&& emit) {
  LoopWalker walker(pattern);
  const IntegerMap f(pattern);
  std::optional<PLMap> fallback_map;
  const int length = static_cast<int>(request.length);

  walker.walk(request.length, [&](const std::vector<std::size_t>& vertices, Int a, Int b, bool exact) {
    if (!exact) {
      if (!fallback_map) fallback_map = p_linear_map(pattern);
      const Loop loop{vertices};
      if (request.fixed_points) {
        if (auto c = resolve_loop(*fallback_map, loop)) {
          FoundOrbit o{c->period, c->continuum, {}, 1, std::move(c)};
          if (!emit(o)) return false;
        }
      }
      if (request.doubled) {
        if (auto c = resolve_doubled_loop(*fallback_map, loop)) {
          FoundOrbit o{c->period, true, {}, 1, std::move(c)};
          if (!emit(o)) return false;
        }
      }
      return true;
    }
    const Int left = static_cast<Int>(vertices.front()) + 1;
    if (request.fixed_points) {
      std::optional<std::vector<Int>> orbit;
      Int den = 1;
      bool continuum = false;
      if (a != 1) {
        den = 1 - a;
        Int num = b;
        if (den < 0) den = -den, num = -num;
        if (num >= left * den && num <= (left + 1) * den) orbit = integer_orbit(f, num, den, length);
      } else if (b == 0) {
        den = 3;
        continuum = true;
        orbit = integer_orbit(f, 3 * left + 1, den, length);
      }
      if (orbit) {
        FoundOrbit o{length, continuum, std::move(*orbit), den, std::nullopt};
        if (!emit(o)) return false;
      }
    }
    if (request.doubled && a == -1) {
      // halfway between the left end of the interval and the fixed point b/2
      if (auto orbit = integer_orbit(f, 2 * left + b, 4, 2 * length)) {
        FoundOrbit o{2 * length, true, std::move(*orbit), 4, std::nullopt};
        if (!emit(o)) return false;
      }
    }
    return true;
  });
}

void require_period_cap(int cap) {
  if (cap < 1) throw DomainError("period cap must be >= 1");
}

ExactCycle own_cycle(const Pattern& pattern) {
  ExactCycle c;
  int x = 1;
  for (int t = 0; t < pattern.period(); ++t) {
    c.points.emplace_back(x);
    x = pattern(x);
  }
  c.period = pattern.period();
  c.pattern = pattern;
  return c;
}

std::vector<ItineraryStep> loop_steps(const PLMap& map, const Loop& loop) {
  const auto& xs = map.breakpoints();
  const auto& ys = map.values();
  if (loop.vertices.empty()) throw DomainError("empty loop");
  std::vector<ItineraryStep> steps;
  for (std::size_t t = 0; t < loop.length(); ++t) {
    const std::size_t i = loop.vertices[t];
    const std::size_t j = loop.vertices[(t + 1) % loop.length()];
    if (i + 1 >= xs.size() || j + 1 >= xs.size()) throw DomainError("loop vertex out of range");
    const Rational lo = std::min(ys[i], ys[i + 1]), hi = std::max(ys[i], ys[i + 1]);
    if (!(lo <= xs[j] && xs[j + 1] <= hi)) throw DomainError("loop " + loop.str() + " is not a walk of the Markov graph");
    steps.push_back({map.branch(i), xs[i], xs[i + 1]});
  }
  return steps;
}

// Orbit of x under the PL map, kept only if its minimal period is `period`.
// An orbit through a breakpoint must be the breakpoint cycle itself.
std::optional<ExactCycle> exact_orbit(const PLMap& map, const Rational& x, int period, bool continuum) {
  std::vector<Rational> orbit{x};
  Rational y = map(x);
  while (y != x) {
    if (static_cast<int>(orbit.size()) >= period) return std::nullopt;
    orbit.push_back(y);
    y = map(y);
  }
  if (static_cast<int>(orbit.size()) != period) return std::nullopt;
  const auto& xs = map.breakpoints();
  const bool touches = std::any_of(orbit.begin(), orbit.end(), [&](const Rational& p) {
    return std::binary_search(xs.begin(), xs.end(), p);
  });
  if (touches) {
    if (orbit.size() != xs.size()) return std::nullopt;
    auto sorted = orbit;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != xs) return std::nullopt;
  }
  ExactCycle c;
  c.pattern = pattern_of_orbit(orbit);
  c.points = std::move(orbit);
  c.period = period;
  c.continuum = continuum;
  return c;
}

}  // namespace

std::vector<Loop> enumerate_loops(const TransitionMatrix& matrix, int max_length) {
  if (max_length < 1) throw DomainError("max_length must be >= 1");
  std::vector<Loop> out;
  std::vector<std::size_t> path;
  const std::size_t n = matrix.size();
  auto dfs = [&](auto&& self, std::size_t length) -> void {
    const std::size_t v = path.back();
    if (path.size() == length) {
      if (matrix(v, path.front()) && is_canonical_primitive(path)) out.push_back(Loop{path});
      return;
    }
    for (std::size_t w = path.front(); w < n; ++w) {
      if (!matrix(v, w)) continue;
      path.push_back(w);
      self(self, length);
      path.pop_back();
    }
  };
  for (int length = 1; length <= max_length; ++length) {
    for (std::size_t v0 = 0; v0 < n; ++v0) {
      path.assign(1, v0);
      dfs(dfs, static_cast<std::size_t>(length));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ExactCycle> resolve_loop(const PLMap& map, const Loop& loop) {
  const auto steps = loop_steps(map, loop);
  const Affine g = compose(steps);
  const auto cyl = cylinder(steps);
  if (!cyl) return std::nullopt;
  const int length = static_cast<int>(loop.length());
  if (g.slope != Rational(1)) {
    const Rational x = g.intercept / (Rational(1) - g.slope);
    if (x < cyl->first || x > cyl->second) return std::nullopt;
    return exact_orbit(map, x, length, false);
  }
  if (g.intercept != Rational(0)) return std::nullopt;
  const Rational x = cyl->first + (cyl->second - cyl->first) / Rational(3);
  return exact_orbit(map, x, length, true);
}

std::optional<ExactCycle> resolve_doubled_loop(const PLMap& map, const Loop& loop) {
  const auto steps = loop_steps(map, loop);
  const Affine g = compose(steps);
  if (g.slope != Rational(-1)) return std::nullopt;
  const auto cyl = cylinder(steps);
  if (!cyl) return std::nullopt;
  const Rational fixed = g.intercept / Rational(2);
  const Rational x = (cyl->first + fixed) / Rational(2);
  return exact_orbit(map, x, 2 * static_cast<int>(loop.length()), true);
}

std::vector<ExactCycle> enumerate_cycles(const Pattern& pattern, int max_period) {
  require_period_cap(max_period);
  std::vector<ExactCycle> out;
  if (pattern.period() <= max_period) out.push_back(own_cycle(pattern));
  if (pattern.period() > 1) {
    for (int length = 1; length <= max_period; ++length) {
      ScanRequest request{static_cast<std::size_t>(length), true, 2 * length <= max_period};
      scan_loops(pattern, request, [&](const FoundOrbit& o) {
        out.push_back(o.cycle());
        return true;
      });
    }
  }
  // one entry per orbit
  std::set<std::vector<Rational>> seen;
  std::vector<ExactCycle> unique;
  for (auto& c : out) {
    auto key = c.points;
    std::sort(key.begin(), key.end());
    if (seen.insert(std::move(key)).second) unique.push_back(std::move(c));
  }
  std::stable_sort(unique.begin(), unique.end(), [](const ExactCycle& a, const ExactCycle& b) {
    return a.pattern < b.pattern;
  });
  return unique;
}

std::vector<Pattern> forced_cycles(const Pattern& pattern, int max_period) {
  require_period_cap(max_period);
  std::set<Pattern> found;
  if (pattern.period() <= max_period) found.insert(pattern);
  if (pattern.period() > 1) {
    for (int length = 1; length <= max_period; ++length) {
      ScanRequest request{static_cast<std::size_t>(length), true, 2 * length <= max_period};
      scan_loops(pattern, request, [&](const FoundOrbit& o) {
        found.insert(o.pattern());
        return true;
      });
    }
  }
  return {found.begin(), found.end()};
}

bool forces(const Pattern& a, const Pattern& b) {
  const auto forced = forced_cycles(a, b.period());
  return std::binary_search(forced.begin(), forced.end(), b);
}

std::vector<int> periods(const Pattern& pattern, int cap) {
  require_period_cap(cap);
  if (pattern.period() == 1) return {1};
  std::vector<int> out;
  for (int length = 1; length <= cap; ++length) {
    bool present = length == pattern.period();
    auto stop = [&](const FoundOrbit&) {
      present = true;
      return false;
    };
    if (!present) scan_loops(pattern, {static_cast<std::size_t>(length), true, false}, stop);
    if (!present && length % 2 == 0) {
      scan_loops(pattern, {static_cast<std::size_t>(length / 2), false, true}, stop);
    }
    if (present) out.push_back(length);
  }
  return out;
}

Pattern stefan_pattern(int m) {
  if (m < 3 || m % 2 == 0) throw DomainError("Stefan cycles need an odd period >= 3");
  const int c = (m + 1) / 2, k = (m - 1) / 2;
  std::vector<int> s(static_cast<std::size_t>(m) + 1);
  s[c] = c + 1;
  for (int j = 1; j <= k - 1; ++j) {
    s[c + j] = c - j;
    s[c - j] = c + j + 1;
  }
  s[c + k] = c - k;
  s[c - k] = c;
  return Pattern(std::vector<int>(s.begin() + 1, s.end()));
}

Pattern double_pattern(const Pattern& pattern) {
  // Left half i -> 2n+1-i (order-reversing onto the right half), right half
  // j -> sigma(2n+1-j); the square restricted to the left half is sigma.
  const int n = pattern.period();
  std::vector<int> images(2 * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    images[static_cast<std::size_t>(i - 1)] = 2 * n + 1 - i;
    images[static_cast<std::size_t>(2 * n - i)] = pattern(i);
  }
  if (!is_cyclic_permutation(images)) {
    throw std::logic_error("doubling produced a non-cyclic permutation");
  }
  return Pattern(std::move(images));
}

Pattern realizing_pattern(const SharkovskyElement& n) {
  if (n.is_two_infinity()) throw DomainError("2^inf cannot be realized by a single cycle");
  const auto key = n.key();
  Pattern p = key.m == 1 ? Pattern(std::vector<int>{1}) : stefan_pattern(static_cast<int>(key.m));
  for (unsigned i = 0; i < key.k; ++i) p = double_pattern(p);
  return p;
}

PLMap realize_period_set(const SharkovskyElement& n) { return p_linear_map(realizing_pattern(n)); }

bool is_primary(const Pattern& pattern) {
  const int q = pattern.period();
  for (const auto& b : forced_cycles(pattern, q)) {
    if (b.period() == q && b != pattern) return false;
  }
  return true;
}

bool is_twist_up_to(const Pattern& pattern, int cap) {
  if (cap < pattern.period()) throw DomainError("twist check needs cap >= period");
  const Rational number = over_rotation_number(pattern);
  for (const auto& b : forced_cycles(pattern, cap)) {
    if (b.period() >= 2 && b != pattern && over_rotation_number(b) == number) return false;
  }
  return true;
}

std::optional<EntropyMinimizer> min_entropy_search(const PatternSelector& selector, int period_bound) {
  const int q = std::visit(
      [](const auto& s) -> int {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, PeriodSelector>) {
          return s.period;
        } else {
          return static_cast<int>(s.pair.q());
        }
      },
      selector);
  if (q < 1) throw DomainError("period must be >= 1");
  if (q > period_bound) throw DomainError("exhaustive search is bounded to period " + std::to_string(period_bound));
  const auto* pair = std::get_if<PairSelector>(&selector);
  std::optional<EntropyMinimizer> best;
  for (const auto& p : enumerate_patterns(q)) {
    if (pair && (q < 2 || over_rotation_pair(p) != pair->pair)) continue;
    const double h = pattern_entropy(p);
    if (!best || h < best->entropy - 1e-10) best = EntropyMinimizer{p, h};
  }
  return best;
}

ForcingPoset forcing_poset(int max_period) {
  if (max_period < 1 || max_period > 7) throw DomainError("forcing poset supports periods 1..7");
  ForcingPoset poset;
  for (int q = 1; q <= max_period; ++q) {
    for (auto& p : enumerate_patterns(q)) poset.nodes.push_back(std::move(p));
  }
  const std::size_t n = poset.nodes.size();
  std::vector<std::vector<char>> forced(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& b : forced_cycles(poset.nodes[i], max_period)) {
      const auto it = std::lower_bound(poset.nodes.begin(), poset.nodes.end(), b);
      const auto j = static_cast<std::size_t>(it - poset.nodes.begin());
      if (j != i) {
        forced[i][j] = 1;
        poset.relation.emplace_back(i, j);
      }
    }
  }
  for (const auto& [i, j] : poset.relation) {
    bool covered = true;
    for (std::size_t k = 0; k < n && covered; ++k) {
      if (k != i && k != j && forced[i][k] && forced[k][j]) covered = false;
    }
    if (covered) poset.covers.emplace_back(i, j);
  }
  return poset;
}

}  // namespace combdyn
