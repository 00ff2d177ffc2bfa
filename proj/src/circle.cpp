#include "combdyn/circle.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "combdyn/error.hpp"
#include "combdyn/itinerary.hpp"

namespace combdyn {

LiftedCircleMap::LiftedCircleMap(std::vector<Rational> breakpoints, std::vector<Rational> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.empty() || breakpoints_.size() != values_.size()) {
    throw DomainError("circle lift needs equally many breakpoints and values (at least one)");
  }
  if (breakpoints_.front() < Rational(0) || breakpoints_.back() >= Rational(1)) {
    throw DomainError("circle lift breakpoints must lie in [0, 1)");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) throw DomainError("circle lift breakpoints must increase strictly");
  }
}

LiftedCircleMap LiftedCircleMap::from_vertices(std::vector<std::pair<Rational, Rational>> vertices) {
  for (auto& [x, y] : vertices) {
    const Rational k = x.floor();
    x -= k;
    y -= k;
  }
  std::sort(vertices.begin(), vertices.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Rational> xs, ys;
  for (const auto& [x, y] : vertices) {
    if (!xs.empty() && xs.back() == x) {
      if (ys.back() != y) throw DomainError("conflicting values at breakpoint " + x.str());
      continue;
    }
    xs.push_back(x);
    ys.push_back(y);
  }
  return LiftedCircleMap(std::move(xs), std::move(ys));
}

Rational LiftedCircleMap::piece_left(std::size_t i) const { return breakpoints_.at(i); }

Rational LiftedCircleMap::piece_right(std::size_t i) const {
  return i + 1 < breakpoints_.size() ? breakpoints_[i + 1] : breakpoints_.front() + Rational(1);
}

Rational LiftedCircleMap::value_at_vertex(std::size_t i) const {
  return i < values_.size() ? values_[i] : values_.front() + Rational(1);
}

Affine LiftedCircleMap::branch(std::size_t i) const {
  const Rational x0 = piece_left(i), x1 = piece_right(i);
  const Rational y0 = value_at_vertex(i), y1 = value_at_vertex(i + 1);
  const Rational slope = (y1 - y0) / (x1 - x0);
  return {slope, y0 - slope * x0};
}

Rational LiftedCircleMap::operator()(const Rational& x) const {
  const Rational k = (x - breakpoints_.front()).floor();
  const Rational local = x - k;
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), local);
  const auto piece = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return branch(piece)(local) + k;
}

bool LiftedCircleMap::is_nondecreasing() const {
  for (std::size_t i = 0; i < pieces(); ++i) {
    if (value_at_vertex(i + 1) < value_at_vertex(i)) return false;
  }
  return true;
}

Rational LiftedCircleMap::preimage(const Rational& y) const {
  const Rational k = (y - values_.front()).floor();
  const Rational local = y - k;
  for (std::size_t i = 0; i < pieces(); ++i) {
    const Rational y0 = value_at_vertex(i), y1 = value_at_vertex(i + 1);
    if (y0 <= local && local <= y1) {
      if (y0 == y1) return piece_left(i) + k;
      return piece_left(i) + (local - y0) * (piece_right(i) - piece_left(i)) / (y1 - y0) + k;
    }
  }
  throw DomainError("preimage requires a nondecreasing lift");
}

LiftedCircleMap LiftedCircleMap::shifted(const Rational& d) const {
  auto ys = values_;
  for (auto& y : ys) y += d;
  return LiftedCircleMap(breakpoints_, std::move(ys));
}

LiftedCircleMap LiftedCircleMap::reflected() const {
  std::vector<std::pair<Rational, Rational>> vs;
  for (std::size_t i = 0; i < pieces(); ++i) vs.emplace_back(-breakpoints_[i], -values_[i]);
  return from_vertices(std::move(vs));
}

LiftedCircleMap upper_envelope(const LiftedCircleMap& lift) {
  // Running maximum swept over two periods; from the second period on it
  // equals max{F(y) : y <= x} because F(y - 1) = F(y) - 1.
  std::vector<std::pair<Rational, Rational>> graph;
  for (int shift = -1; shift <= 0; ++shift) {
    for (std::size_t i = 0; i < lift.pieces(); ++i) {
      graph.emplace_back(lift.breakpoints()[i] + Rational(shift), lift.values()[i] + Rational(shift));
    }
  }
  graph.emplace_back(lift.breakpoints().front() + Rational(1), lift.values().front() + Rational(1));

  std::vector<std::pair<Rational, Rational>> envelope{graph.front()};
  Rational running = graph.front().second;
  for (std::size_t s = 0; s + 1 < graph.size(); ++s) {
    const auto& [xa, ya] = graph[s];
    const auto& [xb, yb] = graph[s + 1];
    if (yb <= running) {
      envelope.emplace_back(xb, running);
      continue;
    }
    if (ya < running) {
      envelope.emplace_back(xa + (running - ya) * (xb - xa) / (yb - ya), running);
    }
    envelope.emplace_back(xb, yb);
    running = yb;
  }
  const Rational start = lift.breakpoints().front();
  std::vector<std::pair<Rational, Rational>> period;
  for (auto& v : envelope) {
    if (v.first >= start && v.first < start + Rational(1)) period.push_back(std::move(v));
  }
  return LiftedCircleMap::from_vertices(std::move(period));
}

LiftedCircleMap lower_envelope(const LiftedCircleMap& lift) {
  return upper_envelope(lift.reflected()).reflected();
}

int rotation_sign(const LiftedCircleMap& g, const Rational& p, long q) {
  if (q < 1) throw DomainError("denominator must be >= 1");
  if (!g.is_nondecreasing()) throw DomainError("rotation_sign needs a nondecreasing lift");
  // Breakpoints of G^q are the points x with G^j(x) at a breakpoint of G,
  // j < q; at x = G^{-j}(b) the value of G^q is G^{q-j}(b).
  std::optional<Rational> lo, hi;
  for (const auto& b : g.breakpoints()) {
    std::vector<Rational> forward{b};
    for (long j = 0; j < q; ++j) forward.push_back(g(forward.back()));
    Rational back = b;
    for (long j = 0; j < q; ++j) {
      if (j > 0) back = g.preimage(back);
      const Rational v = forward[static_cast<std::size_t>(q - j)] - back - p;
      if (!lo || v < *lo) lo = v;
      if (!hi || v > *hi) hi = v;
    }
  }
  if (lo->sign() > 0) return 1;
  if (hi->sign() < 0) return -1;
  return 0;
}

std::string RotationNumber::str() const {
  if (exact) return exact->str();
  return "[" + lower.str() + ", " + upper.str() + "]";
}

std::pair<Rational, Rational> iteration_enclosure(const LiftedCircleMap& g, int iterations) {
  if (iterations < 1) throw DomainError("iterations must be >= 1");
  // Outward rounding to a dyadic grid keeps the numbers small; monotonicity
  // of G carries the bracket through every step.
  const Rational grid(mpq_class(mpz_class(1) << 64));
  Rational lo(0), hi(0);
  for (int i = 0; i < iterations; ++i) {
    lo = (g(lo) * grid).floor() / grid;
    hi = -((-g(hi) * grid).floor()) / grid;
  }
  const Rational n(iterations);
  return {(lo - Rational(1)) / n, (hi + Rational(1)) / n};
}

RotationNumber monotone_rotation_number(const LiftedCircleMap& g, const SternBrocotOptions& options) {
  if (!g.is_nondecreasing()) throw DomainError("rotation number search needs a nondecreasing lift");
  auto exact = [](Rational r) { return RotationNumber{r, r, r}; };

  // rho lies between the extreme displacements.
  Rational dmin = g.values()[0] - g.breakpoints()[0], dmax = dmin;
  for (std::size_t i = 0; i < g.pieces(); ++i) {
    const Rational d = g.values()[i] - g.breakpoints()[i];
    dmin = std::min(dmin, d);
    dmax = std::max(dmax, d);
  }
  long p = dmin.floor().numerator_i64();
  const long top = -((-dmax).floor().numerator_i64());
  for (;; ++p) {
    const int s = rotation_sign(g, Rational(p), 1);
    if (s == 0) return exact(Rational(p));
    if (s < 0 || p >= top) throw std::logic_error("displacement bounds do not bracket the rotation number");
    if (rotation_sign(g, Rational(p + 1), 1) <= 0) break;
  }
  if (rotation_sign(g, Rational(p + 1), 1) == 0) return exact(Rational(p + 1));

  struct Frac {
    long num, den;
  };
  Frac left{p, 1}, right{p + 1, 1};
  auto combine = [](Frac a, Frac b, long t) { return Frac{a.num + t * b.num, a.den + t * b.den}; };
  auto sign_of = [&](Frac f) { return rotation_sign(g, Rational(f.num), f.den); };
  auto width = [&] { return 1.0 / (static_cast<double>(left.den) * static_cast<double>(right.den)); };

  // Descend the Stern-Brocot tree; runs of equal turns are taken in one
  // galloping stride so each continued-fraction term costs O(log) tests.
  std::optional<Rational> found;
  while (!found && left.den + right.den <= options.max_denominator) {
    const bool go_right = sign_of(combine(left, right, 1)) > 0;
    Frac& moving = go_right ? left : right;
    const Frac fixed = go_right ? right : left;
    const int want = go_right ? 1 : -1;
    auto fits = [&](long t) { return moving.den + t * fixed.den <= options.max_denominator; };
    long good = 1, bad = 2;
    for (;;) {
      if (!fits(bad)) break;
      const int s = sign_of(combine(moving, fixed, bad));
      if (s == 0) {
        const Frac f = combine(moving, fixed, bad);
        found = Rational(f.num, f.den);
        break;
      }
      if (s != want) break;
      good = bad;
      bad *= 2;
    }
    if (found) break;
    if (sign_of(combine(moving, fixed, 1)) == 0) {
      const Frac f = combine(moving, fixed, 1);
      found = Rational(f.num, f.den);
      break;
    }
    while (bad - good > 1) {
      const long mid = good + (bad - good) / 2;
      if (!fits(mid)) {
        bad = mid;
        continue;
      }
      const int s = sign_of(combine(moving, fixed, mid));
      if (s == 0) {
        const Frac f = combine(moving, fixed, mid);
        found = Rational(f.num, f.den);
        break;
      }
      if (s == want) {
        good = mid;
      } else {
        bad = mid;
      }
    }
    if (found) break;
    moving = combine(moving, fixed, good);
    if (!fits(1)) break;
  }
  if (found) return exact(*found);

  RotationNumber r{std::nullopt, Rational(left.num, left.den), Rational(right.num, right.den)};
  if (width() > options.tolerance) {
    // Tighten with the iteration bound, within a fixed work budget.
    const double wanted = std::ceil(2.0 / options.tolerance);
    const int n = static_cast<int>(std::min(wanted, 200000.0));
    const auto [lo, hi] = iteration_enclosure(g, n);
    r.lower = std::max(r.lower, lo);
    r.upper = std::min(r.upper, hi);
  }
  return r;
}

RotationInterval rotation_interval(const LiftedCircleMap& lift, double tolerance) {
  if (!(tolerance > 0)) throw DomainError("tolerance must be positive");
  SternBrocotOptions options;
  options.tolerance = tolerance;
  return {monotone_rotation_number(lower_envelope(lift), options),
          monotone_rotation_number(upper_envelope(lift), options)};
}

Rational rotation_number_of_cycle(const LiftedCircleMap& lift, std::span<const Rational> points) {
  if (points.empty()) throw DomainError("empty cycle");
  std::set<Rational> members;
  for (const auto& p : points) {
    if (p < Rational(0) || p >= Rational(1)) throw DomainError("cycle points must lie in [0, 1)");
    if (!members.insert(p).second) throw DomainError("duplicate cycle point " + p.str());
  }
  Rational y = points.front(), total(0);
  for (std::size_t t = 0; t < points.size(); ++t) {
    const Rational image = lift(y);
    total += image - y;
    y = image - image.floor();
    if (!members.count(y)) throw DomainError("points are not invariant: image " + y.str() + " is missing");
    if (y == points.front() && t + 1 < points.size()) throw DomainError("points split into several cycles");
  }
  if (y != points.front()) throw DomainError("points do not close up into a cycle");
  return total / Rational(static_cast<long>(points.size()));
}

namespace {

struct Letter {
  std::size_t piece;
  long shift;
  auto operator<=>(const Letter&) const = default;
};

bool canonical_word(const std::vector<Letter>& w) {
  const std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r) {
    std::strong_ordering c = std::strong_ordering::equal;
    for (std::size_t i = 0; i < n && c == 0; ++i) c = w[(r + i) % n] <=> w[i];
    if (c <= 0) return false;
  }
  return true;
}

std::optional<CircleCycle> circle_orbit(const LiftedCircleMap& lift, const Rational& start, int period,
                                        bool continuum) {
  Rational x = start - start.floor();
  std::vector<Rational> orbit{x};
  for (;;) {
    const Rational image = lift(x);
    x = image - image.floor();
    if (x == orbit.front()) break;
    if (static_cast<int>(orbit.size()) >= period) return std::nullopt;
    orbit.push_back(x);
  }
  if (static_cast<int>(orbit.size()) != period) return std::nullopt;
  CircleCycle c;
  c.rotation_number = rotation_number_of_cycle(lift, orbit);
  c.points = std::move(orbit);
  c.period = period;
  c.continuum = continuum;
  return c;
}

}  // namespace

std::vector<CircleCycle> enumerate_circle_cycles(const LiftedCircleMap& lift, int cap) {
  if (cap < 1) throw DomainError("cap must be >= 1");
  const std::size_t n = lift.pieces();

  // transitions[i]: letters (j, m) with F(piece i) meeting piece j + m
  std::vector<std::vector<Letter>> transitions(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Affine b = lift.branch(i);
    const Rational y0 = b(lift.piece_left(i)), y1 = b(lift.piece_right(i));
    const Rational lo = std::min(y0, y1), hi = std::max(y0, y1);
    for (std::size_t j = 0; j < n; ++j) {
      const long m_lo = (lo - lift.piece_right(j)).floor().numerator_i64();
      const long m_hi = (hi - lift.piece_left(j)).floor().numerator_i64() + 1;
      for (long m = m_lo; m <= m_hi; ++m) {
        if (lift.piece_left(j) + Rational(m) <= hi && lo <= lift.piece_right(j) + Rational(m)) {
          transitions[i].push_back({j, m});
        }
      }
    }
  }

  std::vector<CircleCycle> found;
  std::vector<Letter> word;
  auto resolve = [&](int length) {
    std::vector<ItineraryStep> steps;
    for (const auto& l : word) {
      Affine a = lift.branch(l.piece);
      a.intercept -= Rational(l.shift);
      steps.push_back({a, lift.piece_left(l.piece), lift.piece_right(l.piece)});
    }
    const auto cyl = cylinder(steps);
    if (!cyl) return;
    const Affine g = compose(steps);
    if (g.slope != Rational(1)) {
      const Rational x = g.intercept / (Rational(1) - g.slope);
      if (x >= cyl->first && x <= cyl->second) {
        if (auto c = circle_orbit(lift, x, length, false)) found.push_back(std::move(*c));
      }
      // slope -1: G swaps y and 2x - y, so if both stay in the cylinder the
      // whole segment between them is a family of period-2L points
      if (g.slope == Rational(-1) && 2 * length <= cap && x > cyl->first && x < cyl->second) {
        const Rational delta = std::min(x - cyl->first, cyl->second - x) / Rational(2);
        if (auto c = circle_orbit(lift, x - delta, 2 * length, true)) found.push_back(std::move(*c));
      }
    } else if (g.intercept == Rational(0)) {
      const Rational x = cyl->first + (cyl->second - cyl->first) / Rational(3);
      if (auto c = circle_orbit(lift, x, length, true)) found.push_back(std::move(*c));
    }
  };
  // A letter is (piece, shift): the orbit sits in the piece and its image is
  // read off in piece + shift. Neighbouring letters must be admissible.
  auto admissible = [&](const Letter& from, std::size_t to_piece) {
    return std::any_of(transitions[from.piece].begin(), transitions[from.piece].end(),
                       [&](const Letter& t) { return t.piece == to_piece && t.shift == from.shift; });
  };
  std::vector<std::vector<Letter>> letters_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::set<long> shifts;
    for (const auto& t : transitions[i]) shifts.insert(t.shift);
    for (long m : shifts) letters_of[i].push_back({i, m});
  }
  auto walk = [&](auto&& self, int length) -> void {
    if (static_cast<int>(word.size()) == length) {
      if (admissible(word.back(), word.front().piece) && canonical_word(word)) resolve(length);
      return;
    }
    for (const auto& t : transitions[word.back().piece]) {
      if (t.shift != word.back().shift) continue;
      for (const auto& next : letters_of[t.piece]) {
        if (next < word.front()) continue;
        word.push_back(next);
        self(self, length);
        word.pop_back();
      }
    }
  };
  for (int length = 1; length <= cap; ++length) {
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& first : letters_of[i]) {
        word.assign(1, first);
        walk(walk, length);
      }
    }
  }

  std::set<std::vector<Rational>> seen;
  std::vector<CircleCycle> unique;
  for (auto& c : found) {
    auto key = c.points;
    std::sort(key.begin(), key.end());
    if (seen.insert(std::move(key)).second) unique.push_back(std::move(c));
  }
  std::sort(unique.begin(), unique.end(), [](const CircleCycle& a, const CircleCycle& b) {
    if (a.period != b.period) return a.period < b.period;
    if (a.rotation_number != b.rotation_number) return a.rotation_number < b.rotation_number;
    return *std::min_element(a.points.begin(), a.points.end()) < *std::min_element(b.points.begin(), b.points.end());
  });
  return unique;
}

std::vector<std::uint64_t> circle_period_set(const Rational& lower, const Rational& upper,
                                             const SharkovskyElement& left, const SharkovskyElement& right,
                                             std::uint64_t cap) {
  if (cap < 1) throw DomainError("cap must be >= 1");
  if (upper < lower) throw DomainError("rotation interval endpoints out of order");
  std::set<std::uint64_t> out;
  for (std::uint64_t q = 1; q <= cap; ++q) {
    const Rational qq(static_cast<long>(q));
    const Rational p = (lower * qq).floor() + Rational(1);  // smallest p with p/q > lower
    if (p / qq < upper) out.insert(q);
  }
  auto add_endpoint = [&](const Rational& endpoint, const SharkovskyElement& choice) {
    const auto q = static_cast<std::uint64_t>(endpoint.denominator_i64());
    if (cap / q == 0) return;
    for (auto m : initial_segment(choice, cap / q)) out.insert(q * m);
  };
  add_endpoint(lower, left);
  if (upper != lower) add_endpoint(upper, right);
  return {out.begin(), out.end()};
}

std::vector<std::uint64_t> circle_period_set(const RotationInterval& interval, const SharkovskyElement& left,
                                             const SharkovskyElement& right, std::uint64_t cap) {
  if (!interval.lower.is_exact() || !interval.upper.is_exact()) {
    throw DomainError("period set recipe needs exact rational endpoints");
  }
  return circle_period_set(*interval.lower.exact, *interval.upper.exact, left, right, cap);
}

}  // namespace combdyn
