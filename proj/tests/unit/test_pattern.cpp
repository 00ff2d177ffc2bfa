#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "combdyn/error.hpp"
#include "combdyn/pattern.hpp"

using namespace combdyn;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// covering oracle straight from the definition: sample the image of I_i
// at many points and see whether it sweeps all of I_j
TransitionMatrix brute_force_cover(const Pattern& p) {
  const PLMap f = p_linear_map(p);
  const std::size_t n = static_cast<std::size_t>(p.period()) - 1;
  TransitionMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational lo = f(Rational(static_cast<long>(i + 1))), hi = lo;
    for (int s = 0; s <= 16; ++s) {
      const Rational y = f(Rational(static_cast<long>(i + 1)) + Rational(s, 16));
      lo = std::min(lo, y);
      hi = std::max(hi, y);
    }
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = lo <= Rational(static_cast<long>(j + 1)) && Rational(static_cast<long>(j + 2)) <= hi;
    }
  }
  return m;
}

}  // namespace

TEST_CASE("construction validates and canonicalizes") {
  CHECK(Pattern({3, 1, 2}) == Pattern({2, 3, 1}));
  CHECK(Pattern({3, 1, 2}).str() == "2 3 1");
  CHECK(Pattern({1}).period() == 1);
  CHECK_THROWS_AS(Pattern({1, 2}), DomainError);
  CHECK_THROWS_AS(Pattern({2, 2, 1}), DomainError);
  CHECK_THROWS_AS(Pattern({0, 1}), DomainError);
  CHECK_THROWS_AS(Pattern(std::vector<int>{}), DomainError);
  CHECK_THROWS_AS(Pattern({2, 1, 4, 3}), DomainError);  // two 2-cycles
}

TEST_CASE("text form round-trips") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : enumerate_patterns(n)) CHECK(Pattern::parse(p.str()) == p);
  }
  CHECK(Pattern::parse("  3 5 4 2 1 ") == Pattern({3, 5, 4, 2, 1}));
  CHECK(Pattern::parse("[2,3,1]") == Pattern({2, 3, 1}));
  CHECK_THROWS_AS(Pattern::parse("2 x 1"), DomainError);
  CHECK_THROWS_AS(Pattern::parse(""), DomainError);
}

TEST_CASE("pattern of a cycle") {
  const auto pts = std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1)};
  CHECK(pattern_of_cycle(pts, std::vector<std::size_t>{1, 2, 0}) == Pattern({2, 3, 1}));
  // 0 -> 1 -> 1/2 -> 0 is the mirror image, hence the same pattern
  CHECK(pattern_of_cycle(pts, std::vector<std::size_t>{2, 0, 1}) == Pattern({2, 3, 1}));
  CHECK(pattern_of_cycle(std::vector<Rational>{Rational(-5), Rational(7, 3)}, std::vector<std::size_t>{1, 0}) ==
        Pattern({2, 1}));
  CHECK_THROWS_AS(pattern_of_cycle(pts, std::vector<std::size_t>{1, 0, 2}), DomainError);
  CHECK_THROWS_AS(pattern_of_cycle(std::vector<Rational>{Rational(1), Rational(1)}, std::vector<std::size_t>{1, 0}),
                  DomainError);
  CHECK_THROWS_AS(pattern_of_cycle(std::vector<Rational>{Rational(2), Rational(1)}, std::vector<std::size_t>{1, 0}),
                  DomainError);
}

TEST_CASE("pattern of a cycle is invariant under rescaling and reflection") {
  std::mt19937 rng(7);
  for (int n = 2; n <= 7; ++n) {
    for (const auto& p : enumerate_patterns(n)) {
      // strictly increasing random points
      std::vector<Rational> pts;
      long acc = 0;
      for (int i = 0; i < n; ++i) {
        acc += 1 + static_cast<long>(rng() % 5);
        pts.emplace_back(acc, 7);
      }
      std::vector<std::size_t> succ(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) succ[static_cast<std::size_t>(i)] = static_cast<std::size_t>(p(i + 1) - 1);
      CHECK(pattern_of_cycle(pts, succ) == p);
      // affine rescaling
      std::vector<Rational> scaled;
      for (const auto& x : pts) scaled.push_back(x * Rational(3, 7) + Rational(-11, 2));
      CHECK(pattern_of_cycle(scaled, succ) == p);
      // reflection x -> -x reverses the order
      std::vector<Rational> mirrored(pts.rbegin(), pts.rend());
      for (auto& x : mirrored) x = -x;
      std::vector<std::size_t> msucc(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        const auto j = static_cast<std::size_t>(n - 1 - i);
        msucc[static_cast<std::size_t>(i)] = static_cast<std::size_t>(n - 1) - succ[j];
      }
      CHECK(pattern_of_cycle(mirrored, msucc) == p);
    }
  }
}

TEST_CASE("pattern of an orbit in dynamical order") {
  CHECK(pattern_of_orbit(ints({3, 4, 2, 5, 1})) == Pattern({3, 5, 4, 2, 1}));
  CHECK(pattern_of_orbit(ints({7})) == Pattern({1}));
  CHECK_THROWS_AS(pattern_of_orbit(ints({1, 2, 1})), DomainError);
}

TEST_CASE("enumeration counts flip classes") {
  const std::vector<std::size_t> counts{1, 1, 1, 4, 12, 64, 360};
  std::size_t total = 0;
  for (int n = 1; n <= 7; ++n) {
    const auto ps = enumerate_patterns(n);
    CHECK(ps.size() == counts[static_cast<std::size_t>(n - 1)]);
    CHECK(std::is_sorted(ps.begin(), ps.end()));
    CHECK(std::adjacent_find(ps.begin(), ps.end()) == ps.end());
    if (n <= 6) total += ps.size();
  }
  CHECK(total == 83);
  CHECK_THROWS_AS(enumerate_patterns(0), DomainError);
}

TEST_CASE("P-linear map") {
  const PLMap f = p_linear_map(Pattern({2, 3, 1}));
  CHECK(f.breakpoints() == ints({1, 2, 3}));
  CHECK(f.values() == ints({2, 3, 1}));
  CHECK(f(Rational(5, 2)) == Rational(2));
  CHECK(f(Rational(0)) == Rational(2));  // constant outside
  CHECK(f(Rational(9)) == Rational(1));
  const PLMap g = p_linear_map(Pattern({2, 1}));
  CHECK(g.breakpoints() == ints({1, 2}));
  CHECK(g.values() == ints({2, 1}));
  CHECK(g(Rational(3, 2)) == Rational(3, 2));
  const PLMap s = p_linear_map(Pattern({3, 5, 4, 2, 1}));
  CHECK(s.values() == ints({3, 5, 4, 2, 1}));
  // the breakpoints form a cycle with the pattern
  for (int n = 2; n <= 6; ++n) {
    for (const auto& p : enumerate_patterns(n)) {
      const PLMap h = p_linear_map(p);
      std::vector<Rational> orbit{Rational(1)};
      for (int i = 1; i < n; ++i) orbit.push_back(h(orbit.back()));
      CHECK(h(orbit.back()) == Rational(1));
      CHECK(pattern_of_orbit(orbit) == p);
    }
  }
  CHECK_THROWS_AS(PLMap(ints({1, 1}), ints({1, 2})), DomainError);
}

TEST_CASE("Markov graph") {
  CHECK(markov_graph(Pattern({2, 1})) == TransitionMatrix(1, {1}));
  CHECK(markov_graph(Pattern({2, 3, 1})) == TransitionMatrix(2, {0, 1, 1, 1}));
  CHECK(markov_graph(Pattern({3, 5, 4, 2, 1})) == TransitionMatrix(4, {0, 0, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 0}));
  CHECK(markov_graph(Pattern({1})).empty());
  for (int n = 2; n <= 7; ++n) {
    for (const auto& p : enumerate_patterns(n)) {
      const auto m = markov_graph(p);
      CHECK(m == brute_force_cover(p));
      for (std::size_t i = 0; i < m.size(); ++i) {
        int row = 0;
        for (std::size_t j = 0; j < m.size(); ++j) row += m(i, j);
        CHECK(row >= 1);
      }
    }
  }
}
