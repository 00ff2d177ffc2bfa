#include <doctest.h>

#include <algorithm>
#include <set>

#include "combdyn/circle.hpp"
#include "combdyn/error.hpp"

using namespace combdyn;

namespace {

LiftedCircleMap lift(std::initializer_list<std::pair<const char*, const char*>> v) {
  std::vector<Rational> xs, ys;
  for (const auto& [x, y] : v) {
    xs.push_back(Rational::parse(x));
    ys.push_back(Rational::parse(y));
  }
  return LiftedCircleMap(xs, ys);
}

const LiftedCircleMap rot3 = lift({{"0", "1/3"}});
const LiftedCircleMap tent = lift({{"0", "0"}, {"1/2", "3/2"}});

bool exact_at(const RotationNumber& r, const Rational& v) { return r.exact && *r.exact == v; }

}  // namespace

TEST_CASE("lift evaluation and degree one") {
  CHECK(rot3(Rational(5, 7)) == Rational(5, 7) + Rational(1, 3));
  CHECK(tent(Rational(1, 4)) == Rational(3, 4));
  CHECK(tent(Rational(3, 4)) == Rational(5, 4));
  for (int i = -20; i <= 20; ++i) {
    const Rational x(i, 7);
    CHECK(tent(x + Rational(1)) == tent(x) + Rational(1));
    CHECK(tent(x + Rational(-3)) == tent(x) - Rational(3));
  }
  CHECK_THROWS_AS(lift({{"1/2", "0"}, {"1/4", "1"}}), DomainError);
  CHECK_THROWS_AS(lift({{"1", "0"}}), DomainError);
  CHECK_THROWS_AS(LiftedCircleMap({}, {}), DomainError);
}

TEST_CASE("envelopes") {
  CHECK(!tent.is_nondecreasing());
  const auto up = upper_envelope(tent);
  const auto lo = lower_envelope(tent);
  CHECK(up.is_nondecreasing());
  CHECK(lo.is_nondecreasing());
  for (int i = 0; i <= 40; ++i) {
    const Rational x(i, 40);
    CHECK(lo(x) <= tent(x));
    CHECK(tent(x) <= up(x));
  }
  // upper is flat at 3/2 on [1/2, 1], lower is flat at 1 on [1/3, 1]
  CHECK(up(Rational(3, 4)) == Rational(3, 2));
  CHECK(up(Rational(1, 4)) == Rational(3, 4));
  CHECK(lo(Rational(0)) == Rational(0));
  CHECK(lo(Rational(1, 4)) == Rational(3, 4));
  CHECK(lo(Rational(1, 2)) == Rational(1));
  // monotone maps are their own envelopes
  CHECK(upper_envelope(rot3)(Rational(1, 5)) == rot3(Rational(1, 5)));
  CHECK(lower_envelope(rot3)(Rational(1, 5)) == rot3(Rational(1, 5)));
}

TEST_CASE("rotation sign") {
  CHECK(rotation_sign(rot3, Rational(1), 3) == 0);
  CHECK(rotation_sign(rot3, Rational(1), 4) == 1);
  CHECK(rotation_sign(rot3, Rational(1), 2) == -1);
  CHECK_THROWS_AS(rotation_sign(tent, Rational(0), 1), DomainError);
}

TEST_CASE("rotation intervals") {
  const auto r = rotation_interval(rot3);
  CHECK(exact_at(r.lower, Rational(1, 3)));
  CHECK(exact_at(r.upper, Rational(1, 3)));
  const auto t = rotation_interval(tent);
  CHECK(exact_at(t.lower, Rational(0)));
  CHECK(exact_at(t.upper, Rational(1)));
  // a rigid rotation with a larger denominator and a nonzero integer part
  const auto r2 = rotation_interval(lift({{"0", "13/7"}}));
  CHECK(exact_at(r2.lower, Rational(13, 7)));
  CHECK_THROWS_AS(rotation_interval(rot3, 0.0), DomainError);
}

TEST_CASE("sampled lift against the iteration enclosure") {
  // nonmonotone, rational data; the endpoints are cross-checked against
  // long-iteration bounds of the envelopes
  const auto f = lift({{"0", "1/10"}, {"1/5", "4/5"}, {"1/2", "2/5"}, {"7/10", "6/5"}});
  const auto ri = rotation_interval(f);
  REQUIRE(ri.lower.is_exact());
  REQUIRE(ri.upper.is_exact());
  CHECK(*ri.lower.exact <= *ri.upper.exact);
  const auto [l1, l2] = iteration_enclosure(lower_envelope(f), 4000);
  const auto [u1, u2] = iteration_enclosure(upper_envelope(f), 4000);
  CHECK(l1 <= *ri.lower.exact);
  CHECK(*ri.lower.exact <= l2);
  CHECK(u1 <= *ri.upper.exact);
  CHECK(*ri.upper.exact <= u2);
}

TEST_CASE("irrational rotation gives a certified enclosure") {
  // Arnold-type PL circle homeomorphism whose rotation number is not found
  // below a small denominator cap
  const auto g = lift({{"0", "1/3"}, {"1/2", "2/3"}});  // slopes 2/3 and 4/3
  SternBrocotOptions opt;
  opt.max_denominator = 50;
  opt.tolerance = 1e-3;
  const auto r = monotone_rotation_number(g, opt);
  CHECK(r.lower <= r.upper);
  const auto [a, b] = iteration_enclosure(g, 3000);
  CHECK(r.lower <= b);
  CHECK(a <= r.upper);
  if (!r.is_exact()) CHECK(r.width() <= 1e-3);
}

TEST_CASE("rotation number of a cycle") {
  const std::vector<Rational> c3{Rational(0), Rational(1, 3), Rational(2, 3)};
  CHECK(rotation_number_of_cycle(rot3, c3) == Rational(1, 3));
  const auto half = lift({{"0", "1/2"}});
  CHECK(rotation_number_of_cycle(half, std::vector<Rational>{Rational(0), Rational(1, 2)}) == Rational(1, 2));
  CHECK(rotation_number_of_cycle(tent, std::vector<Rational>{Rational(0)}) == Rational(0));
  // lift invariance
  for (int d = -3; d <= 3; ++d) {
    CHECK(rotation_number_of_cycle(rot3.shifted(Rational(d)), c3) == Rational(1, 3) + Rational(d));
    CHECK(rotation_number_of_cycle(tent.shifted(Rational(d)), std::vector<Rational>{Rational(1, 2)}) ==
          Rational(1 + d));
  }
  CHECK_THROWS_AS(rotation_number_of_cycle(rot3, std::vector<Rational>{Rational(0), Rational(1, 3)}), DomainError);
  CHECK_THROWS_AS(rotation_number_of_cycle(rot3, std::vector<Rational>{Rational(1)}), DomainError);
  CHECK_THROWS_AS(
      rotation_number_of_cycle(lift({{"0", "1/2"}}), std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1, 4),
                                                                           Rational(3, 4)}),
      DomainError);
}

TEST_CASE("cycle enumeration") {
  const auto half = enumerate_circle_cycles(lift({{"0", "1/2"}}), 2);
  REQUIRE(half.size() == 1);
  CHECK(half[0].period == 2);
  CHECK(half[0].rotation_number == Rational(1, 2));
  CHECK(half[0].continuum);

  const auto id = enumerate_circle_cycles(lift({{"0", "0"}}), 3);
  REQUIRE(!id.empty());
  for (const auto& c : id) {
    CHECK(c.period == 1);
    CHECK(c.rotation_number == Rational(0));
  }

  const auto cs = enumerate_circle_cycles(tent, 5);
  std::set<Rational> rho;
  for (const auto& c : cs) {
    rho.insert(c.rotation_number);
    CHECK(c.rotation_number >= Rational(0));
    CHECK(c.rotation_number <= Rational(1));
    CHECK(c.points.size() == static_cast<std::size_t>(c.period));
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      const Rational y = tent(c.points[i]);
      CHECK(y - y.floor() == c.points[(i + 1) % c.points.size()]);
    }
  }
  for (long q = 1; q <= 5; ++q)
    for (long p = 0; p <= q; ++p) CHECK(rho.count(Rational(p, q)));
  // the slope -1 piece has an isolated 2-cycle, not a family
  for (const auto& c : cs) CHECK(!c.continuum);
  CHECK_THROWS_AS(enumerate_circle_cycles(tent, 0), DomainError);
}

TEST_CASE("period set recipe") {
  CHECK(circle_period_set(Rational(1, 3), Rational(1, 2), 1, 1, 12) ==
        std::vector<std::uint64_t>{2, 3, 5, 7, 8, 9, 10, 11, 12});
  CHECK(circle_period_set(Rational(0), Rational(1), 1, 1, 10) ==
        std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  CHECK(circle_period_set(Rational(1, 3), Rational(1, 3), 2, 5, 12) == std::vector<std::uint64_t>{3, 6});
  CHECK(circle_period_set(Rational(1, 3), Rational(1, 3), SharkovskyElement::two_infinity(), 1, 24) ==
        std::vector<std::uint64_t>{3, 6, 12, 24});
  CHECK_THROWS_AS(circle_period_set(Rational(1, 2), Rational(1, 3), 1, 1, 12), DomainError);
  RotationInterval open{{std::nullopt, Rational(0), Rational(1, 100)}, {Rational(1), Rational(1), Rational(1)}};
  CHECK_THROWS_AS(circle_period_set(open, 1, 1, 10), DomainError);
}
