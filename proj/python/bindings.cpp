#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "combdyn/circle.hpp"
#include "combdyn/entropy.hpp"
#include "combdyn/error.hpp"
#include "combdyn/forcing.hpp"
#include "combdyn/io.hpp"
#include "combdyn/rotation.hpp"
#include "combdyn/sharkovsky.hpp"

namespace py = pybind11;
using namespace combdyn;

namespace {

py::object fraction(const Rational& r) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(py::int_(py::str(r.numerator())), py::int_(py::str(r.denominator())));
}

// int, str ("p/q") or fractions.Fraction
Rational rational(const py::handle& obj) { return Rational::parse(py::str(obj).cast<std::string>()); }

SharkovskyElement shark(const py::handle& obj) { return SharkovskyElement::parse(py::str(obj).cast<std::string>()); }

py::list fractions(const std::vector<Rational>& v) {
  py::list out;
  for (const auto& r : v) out.append(fraction(r));
  return out;
}

LiftedCircleMap lift_of(const py::iterable& vertices) {
  std::vector<Rational> xs, ys;
  for (const auto& v : vertices) {
    auto pair = v.cast<py::tuple>();
    if (pair.size() != 2) throw DomainError("circle map vertices are (breakpoint, value) pairs");
    xs.push_back(rational(pair[0]));
    ys.push_back(rational(pair[1]));
  }
  return LiftedCircleMap(std::move(xs), std::move(ys));
}

py::object rotation_number(const RotationNumber& r) {
  if (r.exact) return fraction(*r.exact);
  return py::make_tuple(fraction(r.lower), fraction(r.upper));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Periods, patterns, forcing and rotation numbers of one-dimensional maps";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NonConvergence>(m, "NonConvergence", PyExc_ArithmeticError);

  m.def(
      "sharkovsky_compare",
      [](const py::object& a, const py::object& b) {
        const auto c = sharkovsky_compare(shark(a), shark(b));
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "initial_segment", [](const py::object& n, std::uint64_t cap) { return initial_segment(shark(n), cap); },
      py::arg("n"), py::arg("cap"));

  py::class_<Pattern>(m, "Pattern")
      .def(py::init([](const std::vector<int>& images) { return Pattern(images); }), py::arg("images"))
      .def_static("parse", &Pattern::parse)
      .def_property_readonly("period", &Pattern::period)
      .def_property_readonly("images", [](const Pattern& p) { return std::vector<int>(p.images().begin(), p.images().end()); })
      .def("__str__", &Pattern::str)
      .def("__repr__", [](const Pattern& p) { return "Pattern([" + join(std::vector<int>(p.images().begin(), p.images().end()), ", ") + "])"; })
      .def("__eq__", [](const Pattern& a, const Pattern& b) { return a == b; })
      .def("__lt__", [](const Pattern& a, const Pattern& b) { return a < b; })
      .def("__hash__", [](const Pattern& p) { return py::hash(py::str(p.str())); });

  m.def("enumerate_patterns", &enumerate_patterns, py::arg("period"));
  m.def("pattern_entropy", &pattern_entropy, py::arg("pattern"));
  m.def("periods", &periods, py::arg("pattern"), py::arg("cap") = 12);
  m.def("forced_cycles", &forced_cycles, py::arg("pattern"), py::arg("cap") = 8);
  m.def("forces", &forces, py::arg("a"), py::arg("b"));
  m.def("is_primary", &is_primary, py::arg("pattern"));
  m.def("is_twist_up_to", &is_twist_up_to, py::arg("pattern"), py::arg("cap"));
  m.def("stefan_pattern", &stefan_pattern, py::arg("m"));
  m.def("double_pattern", &double_pattern, py::arg("pattern"));
  m.def(
      "realizing_pattern", [](const py::object& n) { return realizing_pattern(shark(n)); }, py::arg("n"));

  m.def(
      "over_rotation_pair",
      [](const Pattern& p) {
        const auto r = over_rotation_pair(p);
        return py::make_tuple(r.p(), r.q());
      },
      py::arg("pattern"));
  m.def(
      "over_rotation_number", [](const Pattern& p) { return fraction(over_rotation_number(p)); }, py::arg("pattern"));
  m.def(
      "orp_compare",
      [](const std::pair<long, long>& a, const std::pair<long, long>& b) {
        switch (orp_compare(OverRotationPair(a.first, a.second), OverRotationPair(b.first, b.second))) {
          case OrpOrder::AForcesB: return "AForcesB";
          case OrpOrder::BForcesA: return "BForcesA";
          default: return "Equal";
        }
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "over_rotation_spectrum",
      [](const Pattern& p, int cap) { return fractions(over_rotation_spectrum(p, cap)); }, py::arg("pattern"),
      py::arg("cap") = 8);

  m.def(
      "min_entropy_search",
      [](std::optional<int> period, std::optional<std::pair<long, long>> pair, int bound) -> py::object {
        if (period.has_value() == pair.has_value()) throw DomainError("give exactly one of period or pair");
        PatternSelector sel = PeriodSelector{period.value_or(0)};
        if (pair) sel = PairSelector{OverRotationPair(pair->first, pair->second)};
        const auto best = min_entropy_search(sel, bound);
        if (!best) return py::none();
        return py::make_tuple(best->pattern, best->entropy);
      },
      py::kw_only(), py::arg("period") = py::none(), py::arg("pair") = py::none(), py::arg("bound") = 10);

  m.def(
      "forcing_poset",
      [](int max_period) {
        const auto ps = forcing_poset(max_period);
        py::dict d;
        d["nodes"] = ps.nodes;
        d["relation"] = ps.relation;
        d["covers"] = ps.covers;
        return d;
      },
      py::arg("max_period"));
  m.def(
      "poset_dot", [](int max_period) { return poset_dot(forcing_poset(max_period)); }, py::arg("max_period"));

  m.def(
      "rotation_interval",
      [](const py::iterable& vertices, double tolerance) {
        const auto ri = rotation_interval(lift_of(vertices), tolerance);
        return py::make_tuple(rotation_number(ri.lower), rotation_number(ri.upper));
      },
      py::arg("vertices"), py::arg("tolerance") = 1e-9,
      "Endpoints are Fractions when exact, else (lower, upper) enclosures.");
  m.def(
      "enumerate_circle_cycles",
      [](const py::iterable& vertices, int cap) {
        py::list out;
        for (const auto& c : enumerate_circle_cycles(lift_of(vertices), cap)) {
          py::dict d;
          d["points"] = fractions(c.points);
          d["period"] = c.period;
          d["rotation_number"] = fraction(c.rotation_number);
          d["continuum"] = c.continuum;
          out.append(d);
        }
        return out;
      },
      py::arg("vertices"), py::arg("cap"));
  m.def(
      "circle_period_set",
      [](const py::object& lower, const py::object& upper, const py::object& left, const py::object& right,
         std::uint64_t cap) { return circle_period_set(rational(lower), rational(upper), shark(left), shark(right), cap); },
      py::arg("lower"), py::arg("upper"), py::arg("left"), py::arg("right"), py::arg("cap"));
}
