#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "combdyn/circle.hpp"
#include "combdyn/entropy.hpp"
#include "combdyn/error.hpp"
#include "combdyn/forcing.hpp"
#include "combdyn/io.hpp"
#include "combdyn/rotation.hpp"
#include "combdyn/sharkovsky.hpp"

using namespace combdyn;

namespace {

struct Output {
  bool json = false;
  bool timing = false;
  Report report;
  std::ostringstream text;
};

Json periods_json(const std::vector<int>& v) { return Json(v); }

OverRotationPair parse_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw DomainError("pair must be written p,q");
  try {
    std::size_t a = 0, b = 0;
    const long p = std::stol(s.substr(0, comma), &a);
    const long q = std::stol(s.substr(comma + 1), &b);
    if (a != comma || b != s.size() - comma - 1) throw std::invalid_argument(s);
    return OverRotationPair(p, q);
  } catch (const std::logic_error&) {
    throw DomainError("malformed pair '" + s + "'");
  }
}

std::string ordering_symbol(std::strong_ordering c) {
  if (c < 0) return "<_s";
  if (c > 0) return ">_s";
  return "=_s";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combdyn: periods, patterns, forcing and rotation numbers of one-dimensional maps"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.json, "Machine-readable JSON output");
  app.add_flag("--timing", out.timing, "Include wall time in JSON output");

  std::vector<std::string> argv_echo(argv + 1, argv + argc);
  std::function<void()> action;

  // shark
  auto* shark = app.add_subcommand("shark", "Sharkovsky order");
  shark->require_subcommand(1);
  std::string sa, sb;
  std::uint64_t cap_seg = 12;
  auto* cmp = shark->add_subcommand("compare", "Compare A and B in the Sharkovsky order");
  cmp->add_option("A", sa)->required();
  cmp->add_option("B", sb)->required();
  cmp->callback([&] {
    action = [&] {
      const auto a = SharkovskyElement::parse(sa), b = SharkovskyElement::parse(sb);
      const std::string rel = ordering_symbol(sharkovsky_compare(a, b));
      out.report.inputs = {{"a", a.str()}, {"b", b.str()}};
      out.report.results = {{"relation", rel}};
      out.text << a.str() << " " << rel << " " << b.str() << "\n";
    };
  });
  auto* seg = shark->add_subcommand("segment", "Initial segment S(N) up to the cap");
  seg->add_option("N", sa)->required();
  seg->add_option("--cap", cap_seg, "Largest period listed")->capture_default_str();
  seg->callback([&] {
    action = [&] {
      if (cap_seg < 1 || cap_seg > 100000) throw DomainError("cap must be in [1, 100000]");
      const auto n = SharkovskyElement::parse(sa);
      const auto s = initial_segment(n, cap_seg);
      out.report.inputs = {{"n", n.str()}, {"cap", cap_seg}};
      out.report.results = {{"segment", s}};
      out.text << join(s) << "\n";
    };
  });

  // pattern
  auto* pat = app.add_subcommand("pattern", "Queries on a cyclic pattern");
  pat->require_subcommand(1);
  std::string pa, pb;
  int cap = -1;
  auto cap_or = [&](int fallback) {
    const int c = cap < 0 ? fallback : cap;
    if (c < 1 || c > 64) throw DomainError("cap must be in [1, 64]");
    return c;
  };
  auto one_pattern = [&](const std::string& name, const std::string& help, bool with_cap,
                         std::function<void(const Pattern&)> body) {
    auto* sc = pat->add_subcommand(name, help);
    sc->add_option("PATTERN", pa, "Quoted 1-based image list, e.g. \"2 3 1\"")->required();
    if (with_cap) sc->add_option("--cap", cap, "Period cap");
    sc->callback([&, body] {
      action = [&, body] {
        const Pattern p = Pattern::parse(pa);
        out.report.inputs = {{"pattern", to_json(p)}};
        body(p);
      };
    });
  };
  one_pattern("entropy", "Entropy of the pattern", false, [&](const Pattern& p) {
    const double h = pattern_entropy(p);
    out.report.results = {{"entropy", format_entropy(h)}};
    out.text << format_entropy(h) << "\n";
  });
  one_pattern("periods", "Periods forced by the pattern (default cap 12)", true, [&](const Pattern& p) {
    const int c = cap_or(12);
    const auto v = periods(p, c);
    SharkovskyElement witness(1);
    std::vector<std::uint64_t> u(v.begin(), v.end());
    const bool matched = match_initial_segment(u, static_cast<std::uint64_t>(c), &witness);
    out.report.inputs["cap"] = c;
    out.report.results = {{"periods", periods_json(v)}, {"segment", matched ? Json(witness.str()) : Json(nullptr)}};
    out.text << join(v) << "\n";
  });
  one_pattern("overrot", "Over-rotation pair and number", false, [&](const Pattern& p) {
    const auto pr = over_rotation_pair(p);
    out.report.results = {{"pair", {pr.p(), pr.q()}}, {"number", pr.number().str()}};
    out.text << pr.str() << " " << pr.number().str() << "\n";
  });
  one_pattern("primary", "Forces no other pattern of its period", false, [&](const Pattern& p) {
    const bool r = is_primary(p);
    out.report.results = {{"primary", r}};
    out.text << (r ? "true" : "false") << "\n";
  });
  one_pattern("twist", "No forced pattern up to the cap shares its over-rotation number (default cap 8)", true,
              [&](const Pattern& p) {
                const int c = cap_or(std::max(8, p.period()));
                const bool r = is_twist_up_to(p, c);
                out.report.inputs["cap"] = c;
                out.report.results = {{"twist", r}};
                out.text << (r ? "true" : "false") << "\n";
              });
  one_pattern("forced", "Patterns forced up to the cap (default 8)", true, [&](const Pattern& p) {
    const int c = cap_or(8);
    const auto v = forced_cycles(p, c);
    Json arr = Json::array();
    for (const auto& f : v) {
      arr.push_back(to_json(f));
      out.text << f.str() << "\n";
    }
    out.report.inputs["cap"] = c;
    out.report.results = {{"forced", arr}};
  });
  one_pattern("spectrum", "Over-rotation numbers of forced cycles (default cap 8)", true, [&](const Pattern& p) {
    const int c = cap_or(8);
    const auto v = over_rotation_spectrum(p, c);
    Json arr = Json::array();
    for (const auto& r : v) arr.push_back(r.str());
    out.report.inputs["cap"] = c;
    out.report.results = {{"spectrum", arr}};
    out.text << join(v) << "\n";
  });
  {
    auto* sc = pat->add_subcommand("forces", "Does A force B");
    sc->add_option("A", pa)->required();
    sc->add_option("B", pb)->required();
    sc->callback([&] {
      action = [&] {
        const Pattern a = Pattern::parse(pa), b = Pattern::parse(pb);
        const bool r = forces(a, b);
        out.report.inputs = {{"a", to_json(a)}, {"b", to_json(b)}};
        out.report.results = {{"forces", r}};
        out.text << (r ? "true" : "false") << "\n";
      };
    });
  }
  int period = 0;
  std::string pair;
  int bound = 10;
  {
    auto* sc = pat->add_subcommand("search", "Minimal-entropy pattern of a period or over-rotation pair");
    auto* g = sc->add_option_group("selector");
    g->add_option("--period", period, "Period");
    g->add_option("--pair", pair, "Over-rotation pair p,q");
    g->require_option(1);
    sc->add_option("--bound", bound, "Largest period searched")->capture_default_str();
    sc->callback([&] {
      action = [&] {
        PatternSelector sel = PeriodSelector{period};
        if (!pair.empty()) {
          const auto pr = parse_pair(pair);
          sel = PairSelector{pr};
          out.report.inputs = {{"pair", {pr.p(), pr.q()}}};
        } else {
          out.report.inputs = {{"period", period}};
        }
        out.report.inputs["bound"] = bound;
        const auto best = min_entropy_search(sel, bound);
        if (!best) {
          out.report.results = {{"pattern", nullptr}, {"entropy", nullptr}};
          out.text << "none\n";
          return;
        }
        out.report.results = {{"pattern", to_json(best->pattern)}, {"entropy", format_entropy(best->entropy)}};
        out.text << best->pattern.str() << "\n" << format_entropy(best->entropy) << "\n";
      };
    });
  }

  // poset
  int poset_period = 4;
  std::string dot_file;
  auto* poset = app.add_subcommand("poset", "Forcing order among all patterns up to a period");
  poset->add_option("--period", poset_period, "Largest period (<= 7)")->required();
  poset->add_option("--dot", dot_file, "Write Graphviz DOT here (stdout when omitted)");
  poset->callback([&] {
    action = [&] {
      const auto ps = forcing_poset(poset_period);
      const std::string dot = poset_dot(ps);
      out.report.inputs = {{"period", poset_period}};
      Json nodes = Json::array(), covers = Json::array();
      for (const auto& n : ps.nodes) nodes.push_back(to_json(n));
      for (const auto& [a, b] : ps.covers) covers.push_back({a, b});
      out.report.results = {{"nodes", nodes}, {"covers", covers}, {"relation_size", ps.relation.size()}};
      if (!dot_file.empty()) {
        std::ofstream f(dot_file);
        if (!f) throw DomainError("cannot write " + dot_file);
        f << dot;
        out.report.results["dot"] = dot_file;
        out.text << ps.nodes.size() << " patterns, " << ps.covers.size() << " covers written to " << dot_file << "\n";
      } else {
        out.text << dot;
      }
    };
  });

  // realize
  std::string realize_n;
  int realize_cap = 12;
  auto* realize = app.add_subcommand("realize", "Pattern whose map has period set S(N)");
  realize->add_option("N", realize_n)->required();
  realize->add_option("--cap", realize_cap, "Period cap for the check")->capture_default_str();
  realize->callback([&] {
    action = [&] {
      if (realize_cap < 1 || realize_cap > 64) throw DomainError("cap must be in [1, 64]");
      const auto n = SharkovskyElement::parse(realize_n);
      const Pattern p = realizing_pattern(n);
      const auto v = periods(p, realize_cap);
      out.report.inputs = {{"n", n.str()}, {"cap", realize_cap}};
      out.report.results = {{"pattern", to_json(p)}, {"periods", periods_json(v)}};
      out.text << p.str() << "\n" << join(v) << "\n";
    };
  });

  // circle
  auto* circle = app.add_subcommand("circle", "Degree-one circle maps");
  circle->require_subcommand(1);
  std::string circle_file;
  double tol = 1e-9;
  int circle_cap = 6;
  auto* interval = circle->add_subcommand("interval", "Rotation interval of a lift");
  interval->add_option("FILE", circle_file, "JSON circle map")->required();
  interval->add_option("--tol", tol, "Enclosure width target")->capture_default_str();
  interval->callback([&] {
    action = [&] {
      const auto lift = read_circle_map(circle_file);
      const auto ri = rotation_interval(lift, tol);
      out.report.inputs = {{"map", Json::parse(circle_map_text(lift))}, {"tolerance", tol}};
      out.report.results = {{"lower", to_json(ri.lower)}, {"upper", to_json(ri.upper)}};
      out.text << "[" << ri.lower.str() << ", " << ri.upper.str() << "]\n";
    };
  });
  auto* cycles = circle->add_subcommand("cycles", "Cycles of the circle map up to a period");
  cycles->add_option("FILE", circle_file, "JSON circle map")->required();
  cycles->add_option("--cap", circle_cap, "Period cap")->capture_default_str();
  cycles->callback([&] {
    action = [&] {
      if (circle_cap < 1 || circle_cap > 16) throw DomainError("cap must be in [1, 16]");
      const auto lift = read_circle_map(circle_file);
      const auto cs = enumerate_circle_cycles(lift, circle_cap);
      out.report.inputs = {{"map", Json::parse(circle_map_text(lift))}, {"cap", circle_cap}};
      Json arr = Json::array();
      for (const auto& c : cs) {
        Json pts = Json::array();
        for (const auto& x : c.points) pts.push_back(x.str());
        arr.push_back({{"period", c.period},
                       {"rotation_number", c.rotation_number.str()},
                       {"continuum", c.continuum},
                       {"points", pts}});
        out.text << c.period << " " << c.rotation_number.str() << (c.continuum ? " continuum" : "") << " : "
                 << join(c.points) << "\n";
      }
      out.report.results = {{"cycles", arr}};
    };
  });
  std::string lower_s, upper_s, left_s = "1", right_s = "1";
  std::uint64_t period_cap = 12;
  auto* cperiods = circle->add_subcommand("periods", "Period set from a rotation interval and endpoint choices");
  cperiods->add_option("--lower", lower_s, "Left endpoint p/q")->required();
  cperiods->add_option("--upper", upper_s, "Right endpoint p/q")->required();
  cperiods->add_option("--left", left_s, "Sharkovsky choice at the left endpoint")->capture_default_str();
  cperiods->add_option("--right", right_s, "Sharkovsky choice at the right endpoint")->capture_default_str();
  cperiods->add_option("--cap", period_cap, "Largest period listed")->capture_default_str();
  cperiods->callback([&] {
    action = [&] {
      if (period_cap < 1 || period_cap > 100000) throw DomainError("cap must be in [1, 100000]");
      const auto lo = Rational::parse(lower_s), hi = Rational::parse(upper_s);
      const auto l = SharkovskyElement::parse(left_s), r = SharkovskyElement::parse(right_s);
      const auto v = circle_period_set(lo, hi, l, r, period_cap);
      out.report.inputs = {{"lower", lo.str()}, {"upper", hi.str()}, {"left", l.str()}, {"right", r.str()},
                           {"cap", period_cap}};
      out.report.results = {{"periods", v}};
      out.text << join(v) << "\n";
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    action();
    const auto t1 = std::chrono::steady_clock::now();
    if (out.json) {
      out.report.command = argv_echo;
      if (out.timing) out.report.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      std::cout << out.report.dump() << "\n";
    } else {
      std::cout << out.text.str();
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
