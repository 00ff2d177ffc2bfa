#include "combdyn/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "combdyn/entropy.hpp"
#include "combdyn/error.hpp"
#include "combdyn/rotation.hpp"

namespace combdyn {

LiftedCircleMap parse_circle_map(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("circle map is not valid JSON: ") + e.what());
  }
  if (!doc.is_array() || doc.empty()) throw DomainError("circle map must be a non-empty JSON array of pairs");
  std::vector<std::pair<Rational, Rational>> vertices;
  for (const auto& item : doc) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string()) {
      throw DomainError("circle map entries must be [\"num/den\", \"num/den\"] pairs");
    }
    vertices.emplace_back(Rational::parse(item[0].get<std::string>()), Rational::parse(item[1].get<std::string>()));
  }
  std::vector<Rational> xs, ys;
  for (auto& [x, y] : vertices) {
    xs.push_back(std::move(x));
    ys.push_back(std::move(y));
  }
  return LiftedCircleMap(std::move(xs), std::move(ys));
}

LiftedCircleMap read_circle_map(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read circle map file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_circle_map(buf.str());
}

std::string circle_map_text(const LiftedCircleMap& lift) {
  Json doc = Json::array();
  for (std::size_t i = 0; i < lift.pieces(); ++i) {
    doc.push_back(Json::array({lift.breakpoints()[i].str(), lift.values()[i].str()}));
  }
  return doc.dump();
}

std::string format_decimal(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  std::string s = buf;
  if (s.starts_with("-") && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string format_entropy(double value) { return format_decimal(value, 12); }

std::string poset_dot(const ForcingPoset& poset) {
  std::ostringstream out;
  out << "digraph forcing {\n  rankdir=TB;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
    const Pattern& p = poset.nodes[i];
    const std::string orn = p.period() >= 2 ? over_rotation_number(p).str() : "-";
    out << "  n" << i << " [label=\"[" << p.str() << "]\\nperiod " << p.period() << "\\nentropy "
        << format_decimal(pattern_entropy(p), 4) << "\\nover-rotation " << orn << "\"];\n";
  }
  for (const auto& [a, b] : poset.covers) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Pattern& p) {
  Json a = Json::array();
  for (int v : p.images()) a.push_back(v);
  return a;
}

Json to_json(const RotationNumber& r) {
  Json j = Json::object();
  j["exact"] = r.exact ? Json(r.exact->str()) : Json(nullptr);
  j["lower"] = r.lower.str();
  j["upper"] = r.upper.str();
  if (!r.exact) {
    j["lower_decimal"] = format_decimal(r.lower.to_double(), 12);
    j["upper_decimal"] = format_decimal(r.upper.to_double(), 12);
  }
  return j;
}

std::string Report::dump() const {
  Json doc = Json::object();
  doc["command"] = command;
  doc["inputs"] = inputs;
  doc["results"] = results;
  if (elapsed_ms) doc["timing"] = Json{{"elapsed_ms", *elapsed_ms}};
  return doc.dump(2);
}

}  // namespace combdyn
