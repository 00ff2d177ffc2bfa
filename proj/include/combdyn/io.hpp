#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "combdyn/circle.hpp"
#include "combdyn/forcing.hpp"
#include "combdyn/rational.hpp"

namespace combdyn {

using Json = nlohmann::ordered_json;

/// Circle map text: a JSON array of ["num/den", "num/den"] (breakpoint, value)
/// pairs. Throws DomainError on malformed input.
LiftedCircleMap parse_circle_map(std::string_view text);
LiftedCircleMap read_circle_map(const std::filesystem::path& path);
std::string circle_map_text(const LiftedCircleMap& lift);

/// Fixed 12-digit decimal used for entropy everywhere.
std::string format_entropy(double value);
std::string format_decimal(double value, int digits);

template <class T>
std::string join(const std::vector<T>& items, std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    if constexpr (std::is_arithmetic_v<T>) {
      out += std::to_string(items[i]);
    } else {
      out += items[i].str();
    }
  }
  return out;
}

/// Graphviz digraph of the cover relation; an edge a -> b means a forces b.
std::string poset_dot(const ForcingPoset& poset);

Json to_json(const Rational& r);
Json to_json(const Pattern& p);
Json to_json(const RotationNumber& r);

/// Machine-readable output: command echo, canonical inputs, results, and
/// optionally wall time. Key order is fixed by insertion.
struct Report {
  std::vector<std::string> command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::optional<double> elapsed_ms;

  std::string dump() const;
};

}  // namespace combdyn
