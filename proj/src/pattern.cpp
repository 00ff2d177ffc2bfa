#include "combdyn/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "combdyn/error.hpp"

namespace combdyn {

bool is_cyclic_permutation(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  if (n == 0) return false;
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) return false;
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  int x = 1;
  for (int step = 1; step <= n; ++step) {
    x = images[static_cast<std::size_t>(x - 1)];
    if (x == 1) return step == n;
  }
  return false;
}

std::vector<int> flip_conjugate(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<int> out(images.size());
  for (int i = 1; i <= n; ++i) {
    out[static_cast<std::size_t>(i - 1)] = n + 1 - images[static_cast<std::size_t>(n - i)];
  }
  return out;
}

Pattern::Pattern(std::vector<int> images) : images_(std::move(images)) {
  if (!is_cyclic_permutation(images_)) {
    std::ostringstream os;
    os << "not a cyclic permutation:";
    for (int v : images_) os << ' ' << v;
    throw DomainError(os.str());
  }
  auto flipped = flip_conjugate(images_);
  if (flipped < images_) images_ = std::move(flipped);
}

Pattern Pattern::parse(std::string_view text) {
  // "2 3 1", "2,3,1" and "[2, 3, 1]" all read the same
  std::string cleaned(text);
  std::replace_if(cleaned.begin(), cleaned.end(), [](char c) { return c == ',' || c == '[' || c == ']'; }, ' ');
  std::istringstream in{cleaned};
  std::vector<int> images;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw DomainError("malformed pattern entry '" + token + "'");
    images.push_back(v);
  }
  if (images.empty()) throw DomainError("empty pattern");
  return Pattern(std::move(images));
}

std::string Pattern::str() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(images_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Pattern& a, const Pattern& b) {
  if (auto c = a.images_.size() <=> b.images_.size(); c != 0) return c;
  return a.images_ <=> b.images_;
}

Pattern pattern_of_cycle(std::span<const Rational> points, std::span<const std::size_t> successor) {
  const std::size_t n = points.size();
  if (successor.size() != n || n == 0) throw DomainError("points and successor map differ in size");
  for (std::size_t i = 1; i < n; ++i) {
    if (points[i - 1] == points[i]) throw DomainError("duplicate cycle point " + points[i].str());
    if (points[i - 1] > points[i]) throw DomainError("cycle points must be ascending");
  }
  std::vector<int> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (successor[i] >= n) throw DomainError("successor index out of range");
    images[i] = static_cast<int>(successor[i]) + 1;
  }
  if (!is_cyclic_permutation(images)) throw DomainError("successor map is not a single cycle");
  return Pattern(std::move(images));
}

Pattern pattern_of_orbit(std::span<const Rational> orbit) {
  const std::size_t n = orbit.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return orbit[a] < orbit[b]; });
  for (std::size_t r = 1; r < n; ++r) {
    if (orbit[order[r - 1]] == orbit[order[r]]) throw DomainError("orbit repeats the point " + orbit[order[r]].str());
  }
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;
  std::vector<int> images(n);
  for (std::size_t t = 0; t < n; ++t) {
    images[rank[t]] = static_cast<int>(rank[(t + 1) % n]) + 1;
  }
  return Pattern(std::move(images));
}

std::vector<Pattern> enumerate_patterns(int period) {
  if (period < 1) throw DomainError("period must be >= 1");
  std::vector<Pattern> out;
  // Build each cyclic permutation from a cyclic arrangement 1 -> c_1 -> ... -> c_{n-1} -> 1.
  std::vector<int> rest(static_cast<std::size_t>(period - 1));
  std::iota(rest.begin(), rest.end(), 2);
  std::vector<int> images(static_cast<std::size_t>(period));
  do {
    int prev = 1;
    for (int c : rest) {
      images[static_cast<std::size_t>(prev - 1)] = c;
      prev = c;
    }
    images[static_cast<std::size_t>(prev - 1)] = 1;
    auto flipped = flip_conjugate(images);
    if (images <= flipped) out.emplace_back(images);
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::sort(out.begin(), out.end());
  return out;
}

PLMap::PLMap(std::vector<Rational> breakpoints, std::vector<Rational> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.empty() || breakpoints_.size() != values_.size()) {
    throw DomainError("PL map needs equally many breakpoints and values");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) throw DomainError("breakpoints must increase strictly");
  }
}

Affine PLMap::branch(std::size_t piece) const {
  if (piece + 1 >= breakpoints_.size()) throw DomainError("piece index out of range");
  const Rational slope = (values_[piece + 1] - values_[piece]) / (breakpoints_[piece + 1] - breakpoints_[piece]);
  return {slope, values_[piece] - slope * breakpoints_[piece]};
}

Rational PLMap::operator()(const Rational& x) const {
  if (x <= breakpoints_.front()) return values_.front();
  if (x >= breakpoints_.back()) return values_.back();
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  const auto piece = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return branch(piece)(x);
}

PLMap p_linear_map(const Pattern& pattern) {
  std::vector<Rational> xs, ys;
  for (int i = 1; i <= pattern.period(); ++i) {
    xs.emplace_back(i);
    ys.emplace_back(pattern(i));
  }
  return PLMap(std::move(xs), std::move(ys));
}

TransitionMatrix::TransitionMatrix(std::size_t size, std::vector<int> entries)
    : size_(size), entries_(std::move(entries)) {
  if (entries_.size() != size_ * size_) throw DomainError("matrix entries do not match size");
  for (int v : entries_) {
    if (v < 0) throw DomainError("transition matrix entries must be nonnegative");
  }
}

TransitionMatrix markov_graph(const Pattern& pattern) {
  const int n = pattern.period();
  if (n < 2) return TransitionMatrix(0);
  TransitionMatrix m(static_cast<std::size_t>(n - 1));
  for (int i = 1; i < n; ++i) {
    const int lo = std::min(pattern(i), pattern(i + 1));
    const int hi = std::max(pattern(i), pattern(i + 1));
    for (int j = lo; j < hi; ++j) m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = 1;
  }
  return m;
}

}  // namespace combdyn
