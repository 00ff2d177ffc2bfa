#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "combdyn/rational.hpp"

namespace combdyn {

/// A cyclic permutation of {1..n} up to orientation flip. The stored image
/// sequence is the lexicographically smaller of sigma and rho∘sigma∘rho,
/// rho(i) = n + 1 - i, so equality of patterns is equality of sequences.
class Pattern {
 public:
  /// Validates that images is a single n-cycle on {1..n}, then canonicalizes.
  explicit Pattern(std::vector<int> images);

  /// Parses the text form "s1 s2 ... sn" (1-based, whitespace separated).
  static Pattern parse(std::string_view text);

  int period() const { return static_cast<int>(images_.size()); }
  /// sigma(i) for 1-based i.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const { return images_; }
  std::string str() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
  /// Orders by period, then by image sequence.
  friend std::strong_ordering operator<=>(const Pattern& a, const Pattern& b);

 private:
  std::vector<int> images_;
};

/// True iff images is a permutation of {1..n} forming one n-cycle.
bool is_cyclic_permutation(std::span<const int> images);

/// rho∘sigma∘rho for a permutation given by its 1-based images.
std::vector<int> flip_conjugate(std::span<const int> images);

/// Pattern of a cycle given by ascending points and the index of each point's
/// dynamical successor (0-based). The point values only fix the spatial order.
Pattern pattern_of_cycle(std::span<const Rational> points, std::span<const std::size_t> successor);

/// Pattern of an orbit listed in dynamical order x, f(x), ..., f^{q-1}(x).
Pattern pattern_of_orbit(std::span<const Rational> orbit);

/// All flip-canonical patterns of the given period, ascending.
std::vector<Pattern> enumerate_patterns(int period);

/// Affine map x -> slope * x + intercept.
struct Affine {
  Rational slope;
  Rational intercept;

  Rational operator()(const Rational& x) const { return slope * x + intercept; }
  /// (*this)∘inner
  Affine after(const Affine& inner) const {
    return {slope * inner.slope, slope * inner.intercept + intercept};
  }
};

/// Piecewise-linear interval map through (x_i, f(x_i)); affine between
/// consecutive breakpoints and constant outside [x_1, x_n].
class PLMap {
 public:
  PLMap(std::vector<Rational> breakpoints, std::vector<Rational> values);

  std::size_t size() const { return breakpoints_.size(); }
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& values() const { return values_; }

  Rational operator()(const Rational& x) const;
  /// Affine branch on [x_i, x_{i+1}], 0-based piece index i < size() - 1.
  Affine branch(std::size_t piece) const;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Rational> values_;
};

/// Connect-the-dots map of a pattern: x_i = i, f(x_i) = sigma(i).
PLMap p_linear_map(const Pattern& pattern);

/// Nonnegative integer square matrix, row-major.
class TransitionMatrix {
 public:
  explicit TransitionMatrix(std::size_t size) : size_(size), entries_(size * size, 0) {}
  TransitionMatrix(std::size_t size, std::vector<int> entries);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  int operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
  int& operator()(std::size_t i, std::size_t j) { return entries_[i * size_ + j]; }

  friend bool operator==(const TransitionMatrix&, const TransitionMatrix&) = default;

 private:
  std::size_t size_;
  std::vector<int> entries_;
};

/// Covering matrix of the P-intervals I_i = [i, i+1]; 0-based indices.
/// Period 1 yields the empty matrix.
TransitionMatrix markov_graph(const Pattern& pattern);

}  // namespace combdyn
