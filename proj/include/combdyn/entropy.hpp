#pragma once

#include <gmpxx.h>

#include <vector>

#include "combdyn/pattern.hpp"

namespace combdyn {

struct PowerIterationOptions {
  double tolerance = 1e-12;
  int max_iterations = 20000;
};

/// Perron root: the largest over strongly connected components of power
/// iteration on A + I with Collatz-Wielandt bounds. Throws NonConvergence
/// when the bounds do not meet within the cap.
double spectral_radius(const TransitionMatrix& matrix, const PowerIterationOptions& options = {});

/// det(xI - A) by Faddeev-LeVerrier in exact integers; coefficient i is of x^i.
std::vector<mpz_class> characteristic_polynomial(const TransitionMatrix& matrix);

/// Largest real root of an integer polynomial (low-to-high coefficients),
/// isolated with a Sturm chain and bisection on dyadic rationals.
/// Throws DomainError if the polynomial has no real root.
double largest_real_root(const std::vector<mpz_class>& coefficients);

/// Perron root through the characteristic polynomial; exact up to the final
/// rounding.
double spectral_radius_exact(const TransitionMatrix& matrix);

/// log of the spectral radius of markov_graph(pattern), clamped to >= 0.
/// Uses the polynomial root up to size 32 and power iteration beyond.
double pattern_entropy(const Pattern& pattern);

}  // namespace combdyn
