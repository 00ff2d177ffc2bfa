#include "combdyn/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "combdyn/error.hpp"

namespace combdyn {

namespace {

// Strongly connected components (Kosaraju, iterative).
std::vector<std::vector<std::size_t>> components(const TransitionMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> order;
  std::vector<char> seen(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < n) {
        const std::size_t w = next++;
        if (a(v, w) && !seen[w]) {
          seen[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<char> done(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (done[*it]) continue;
    std::vector<std::size_t> comp, todo{*it};
    done[*it] = 1;
    while (!todo.empty()) {
      const std::size_t v = todo.back();
      todo.pop_back();
      comp.push_back(v);
      for (std::size_t w = 0; w < n; ++w) {
        if (a(w, v) && !done[w]) {
          done[w] = 1;
          todo.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

// Irreducible block: A + I is primitive, so the Collatz-Wielandt bounds meet.
double block_radius(const TransitionMatrix& a, const std::vector<std::size_t>& idx,
                    const PowerIterationOptions& options) {
  const std::size_t n = idx.size();
  if (n == 1 && !a(idx[0], idx[0])) return 0.0;
  std::vector<double> x(n, 1.0), y(n);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = x[i];
      for (std::size_t j = 0; j < n; ++j) s += a(idx[i], idx[j]) * x[j];
      y[i] = s;
    }
    double lo = INFINITY, hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = y[i] / x[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    if (hi - lo <= options.tolerance * hi) return 0.5 * (lo + hi) - 1.0;
    const double scale = *std::max_element(y.begin(), y.end());
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / scale;
  }
  throw NonConvergence("power iteration did not converge");
}

}  // namespace

double spectral_radius(const TransitionMatrix& matrix, const PowerIterationOptions& options) {
  // The spectrum of a reducible matrix is the union of its diagonal blocks'.
  double best = 0.0;
  for (const auto& comp : components(matrix)) best = std::max(best, block_radius(matrix, comp, options));
  return best;
}

std::vector<mpz_class> characteristic_polynomial(const TransitionMatrix& matrix) {
  const std::size_t n = matrix.size();
  std::vector<mpz_class> coeff(n + 1);
  coeff[n] = 1;
  using Mat = std::vector<mpz_class>;
  Mat m(n * n, 0);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I ;  c_{n-k} = -tr(A M_k) / k
    Mat next(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        mpz_class s = 0;
        for (std::size_t l = 0; l < n; ++l) {
          if (matrix(i, l)) s += matrix(i, l) * m[l * n + j];
        }
        next[i * n + j] = s;
      }
      next[i * n + i] += coeff[n - k + 1];
    }
    mpz_class trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (matrix(i, l)) trace += matrix(i, l) * next[l * n + i];
      }
    }
    mpz_class q;
    mpz_divexact_ui(q.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
    coeff[n - k] = -q;
    m = std::move(next);
  }
  return coeff;
}

namespace {

using Poly = std::vector<mpq_class>;  // low to high, no trailing zeros

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// Remainder of a / b; b nonzero.
Poly remainder(Poly a, const Poly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const mpq_class factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly quotient(Poly a, const Poly& b) {
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size() && !a.empty()) {
    const mpq_class factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

Poly gcd(Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

int sign_at(const Poly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return sgn(acc);
}

int sign_changes(const std::vector<Poly>& chain, const mpq_class& x) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

double largest_real_root(const std::vector<mpz_class>& coefficients) {
  Poly p;
  for (const auto& c : coefficients) p.emplace_back(c);
  trim(p);
  if (p.size() < 2) throw DomainError("constant polynomial has no roots");

  // Square-free part keeps the Sturm count valid at multiple roots.
  Poly g = gcd(p, derivative(p));
  Poly sf = g.size() > 1 ? quotient(p, g) : p;

  std::vector<Poly> chain{sf, derivative(sf)};
  while (chain.back().size() > 1) {
    Poly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }

  // Cauchy bound: every root lies in (-bound, bound).
  mpq_class bound = 0;
  for (std::size_t i = 0; i + 1 < sf.size(); ++i) {
    mpq_class r = abs(mpq_class(sf[i] / sf.back()));
    if (r > bound) bound = r;
  }
  bound += 1;

  mpq_class lo = -bound, hi = bound;
  const int v_hi = sign_changes(chain, hi);
  if (sign_changes(chain, lo) - v_hi < 1) throw DomainError("polynomial has no real root");
  // Invariant: a root lies in (lo, hi] and none lies above hi.
  for (int iter = 0; iter < 80; ++iter) {
    mpq_class mid = (lo + hi) / 2;
    if (sign_changes(chain, mid) - v_hi >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi.get_d();  // exact when the root is a dyadic point of the search
}

double spectral_radius_exact(const TransitionMatrix& matrix) {
  if (matrix.empty()) return 0.0;
  return largest_real_root(characteristic_polynomial(matrix));
}

double pattern_entropy(const Pattern& pattern) {
  const TransitionMatrix m = markov_graph(pattern);
  if (m.empty()) return 0.0;
  // Exact route while the characteristic polynomial stays cheap.
  const double radius = m.size() <= 32 ? spectral_radius_exact(m) : spectral_radius(m);
  return radius <= 1.0 ? 0.0 : std::log(radius);
}

}  // namespace combdyn
