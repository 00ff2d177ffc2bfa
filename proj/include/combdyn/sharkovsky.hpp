#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace combdyn {

/// n = 2^k * m with m odd.
struct SharkovskyKey {
  unsigned k = 0;
  std::uint64_t m = 1;

  static SharkovskyKey of(std::uint64_t n);
  std::uint64_t value() const { return m << k; }
  friend bool operator==(const SharkovskyKey&, const SharkovskyKey&) = default;
};

/// The symbolic limit 2^inf: above every power of two, below everything else.
struct TwoInfinity {
  friend bool operator==(const TwoInfinity&, const TwoInfinity&) = default;
};

/// A natural number or 2^inf, positioned in the Sharkovsky order.
class SharkovskyElement {
 public:
  SharkovskyElement(std::uint64_t n);  // NOLINT(google-explicit-constructor)
  SharkovskyElement(TwoInfinity) : repr_(TwoInfinity{}) {}  // NOLINT(google-explicit-constructor)

  static SharkovskyElement two_infinity() { return SharkovskyElement(TwoInfinity{}); }
  /// Accepts a positive decimal integer or "2inf".
  static SharkovskyElement parse(std::string_view text);

  bool is_two_infinity() const { return std::holds_alternative<TwoInfinity>(repr_); }
  const SharkovskyKey& key() const;  // precondition: finite
  std::string str() const;

  friend bool operator==(const SharkovskyElement&, const SharkovskyElement&) = default;

 private:
  std::variant<SharkovskyKey, TwoInfinity> repr_;
};

/// Sharkovsky order <_s: 1 < 2 < 4 < ... < 2^inf < ... < 5*2 < 3*2 < ... < 7 < 5 < 3.
std::strong_ordering sharkovsky_compare(const SharkovskyElement& a, const SharkovskyElement& b);

/// S(n) intersected with [1, cap], ascending in the usual order of integers.
std::vector<std::uint64_t> initial_segment(const SharkovskyElement& n, std::uint64_t cap);

/// True iff periods == initial_segment(n, cap) for some n in N or 2^inf;
/// the first such n found is written to witness.
bool match_initial_segment(const std::vector<std::uint64_t>& periods, std::uint64_t cap,
                           SharkovskyElement* witness = nullptr);

}  // namespace combdyn
