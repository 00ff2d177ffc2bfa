#include "combdyn/sharkovsky.hpp"

#include <bit>
#include <charconv>

#include "combdyn/error.hpp"

namespace combdyn {

SharkovskyKey SharkovskyKey::of(std::uint64_t n) {
  if (n == 0) throw DomainError("Sharkovsky order is defined on naturals >= 1");
  const auto k = static_cast<unsigned>(std::countr_zero(n));
  return SharkovskyKey{k, n >> k};
}

SharkovskyElement::SharkovskyElement(std::uint64_t n) : repr_(SharkovskyKey::of(n)) {}

SharkovskyElement SharkovskyElement::parse(std::string_view text) {
  if (text == "2inf" || text == "2^inf") return two_infinity();
  std::uint64_t n = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, n);
  if (ec != std::errc{} || ptr != end || n == 0) {
    throw DomainError("expected a positive integer or '2inf', got '" + std::string(text) + "'");
  }
  return SharkovskyElement(n);
}

const SharkovskyKey& SharkovskyElement::key() const {
  if (is_two_infinity()) throw DomainError("2^inf has no finite decomposition");
  return std::get<SharkovskyKey>(repr_);
}

std::string SharkovskyElement::str() const {
  return is_two_infinity() ? std::string("2inf") : std::to_string(key().value());
}

namespace {

// Position in the order as a tuple compared lexicographically:
// (0, k) for 2^k, (1, 0) for 2^inf, (2, -k, -m) for 2^k * m with m > 1.
struct Rank {
  int tier;
  std::int64_t a;
  std::int64_t b;
  auto operator<=>(const Rank&) const = default;
};

Rank rank_of(const SharkovskyElement& e) {
  if (e.is_two_infinity()) return {1, 0, 0};
  const auto& key = e.key();
  if (key.m == 1) return {0, key.k, 0};
  return {2, -static_cast<std::int64_t>(key.k), -static_cast<std::int64_t>(key.m)};
}

}  // namespace

std::strong_ordering sharkovsky_compare(const SharkovskyElement& a, const SharkovskyElement& b) {
  return rank_of(a) <=> rank_of(b);
}

std::vector<std::uint64_t> initial_segment(const SharkovskyElement& n, std::uint64_t cap) {
  if (cap == 0) throw DomainError("cap must be >= 1");
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m <= cap; ++m) {
    if (sharkovsky_compare(m, n) != std::strong_ordering::greater) out.push_back(m);
  }
  return out;
}

bool match_initial_segment(const std::vector<std::uint64_t>& periods, std::uint64_t cap,
                           SharkovskyElement* witness) {
  auto try_candidate = [&](const SharkovskyElement& n) {
    if (initial_segment(n, cap) != periods) return false;
    if (witness) *witness = n;
    return true;
  };
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (try_candidate(n)) return true;
  }
  if (try_candidate(SharkovskyElement::two_infinity())) return true;
  // Every n > cap truncates to the same set as 2^k * m0, where m0 is the
  // smallest odd m > 1 with 2^k * m > cap.
  for (unsigned k = 0; (std::uint64_t{1} << k) <= cap; ++k) {
    std::uint64_t m = 3;
    while ((m << k) <= cap) m += 2;
    if (try_candidate(m << k)) return true;
  }
  return false;
}

}  // namespace combdyn
