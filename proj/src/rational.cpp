#include "combdyn/rational.hpp"

#include <cctype>
#include <limits>

#include "combdyn/error.hpp"

namespace combdyn {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::int64_t to_i64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw DomainError("integer does not fit in 64 bits: " + z.get_str());
  return z.get_si();
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw DomainError("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str() + "/1";
  return value_.get_str();
}

std::int64_t Rational::numerator_i64() const { return to_i64(value_.get_num()); }
std::int64_t Rational::denominator_i64() const { return to_i64(value_.get_den()); }

Rational Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::size_t Rational::hash() const {
  const std::size_t h1 = std::hash<std::string>{}(value_.get_num().get_str(16));
  const std::size_t h2 = std::hash<std::string>{}(value_.get_den().get_str(16));
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

}  // namespace combdyn
