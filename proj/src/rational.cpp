#include "aqh/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace aqh {

namespace {

using wide = __int128;

wide wide_abs(wide x) { return x < 0 ? -x : x; }

wide wide_gcd(wide a, wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(wide x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw RationalOverflow("rational literal out of range: " + std::string(text));
  }
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(wide num, wide den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits(num) || !fits(den)) throw RationalOverflow("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(num_, rhs.num_, &out)) throw RationalOverflow("rational overflow");
    num_ = out;
    return *this;
  }
  *this = from_wide(wide(num_) * rhs.den_ + wide(rhs.num_) * den_, wide(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(num_, rhs.num_, &out)) throw RationalOverflow("rational overflow");
    num_ = out;
    return *this;
  }
  *this = from_wide(wide(num_) * rhs.num_, wide(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("division by zero");
  *this = from_wide(wide(num_) * rhs.den_, wide(den_) * rhs.num_);
  return *this;
}

Rational Rational::operator-() const {
  if (num_ == std::numeric_limits<std::int64_t>::min()) throw RationalOverflow("rational overflow");
  Rational r = *this;
  r.num_ = -num_;
  return r;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept {
  if (lhs.den_ == rhs.den_) return lhs.num_ <=> rhs.num_;
  wide l = wide(lhs.num_) * rhs.den_;
  wide r = wide(rhs.num_) * lhs.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace aqh
