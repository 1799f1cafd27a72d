#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aqh {

/// Raised when an exact computation leaves the representable range.
/// Arithmetic never wraps; it throws this instead.
class RationalOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Exact rational number with 64-bit numerator and denominator.
///
/// Values are always kept reduced with a positive denominator, so two
/// rationals are equal iff their numerators and denominators are equal.
/// Intermediate products are formed in 128 bits and reduced before being
/// narrowed; a result that still does not fit raises RationalOverflow.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  // Implicit on purpose: integer literals appear everywhere in root data.
  constexpr Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den);

  [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }

  [[nodiscard]] constexpr bool is_zero() const noexcept { return num_ == 0; }
  [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }
  [[nodiscard]] constexpr int sign() const noexcept {
    return (num_ > 0) - (num_ < 0);
  }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept;

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const;

  /// Accepts "p", "-p", "p/q"; throws std::invalid_argument on malformed text.
  static Rational parse(std::string_view text);

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational abs(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace aqh
