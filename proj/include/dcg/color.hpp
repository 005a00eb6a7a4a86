#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dcg {

/// An element of the dense, endpointless color order, represented exactly as
/// a rational number in lowest terms.
class Color {
 public:
  using Rational = boost::multiprecision::cpp_rational;
  using Integer = boost::multiprecision::cpp_int;

  Color() = default;
  Color(std::int64_t value) : value_(value), num_(value), small_(true) {}  // NOLINT(google-explicit-constructor)
  Color(const Integer& numerator, const Integer& denominator);
  explicit Color(Rational value) : value_(std::move(value)) { cache(); }

  /// Parses `p` or `p/q` (optional leading minus on p). Non-reduced input is
  /// accepted and normalized; a zero denominator is a ParseError.
  static Color parse(std::string_view text);

  const Rational& value() const { return value_; }
  Integer numerator() const;
  Integer denominator() const;

  /// Canonical text: `p` for integers, `p/q` otherwise.
  std::string to_string() const;

  // Both sides are in lowest terms, so a small and a large value never match.
  friend bool operator==(const Color& a, const Color& b) {
    if (a.small_ || b.small_) return a.small_ && b.small_ && a.num_ == b.num_ && a.den_ == b.den_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Color& a, const Color& b) {
    if (a.small_ && b.small_) {
      __extension__ using Wide = __int128;
      return Wide{a.num_} * b.den_ <=> Wide{b.num_} * a.den_;
    }
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  void cache();

  Rational value_{0};
  // Exact copy of value_ when numerator and denominator both fit in 64 bits.
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  bool small_ = true;
};

Color midpoint(const Color& a, const Color& b);

/// One above the largest color in `used`; 1 when `used` is empty.
Color fresh_above(std::span<const Color> used);

}  // namespace dcg
