#include "dcg/color.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "dcg/errors.hpp"

namespace dcg {

namespace {

Color::Integer parse_integer(std::string_view text, bool allow_sign, std::string_view whole) {
  std::size_t pos = 0;
  if (allow_sign && !text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) throw ParseError("bad color literal '" + std::string(whole) + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("bad color literal '" + std::string(whole) + "'");
    }
  }
  return Color::Integer(std::string(text[0] == '+' ? text.substr(1) : text));
}

}  // namespace

Color::Color(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw ParseError("color with zero denominator");
  value_ = Rational(numerator, denominator);
  cache();
}

void Color::cache() {
  const auto& num = boost::multiprecision::numerator(value_);
  const auto& den = boost::multiprecision::denominator(value_);
  constexpr auto lo = std::numeric_limits<std::int64_t>::min();
  constexpr auto hi = std::numeric_limits<std::int64_t>::max();
  small_ = num >= lo && num <= hi && den <= hi;
  if (small_) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
  }
}

Color Color::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Color(parse_integer(text, true, text), Integer(1));
  return Color(parse_integer(text.substr(0, slash), true, text),
               parse_integer(text.substr(slash + 1), false, text));
}

Color::Integer Color::numerator() const { return boost::multiprecision::numerator(value_); }
Color::Integer Color::denominator() const { return boost::multiprecision::denominator(value_); }

std::string Color::to_string() const {
  const Integer den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

Color midpoint(const Color& a, const Color& b) {
  return Color(Color::Rational((a.value() + b.value()) / 2));
}

Color fresh_above(std::span<const Color> used) {
  if (used.empty()) return Color(1);
  return Color(Color::Rational(std::max_element(used.begin(), used.end())->value() + 1));
}

}  // namespace dcg
