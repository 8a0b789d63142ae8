#include "kannan/rational.hpp"

namespace kannan {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (c < '0' || c > '9') {
      return false;
    }
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  std::string_view num_part = text;
  std::string_view den_part;
  bool has_slash = false;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    has_slash = true;
    num_part = text.substr(0, slash);
    den_part = text.substr(slash + 1);
  }

  bool negative = false;
  if (!num_part.empty() && num_part.front() == '-') {
    negative = true;
    num_part.remove_prefix(1);
  }
  if (!all_digits(num_part)) {
    return std::nullopt;
  }
  BigInt numerator{std::string(num_part)};
  if (negative) {
    numerator = -numerator;
  }
  if (!has_slash) {
    return Rational(numerator);
  }

  if (!all_digits(den_part)) {
    return std::nullopt;
  }
  BigInt denominator{std::string(den_part)};
  if (denominator == 0) {
    return std::nullopt;
  }
  return Rational(numerator, denominator);
}

std::string format_rational(const Rational& value) {
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

Rational rational_pow(const Rational& value, unsigned exponent) {
  using boost::multiprecision::pow;
  return Rational(pow(numerator(value), exponent),
                  pow(denominator(value), exponent));
}

}  // namespace kannan
