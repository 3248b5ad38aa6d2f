#include "zariski/rational.hpp"

#include <cctype>

#include "zariski/error.hpp"

namespace zariski {

namespace {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::string to_string(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_digits(num_text) || !is_digits(den_text)) {
    throw Error(ErrorKind::Parse, "malformed rational \"" + original + "\"");
  }
  const Integer num{std::string(num_text)};
  const Integer den{std::string(den_text)};
  if (den == 0) {
    throw Error(ErrorKind::Parse, "zero denominator in \"" + original + "\"");
  }
  Rational value(num, den);
  return negative ? Rational(-value) : value;
}

bool is_integral(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

int sign(const Rational& value) { return value.sign(); }

}  // namespace zariski
