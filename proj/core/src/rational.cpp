#include "septet/rational.hpp"

#include <cctype>

#include "septet/error.hpp"

namespace septet {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

[[noreturn]] void reject(std::string_view text, const char* why) {
  throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "': " + why);
}

Integer parse_signed_integer(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) reject(whole, "expected digits");
  Integer value(std::string(text), 10);
  return negative ? Integer(-value) : value;
}

Rational parse_decimal(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    Integer exp_value = parse_signed_integer(text.substr(e + 1), whole);
    if (!exp_value.fits_slong_p() || abs(exp_value) > 4096) reject(whole, "exponent out of range");
    exponent = exp_value.get_si();
    text = text.substr(0, e);
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) reject(whole, "no digits");
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
      reject(whole, "expected decimal digits");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(text)) reject(whole, "expected digits");
    digits = std::string(text);
  }
  Rational value{Integer(digits, 10)};
  Integer ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0)
    value *= ten_power;
  else
    value /= ten_power;
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) reject(whole, "empty");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_signed_integer(text.substr(0, slash), whole);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) reject(whole, "denominator must be a positive integer");
    Integer den(std::string(den_text), 10);
    if (den == 0) reject(whole, "zero denominator");
    Rational value(num, den);
    value.canonicalize();
    return value;
  }
  if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text, whole);
  return Rational(parse_signed_integer(text, whole));
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace septet
