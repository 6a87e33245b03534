#include "mld/rational.h"

#include <cctype>
#include <stdexcept>

namespace mld {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void malformed(std::string_view text) {
  throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) malformed(text);
    mpz_class d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = Rational(mpz_class(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) malformed(text);
    if (!whole.empty() && !all_digits(whole)) malformed(text);
    if (!frac.empty() && !all_digits(frac)) malformed(text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class num = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole));
    num *= scale;
    if (!frac.empty()) num += mpz_class(std::string(frac));
    value = Rational(num, scale);
  } else {
    if (!all_digits(body)) malformed(text);
    value = Rational(mpz_class(std::string(body)));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
  Rational v(value);
  v.canonicalize();
  return v.get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

bool is_integer(const Rational& value) {
  Rational v(value);
  v.canonicalize();
  return v.get_den() == 1;
}

}  // namespace mld
