#include "abr/rational.hpp"

#include <cctype>

#include "abr/error.hpp"

namespace abr {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den))
    throw InvariantError("malformed rational \"" + std::string(text) + "\"");

  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw InvariantError("zero denominator in \"" + std::string(text) + "\"");
  if (negative) n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw InvariantError("zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

}  // namespace abr
