#include "modcone/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace modcone {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  BigInt p(std::string(num.front() == '+' ? num.substr(1) : num));
  BigInt q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_decimal(const Rational& q, int digits) {
  BigInt scale = 1;
  for (int k = 0; k < digits; ++k) scale *= 10;
  const bool negative = q < 0;
  const Rational a = negative ? Rational(-q) : q;
  // round half up on the absolute value
  BigInt scaled = (numerator(a) * scale * 2 + denominator(a)) / (denominator(a) * 2);
  const BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
  if (frac != 0 && digits > 0) {
    std::string f = frac.str();
    f.insert(0, static_cast<std::size_t>(digits) - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    out += "." + f;
  }
  return out;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;
  }
  return result;
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  BigInt result = 1;
  for (std::int64_t j = 2; j <= n; ++j) result *= j;
  return result;
}

}  // namespace modcone
