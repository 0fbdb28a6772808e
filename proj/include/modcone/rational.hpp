#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace modcone {

// Expression templates are disabled so that `auto` locals hold values.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// A mathematical precondition does not hold, e.g. ρ ≠ -1 for a Brill–Noether divisor.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Display-only decimal rendering rounded to `digits` fractional places,
/// trailing zeros trimmed. Never feed this back into a computation.
std::string to_decimal(const Rational& q, int digits = 10);

inline Rational make_rational(std::int64_t p, std::int64_t q = 1) {
  return Rational(BigInt(p), BigInt(q));
}

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt factorial(std::int64_t n);

}  // namespace modcone
