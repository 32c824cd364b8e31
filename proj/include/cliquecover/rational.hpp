#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cliquecover {

/// Exact rational with arbitrary-precision numerator and denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q" or "p" (optional leading '-'). Decimals are rejected.
/// Throws InputError naming the offending token.
Rational parse_rational(std::string_view text);

/// Parses a probability given as "p/q", an integer, or a plain decimal such as
/// "0.25". The result must lie in [0, 1].
Rational parse_probability(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& value);

/// Always "p/q", even when q = 1.
std::string to_fraction_string(const Rational& value);

BigInt floor(const Rational& value);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

inline BigInt to_big(std::uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

/// n^k as an exact integer.
BigInt power(std::uint64_t base, unsigned exponent);

/// x^k as an exact rational.
Rational power(const Rational& base, unsigned exponent);

}  // namespace cliquecover
