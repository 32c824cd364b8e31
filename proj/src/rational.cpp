#include "cliquecover/rational.hpp"

#include <cctype>

#include "cliquecover/errors.hpp"

namespace cliquecover {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

[[noreturn]] void bad_token(std::string_view text, const char* what) {
  throw InputError(std::string(what) + " '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) bad_token(text, "malformed rational");
  BigInt p(std::string(num), 10);
  BigInt q(std::string(den), 10);
  if (q == 0) bad_token(text, "zero denominator in rational");
  Rational out(negative ? BigInt(-p) : p, q);
  out.canonicalize();
  return out;
}

Rational parse_probability(std::string_view text) {
  Rational p;
  auto dot = text.find('.');
  if (dot == std::string_view::npos) {
    p = parse_rational(text);
  } else {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac)) bad_token(text, "malformed decimal");
    BigInt num(std::string(whole) + std::string(frac), 10);
    BigInt den = power(10, static_cast<unsigned>(frac.size()));
    p = Rational(num, den);
    p.canonicalize();
  }
  if (p < 0 || p > 1) bad_token(text, "probability outside [0,1]");
  return p;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigInt floor(const Rational& value) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

BigInt power(std::uint64_t base, unsigned exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), to_big(base).get_mpz_t(), exponent);
  return out;
}

Rational power(const Rational& base, unsigned exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  out.canonicalize();
  return out;
}

}  // namespace cliquecover
