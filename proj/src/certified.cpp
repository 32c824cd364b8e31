#include "cliquecover/certified.hpp"

#include <limits>
#include <stdexcept>

#include <mpfr.h>

#include "cliquecover/errors.hpp"

namespace cliquecover {

namespace {

constexpr mpfr_prec_t kStartPrecision = 64;
constexpr mpfr_prec_t kMaxPrecision = mpfr_prec_t{1} << 20;

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(value_, prec); }
  ~Mpfr() { mpfr_clear(value_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

 private:
  mpfr_t value_;
};

BigInt floor_of(const Mpfr& x) {
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), x.get(), MPFR_RNDD);
  return out;
}

std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
    throw std::overflow_error("certified integer parameter does not fit in 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

// Encloses ln n in [lo, hi].
void log_bounds(std::uint64_t n, Mpfr& lo, Mpfr& hi, mpfr_prec_t prec) {
  Mpfr exact(std::max<mpfr_prec_t>(prec, 64));
  mpfr_set_z(exact.get(), to_big(n).get_mpz_t(), MPFR_RNDN);
  mpfr_log(lo.get(), exact.get(), MPFR_RNDD);
  mpfr_log(hi.get(), exact.get(), MPFR_RNDU);
}

// n^(p/q) == k exactly, for p/q > 0 in lowest terms.
bool is_exact_power(std::uint64_t n, const Rational& e, const BigInt& k) {
  if (e <= 0) return e == 0 && k == 1;
  if (!e.get_den().fits_ulong_p() || !e.get_num().fits_ulong_p()) return false;
  unsigned long q = e.get_den().get_ui();
  unsigned long p = e.get_num().get_ui();
  // n^(p/q) with gcd(p,q) = 1 is an integer only if n is a perfect q-th power.
  if (q > 64) return false;
  BigInt lhs;
  BigInt rhs;
  mpz_pow_ui(lhs.get_mpz_t(), k.get_mpz_t(), q);
  mpz_pow_ui(rhs.get_mpz_t(), to_big(n).get_mpz_t(), p);
  return lhs == rhs;
}

}  // namespace

std::uint64_t certified_floor_scaled_log(const Rational& a, std::uint64_t n) {
  if (a < 0) throw InputError("scale factor must be non-negative");
  if (n == 0) throw InputError("logarithm of zero");
  if (n == 1 || a == 0) return 0;

  for (mpfr_prec_t prec = kStartPrecision; prec <= kMaxPrecision; prec *= 2) {
    Mpfr ln_lo(prec), ln_hi(prec), a_lo(prec), a_hi(prec), lo(prec), hi(prec);
    log_bounds(n, ln_lo, ln_hi, prec);
    mpfr_set_q(a_lo.get(), a.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(a_hi.get(), a.get_mpq_t(), MPFR_RNDU);
    mpfr_mul(lo.get(), a_lo.get(), ln_lo.get(), MPFR_RNDD);
    mpfr_mul(hi.get(), a_hi.get(), ln_hi.get(), MPFR_RNDU);
    BigInt f_lo = floor_of(lo);
    if (f_lo == floor_of(hi)) return to_u64(f_lo);
  }
  throw std::runtime_error("certified floor did not converge");
}

std::uint64_t certified_strict_ceil_power(std::uint64_t n, const Rational& e) {
  if (n == 0) throw InputError("power of zero");
  if (n == 1 || e == 0) return 2;

  for (mpfr_prec_t prec = kStartPrecision; prec <= kMaxPrecision; prec *= 2) {
    Mpfr ln_lo(prec), ln_hi(prec), e_lo(prec), e_hi(prec), x_lo(prec), x_hi(prec);
    log_bounds(n, ln_lo, ln_hi, prec);
    mpfr_set_q(e_lo.get(), e.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(e_hi.get(), e.get_mpq_t(), MPFR_RNDU);
    // ln n > 0, so the extreme products pair up according to the sign of e.
    if (e > 0) {
      mpfr_mul(x_lo.get(), e_lo.get(), ln_lo.get(), MPFR_RNDD);
      mpfr_mul(x_hi.get(), e_hi.get(), ln_hi.get(), MPFR_RNDU);
    } else {
      mpfr_mul(x_lo.get(), e_lo.get(), ln_hi.get(), MPFR_RNDD);
      mpfr_mul(x_hi.get(), e_hi.get(), ln_lo.get(), MPFR_RNDU);
    }
    mpfr_exp(x_lo.get(), x_lo.get(), MPFR_RNDD);
    mpfr_exp(x_hi.get(), x_hi.get(), MPFR_RNDU);

    BigInt k_lo = floor_of(x_lo);
    BigInt k_hi = floor_of(x_hi);
    bool lo_is_integer = mpfr_integer_p(x_lo.get()) != 0;
    if (k_lo == k_hi && !lo_is_integer) return to_u64(k_lo + 1);
    if (k_hi - k_lo <= 1) {
      if (is_exact_power(n, e, k_hi)) return to_u64(k_hi + 1);
      if (k_lo != k_hi && lo_is_integer && is_exact_power(n, e, k_lo)) return to_u64(k_lo + 1);
    }
  }
  throw std::runtime_error("certified ceiling did not converge");
}

}  // namespace cliquecover
