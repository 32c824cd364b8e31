#pragma once

#include <cstdint>

#include "cliquecover/rational.hpp"

namespace cliquecover {

// Integer parameters derived from transcendental quantities. Each value is
// bracketed with outward-rounded interval arithmetic; precision doubles until
// the bracket pins down the integer, so the result never depends on a
// floating-point rounding accident.

/// floor(a * ln n) for a >= 0 and n >= 1.
std::uint64_t certified_floor_scaled_log(const Rational& a, std::uint64_t n);

/// The smallest integer strictly greater than n^e, for n >= 1 and any rational e.
/// When n^e is itself an integer k the answer is k + 1 (detected exactly).
std::uint64_t certified_strict_ceil_power(std::uint64_t n, const Rational& e);

/// a * ln n >= 1, decided exactly (a * ln n is irrational for n >= 2, a != 0).
inline bool scaled_log_at_least_one(const Rational& a, std::uint64_t n) {
  return certified_floor_scaled_log(a, n) >= 1;
}

}  // namespace cliquecover
