#pragma once

#include <cstdint>
#include <optional>

#include "cliquecover/cliques.hpp"
#include "cliquecover/params.hpp"
#include "cliquecover/rational.hpp"

namespace cliquecover {

/// Both sides of
///   (s+1) k_{s+1} / (s k_s) - n/s  >=  s k_s / ((s-1) k_{s-1}) - n/(s-1)
/// in exact arithmetic.
struct ChainReport {
  int s = 0;
  std::uint64_t k_prev = 0;  ///< k_{s-1}
  std::uint64_t k_s = 0;
  std::uint64_t k_next = 0;  ///< k_{s+1}
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

/// Throws InputError for s < 2 and PreconditionError when k_s(G) = 0.
ChainReport chain_inequality_report(CliqueCounter& counter, int s);
ChainReport chain_inequality_report(const Graph& g, int s);

/// Edge surplus over the Turán density and the resulting (r+1)-clique count.
/// c solves e(G) = (1 - 1/r + c) n^2 / 2. Diagnostic only: the margin may be 0.
struct SupersaturationReport {
  int r = 0;
  std::uint64_t n = 0;
  std::uint64_t edges = 0;
  Rational c;
  bool applicable = false;  ///< c > 0
  Rational bound;           ///< (c / r^r) n^(r+1)
  std::uint64_t k_next = 0;
  Rational margin;          ///< k_{r+1} - bound
  bool strict_claim_holds = false;
  /// Cover parameters implied for (r+1)-cliques at density c / r^r.
  std::optional<ExtractionParams> implied;
};

SupersaturationReport supersaturation_report(CliqueCounter& counter, int r);
SupersaturationReport supersaturation_report(const Graph& g, int r);

}  // namespace cliquecover
