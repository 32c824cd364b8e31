#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cliquecover/cliques.hpp"
#include "cliquecover/rational.hpp"

namespace cliquecover {

struct PruneRound {
  Tuple trigger;         ///< the (r-1)-tuple whose co-degree fell to the threshold
  std::size_t removed;   ///< members deleted in this round
};

struct PruneResult {
  CliqueList kept;
  std::vector<PruneRound> rounds;
  Rational threshold;
};

/// Repeatedly deletes every member containing a facet R with
/// codegree(L, R) <= threshold, until no such facet remains. The
/// lexicographically smallest offending facet is always handled first.
PruneResult prune(const CliqueList& m, int n, const Rational& threshold);

struct PruneGuaranteeReport {
  bool codegree_ok = false;        ///< every surviving facet has co-degree > c n
  bool removal_bound_ok = false;   ///< |M| - |L| <= c n |K_{r-1}(M)|
  bool size_applicable = false;    ///< |M| >= c n^r
  bool size_ok = false;            ///< |L| > (c/2) n^r, true when not applicable

  bool all_ok() const { return codegree_ok && removal_bound_ok && size_ok; }
};

/// Throws InputError when `result` is not a pruning of `m` at threshold c n.
PruneGuaranteeReport prune_guarantee_check(const CliqueList& m, const PruneResult& result, const Rational& c, int n,
                                           int r);

/// Round log as text: one "removed <count> by <tuple>" line per round.
std::string emit_prune_log(const PruneResult& result);

}  // namespace cliquecover
