#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cliquecover/bipartite.hpp"
#include "cliquecover/cliques.hpp"
#include "cliquecover/graph.hpp"
#include "cliquecover/params.hpp"
#include "cliquecover/rational.hpp"

namespace cliquecover {

/// Checkable witness that a clique set covers K_r(s, ..., s, t): r - 1 parts of
/// size s, a last part of size t, and min(s, t) pairwise disjoint members that
/// are transversals of the parts.
struct CoverCertificate {
  int r = 0;
  std::vector<VertexSet> parts;  ///< r - 1 parts
  VertexSet last_part;
  std::vector<Tuple> disjoint_members;
  ExtractionParams params;

  std::size_t s() const { return parts.empty() ? 0 : parts.front().size(); }
  std::size_t t() const { return last_part.size(); }
};

/// Why an extraction produced no certificate.
struct ExtractionFailure {
  enum class Kind {
    infeasible,      ///< parameter or instance flags fail
    not_found,       ///< a stage came up empty (expected outside the guaranteed regime)
    search_failure,  ///< a stage came up empty although every flag held: a defect
  };
  Kind kind = Kind::not_found;
  int level = 0;      ///< clique arity of the level that failed
  std::string stage;  ///< "params", "prune", "members" or "search"
  ExtractionParams params;
};

std::string to_string(ExtractionFailure::Kind kind);

using ExtractionOutcome = std::variant<CoverCertificate, ExtractionFailure>;

/// Guaranteed mode: s and t_min come from theorem_params(n, r, c); every
/// level prunes at c_k n and searches in first-feasible mode.
ExtractionOutcome extract(const Graph& g, const CliqueList& m, int r, const Rational& c);

struct TargetOptions {
  Rational threshold{0};                 ///< pruning threshold at every level >= 3
  std::optional<std::size_t> inner_s;    ///< part size below the top level (default: s)
  std::optional<std::size_t> inner_t_min;  ///< raised to inner_s when smaller
  std::size_t inner_candidates = 32;       ///< ranked witnesses tried per lower level before giving up
};

/// Best-effort mode: the same pipeline with caller-chosen targets. The top
/// level searches first-feasible for (s, t_min); each lower level offers its
/// best witnesses by |T| in turn, backtracking when the level above fails.
ExtractionOutcome extract_with_target(const Graph& g, const CliqueList& m, int r, std::size_t s, std::size_t t_min,
                                      const TargetOptions& options = {});

/// Left items are `a_cliques`; R ~ v iff sorted(R + v) is a member of L.
BipartiteInstance build_bipartite_from_cliques(const CliqueList& l, std::span<const Tuple> a_cliques, int n);

/// r = 2: the double cover of V(G) (u ~ v iff uv in M) searched for K_2(s, t).
std::variant<CoverCertificate, ExtractionFailure> base_case_r2(const CliqueList& m, int n, std::size_t s,
                                                               std::size_t t_min);

/// Certificate text format (see README).
std::string emit_certificate(const CoverCertificate& cert);
CoverCertificate parse_certificate(std::string_view text);

}  // namespace cliquecover
