#pragma once

#include <string>

#include "cliquecover/cliques.hpp"
#include "cliquecover/extract.hpp"
#include "cliquecover/graph.hpp"

namespace cliquecover {

/// Outcome of checking a certificate against (G, M). Each field is one class of
/// defect; the verifier never throws on a malformed certificate.
struct VerifyReport {
  bool parts_ok = false;          ///< r parts, in range, non-empty, pairwise disjoint
  bool completeness_ok = false;   ///< every cross-part pair is an edge of G
  bool edges_in_k2m_ok = false;   ///< every cross-part pair lies inside some member of M
  bool members_ok = false;        ///< witnesses are members of M, transversals, pairwise disjoint, min part size many
  bool sizes_ok = false;          ///< part sizes match (s, ..., s, t), t >= t_min, arities match r

  bool all_ok() const { return parts_ok && completeness_ok && edges_in_k2m_ok && members_ok && sizes_ok; }
};

/// Checks the cover relation from scratch: it builds its own edge and member
/// indexes and shares no code with the extractor beyond the Graph type.
VerifyReport verify_cover(const Graph& g, const CliqueList& m, const CoverCertificate& cert);

}  // namespace cliquecover
