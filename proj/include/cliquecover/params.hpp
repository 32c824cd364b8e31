#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliquecover/rational.hpp"

namespace cliquecover {

enum class Mode { guaranteed, best_effort };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

/// Parameters of one induction level k (2 <= k <= r). Level k works on
/// k-cliques with density constant c_k; c_r = c and c_{k-1} = k * c_k / 2.
struct LevelParams {
  int level = 0;
  Rational c;
  std::uint64_t s = 0;      ///< floor(c_k^k ln n)
  std::uint64_t t_min = 0;  ///< smallest integer > n^(1 - c_k^(k-1))
  std::uint64_t m = 0;      ///< left side of the bipartite step: n at level 2, s_{k-1} above
  bool hypothesis_ok = false;  ///< c_k^k ln n >= 1, equivalently (ln n)^(-1/k) <= c_k
  bool c_upper_ok = false;     ///< c_k < 1/2
  bool s_vs_m_ok = false;      ///< s_k <= (c_k / 2) m_k + 1
  bool supplies_m_ok = true;   ///< below the top level: t_min_k >= s_k, so s_k disjoint members exist

  bool ok() const { return hypothesis_ok && c_upper_ok && s_vs_m_ok && supplies_m_ok; }
};

/// Part-size targets and feasibility flags for one extraction run.
struct ExtractionParams {
  std::uint64_t n = 0;
  int r = 0;
  std::optional<Rational> c;  ///< absent in best-effort mode
  std::uint64_t s = 0;
  std::uint64_t t_min = 0;
  Mode mode = Mode::guaranteed;
  /// Levels r, r-1, ..., 2 (top level first). Empty in best-effort mode.
  std::vector<LevelParams> levels;
  /// |M| >= c n^r; unset until an instance is supplied.
  std::optional<bool> mass_ok;

  /// All parameter-level flags hold (ignores mass_ok).
  bool parameters_feasible() const;
  /// parameters_feasible() and mass_ok == true.
  bool feasible() const;
};

/// s = floor(c^r ln n), t_min = smallest integer > n^(1 - c^(r-1)), plus the
/// recursion levels with c_{k-1} = k c_k / 2 and their side conditions.
ExtractionParams theorem_params(std::uint64_t n, int r, const Rational& c);

}  // namespace cliquecover
