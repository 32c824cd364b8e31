#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliquecover/bitset.hpp"
#include "cliquecover/cliques.hpp"
#include "cliquecover/graph.hpp"
#include "cliquecover/rational.hpp"

namespace cliquecover {

/// Bipartite graph with m left items and right vertices 0..n-1. Left items may
/// carry an opaque payload (a clique tuple); the payload never affects search.
class BipartiteInstance {
 public:
  BipartiteInstance(std::size_t left_size, int right_n);

  /// `edges` are (left index, right vertex) pairs; duplicates are rejected.
  static BipartiteInstance from_edges(std::size_t left_size, int right_n,
                                      std::span<const std::pair<std::size_t, Vertex>> edges);

  std::size_t left_size() const { return rows_.size(); }
  int right_size() const { return right_n_; }
  const Bitset& row(std::size_t i) const { return rows_[i]; }
  bool adjacent(std::size_t i, Vertex v) const { return rows_[i].test(static_cast<std::size_t>(v)); }
  std::size_t left_degree(std::size_t i) const { return rows_[i].count(); }
  std::vector<std::size_t> right_degrees() const;
  std::size_t edge_count() const;

  /// Adds (i, v); returns false if present. Throws InputError when out of range.
  bool add_edge(std::size_t i, Vertex v);

  void set_items(std::vector<Tuple> items);
  const std::vector<Tuple>& items() const { return items_; }

 private:
  int right_n_;
  std::vector<Bitset> rows_;
  std::vector<Tuple> items_;
};

/// f(x) = x (x-1) ... (x-s+1) / s! for x >= s-1, and 0 for x < s-1.
Rational generalized_binomial(const Rational& x, int s);

/// C(n, k) as an exact integer.
BigInt binomial(std::uint64_t n, std::uint64_t k);

struct Lemma1Params {
  std::uint64_t s = 0;       ///< floor(c^r ln n)
  std::uint64_t t_min = 0;   ///< smallest integer > n^(1 - c^(r-1))
  bool c_lower_ok = false;   ///< (ln n)^(-1/r) <= c
  bool c_upper_ok = false;   ///< c < 1/2
  bool s_vs_m_ok = false;    ///< s <= (c/2) m + 1
  std::optional<bool> density_ok;  ///< e(F) >= c m n, when e(F) is supplied

  bool all_ok() const { return c_lower_ok && c_upper_ok && s_vs_m_ok && density_ok.value_or(false); }
};

Lemma1Params lemma1_params(std::uint64_t m, std::uint64_t n, const Rational& c, int r,
                           std::optional<std::uint64_t> edges = std::nullopt);

enum class SearchMode { first_feasible, maximize };

struct BicliqueWitness {
  std::vector<std::size_t> left;  ///< sorted left indices, |left| = s
  VertexSet right;                ///< common neighbourhood of `left`
};

/// Branch and bound over s-subsets of the left side in canonical order
/// (degree descending, index ascending), carrying the running intersection.
/// first_feasible stops at the first subset with |T| >= t_min; maximize
/// returns the first subset attaining the largest |T| (t_min is ignored).
/// Returns nullopt when no witness exists or s > m.
std::optional<BicliqueWitness> find_s_subset(const BipartiteInstance& f, std::size_t s, std::size_t t_min,
                                             SearchMode mode);

/// Up to `limit` s-subsets with |T| >= t_min, largest |T| first and ties in
/// canonical search order, so the first entry is the maximize-mode witness.
std::vector<BicliqueWitness> rank_s_subsets(const BipartiteInstance& f, std::size_t s, std::size_t t_min,
                                            std::size_t limit);

inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

struct OracleResult {
  std::vector<std::size_t> left;  ///< lexicographically first maximizer
  std::size_t t = 0;
};

/// Plain scan over all C(m, s) subsets with no pruning. Throws LimitError when
/// C(m, s) exceeds `cap`, InputError when s is 0 or exceeds m.
OracleResult biclique_oracle(const BipartiteInstance& f, std::size_t s, std::uint64_t cap = kDefaultOracleCap);

struct DoubleCountReport {
  BigInt lhs_sum;  ///< sum over s-subsets X of d(X)
  BigInt rhs_sum;  ///< sum over right vertices u of C(d(u), s)
  bool equal = false;
  Rational convex_lhs;  ///< sum_u f(d(u))
  Rational convex_rhs;  ///< n f(e(F)/n)
  bool convexity_ok = false;
};

DoubleCountReport double_count_check(const BipartiteInstance& f, std::size_t s,
                                     std::uint64_t cap = kDefaultOracleCap);

/// Bipartite text format: "m n e" header then e lines "i v".
BipartiteInstance parse_bipartite(std::string_view text);
std::string emit_bipartite(const BipartiteInstance& f);

}  // namespace cliquecover
