#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cliquecover/graph.hpp"

namespace cliquecover {

/// A clique as a strictly increasing vertex tuple.
using Tuple = std::vector<Vertex>;

/// Uniform-arity set of sorted vertex tuples, kept in lexicographic order.
class CliqueList {
 public:
  CliqueList(int arity, int host_n);

  /// Validates each tuple (arity, strictly increasing, in [0, host_n)), then
  /// sorts and removes duplicates.
  static CliqueList from_tuples(int arity, int host_n, std::vector<Tuple> tuples);

  int arity() const { return arity_; }
  int host_n() const { return host_n_; }
  std::size_t size() const { return tuples_.size(); }
  bool empty() const { return tuples_.empty(); }
  const Tuple& operator[](std::size_t i) const { return tuples_[i]; }
  const std::vector<Tuple>& tuples() const { return tuples_; }
  auto begin() const { return tuples_.begin(); }
  auto end() const { return tuples_.end(); }

  bool contains(std::span<const Vertex> tuple) const;

  /// Every member induces a complete subgraph of g.
  bool all_cliques_in(const Graph& g) const;

  friend bool operator==(const CliqueList&, const CliqueList&) = default;

 private:
  CliqueList(int arity, int host_n, std::vector<Tuple> sorted_unique);

  int arity_;
  int host_n_;
  std::vector<Tuple> tuples_;
};

/// All r-cliques of g, extending each clique only by vertices above its maximum.
CliqueList enumerate_r_cliques(const Graph& g, int r);

/// k_r(g) without materializing the cliques.
std::uint64_t count_r_cliques(const Graph& g, int r);

/// K_s(M): all s-subsets of members of M.
CliqueList sub_cliques(const CliqueList& m, int s);

/// Number of members of M containing the sorted (arity - 1)-tuple `facet`.
std::size_t codegree(const CliqueList& m, std::span<const Vertex> facet);

/// Co-degree of every facet that occurs in some member.
std::map<Tuple, std::size_t> codegree_table(const CliqueList& m);

/// Memoized k_r counts for one graph. Holds a reference; the graph must outlive it.
class CliqueCounter {
 public:
  explicit CliqueCounter(const Graph& g) : graph_(&g) {}
  const Graph& graph() const { return *graph_; }
  std::uint64_t count(int r);

 private:
  const Graph* graph_;
  std::map<int, std::uint64_t> cache_;
};

/// Clique-list text format: "r k" header then k lines of r sorted vertices.
/// When host_n is absent it is inferred as (largest vertex + 1).
CliqueList parse_clique_list(std::string_view text, std::optional<int> host_n = std::nullopt);
std::string emit_clique_list(const CliqueList& m);

}  // namespace cliquecover
