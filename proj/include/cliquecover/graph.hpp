#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliquecover/bitset.hpp"
#include "cliquecover/rational.hpp"

namespace cliquecover {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;

  /// Takes an already sorted, duplicate-free list; throws InputError otherwise.
  explicit VertexSet(std::vector<Vertex> sorted);

  /// Sorts the input; throws InputError on duplicates.
  static VertexSet from_unsorted(std::vector<Vertex> members);

  const std::vector<Vertex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  Vertex operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Simple undirected graph on vertices 0..n-1 with bit-vector adjacency rows.
/// Immutable once built; use GraphBuilder or the factory functions below.
class Graph {
 public:
  Graph() = default;

  int n() const { return static_cast<int>(rows_.size()); }
  std::size_t edge_count() const { return edges_; }
  const Bitset& neighbors(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex u, Vertex v) const { return rows_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).count()); }

  /// Canonical edge list: u < v, lexicographic.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  std::vector<Bitset> rows_;
  std::size_t edges_ = 0;
};

/// Accumulates edges with validation, then freezes them into a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  /// Adds {u, v}; returns false if the edge was already present.
  /// Throws InputError on loops or out-of-range endpoints.
  bool add_edge(Vertex u, Vertex v);

  Graph build() &&;

 private:
  Graph graph_;
};

Graph build_graph(int n, std::span<const Edge> edges);

/// SplitMix64 (Steele, Lea, Flood 2014): 64-bit state, state += 0x9E3779B97F4A7C15,
/// then z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9; z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
/// z ^ (z >> 31).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

/// Draw convention: a draw x in [0, 2^64) succeeds iff x / 2^64 < p, compared
/// exactly as x * q < p_num * 2^64.
class BernoulliDraw {
 public:
  explicit BernoulliDraw(const Rational& p);
  bool operator()(std::uint64_t x) const;

 private:
  BigInt num_scaled_;  // p_num * 2^64
  BigInt den_;
};

/// G(n, p): pairs (u, v), u < v, are visited in lexicographic order and each
/// consumes exactly one SplitMix64 draw seeded with `seed`.
Graph gen_gnp(int n, const Rational& p, std::uint64_t seed);

/// K(s_1, ..., s_k) with consecutive vertex blocks.
Graph gen_complete_multipartite(std::span<const int> sizes);

/// Union of `host` with `planted` relabelled through `embedding` (planted -> host).
Graph overlay(const Graph& host, const Graph& planted, std::span<const Vertex> embedding);

/// Edge-list text format: "n m" header then m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

}  // namespace cliquecover
