#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library's algorithms; only the Graph/Bipartite containers are read.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "cliquecover/bipartite.hpp"
#include "cliquecover/graph.hpp"

namespace oracle {

using HighFloat = boost::multiprecision::cpp_bin_float_100;

/// SplitMix64 written out from its published constants.
inline std::uint64_t splitmix_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Edge count of G(n, 1/2) from replaying the stream: x / 2^64 < 1/2 <=> top bit clear.
inline std::size_t replay_gnp_half_edges(int n, std::uint64_t seed) {
  std::uint64_t state = seed;
  std::size_t edges = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if ((splitmix_next(state) >> 63) == 0) ++edges;
    }
  }
  return edges;
}

/// Number of r-subsets of V(G) that are cliques, by plain subset scan.
inline std::uint64_t naive_clique_count(const cliquecover::Graph& g, int r) {
  const int n = g.n();
  std::uint64_t total = 0;
  std::vector<int> idx(static_cast<std::size_t>(r));
  auto rec = [&](auto&& self, int depth, int start) -> void {
    if (depth == r) {
      for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
          if (!g.adjacent(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)])) return;
        }
      }
      ++total;
      return;
    }
    for (int v = start; v < n; ++v) {
      idx[static_cast<std::size_t>(depth)] = v;
      self(self, depth + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
  return total;
}

/// All r-subsets that are cliques, in lexicographic order.
inline std::vector<std::vector<int>> naive_cliques(const cliquecover::Graph& g, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(idx.size()) == r) {
      out.push_back(idx);
      return;
    }
    for (int v = start; v < g.n(); ++v) {
      bool ok = true;
      for (int u : idx) ok = ok && g.adjacent(u, v);
      if (!ok) continue;
      idx.push_back(v);
      self(self, v + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// floor(c^k ln n) in 100-digit binary floating point.
inline std::uint64_t hp_floor_scaled_log(double c_num, double c_den, int k, double n) {
  HighFloat c = HighFloat(c_num) / HighFloat(c_den);
  HighFloat v = boost::multiprecision::pow(c, k) * boost::multiprecision::log(HighFloat(n));
  return static_cast<std::uint64_t>(boost::multiprecision::floor(v));
}

/// floor(n^(1 - c^k)) + 1 in 100-digit binary floating point.
inline std::uint64_t hp_strict_ceil_power(double c_num, double c_den, int k, double n) {
  HighFloat c = HighFloat(c_num) / HighFloat(c_den);
  HighFloat e = 1 - boost::multiprecision::pow(c, k);
  HighFloat v = boost::multiprecision::pow(HighFloat(n), e);
  return static_cast<std::uint64_t>(boost::multiprecision::floor(v)) + 1;
}

/// Random bipartite instance with independent edges of probability p.
inline cliquecover::BipartiteInstance random_bipartite(std::mt19937_64& rng, std::size_t m, int n, double p) {
  cliquecover::BipartiteInstance f(m, n);
  std::bernoulli_distribution coin(p);
  for (std::size_t i = 0; i < m; ++i) {
    for (int v = 0; v < n; ++v) {
      if (coin(rng)) f.add_edge(i, v);
    }
  }
  return f;
}

}  // namespace oracle
