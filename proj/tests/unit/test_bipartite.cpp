#include <doctest.h>

#include <algorithm>
#include <random>

#include "cliquecover/bipartite.hpp"
#include "cliquecover/errors.hpp"
#include "support/oracles.hpp"

using namespace cliquecover;

namespace {

BipartiteInstance complete_bipartite(std::size_t m, int n) {
  BipartiteInstance f(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (int v = 0; v < n; ++v) f.add_edge(i, v);
  }
  return f;
}

BipartiteInstance matching(int n) {
  BipartiteInstance f(static_cast<std::size_t>(n), n);
  for (int i = 0; i < n; ++i) f.add_edge(static_cast<std::size_t>(i), i);
  return f;
}

// Intersection of the rows of `left`, by direct lookup.
std::vector<int> common(const BipartiteInstance& f, const std::vector<std::size_t>& left) {
  std::vector<int> out;
  for (int v = 0; v < f.right_size(); ++v) {
    bool all = true;
    for (auto i : left) all = all && f.adjacent(i, v);
    if (all) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("generalized_binomial") {
  CHECK(generalized_binomial(Rational(4), 2) == Rational(6));
  CHECK(generalized_binomial(Rational(5, 2), 2) == Rational(15, 8));
  CHECK(generalized_binomial(Rational(9, 10), 2) == Rational(0));
  CHECK(generalized_binomial(Rational(1), 2) == Rational(0));
  CHECK(generalized_binomial(Rational(7), 3) == Rational(35));
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("lemma1_params") {
  auto a = lemma1_params(100, 1000, Rational(9, 20), 2, 45000);
  CHECK(a.s == 1);
  CHECK(a.t_min == 45);
  CHECK(a.c_lower_ok);
  CHECK(a.c_upper_ok);
  CHECK(a.s_vs_m_ok);
  REQUIRE(a.density_ok.has_value());
  CHECK(*a.density_ok);
  CHECK(a.all_ok());
  CHECK_FALSE(lemma1_params(100, 1000, Rational(9, 20), 2, 44999).all_ok());
  CHECK_FALSE(lemma1_params(100, 1000, Rational(9, 20), 2).density_ok.has_value());

  CHECK_FALSE(lemma1_params(4, 10, Rational(1, 2), 2).c_upper_ok);

  auto b = lemma1_params(2, 1000000, Rational(9, 20), 2);
  CHECK(b.s == 2);
  CHECK_FALSE(b.s_vs_m_ok);
}

TEST_CASE("find_s_subset examples") {
  auto full = complete_bipartite(4, 6);
  auto w = find_s_subset(full, 2, 6, SearchMode::maximize);
  REQUIRE(w.has_value());
  CHECK(w->left.size() == 2);
  CHECK(w->right.size() == 6);

  CHECK_FALSE(find_s_subset(matching(5), 2, 1, SearchMode::first_feasible).has_value());
  CHECK_FALSE(find_s_subset(full, 5, 0, SearchMode::maximize).has_value());
  CHECK_THROWS_AS(find_s_subset(full, 0, 0, SearchMode::maximize), InputError);

  // Items 1 and 3 see all of B; items 0 and 2 see one vertex each.
  BipartiteInstance skew(4, 6);
  for (int v = 0; v < 6; ++v) {
    skew.add_edge(1, v);
    skew.add_edge(3, v);
  }
  skew.add_edge(0, 0);
  skew.add_edge(2, 5);
  auto best = find_s_subset(skew, 2, 0, SearchMode::maximize);
  REQUIRE(best.has_value());
  CHECK(best->left == std::vector<std::size_t>{1, 3});
  CHECK(best->right.size() == 6);
  auto oracle_best = biclique_oracle(skew, 2);
  CHECK(oracle_best.t == 6);
  CHECK(oracle_best.left == std::vector<std::size_t>{1, 3});
}

TEST_CASE("biclique_oracle") {
  auto k23 = complete_bipartite(2, 3);
  CHECK(biclique_oracle(k23, 2).t == 3);
  CHECK_THROWS_AS(biclique_oracle(k23, 3), InputError);
  CHECK_THROWS_AS(biclique_oracle(complete_bipartite(40, 2), 10, 1000), LimitError);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = oracle::random_bipartite(rng, 1 + rng() % 8, 1 + static_cast<int>(rng() % 10), 0.4);
    auto res = biclique_oracle(f, 1);
    std::size_t best = 0;
    for (std::size_t i = 0; i < f.left_size(); ++i) best = std::max(best, f.left_degree(i));
    CHECK(res.t == best);
    CHECK(f.left_degree(res.left[0]) == best);
  }
}

TEST_CASE("find_s_subset agrees with the oracle and returns the true intersection") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t m = 2 + rng() % 10;
    int n = 1 + static_cast<int>(rng() % 16);
    double p = 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
    auto f = oracle::random_bipartite(rng, m, n, p);
    std::size_t s = 1 + rng() % std::min<std::size_t>(3, m);
    CAPTURE(trial);
    auto orc = biclique_oracle(f, s);
    auto w = find_s_subset(f, s, 0, SearchMode::maximize);
    REQUIRE(w.has_value());
    CHECK(w->right.size() == orc.t);
    CHECK(std::vector<int>(w->right.begin(), w->right.end()) == common(f, w->left));

    // first_feasible finds a witness exactly when the maximum reaches t_min
    for (std::size_t t_min = 0; t_min <= orc.t + 1; ++t_min) {
      auto ff = find_s_subset(f, s, t_min, SearchMode::first_feasible);
      CHECK(ff.has_value() == (orc.t >= t_min));
      if (ff) {
        CHECK(ff->right.size() >= t_min);
        CHECK(std::vector<int>(ff->right.begin(), ff->right.end()) == common(f, ff->left));
      }
    }

    // the best common neighbourhood cannot grow with s
    if (s + 1 <= m) CHECK(biclique_oracle(f, s + 1).t <= orc.t);
  }
}

TEST_CASE("double_count_check") {
  auto k23 = double_count_check(complete_bipartite(2, 3), 2);
  CHECK(k23.lhs_sum == 3);
  CHECK(k23.rhs_sum == 3);
  CHECK(k23.equal);
  CHECK(k23.convex_lhs == Rational(3));
  CHECK(k23.convex_rhs == Rational(3));
  CHECK(k23.convexity_ok);

  auto pm = double_count_check(matching(5), 2);
  CHECK(pm.lhs_sum == 0);
  CHECK(pm.rhs_sum == 0);
  CHECK(pm.convex_rhs == Rational(0));
  CHECK(pm.convexity_ok);
}

TEST_CASE("bipartite text format") {
  auto f = parse_bipartite("2 3 3\n0 0\n0 2\n1 1\n");
  CHECK(f.left_size() == 2);
  CHECK(f.right_size() == 3);
  CHECK(f.edge_count() == 3);
  CHECK(f.adjacent(0, 2));
  CHECK_FALSE(f.adjacent(1, 2));
  CHECK(emit_bipartite(f) == "2 3 3\n0 0\n0 2\n1 1\n");
  CHECK_THROWS_AS(parse_bipartite("2 3 1\n2 0\n"), InputError);
  CHECK_THROWS_AS(parse_bipartite("2 3 2\n0 0\n0 0\n"), InputError);
  CHECK_THROWS_AS(parse_bipartite("2 3 2\n0 0\n"), InputError);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = oracle::random_bipartite(rng, 1 + rng() % 9, 1 + static_cast<int>(rng() % 9), 0.5);
    auto back = parse_bipartite(emit_bipartite(g));
    CHECK(emit_bipartite(back) == emit_bipartite(g));
  }
}

TEST_CASE("rank_s_subsets returns the largest common neighbourhoods") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t m = 2 + rng() % 9;
    int n = 1 + static_cast<int>(rng() % 14);
    auto f = oracle::random_bipartite(rng, m, n, 0.5);
    std::size_t s = 1 + rng() % std::min<std::size_t>(3, m);
    std::size_t limit = 1 + rng() % 6;
    std::size_t t_min = rng() % 3;
    CAPTURE(trial);

    // every s-subset's d(X), by direct scan
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> idx;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (idx.size() == s) {
        auto d = common(f, idx).size();
        if (d >= t_min) sizes.push_back(d);
        return;
      }
      for (std::size_t i = start; i < m; ++i) {
        idx.push_back(i);
        self(self, i + 1);
        idx.pop_back();
      }
    };
    rec(rec, 0);
    std::sort(sizes.rbegin(), sizes.rend());
    sizes.resize(std::min(sizes.size(), limit));

    auto ranked = rank_s_subsets(f, s, t_min, limit);
    std::vector<std::size_t> got;
    for (const auto& w : ranked) {
      got.push_back(w.right.size());
      CHECK(std::vector<int>(w.right.begin(), w.right.end()) == common(f, w.left));
    }
    CHECK(got == sizes);
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      for (std::size_t j = i + 1; j < ranked.size(); ++j) CHECK(ranked[i].left != ranked[j].left);
    }
    if (!ranked.empty() && t_min == 0) {
      auto best = find_s_subset(f, s, 0, SearchMode::maximize);
      REQUIRE(best.has_value());
      CHECK(ranked.front().left == best->left);
    }
  }
  CHECK(rank_s_subsets(complete_bipartite(3, 3), 4, 0, 5).empty());
  CHECK(rank_s_subsets(complete_bipartite(3, 3), 2, 0, 0).empty());
}
