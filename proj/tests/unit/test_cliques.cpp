#include <doctest.h>

#include <random>

#include "cliquecover/cliques.hpp"
#include "cliquecover/errors.hpp"
#include "cliquecover/inequalities.hpp"
#include "support/oracles.hpp"

using namespace cliquecover;

namespace {

Graph complete(int n) {
  std::vector<int> ones(static_cast<std::size_t>(n), 1);
  return gen_complete_multipartite(ones);
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return build_graph(n, e);
}

}  // namespace

TEST_CASE("enumerate_r_cliques") {
  CHECK(enumerate_r_cliques(complete(5), 3).size() == 10);
  CHECK(enumerate_r_cliques(cycle(5), 3).empty());
  CHECK_THROWS_AS(enumerate_r_cliques(complete(3), 0), InputError);

  auto g = gen_gnp(12, Rational(1, 2), 7);
  auto triangles = enumerate_r_cliques(g, 3);
  CHECK(triangles.tuples() == oracle::naive_cliques(g, 3));
  CHECK(triangles.all_cliques_in(g));

  SUBCASE("agrees with a naive subset scan for n <= 14") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      int n = 6 + static_cast<int>(seed % 9);
      auto h = gen_gnp(n, Rational(static_cast<long>(1 + seed % 4), 5), seed);
      for (int r = 1; r <= 5; ++r) {
        CAPTURE(seed);
        CAPTURE(r);
        auto list = enumerate_r_cliques(h, r);
        CHECK(list.size() == oracle::naive_clique_count(h, r));
        CHECK(count_r_cliques(h, r) == list.size());
      }
    }
  }
}

TEST_CASE("sub_cliques") {
  auto one = CliqueList::from_tuples(3, 4, {{0, 1, 2}});
  CHECK(sub_cliques(one, 2).tuples() == std::vector<Tuple>{{0, 1}, {0, 2}, {1, 2}});

  auto two = CliqueList::from_tuples(3, 4, {{0, 1, 2}, {0, 1, 3}});
  CHECK(sub_cliques(two, 2).tuples() == std::vector<Tuple>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});

  CHECK(sub_cliques(CliqueList(3, 4), 2).empty());
  CHECK_THROWS_AS(sub_cliques(one, 0), InputError);
  CHECK_THROWS_AS(sub_cliques(one, 4), InputError);
  CHECK(sub_cliques(one, 3) == one);
}

TEST_CASE("codegree") {
  auto k4 = enumerate_r_cliques(complete(4), 3);
  Tuple e01{0, 1};
  CHECK(codegree(k4, e01) == 2);
  CHECK(codegree(CliqueList::from_tuples(3, 3, {{0, 1, 2}}), e01) == 1);

  // K_4 minus the edge 0-3: only {0,1,2} and {1,2,3} survive, and {0,3} extends neither.
  std::vector<Edge> almost{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
  auto tri = enumerate_r_cliques(build_graph(4, almost), 3);
  Tuple e03{0, 3};
  CHECK(codegree(tri, e03) == 0);

  Tuple wrong{0, 1, 2};
  CHECK_THROWS_AS(codegree(k4, wrong), InputError);
}

TEST_CASE("clique-count properties on random clique sets") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 8 + static_cast<int>(rng() % 10);
    int r = 2 + static_cast<int>(rng() % 3);
    auto g = gen_gnp(n, Rational(3, 5), rng());
    auto all = enumerate_r_cliques(g, r);
    std::vector<Tuple> subset;
    for (const auto& t : all) {
      if (rng() % 3 != 0) subset.push_back(t);
    }
    auto m = CliqueList::from_tuples(r, n, subset);
    auto facets = sub_cliques(m, r - 1);
    // |K_{r-1}(M)| >= r |M| / n
    CHECK(facets.size() * static_cast<std::size_t>(n) >= static_cast<std::size_t>(r) * m.size());
    // Summing co-degrees over all facets counts each member r times.
    std::size_t total = 0;
    for (const auto& f : facets) total += codegree(m, f);
    CHECK(total == static_cast<std::size_t>(r) * m.size());
    auto table = codegree_table(m);
    CHECK(table.size() == facets.size());
  }
}

TEST_CASE("clique-list text format") {
  auto m = parse_clique_list("3 2\n0 1 2\n0 1 3\n");
  CHECK(m.arity() == 3);
  CHECK(m.size() == 2);
  CHECK(m.host_n() == 4);
  CHECK(emit_clique_list(m) == "3 2\n0 1 2\n0 1 3\n");
  CHECK_THROWS_AS(parse_clique_list("3 1\n0 2 1\n"), InputError);
  CHECK_THROWS_AS(parse_clique_list("3 2\n0 1 3\n0 1 2\n"), InputError);
  CHECK_THROWS_AS(parse_clique_list("3 2\n0 1 2\n0 1 2\n"), InputError);
  CHECK_THROWS_AS(parse_clique_list("3 1\n0 1\n"), InputError);
  CHECK_THROWS_AS(parse_clique_list("2 1\n0 5\n", 4), InputError);

  auto g = gen_gnp(15, Rational(1, 2), 9);
  auto list = enumerate_r_cliques(g, 3);
  CHECK(parse_clique_list(emit_clique_list(list), 15) == list);
}

TEST_CASE("chain inequality report") {
  auto c5 = chain_inequality_report(cycle(5), 2);
  CHECK(c5.k_prev == 5);
  CHECK(c5.k_s == 5);
  CHECK(c5.k_next == 0);
  CHECK(c5.lhs == Rational(-5, 2));
  CHECK(c5.rhs == Rational(-3));
  CHECK(c5.holds);

  auto k4 = chain_inequality_report(complete(4), 2);
  CHECK(k4.k_prev == 4);
  CHECK(k4.k_s == 6);
  CHECK(k4.k_next == 4);
  CHECK(k4.lhs == Rational(-1));
  CHECK(k4.rhs == Rational(-1));
  CHECK(k4.holds);

  CHECK_THROWS_AS(chain_inequality_report(cycle(6), 3), PreconditionError);
  CHECK_THROWS_AS(chain_inequality_report(cycle(6), 1), InputError);

  SUBCASE("memoized counter returns the same counts") {
    auto g = gen_gnp(14, Rational(1, 2), 3);
    CliqueCounter counter(g);
    auto a = chain_inequality_report(counter, 3);
    auto b = chain_inequality_report(counter, 3);
    CHECK(a.lhs == b.lhs);
    CHECK(counter.count(3) == oracle::naive_clique_count(g, 3));
  }
}

TEST_CASE("supersaturation report") {
  auto k10 = supersaturation_report(complete(10), 2);
  CHECK(k10.c == Rational(2, 5));
  CHECK(k10.bound == Rational(100));
  CHECK(k10.k_next == 120);
  CHECK(k10.margin == Rational(20));
  CHECK(k10.strict_claim_holds);
  REQUIRE(k10.implied.has_value());
  CHECK(k10.implied->r == 3);
  CHECK(*k10.implied->c == Rational(1, 10));

  auto k4 = supersaturation_report(complete(4), 2);
  CHECK(k4.c == Rational(1, 4));
  CHECK(k4.bound == Rational(4));
  CHECK(k4.k_next == 4);
  CHECK(k4.margin == Rational(0));
  CHECK_FALSE(k4.strict_claim_holds);

  auto empty = supersaturation_report(build_graph(6, {}), 2);
  CHECK(empty.c < 0);
  CHECK_FALSE(empty.applicable);
}
