#include <doctest.h>

#include <algorithm>

#include "cliquecover/extract.hpp"
#include "cliquecover/verify.hpp"

using namespace cliquecover;

namespace {

struct Fixture {
  Graph g;
  CliqueList m;
  CoverCertificate cert;
};

Fixture planted() {
  std::vector<int> parts{2, 2, 12};
  auto g = gen_complete_multipartite(parts);
  auto m = enumerate_r_cliques(g, 3);
  auto out = extract_with_target(g, m, 3, 2, 12);
  REQUIRE(std::holds_alternative<CoverCertificate>(out));
  return {g, m, std::get<CoverCertificate>(out)};
}

VertexSet with(const VertexSet& s, Vertex v) {
  std::vector<Vertex> out(s.begin(), s.end());
  out.push_back(v);
  return VertexSet::from_unsorted(out);
}

Graph without_edge(const Graph& g, Vertex a, Vertex b) {
  std::vector<Edge> kept;
  for (auto e : g.edges()) {
    if (!(e == Edge{std::min(a, b), std::max(a, b)})) kept.push_back(e);
  }
  return build_graph(g.n(), kept);
}

CliqueList without_members(const CliqueList& m, auto&& drop) {
  std::vector<Tuple> kept;
  for (const auto& t : m) {
    if (!drop(t)) kept.push_back(t);
  }
  return CliqueList::from_tuples(m.arity(), m.host_n(), kept);
}

bool holds_pair(const Tuple& t, Vertex a, Vertex b) {
  return std::find(t.begin(), t.end(), a) != t.end() && std::find(t.begin(), t.end(), b) != t.end();
}

// A last-part vertex that no listed member uses.
Vertex spare_last(const CoverCertificate& cert) {
  for (auto v : cert.last_part) {
    bool used = false;
    for (const auto& t : cert.disjoint_members) used = used || std::find(t.begin(), t.end(), v) != t.end();
    if (!used) return v;
  }
  FAIL("no spare vertex");
  return -1;
}

}  // namespace

TEST_CASE("valid certificate passes") {
  auto f = planted();
  auto rep = verify_cover(f.g, f.m, f.cert);
  CHECK(rep.parts_ok);
  CHECK(rep.completeness_ok);
  CHECK(rep.edges_in_k2m_ok);
  CHECK(rep.members_ok);
  CHECK(rep.sizes_ok);
}

TEST_CASE("part overlap") {
  auto f = planted();
  f.cert.last_part = with(f.cert.last_part, *f.cert.parts[0].begin());
  CHECK_FALSE(verify_cover(f.g, f.m, f.cert).parts_ok);
}

TEST_CASE("missing cross edge") {
  auto f = planted();
  Vertex a = *f.cert.parts[0].begin();
  Vertex b = spare_last(f.cert);
  auto rep = verify_cover(without_edge(f.g, a, b), f.m, f.cert);
  CHECK_FALSE(rep.completeness_ok);
}

TEST_CASE("edge outside K_2(M)") {
  auto f = planted();
  Vertex a = *f.cert.parts[0].begin();
  Vertex b = spare_last(f.cert);
  auto thin = without_members(f.m, [&](const Tuple& t) { return holds_pair(t, a, b); });
  auto rep = verify_cover(f.g, thin, f.cert);
  CHECK_FALSE(rep.edges_in_k2m_ok);
  CHECK(rep.members_ok);
}

TEST_CASE("non-member witness") {
  auto f = planted();
  auto gone = f.cert.disjoint_members[0];
  auto thin = without_members(f.m, [&](const Tuple& t) { return t == gone; });
  auto rep = verify_cover(f.g, thin, f.cert);
  CHECK_FALSE(rep.members_ok);
  CHECK(rep.edges_in_k2m_ok);
}

TEST_CASE("non-disjoint witnesses") {
  auto f = planted();
  REQUIRE(f.cert.disjoint_members.size() == 2);
  auto a = f.cert.disjoint_members[0];
  auto b = f.cert.disjoint_members[1];
  // keep a's first vertex, take the rest from b: still a transversal and a member
  Tuple mixed{a[0], b[1], b[2]};
  std::sort(mixed.begin(), mixed.end());
  REQUIRE(f.m.contains(mixed));
  f.cert.disjoint_members[1] = mixed;
  CHECK_FALSE(verify_cover(f.g, f.m, f.cert).members_ok);

  auto g = planted();
  g.cert.disjoint_members[1] = g.cert.disjoint_members[0];
  CHECK_FALSE(verify_cover(g.g, g.m, g.cert).members_ok);
}

TEST_CASE("size mismatch") {
  auto f = planted();
  f.cert.params.t_min = f.cert.t() + 1;
  CHECK_FALSE(verify_cover(f.g, f.m, f.cert).sizes_ok);

  auto g = planted();
  std::vector<Vertex> shrunk(g.cert.parts[1].begin(), g.cert.parts[1].end());
  shrunk.pop_back();
  g.cert.parts[1] = VertexSet::from_unsorted(shrunk);
  CHECK_FALSE(verify_cover(g.g, g.m, g.cert).sizes_ok);
}

TEST_CASE("verifier is total on malformed certificates") {
  auto f = planted();
  CoverCertificate junk = f.cert;
  junk.parts.clear();
  CHECK_FALSE(verify_cover(f.g, f.m, junk).all_ok());
  junk = f.cert;
  junk.last_part = VertexSet::from_unsorted({999});
  CHECK_FALSE(verify_cover(f.g, f.m, junk).parts_ok);
  junk = f.cert;
  junk.disjoint_members[0] = Tuple{0, 1};
  CHECK_FALSE(verify_cover(f.g, f.m, junk).members_ok);
}
