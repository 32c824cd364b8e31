#include "cliquecover/verify.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace cliquecover {

namespace {

using Pair = std::pair<Vertex, Vertex>;

Pair ordered(Vertex a, Vertex b) { return a < b ? Pair{a, b} : Pair{b, a}; }

}  // namespace

VerifyReport verify_cover(const Graph& g, const CliqueList& m, const CoverCertificate& cert) {
  VerifyReport rep;
  const int n = g.n();
  const int r = cert.r;

  std::vector<const VertexSet*> parts;
  for (const auto& p : cert.parts) parts.push_back(&p);
  parts.push_back(&cert.last_part);

  // Part membership per vertex; -1 = outside every part, -2 = in several.
  std::vector<int> owner(static_cast<std::size_t>(std::max(n, 0)), -1);
  rep.parts_ok = r >= 2 && static_cast<int>(parts.size()) == r;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j]->empty()) rep.parts_ok = false;
    for (Vertex v : *parts[j]) {
      if (v < 0 || v >= n) {
        rep.parts_ok = false;
        continue;
      }
      auto& o = owner[static_cast<std::size_t>(v)];
      if (o != -1) {
        rep.parts_ok = false;
        o = -2;
      } else {
        o = static_cast<int>(j);
      }
    }
  }

  std::set<Pair> k2m;
  std::set<Tuple> members(m.begin(), m.end());
  for (const auto& t : m) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = i + 1; j < t.size(); ++j) k2m.insert(ordered(t[i], t[j]));
    }
  }

  rep.completeness_ok = true;
  rep.edges_in_k2m_ok = true;
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      for (Vertex u : *parts[a]) {
        for (Vertex v : *parts[b]) {
          if (u == v || u < 0 || v < 0 || u >= n || v >= n || !g.adjacent(u, v)) rep.completeness_ok = false;
          if (u == v || !k2m.count(ordered(u, v))) rep.edges_in_k2m_ok = false;
        }
      }
    }
  }

  std::size_t min_part = parts.front()->size();
  for (const auto* p : parts) min_part = std::min(min_part, p->size());
  rep.members_ok = cert.disjoint_members.size() == min_part;
  std::set<Vertex> seen;
  for (const auto& w : cert.disjoint_members) {
    if (static_cast<int>(w.size()) != r || !members.count(w)) {
      rep.members_ok = false;
      continue;
    }
    std::vector<bool> hit(parts.size(), false);
    for (std::size_t i = 0; i < w.size(); ++i) {
      Vertex v = w[i];
      if (v < 0 || v >= n) {
        rep.members_ok = false;
        continue;
      }
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[j] < 0 || w[j] >= n || !g.adjacent(v, w[j])) rep.members_ok = false;
      }
      if (!seen.insert(v).second) rep.members_ok = false;
      int o = owner[static_cast<std::size_t>(v)];
      if (o < 0 || hit[static_cast<std::size_t>(o)]) {
        rep.members_ok = false;
      } else {
        hit[static_cast<std::size_t>(o)] = true;
      }
    }
  }

  rep.sizes_ok = m.arity() == r && cert.params.r == r && static_cast<int>(cert.parts.size()) == r - 1 &&
                 cert.last_part.size() >= cert.params.t_min;
  for (const auto& p : cert.parts) {
    if (p.size() != cert.params.s) rep.sizes_ok = false;
  }
  return rep;
}

}  // namespace cliquecover
