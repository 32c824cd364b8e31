#include "cliquecover/cliques.hpp"

#include <algorithm>
#include <sstream>

#include "cliquecover/errors.hpp"
#include "text_io.hpp"

namespace cliquecover {

CliqueList::CliqueList(int arity, int host_n) : arity_(arity), host_n_(host_n) {
  if (arity < 1) throw InputError("clique arity must be at least 1");
  if (host_n < 0) throw InputError("negative host vertex count");
}

CliqueList::CliqueList(int arity, int host_n, std::vector<Tuple> sorted_unique)
    : arity_(arity), host_n_(host_n), tuples_(std::move(sorted_unique)) {}

CliqueList CliqueList::from_tuples(int arity, int host_n, std::vector<Tuple> tuples) {
  CliqueList out(arity, host_n);
  for (const auto& t : tuples) {
    if (static_cast<int>(t.size()) != arity) {
      throw InputError("tuple of size " + std::to_string(t.size()) + " in a list of arity " + std::to_string(arity));
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] < 0 || t[i] >= host_n) throw InputError("vertex " + std::to_string(t[i]) + " out of range");
      if (i > 0 && t[i - 1] >= t[i]) throw InputError("tuple is not strictly increasing");
    }
  }
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  out.tuples_ = std::move(tuples);
  return out;
}

bool CliqueList::contains(std::span<const Vertex> tuple) const {
  auto it = std::lower_bound(tuples_.begin(), tuples_.end(), tuple, [](const Tuple& a, std::span<const Vertex> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return it != tuples_.end() && std::equal(it->begin(), it->end(), tuple.begin(), tuple.end());
}

bool CliqueList::all_cliques_in(const Graph& g) const {
  if (host_n_ > g.n()) return false;
  for (const auto& t : tuples_) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        if (!g.adjacent(t[i], t[j])) return false;
      }
    }
  }
  return true;
}

namespace {

template <class Visit>
void extend(const Graph& g, Tuple& current, const Bitset& candidates, int remaining, Visit& visit) {
  if (remaining == 0) {
    visit(current);
    return;
  }
  candidates.for_each([&](int v) {
    current.push_back(v);
    if (remaining == 1) {
      visit(current);
    } else {
      Bitset next = candidates & g.neighbors(v);
      next.clear_through(static_cast<std::size_t>(v));
      if (next.count() >= static_cast<std::size_t>(remaining - 1)) extend(g, current, next, remaining - 1, visit);
    }
    current.pop_back();
  });
}

template <class Visit>
void for_each_clique(const Graph& g, int r, Visit visit) {
  if (r < 1) throw InputError("clique size r must be at least 1");
  Bitset all(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) all.set(static_cast<std::size_t>(v));
  Tuple current;
  current.reserve(static_cast<std::size_t>(r));
  extend(g, current, all, r, visit);
}

}  // namespace

CliqueList enumerate_r_cliques(const Graph& g, int r) {
  std::vector<Tuple> found;
  for_each_clique(g, r, [&](const Tuple& t) { found.push_back(t); });
  // Ordered extension visits cliques in lexicographic order already.
  return CliqueList::from_tuples(r, g.n(), std::move(found));
}

std::uint64_t count_r_cliques(const Graph& g, int r) {
  std::uint64_t total = 0;
  for_each_clique(g, r, [&](const Tuple&) { ++total; });
  return total;
}

CliqueList sub_cliques(const CliqueList& m, int s) {
  if (s < 1 || s > m.arity()) {
    throw InputError("sub-clique size " + std::to_string(s) + " outside [1," + std::to_string(m.arity()) + "]");
  }
  std::vector<Tuple> out;
  std::vector<bool> pick(static_cast<std::size_t>(m.arity()), false);
  std::fill(pick.begin(), pick.begin() + s, true);
  for (const auto& member : m) {
    auto mask = pick;
    do {
      Tuple sub;
      sub.reserve(static_cast<std::size_t>(s));
      for (std::size_t i = 0; i < mask.size(); ++i) {
        if (mask[i]) sub.push_back(member[i]);
      }
      out.push_back(std::move(sub));
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return CliqueList::from_tuples(s, m.host_n(), std::move(out));
}

std::size_t codegree(const CliqueList& m, std::span<const Vertex> facet) {
  if (static_cast<int>(facet.size()) != m.arity() - 1) {
    throw InputError("co-degree needs a tuple of size " + std::to_string(m.arity() - 1));
  }
  if (!std::is_sorted(facet.begin(), facet.end())) throw InputError("co-degree tuple must be sorted");
  std::size_t total = 0;
  for (const auto& member : m) {
    if (std::includes(member.begin(), member.end(), facet.begin(), facet.end())) ++total;
  }
  return total;
}

std::map<Tuple, std::size_t> codegree_table(const CliqueList& m) {
  std::map<Tuple, std::size_t> table;
  for (const auto& member : m) {
    for (std::size_t skip = 0; skip < member.size(); ++skip) {
      Tuple facet;
      facet.reserve(member.size() - 1);
      for (std::size_t i = 0; i < member.size(); ++i) {
        if (i != skip) facet.push_back(member[i]);
      }
      ++table[facet];
    }
  }
  return table;
}

std::uint64_t CliqueCounter::count(int r) {
  auto it = cache_.find(r);
  if (it != cache_.end()) return it->second;
  auto k = count_r_cliques(*graph_, r);
  cache_.emplace(r, k);
  return k;
}

CliqueList parse_clique_list(std::string_view text, std::optional<int> host_n) {
  detail::LineReader in(text);
  auto header = in.next("header 'r k'");
  if (header.size() != 2) in.fail("header must be 'r k'");
  int r = in.to_int(header[0]);
  auto k = in.to_uint(header[1]);
  if (r < 1) in.fail("arity must be at least 1");
  std::vector<Tuple> tuples;
  tuples.reserve(k);
  int max_vertex = -1;
  for (std::uint64_t i = 0; i < k; ++i) {
    auto toks = in.next("clique line");
    if (static_cast<int>(toks.size()) != r) in.fail("clique line must have " + std::to_string(r) + " vertices");
    Tuple t;
    for (auto tok : toks) t.push_back(in.to_int(tok));
    for (std::size_t j = 1; j < t.size(); ++j) {
      if (t[j - 1] >= t[j]) in.fail("clique vertices must be strictly increasing");
    }
    if (!tuples.empty() && !(tuples.back() < t)) in.fail("clique lines must be strictly increasing lexicographically");
    if (host_n && t.back() >= *host_n) in.fail("vertex " + std::to_string(t.back()) + " out of range");
    max_vertex = std::max(max_vertex, t.back());
    tuples.push_back(std::move(t));
  }
  in.expect_end();
  return CliqueList::from_tuples(r, host_n.value_or(max_vertex + 1), std::move(tuples));
}

std::string emit_clique_list(const CliqueList& m) {
  std::ostringstream out;
  out << m.arity() << ' ' << m.size() << '\n';
  for (const auto& t : m) {
    for (std::size_t i = 0; i < t.size(); ++i) out << (i ? " " : "") << t[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace cliquecover
