#include "cliquecover/extract.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cliquecover/errors.hpp"
#include "cliquecover/prune.hpp"

namespace cliquecover {

std::string to_string(ExtractionFailure::Kind kind) {
  switch (kind) {
    case ExtractionFailure::Kind::infeasible:
      return "infeasible";
    case ExtractionFailure::Kind::not_found:
      return "not_found";
    case ExtractionFailure::Kind::search_failure:
      return "search_failure";
  }
  return "unknown";
}

BipartiteInstance build_bipartite_from_cliques(const CliqueList& l, std::span<const Tuple> a_cliques, int n) {
  if (a_cliques.empty()) throw InputError("bipartite step needs at least one left clique");
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& a : a_cliques) {
    if (static_cast<int>(a.size()) != l.arity() - 1) {
      throw InputError("left clique of size " + std::to_string(a.size()) + " for a list of arity " +
                       std::to_string(l.arity()));
    }
    for (auto v : a) {
      if (v < 0 || v >= n) throw InputError("left clique vertex out of range");
      if (used[static_cast<std::size_t>(v)]) throw InputError("left cliques are not pairwise disjoint");
      used[static_cast<std::size_t>(v)] = true;
    }
  }
  BipartiteInstance f(a_cliques.size(), n);
  Tuple extended;
  for (std::size_t i = 0; i < a_cliques.size(); ++i) {
    const Tuple& a = a_cliques[i];
    for (Vertex v = 0; v < n; ++v) {
      if (std::binary_search(a.begin(), a.end(), v)) continue;
      extended = a;
      extended.insert(std::upper_bound(extended.begin(), extended.end(), v), v);
      if (l.contains(extended)) f.add_edge(i, v);
    }
  }
  f.set_items({a_cliques.begin(), a_cliques.end()});
  return f;
}

namespace {

struct LevelPlan {
  std::size_t s = 0;
  std::size_t t_min = 0;
  Rational threshold;
  SearchMode mode = SearchMode::first_feasible;
  std::size_t candidates = 1;  ///< witnesses offered upward in maximize mode
};

// A K_k(s, ..., s, t) found at level k: each stem is an ordered transversal of
// the first k - 1 parts (stem[j] lies in part j), and every stem extended by
// any vertex of `last` is a member of the level's clique set.
struct Partial {
  std::vector<Tuple> stems;
  VertexSet last;
};

// Receives each candidate found at a level; returns true to stop the search.
using Sink = std::function<bool(const Partial&)>;

Tuple sorted_with(const Tuple& ordered, Vertex extra) {
  Tuple out = ordered;
  out.push_back(extra);
  std::sort(out.begin(), out.end());
  return out;
}

class Pipeline {
 public:
  Pipeline(int n, std::map<int, LevelPlan> plans, const ExtractionParams& params, bool guaranteed)
      : n_(n), plans_(std::move(plans)), params_(params), guaranteed_(guaranteed) {}

  std::variant<Partial, ExtractionFailure> solve_top(int r, const CliqueList& m) {
    std::optional<Partial> found;
    solve(r, m, [&](const Partial& p) {
      found = p;
      return true;
    });
    if (found) return *found;
    return first_failure_.value_or(fail_record(r, "search"));
  }

  CoverCertificate assemble(int r, const Partial& top) const {
    CoverCertificate cert;
    cert.r = r;
    cert.params = params_;
    for (int j = 0; j < r - 1; ++j) {
      std::vector<Vertex> part;
      for (const auto& stem : top.stems) part.push_back(stem[static_cast<std::size_t>(j)]);
      cert.parts.push_back(VertexSet::from_unsorted(std::move(part)));
    }
    cert.last_part = top.last;
    const std::size_t count = std::min(top.stems.size(), top.last.size());
    for (std::size_t i = 0; i < count; ++i) cert.disjoint_members.push_back(sorted_with(top.stems[i], top.last[i]));
    return cert;
  }

 private:
  ExtractionFailure fail_record(int level, std::string stage) const {
    return ExtractionFailure{guaranteed_ ? ExtractionFailure::Kind::search_failure
                                         : ExtractionFailure::Kind::not_found,
                             level, std::move(stage), params_};
  }

  // Backtracking revisits stages, so only the first failure is kept.
  bool fail(int level, const std::string& stage) {
    if (!first_failure_) first_failure_ = fail_record(level, stage);
    return false;
  }

  bool solve(int k, const CliqueList& mk, const Sink& sink) { return k == 2 ? base(mk, sink) : induct(k, mk, sink); }

  bool search(int k, const BipartiteInstance& f, const std::vector<Tuple>& ordered_items, const Sink& sink) {
    const LevelPlan& plan = plans_.at(k);
    std::vector<BicliqueWitness> found;
    if (plan.mode == SearchMode::first_feasible) {
      if (auto w = find_s_subset(f, plan.s, plan.t_min, plan.mode)) found.push_back(std::move(*w));
    } else {
      found = rank_s_subsets(f, plan.s, plan.t_min, plan.candidates);
    }
    if (found.empty()) return fail(k, "search");
    for (auto& witness : found) {
      Partial out;
      for (auto i : witness.left) out.stems.push_back(ordered_items[i]);
      out.last = std::move(witness.right);
      if (sink(out)) return true;
    }
    return false;
  }

  // Two copies of V(G), u ~ v iff uv is a member; S and T are disjoint
  // because no vertex is joined to its own copy.
  bool base(const CliqueList& m2, const Sink& sink) {
    BipartiteInstance f(static_cast<std::size_t>(n_), n_);
    for (const auto& e : m2) {
      f.add_edge(static_cast<std::size_t>(e[0]), e[1]);
      f.add_edge(static_cast<std::size_t>(e[1]), e[0]);
    }
    std::vector<Tuple> items;
    items.reserve(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) items.push_back({v});
    return search(2, f, items, sink);
  }

  bool induct(int k, const CliqueList& mk, const Sink& sink) {
    const LevelPlan& plan = plans_.at(k);
    CliqueList l = prune(mk, n_, plan.threshold).kept;
    if (l.empty()) return fail(k, "prune");
    auto table = codegree_table(l);

    return solve(k - 1, sub_cliques(l, k - 1), [&](const Partial& h) {
      auto a = choose_disjoint_members(h, table);
      if (!a) return fail(k, "members");
      std::vector<Tuple> sorted_items;
      for (const auto& item : *a) {
        Tuple t = item;
        std::sort(t.begin(), t.end());
        sorted_items.push_back(std::move(t));
      }
      BipartiteInstance f = build_bipartite_from_cliques(l, sorted_items, n_);
      return search(k, f, *a, sink);
    });
  }

  // One (k-1)-clique per stem of H: the stem plus a distinct vertex of H's last
  // part. Each stem takes the free vertex whose extension has the largest
  // co-degree in L (smallest vertex on ties), which is the clique's degree in
  // the bipartite step.
  static std::optional<std::vector<Tuple>> choose_disjoint_members(const Partial& h,
                                                                   const std::map<Tuple, std::size_t>& table) {
    std::vector<bool> taken(h.last.size(), false);
    std::vector<Tuple> out;
    for (const auto& stem : h.stems) {
      std::optional<std::size_t> pick;
      std::size_t pick_degree = 0;
      for (std::size_t i = 0; i < h.last.size(); ++i) {
        if (taken[i]) continue;
        auto it = table.find(sorted_with(stem, h.last[i]));
        std::size_t degree = it == table.end() ? 0 : it->second;
        if (!pick || degree > pick_degree) {
          pick = i;
          pick_degree = degree;
        }
      }
      if (!pick) return std::nullopt;
      taken[*pick] = true;
      Tuple item = stem;
      item.push_back(h.last[*pick]);
      out.push_back(std::move(item));
    }
    return out;
  }

  int n_;
  std::map<int, LevelPlan> plans_;
  const ExtractionParams& params_;
  bool guaranteed_;
  std::optional<ExtractionFailure> first_failure_;
};

void check_arity(const Graph& g, const CliqueList& m, int r) {
  if (r < 2) throw InputError("extraction needs r >= 2");
  if (m.arity() != r) {
    throw InputError("clique list has arity " + std::to_string(m.arity()) + " but r = " + std::to_string(r));
  }
  if (m.host_n() > g.n()) throw InputError("clique list refers to vertices outside the graph");
}

ExtractionOutcome run(const Graph& g, const CliqueList& m, int r, std::map<int, LevelPlan> plans,
                      const ExtractionParams& params, bool guaranteed) {
  Pipeline pipeline(g.n(), std::move(plans), params, guaranteed);
  auto top = pipeline.solve_top(r, m);
  if (auto* failure = std::get_if<ExtractionFailure>(&top)) return *failure;
  return pipeline.assemble(r, std::get<Partial>(top));
}

}  // namespace

ExtractionOutcome extract(const Graph& g, const CliqueList& m, int r, const Rational& c) {
  check_arity(g, m, r);
  if (c <= 0) throw InputError("c must be positive");
  const auto n = static_cast<std::uint64_t>(g.n());
  if (n < 2) throw InputError("extraction needs at least two vertices");

  ExtractionParams params = theorem_params(n, r, c);
  params.mass_ok = Rational(to_big(m.size())) >= c * Rational(power(n, static_cast<unsigned>(r)));
  if (!params.feasible()) return ExtractionFailure{ExtractionFailure::Kind::infeasible, r, "params", params};

  std::map<int, LevelPlan> plans;
  for (const auto& level : params.levels) {
    plans[level.level] = LevelPlan{level.s, level.t_min, level.c * g.n(), SearchMode::first_feasible};
  }
  return run(g, m, r, std::move(plans), params, true);
}

ExtractionOutcome extract_with_target(const Graph& g, const CliqueList& m, int r, std::size_t s, std::size_t t_min,
                                      const TargetOptions& options) {
  check_arity(g, m, r);
  if (s < 1) throw InputError("target part size s must be at least 1");
  if (options.threshold < 0) throw InputError("pruning threshold must be non-negative");

  ExtractionParams params;
  params.n = static_cast<std::uint64_t>(g.n());
  params.r = r;
  params.s = s;
  params.t_min = t_min;
  params.mode = Mode::best_effort;

  const std::size_t inner_s = options.inner_s.value_or(s);
  if (inner_s < 1) throw InputError("inner part size must be at least 1");
  const std::size_t inner_t = std::max(options.inner_t_min.value_or(inner_s), inner_s);

  std::map<int, LevelPlan> plans;
  plans[r] = LevelPlan{s, t_min, options.threshold, SearchMode::first_feasible};
  if (options.inner_candidates < 1) throw InputError("inner candidate budget must be at least 1");
  for (int k = r - 1; k >= 2; --k) {
    plans[k] = LevelPlan{inner_s, inner_t, options.threshold, SearchMode::maximize, options.inner_candidates};
  }
  return run(g, m, r, std::move(plans), params, false);
}

std::variant<CoverCertificate, ExtractionFailure> base_case_r2(const CliqueList& m, int n, std::size_t s,
                                                               std::size_t t_min) {
  if (m.arity() != 2) throw InputError("base case needs a list of edges");
  if (s < 1) throw InputError("target part size s must be at least 1");
  if (m.host_n() > n) throw InputError("edge list refers to vertices outside [0, n)");
  ExtractionParams params;
  params.n = static_cast<std::uint64_t>(n);
  params.r = 2;
  params.s = s;
  params.t_min = t_min;
  params.mode = Mode::best_effort;
  std::map<int, LevelPlan> plans{{2, LevelPlan{s, t_min, Rational(0), SearchMode::first_feasible}}};
  Pipeline pipeline(n, std::move(plans), params, false);
  auto top = pipeline.solve_top(2, m);
  if (auto* failure = std::get_if<ExtractionFailure>(&top)) return *failure;
  return pipeline.assemble(2, std::get<Partial>(top));
}

}  // namespace cliquecover
