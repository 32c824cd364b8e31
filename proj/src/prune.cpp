#include "cliquecover/prune.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cliquecover/errors.hpp"

namespace cliquecover {

namespace {

struct FacetIndex {
  std::vector<Tuple> facets;                       // sorted, id = position
  std::vector<std::vector<std::size_t>> members;   // facet id -> members containing it
  std::vector<std::vector<std::size_t>> of_member; // member -> its facet ids
};

FacetIndex index_facets(const CliqueList& m) {
  std::map<Tuple, std::vector<std::size_t>> by_facet;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& member = m[i];
    for (std::size_t skip = 0; skip < member.size(); ++skip) {
      Tuple facet;
      for (std::size_t j = 0; j < member.size(); ++j) {
        if (j != skip) facet.push_back(member[j]);
      }
      by_facet[std::move(facet)].push_back(i);
    }
  }
  FacetIndex idx;
  idx.of_member.resize(m.size());
  for (auto& [facet, owners] : by_facet) {
    std::size_t id = idx.facets.size();
    for (auto owner : owners) idx.of_member[owner].push_back(id);
    idx.facets.push_back(facet);
    idx.members.push_back(std::move(owners));
  }
  return idx;
}

}  // namespace

PruneResult prune(const CliqueList& m, int n, const Rational& threshold) {
  if (m.arity() < 2) throw InputError("pruning needs arity r >= 2");
  if (threshold < 0) throw InputError("pruning threshold must be non-negative");
  if (n < m.host_n()) throw InputError("n is smaller than the clique list's vertex range");

  // codegree <= threshold  <=>  codegree <= floor(threshold)
  BigInt limit_big = floor(threshold);
  std::size_t limit = limit_big >= to_big(m.size()) ? m.size() : static_cast<std::size_t>(limit_big.get_ui());

  FacetIndex idx = index_facets(m);
  std::vector<std::size_t> count(idx.facets.size());
  std::set<std::size_t> dirty;
  for (std::size_t f = 0; f < idx.facets.size(); ++f) {
    count[f] = idx.members[f].size();
    if (count[f] <= limit) dirty.insert(f);
  }

  std::vector<bool> alive(m.size(), true);
  PruneResult result{CliqueList(m.arity(), m.host_n()), {}, threshold};
  while (!dirty.empty()) {
    std::size_t f = *dirty.begin();
    dirty.erase(dirty.begin());
    if (count[f] == 0 || count[f] > limit) continue;
    std::size_t removed = 0;
    for (auto member : idx.members[f]) {
      if (!alive[member]) continue;
      alive[member] = false;
      ++removed;
      for (auto g : idx.of_member[member]) {
        --count[g];
        if (g != f && count[g] > 0 && count[g] <= limit) dirty.insert(g);
      }
    }
    result.rounds.push_back({idx.facets[f], removed});
  }

  std::vector<Tuple> kept;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (alive[i]) kept.push_back(m[i]);
  }
  result.kept = CliqueList::from_tuples(m.arity(), m.host_n(), std::move(kept));
  return result;
}

PruneGuaranteeReport prune_guarantee_check(const CliqueList& m, const PruneResult& result, const Rational& c, int n,
                                           int r) {
  if (m.arity() != r || result.kept.arity() != r) throw InputError("arity mismatch between M, L and r");
  if (result.threshold != c * n) throw InputError("prune threshold is not c*n");
  for (const auto& t : result.kept) {
    if (!m.contains(t)) throw InputError("pruned list is not a subset of M");
  }

  PruneGuaranteeReport rep;
  rep.codegree_ok = true;
  for (const auto& [facet, deg] : codegree_table(result.kept)) {
    if (Rational(to_big(deg)) <= result.threshold) {
      rep.codegree_ok = false;
      break;
    }
  }

  const Rational cn = c * n;
  const auto facets_of_m = codegree_table(m).size();
  rep.removal_bound_ok = Rational(to_big(m.size() - result.kept.size())) <= cn * Rational(to_big(facets_of_m));

  const Rational n_pow_r(power(static_cast<std::uint64_t>(n), static_cast<unsigned>(r)));
  rep.size_applicable = Rational(to_big(m.size())) >= c * n_pow_r;
  rep.size_ok = !rep.size_applicable || Rational(to_big(result.kept.size())) > c / 2 * n_pow_r;
  return rep;
}

std::string emit_prune_log(const PruneResult& result) {
  std::ostringstream out;
  out << "threshold " << to_string(result.threshold) << '\n';
  out << "rounds " << result.rounds.size() << '\n';
  for (const auto& round : result.rounds) {
    out << "removed " << round.removed << " by";
    for (auto v : round.trigger) out << ' ' << v;
    out << '\n';
  }
  out << "kept " << result.kept.size() << '\n';
  return out.str();
}

}  // namespace cliquecover
