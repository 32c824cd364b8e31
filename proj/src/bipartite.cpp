#include "cliquecover/bipartite.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cliquecover/certified.hpp"
#include "cliquecover/errors.hpp"
#include "text_io.hpp"

namespace cliquecover {

BipartiteInstance::BipartiteInstance(std::size_t left_size, int right_n) : right_n_(right_n) {
  if (left_size == 0) throw InputError("bipartite instance needs at least one left item");
  if (right_n < 0) throw InputError("negative right side size");
  rows_.assign(left_size, Bitset(static_cast<std::size_t>(right_n)));
}

BipartiteInstance BipartiteInstance::from_edges(std::size_t left_size, int right_n,
                                                std::span<const std::pair<std::size_t, Vertex>> edges) {
  BipartiteInstance f(left_size, right_n);
  for (auto [i, v] : edges) {
    if (!f.add_edge(i, v)) throw InputError("duplicate bipartite edge " + std::to_string(i) + " " + std::to_string(v));
  }
  return f;
}

bool BipartiteInstance::add_edge(std::size_t i, Vertex v) {
  if (i >= rows_.size()) throw InputError("left index " + std::to_string(i) + " out of range");
  if (v < 0 || v >= right_n_) throw InputError("right vertex " + std::to_string(v) + " out of range");
  auto& row = rows_[i];
  if (row.test(static_cast<std::size_t>(v))) return false;
  row.set(static_cast<std::size_t>(v));
  return true;
}

std::vector<std::size_t> BipartiteInstance::right_degrees() const {
  std::vector<std::size_t> deg(static_cast<std::size_t>(right_n_), 0);
  for (const auto& row : rows_) row.for_each([&](int v) { ++deg[static_cast<std::size_t>(v)]; });
  return deg;
}

std::size_t BipartiteInstance::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.count();
  return total;
}

void BipartiteInstance::set_items(std::vector<Tuple> items) {
  if (items.size() != rows_.size()) throw InputError("payload count does not match the left side");
  items_ = std::move(items);
}

Rational generalized_binomial(const Rational& x, int s) {
  if (s < 1) throw InputError("generalized binomial needs s >= 1");
  if (x < s - 1) return Rational(0);
  Rational out(1);
  for (int i = 0; i < s; ++i) out *= (x - i) / Rational(i + 1);
  return out;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Lemma1Params lemma1_params(std::uint64_t m, std::uint64_t n, const Rational& c, int r,
                           std::optional<std::uint64_t> edges) {
  if (m < 1 || n < 1) throw InputError("bipartite step parameters need m, n >= 1");
  if (r < 2) throw InputError("bipartite step parameters need r >= 2");
  if (c <= 0) throw InputError("bipartite step parameters need c > 0");
  Lemma1Params p;
  p.s = certified_floor_scaled_log(power(c, static_cast<unsigned>(r)), n);
  p.t_min = certified_strict_ceil_power(n, 1 - power(c, static_cast<unsigned>(r - 1)));
  p.c_lower_ok = p.s >= 1;
  p.c_upper_ok = c < Rational(1, 2);
  p.s_vs_m_ok = Rational(to_big(p.s)) <= c / 2 * Rational(to_big(m)) + 1;
  if (edges) p.density_ok = Rational(to_big(*edges)) >= c * Rational(to_big(m)) * Rational(to_big(n));
  return p;
}

namespace {

class SubsetSearch {
 public:
  SubsetSearch(const BipartiteInstance& f, std::size_t s, std::size_t t_min, SearchMode mode)
      : f_(f), s_(s), t_min_(t_min), mode_(mode), order_(f.left_size()), degree_(f.left_size()) {
    for (std::size_t i = 0; i < f.left_size(); ++i) degree_[i] = f.left_degree(i);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return degree_[a] > degree_[b]; });
  }

  std::optional<BicliqueWitness> run() {
    chosen_.clear();
    descend(0, Bitset());
    if (!best_inter_) return std::nullopt;
    std::sort(best_left_.begin(), best_left_.end());
    return BicliqueWitness{best_left_, VertexSet(best_inter_->to_vector())};
  }

 private:
  // Returns true when the search should stop.
  bool descend(std::size_t start, const Bitset& inter) {
    const std::size_t depth = chosen_.size();
    if (depth == s_) {
      auto size = inter.count();
      if (mode_ == SearchMode::first_feasible || !best_inter_ || size > best_size_) {
        best_size_ = size;
        best_left_ = chosen_;
        best_inter_ = inter;
      }
      return mode_ == SearchMode::first_feasible;
    }
    const std::size_t last = f_.left_size() - (s_ - depth);
    for (std::size_t p = start; p <= last; ++p) {
      std::size_t item = order_[p];
      // The intersection never exceeds the item's degree, and degrees only
      // decrease along the order, so no later item can do better.
      if (!admissible(degree_[item])) break;
      Bitset next = depth == 0 ? f_.row(item) : inter & f_.row(item);
      if (!admissible(next.count())) continue;
      chosen_.push_back(item);
      if (descend(p + 1, next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  bool admissible(std::size_t size) const {
    if (mode_ == SearchMode::first_feasible) return size >= t_min_;
    return !best_inter_ || size > best_size_;
  }

  const BipartiteInstance& f_;
  std::size_t s_;
  std::size_t t_min_;
  SearchMode mode_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> degree_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_left_;
  std::optional<Bitset> best_inter_;
  std::size_t best_size_ = 0;
};

// Keeps the `limit` best s-subsets seen so far; once full, a branch must beat
// the weakest kept entry to be explored.
class RankedSearch {
 public:
  RankedSearch(const BipartiteInstance& f, std::size_t s, std::size_t t_min, std::size_t limit)
      : f_(f), s_(s), t_min_(t_min), limit_(limit), order_(f.left_size()), degree_(f.left_size()) {
    for (std::size_t i = 0; i < f.left_size(); ++i) degree_[i] = f.left_degree(i);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return degree_[a] > degree_[b]; });
  }

  std::vector<BicliqueWitness> run() {
    descend(0, Bitset());
    std::stable_sort(kept_.begin(), kept_.end(), [](const Entry& a, const Entry& b) { return a.size > b.size; });
    std::vector<BicliqueWitness> out;
    for (auto& e : kept_) {
      std::sort(e.left.begin(), e.left.end());
      out.push_back(BicliqueWitness{std::move(e.left), VertexSet(e.inter.to_vector())});
    }
    return out;
  }

 private:
  struct Entry {
    std::size_t size;
    std::vector<std::size_t> left;
    Bitset inter;
  };

  void descend(std::size_t start, const Bitset& inter) {
    const std::size_t depth = chosen_.size();
    if (depth == s_) {
      if (kept_.size() == limit_) {
        // drop the smallest, latest-found entry
        auto worst = kept_.begin();
        for (auto it = kept_.begin(); it != kept_.end(); ++it) {
          if (it->size <= worst->size) worst = it;
        }
        kept_.erase(worst);
      }
      kept_.push_back(Entry{inter.count(), chosen_, inter});
      return;
    }
    const std::size_t last = f_.left_size() - (s_ - depth);
    for (std::size_t p = start; p <= last; ++p) {
      std::size_t item = order_[p];
      if (!admissible(degree_[item])) break;
      Bitset next = depth == 0 ? f_.row(item) : inter & f_.row(item);
      if (!admissible(next.count())) continue;
      chosen_.push_back(item);
      descend(p + 1, next);
      chosen_.pop_back();
    }
  }

  bool admissible(std::size_t size) const {
    if (size < t_min_) return false;
    if (kept_.size() < limit_) return true;
    std::size_t weakest = kept_.front().size;
    for (const auto& e : kept_) weakest = std::min(weakest, e.size);
    return size > weakest;
  }

  const BipartiteInstance& f_;
  std::size_t s_;
  std::size_t t_min_;
  std::size_t limit_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> degree_;
  std::vector<std::size_t> chosen_;
  std::vector<Entry> kept_;
};

void check_oracle_size(std::size_t m, std::size_t s, std::uint64_t cap) {
  if (s < 1 || s > m) throw InputError("subset size must lie in [1, m]");
  if (binomial(m, s) > to_big(cap)) {
    throw LimitError("C(" + std::to_string(m) + "," + std::to_string(s) + ") exceeds the exhaustive cap of " +
                     std::to_string(cap));
  }
}

// Visits every s-subset of {0..m-1} in lexicographic order.
template <class Visit>
void for_each_subset(std::size_t m, std::size_t s, Visit visit) {
  std::vector<std::size_t> idx(s);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    visit(idx);
    std::size_t i = s;
    while (i > 0 && idx[i - 1] == m - s + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// d(X) by direct adjacency lookups.
std::size_t common_neighbours(const BipartiteInstance& f, const std::vector<std::size_t>& subset) {
  std::size_t d = 0;
  for (Vertex v = 0; v < f.right_size(); ++v) {
    bool all = true;
    for (auto i : subset) {
      if (!f.adjacent(i, v)) {
        all = false;
        break;
      }
    }
    if (all) ++d;
  }
  return d;
}

}  // namespace

std::optional<BicliqueWitness> find_s_subset(const BipartiteInstance& f, std::size_t s, std::size_t t_min,
                                             SearchMode mode) {
  if (s < 1) throw InputError("subset size s must be at least 1");
  if (s > f.left_size()) return std::nullopt;
  return SubsetSearch(f, s, t_min, mode).run();
}

std::vector<BicliqueWitness> rank_s_subsets(const BipartiteInstance& f, std::size_t s, std::size_t t_min,
                                            std::size_t limit) {
  if (s < 1) throw InputError("subset size s must be at least 1");
  if (s > f.left_size() || limit == 0) return {};
  return RankedSearch(f, s, t_min, limit).run();
}

OracleResult biclique_oracle(const BipartiteInstance& f, std::size_t s, std::uint64_t cap) {
  check_oracle_size(f.left_size(), s, cap);
  OracleResult best;
  bool seen = false;
  for_each_subset(f.left_size(), s, [&](const std::vector<std::size_t>& subset) {
    auto d = common_neighbours(f, subset);
    if (!seen || d > best.t) {
      best.t = d;
      best.left = subset;
      seen = true;
    }
  });
  return best;
}

DoubleCountReport double_count_check(const BipartiteInstance& f, std::size_t s, std::uint64_t cap) {
  check_oracle_size(f.left_size(), s, cap);
  DoubleCountReport rep;
  for_each_subset(f.left_size(), s,
                  [&](const std::vector<std::size_t>& subset) { rep.lhs_sum += to_big(common_neighbours(f, subset)); });

  const int si = static_cast<int>(s);
  std::uint64_t edges = 0;
  for (auto d : f.right_degrees()) {
    rep.rhs_sum += binomial(d, s);
    rep.convex_lhs += generalized_binomial(Rational(to_big(d)), si);
    edges += d;
  }
  rep.equal = rep.lhs_sum == rep.rhs_sum;
  const auto n = static_cast<std::uint64_t>(f.right_size());
  if (n > 0) {
    Rational mean(to_big(edges), to_big(n));
    mean.canonicalize();
    rep.convex_rhs = Rational(to_big(n)) * generalized_binomial(mean, si);
  }
  rep.convexity_ok = rep.convex_lhs >= rep.convex_rhs;
  return rep;
}

BipartiteInstance parse_bipartite(std::string_view text) {
  detail::LineReader in(text);
  auto header = in.next("header 'm n e'");
  if (header.size() != 3) in.fail("header must be 'm n e'");
  auto m = in.to_uint(header[0]);
  int n = in.to_int(header[1]);
  auto e = in.to_uint(header[2]);
  if (m == 0) in.fail("bipartite instance needs at least one left item");
  BipartiteInstance f(m, n);
  for (std::uint64_t k = 0; k < e; ++k) {
    auto toks = in.next("edge line 'i v'");
    if (toks.size() != 2) in.fail("edge line must be 'i v'");
    auto i = in.to_uint(toks[0]);
    int v = in.to_int(toks[1]);
    if (i >= m || v >= n) in.fail("edge endpoint out of range");
    if (!f.add_edge(i, v)) in.fail("duplicate edge");
  }
  in.expect_end();
  return f;
}

std::string emit_bipartite(const BipartiteInstance& f) {
  std::ostringstream out;
  out << f.left_size() << ' ' << f.right_size() << ' ' << f.edge_count() << '\n';
  for (std::size_t i = 0; i < f.left_size(); ++i) f.row(i).for_each([&](int v) { out << i << ' ' << v << '\n'; });
  return out.str();
}

}  // namespace cliquecover
