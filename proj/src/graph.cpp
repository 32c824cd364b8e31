#include "cliquecover/graph.hpp"

#include <algorithm>
#include <sstream>

#include "cliquecover/errors.hpp"
#include "text_io.hpp"

namespace cliquecover {

VertexSet::VertexSet(std::vector<Vertex> sorted) : members_(std::move(sorted)) {
  for (std::size_t i = 1; i < members_.size(); ++i) {
    if (members_[i - 1] >= members_[i]) throw InputError("vertex set is not strictly increasing");
  }
  if (!members_.empty() && members_.front() < 0) throw InputError("negative vertex index");
}

VertexSet VertexSet::from_unsorted(std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  return VertexSet(std::move(members));
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (int u = 0; u < n(); ++u) {
    Bitset above = rows_[static_cast<std::size_t>(u)];
    above.clear_through(static_cast<std::size_t>(u));
    above.for_each([&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

GraphBuilder::GraphBuilder(int n) {
  if (n < 0) throw InputError("negative vertex count");
  graph_.rows_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  int n = graph_.n();
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside [0," +
                     std::to_string(n) + ")");
  }
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
  auto& ru = graph_.rows_[static_cast<std::size_t>(u)];
  if (ru.test(static_cast<std::size_t>(v))) return false;
  ru.set(static_cast<std::size_t>(v));
  graph_.rows_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
  ++graph_.edges_;
  return true;
}

Graph GraphBuilder::build() && { return std::move(graph_); }

Graph build_graph(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

BernoulliDraw::BernoulliDraw(const Rational& p) : den_(p.get_den()) {
  if (p < 0 || p > 1) throw InputError("probability " + to_string(p) + " outside [0,1]");
  mpz_mul_2exp(num_scaled_.get_mpz_t(), p.get_num_mpz_t(), 64);
}

bool BernoulliDraw::operator()(std::uint64_t x) const { return to_big(x) * den_ < num_scaled_; }

Graph gen_gnp(int n, const Rational& p, std::uint64_t seed) {
  BernoulliDraw draw(p);
  SplitMix64 rng(seed);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (draw(rng.next())) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

Graph gen_complete_multipartite(std::span<const int> sizes) {
  if (sizes.empty()) throw InputError("multipartite generator needs at least one part");
  std::vector<int> block;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) throw InputError("part sizes must be positive");
    block.insert(block.end(), static_cast<std::size_t>(sizes[i]), static_cast<int>(i));
  }
  int n = static_cast<int>(block.size());
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (block[static_cast<std::size_t>(u)] != block[static_cast<std::size_t>(v)]) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

Graph overlay(const Graph& host, const Graph& planted, std::span<const Vertex> embedding) {
  if (static_cast<int>(embedding.size()) != planted.n()) {
    throw InputError("embedding has " + std::to_string(embedding.size()) + " entries for " +
                     std::to_string(planted.n()) + " planted vertices");
  }
  std::vector<bool> used(static_cast<std::size_t>(host.n()), false);
  for (Vertex image : embedding) {
    if (image < 0 || image >= host.n()) throw InputError("embedding target " + std::to_string(image) + " out of range");
    if (used[static_cast<std::size_t>(image)]) throw InputError("embedding is not injective at " + std::to_string(image));
    used[static_cast<std::size_t>(image)] = true;
  }
  GraphBuilder b(host.n());
  for (auto [u, v] : host.edges()) b.add_edge(u, v);
  for (auto [u, v] : planted.edges()) {
    b.add_edge(embedding[static_cast<std::size_t>(u)], embedding[static_cast<std::size_t>(v)]);
  }
  return std::move(b).build();
}

Graph parse_edge_list(std::string_view text) {
  detail::LineReader in(text);
  auto header = in.next("header 'n m'");
  if (header.size() != 2) in.fail("header must be 'n m'");
  int n = in.to_int(header[0]);
  auto m = in.to_uint(header[1]);
  GraphBuilder b(n);
  for (std::uint64_t i = 0; i < m; ++i) {
    auto toks = in.next("edge line 'u v'");
    if (toks.size() != 2) in.fail("edge line must be 'u v'");
    int u = in.to_int(toks[0]);
    int v = in.to_int(toks[1]);
    try {
      if (!b.add_edge(u, v)) in.fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    } catch (const InputError& e) {
      if (e.line()) throw;
      in.fail(e.what());
    }
  }
  in.expect_end();
  return std::move(b).build();
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace cliquecover
