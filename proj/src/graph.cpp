#include "walklab/graph.hpp"

#include <algorithm>
#include <numeric>

namespace walklab {

Graph::Graph(int n) : n_(n), words_((static_cast<size_t>(n) + 63) / 64) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  adj_.resize(static_cast<size_t>(n));
  bits_.assign(static_cast<size_t>(n) * words_, 0);
}

void Graph::add_edge(int u, int v) {
  check(u);
  check(v);
  if (u == v) throw std::invalid_argument("self loop");
  if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
  bits_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v >> 6)] |= 1ull << (v & 63);
  bits_[static_cast<size_t>(v) * words_ + static_cast<size_t>(u >> 6)] |= 1ull << (u & 63);
  adj_[static_cast<size_t>(u)].insert(
      std::lower_bound(adj_[static_cast<size_t>(u)].begin(), adj_[static_cast<size_t>(u)].end(), v), v);
  adj_[static_cast<size_t>(v)].insert(
      std::lower_bound(adj_[static_cast<size_t>(v)].begin(), adj_[static_cast<size_t>(v)].end(), u), u);
  ++edges_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(edges_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[static_cast<size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(static_cast<size_t>(n_));
  for (int v = 0; v < n_; ++v) d[static_cast<size_t>(v)] = degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<int> Graph::bfs_distances(int src) const {
  std::vector<int> dist(static_cast<size_t>(n_), -1);
  std::vector<int> queue;
  queue.push_back(src);
  dist[check(src)] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int v : adj_[static_cast<size_t>(u)])
      if (dist[static_cast<size_t>(v)] < 0) {
        dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

bool Graph::connected() const {
  auto dist = bfs_distances(0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool Graph::is_forest() const {
  // count components; acyclic iff edges = n - #components
  std::vector<int> comp(static_cast<size_t>(n_), -1);
  int comps = 0;
  for (int s = 0; s < n_; ++s) {
    if (comp[static_cast<size_t>(s)] >= 0) continue;
    ++comps;
    std::vector<int> queue{s};
    comp[static_cast<size_t>(s)] = s;
    for (size_t head = 0; head < queue.size(); ++head)
      for (int v : adj_[static_cast<size_t>(queue[head])])
        if (comp[static_cast<size_t>(v)] < 0) {
          comp[static_cast<size_t>(v)] = s;
          queue.push_back(v);
        }
  }
  return edges_ == n_ - comps;
}

bool Graph::check_invariants() const {
  int listed = 0;
  for (int u = 0; u < n_; ++u) {
    if (has_edge(u, u)) return false;
    const auto& nb = adj_[static_cast<size_t>(u)];
    if (!std::is_sorted(nb.begin(), nb.end())) return false;
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
    for (int v : nb) {
      if (!has_edge(u, v) || !has_edge(v, u)) return false;
      const auto& back = adj_[static_cast<size_t>(v)];
      if (!std::binary_search(back.begin(), back.end(), u)) return false;
    }
    listed += static_cast<int>(nb.size());
  }
  return listed == 2 * edges_;
}

Graph vertex_deleted(const Graph& g, int v) {
  if (g.n() < 2) throw std::invalid_argument("cannot delete the only vertex");
  if (v < 0 || v >= g.n()) throw std::out_of_range("vertex out of range");
  Graph out(g.n() - 1);
  auto map = [v](int u) { return u < v ? u : u - 1; };
  for (auto [a, b] : g.edges())
    if (a != v && b != v) out.add_edge(map(a), map(b));
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep,
                       std::vector<int>* old_to_new) {
  if (keep.empty()) throw std::invalid_argument("empty vertex set");
  std::vector<int> map(static_cast<size_t>(g.n()), -1);
  for (size_t i = 0; i < keep.size(); ++i) {
    int v = keep[i];
    if (v < 0 || v >= g.n() || map[static_cast<size_t>(v)] >= 0)
      throw std::invalid_argument("bad vertex set");
    map[static_cast<size_t>(v)] = static_cast<int>(i);
  }
  Graph out(static_cast<int>(keep.size()));
  for (auto [a, b] : g.edges())
    if (map[static_cast<size_t>(a)] >= 0 && map[static_cast<size_t>(b)] >= 0)
      out.add_edge(map[static_cast<size_t>(a)], map[static_cast<size_t>(b)]);
  if (old_to_new) *old_to_new = std::move(map);
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.n() + h.n());
  for (auto [a, b] : g.edges()) out.add_edge(a, b);
  for (auto [a, b] : h.edges()) out.add_edge(a + g.n(), b + g.n());
  return out;
}

Graph edge_join(const Graph& g, int u, const Graph& h, int v) {
  if (u < 0 || u >= g.n() || v < 0 || v >= h.n())
    throw std::out_of_range("vertex out of range");
  Graph out = disjoint_union(g, h);
  out.add_edge(u, g.n() + v);
  return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n())
    throw std::invalid_argument("permutation size mismatch");
  Graph out(g.n());
  for (auto [a, b] : g.edges())
    out.add_edge(perm[static_cast<size_t>(a)], perm[static_cast<size_t>(b)]);
  return out;
}

}  // namespace walklab
