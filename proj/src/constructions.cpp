#include "walklab/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace walklab {

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Fixture y_graph(int n) {
  if (n < 4) throw std::invalid_argument("y_graph needs at least 4 vertices");
  Graph g = path(n - 2);
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  out.add_edge(n - 3, n - 2);
  out.add_edge(n - 3, n - 1);
  return Fixture{"y" + std::to_string(n), std::move(out), {{"u", 0}}};
}

Graph tadpole(int cycle_len, int s) {
  if (cycle_len < 3) throw std::invalid_argument("cycle too short");
  if (s < 1) throw std::invalid_argument("tail needs at least one vertex");
  Graph g(cycle_len + s);
  for (int i = 0; i < cycle_len; ++i) g.add_edge(i, (i + 1) % cycle_len);
  for (int i = 0; i + 1 < s; ++i) g.add_edge(cycle_len + i, cycle_len + i + 1);
  g.add_edge(0, cycle_len);
  return g;
}

RootedGraph coalescence(const RootedGraph& g, const RootedGraph& h) {
  const int gn = g.graph.n(), hn = h.graph.n();
  Graph out(gn + hn - 1);
  for (auto [a, b] : g.graph.edges()) out.add_edge(a, b);
  auto map = [&](int u) {
    if (u == h.root) return g.root;
    return gn + (u < h.root ? u : u - 1);
  };
  for (auto [a, b] : h.graph.edges()) out.add_edge(map(a), map(b));
  return RootedGraph{std::move(out), g.root};
}

RootedGraph graftage(const RootedGraph& g, const RootedGraph& h) {
  const int gn = g.graph.n(), hn = h.graph.n();
  Graph out(gn + hn + 1);
  const int w = gn + hn;
  for (auto [a, b] : g.graph.edges()) out.add_edge(a, b);
  for (auto [a, b] : h.graph.edges()) out.add_edge(gn + a, gn + b);
  out.add_edge(g.root, w);
  out.add_edge(gn + h.root, w);
  return RootedGraph{std::move(out), w};
}

Fixture harary_palmer() { return fixture("hp"); }

Fixture schwenk_graph() { return fixture("schwenk"); }

std::vector<int> cycle_vertices(const Graph& g) {
  // strip leaves until only the cycle remains
  std::vector<int> deg(static_cast<size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) deg[static_cast<size_t>(v)] = g.degree(v);
  std::vector<int> queue;
  for (int v = 0; v < g.n(); ++v)
    if (deg[static_cast<size_t>(v)] == 1) queue.push_back(v);
  std::vector<bool> removed(static_cast<size_t>(g.n()), false);
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    removed[static_cast<size_t>(u)] = true;
    for (int w : g.neighbors(u)) {
      if (removed[static_cast<size_t>(w)]) continue;
      if (--deg[static_cast<size_t>(w)] == 1) queue.push_back(w);
    }
  }
  std::vector<int> cyc;
  for (int v = 0; v < g.n(); ++v)
    if (!removed[static_cast<size_t>(v)]) cyc.push_back(v);
  return cyc;
}

Fixture hp_construct(const Graph& u, const std::vector<int>& alpha, int v) {
  const int n = u.n();
  if (!u.connected()) throw std::invalid_argument("graph is not connected");
  if (u.edge_count() != n) throw std::invalid_argument("graph is not unicyclic");
  if (static_cast<int>(alpha.size()) != n)
    throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> hit(static_cast<size_t>(n), false);
  for (int x : alpha) {
    if (x < 0 || x >= n || hit[static_cast<size_t>(x)])
      throw std::invalid_argument("not a permutation");
    hit[static_cast<size_t>(x)] = true;
  }
  for (auto [a, b] : u.edges())
    if (!u.has_edge(alpha[static_cast<size_t>(a)], alpha[static_cast<size_t>(b)]))
      throw std::invalid_argument("not an automorphism");
  bool identity = true, cubed_identity = true;
  for (int x = 0; x < n; ++x) {
    int a1 = alpha[static_cast<size_t>(x)];
    if (a1 != x) identity = false;
    int a3 = alpha[static_cast<size_t>(alpha[static_cast<size_t>(a1)])];
    if (a3 != x) cubed_identity = false;
  }
  if (identity || !cubed_identity)
    throw std::invalid_argument("automorphism order is not 3");
  if (v < 0 || v >= n) throw std::out_of_range("vertex out of range");
  auto cyc = cycle_vertices(u);
  if (!std::binary_search(cyc.begin(), cyc.end(), v))
    throw std::invalid_argument("vertex is not on the cycle");
  if (u.degree(v) != 2) throw std::invalid_argument("cycle vertex degree is not 2");

  Graph t = vertex_deleted(u, v);
  auto renum = [v](int x) { return x < v ? x : x - 1; };
  int x = alpha[static_cast<size_t>(v)];
  int y = alpha[static_cast<size_t>(x)];
  return Fixture{"hp_construct", std::move(t), {{"x", renum(x)}, {"y", renum(y)}}};
}

namespace {

constexpr int kApexColor = 100;
constexpr int kSideColor = 101;

// Shared block-building state for one graph of the pair.
struct KvBuilder {
  Graph g;
  std::vector<int> color;
  explicit KvBuilder(int n) : g(n), color(static_cast<size_t>(n), -1) {}
  int next = 0;

  int vertex(int c) {
    color[static_cast<size_t>(next)] = c;
    return next++;
  }

  static int path_color(int j, int s) { return std::min(j, s + 1 - j); }

  // Path of s vertices, folded position colors; returns {first, last}.
  std::pair<int, int> add_path(int s) {
    int first = -1, prev = -1;
    for (int j = 1; j <= s; ++j) {
      int v = vertex(path_color(j, s));
      if (prev >= 0) g.add_edge(prev, v);
      if (first < 0) first = v;
      prev = v;
    }
    return {first, prev};
  }

  // Tadpole block: s-vertex path then a six-cycle. attach < 0 starts the
  // chain. Returns {bottom path vertex, top apex}.
  std::pair<int, int> add_block(int s, int attach) {
    auto [p1, ps] = add_path(s);
    if (attach >= 0) g.add_edge(attach, p1);
    int a = vertex(kApexColor);
    g.add_edge(ps, a);
    int bl = vertex(kSideColor), br = vertex(kSideColor);
    g.add_edge(a, bl);
    g.add_edge(a, br);
    int cl = vertex(kSideColor), cr = vertex(kSideColor);
    g.add_edge(bl, cl);
    g.add_edge(br, cr);
    int d = vertex(kApexColor);
    g.add_edge(cl, d);
    g.add_edge(cr, d);
    return {p1, d};
  }
};

}  // namespace

KvPair krebs_verbitsky(int s, int t) {
  if (s < 1) throw std::invalid_argument("s must be at least 1");
  if (t < 2) throw std::invalid_argument("t must be at least 2");
  const int n = t * (s + 6) + s + 3;

  // first graph: t tadpole blocks, then a path and a pendant triangle
  KvBuilder bg(n);
  int attach = -1, v_mark = -1, c_mark = -1;
  std::vector<int> head_tadpole;
  for (int i = 1; i <= t; ++i) {
    int before = bg.next;
    auto [p1, d] = bg.add_block(s, attach);
    if (i == 1) v_mark = p1;
    if (i == t) {
      c_mark = d;
      for (int w = before; w < bg.next; ++w) head_tadpole.push_back(w);
    }
    attach = d;
  }
  {
    auto [g1, gs] = bg.add_path(s);
    bg.g.add_edge(attach, g1);
    int apex = bg.vertex(kApexColor);
    bg.g.add_edge(gs, apex);
    int yl = bg.vertex(kSideColor), yr = bg.vertex(kSideColor);
    bg.g.add_edge(apex, yl);
    bg.g.add_edge(apex, yr);
    bg.g.add_edge(yl, yr);
  }

  // second graph: t-1 tadpole blocks, then the split head
  KvBuilder bh(n);
  attach = -1;
  int u_mark = -1, cp_mark = -1, cpp_mark = -1;
  for (int i = 1; i <= t - 1; ++i) {
    auto [p1, d] = bh.add_block(s, attach);
    if (i == 1) u_mark = p1;
    attach = d;
  }
  {
    auto [q1, qs] = bh.add_path(s);
    bh.g.add_edge(attach, q1);
    int a = bh.vertex(kApexColor);
    bh.g.add_edge(qs, a);
    int bl = bh.vertex(kSideColor), br = bh.vertex(kSideColor);
    bh.g.add_edge(a, bl);
    bh.g.add_edge(a, br);
    int cl = bh.vertex(kSideColor), cr = bh.vertex(kSideColor);
    bh.g.add_edge(bl, cl);
    bh.g.add_edge(br, cr);
    int pl = bh.vertex(kApexColor), pr = bh.vertex(kApexColor);
    bh.g.add_edge(cl, pl);
    bh.g.add_edge(cr, pr);
    auto [h1, hs] = bh.add_path(s);
    bh.g.add_edge(pl, h1);
    bh.g.add_edge(hs, pr);
    int xl = bh.vertex(kSideColor), xr = bh.vertex(kSideColor);
    bh.g.add_edge(pl, xl);
    bh.g.add_edge(pr, xr);
    bh.g.add_edge(xl, xr);
    cp_mark = pl;
    cpp_mark = pr;
  }

  KvPair out{
      Fixture{"kv_g", std::move(bg.g), {{"v", v_mark}, {"c", c_mark}}},
      Fixture{"kv_h", std::move(bh.g), {{"u", u_mark}, {"cp", cp_mark}, {"cpp", cpp_mark}}},
      std::move(bg.color),
      std::move(bh.color),
      s,
      t,
      t * (s + 4) - 2,
      std::move(head_tadpole)};
  return out;
}

std::pair<Fixture, Fixture> pad_with_pendants(const Fixture& g, const std::string& g_mark,
                                              const Fixture& h, const std::string& h_mark,
                                              int target_n) {
  if (g.graph.n() != h.graph.n())
    throw std::invalid_argument("pair must have equal vertex counts");
  const int n = g.graph.n();
  if (target_n < n) throw std::invalid_argument("target smaller than current size");
  auto pad = [&](const Fixture& f, const std::string& mark) {
    Graph out(target_n);
    for (auto [a, b] : f.graph.edges()) out.add_edge(a, b);
    for (int w = n; w < target_n; ++w) out.add_edge(f.mark(mark), w);
    return Fixture{f.name + "_padded", std::move(out), f.marks};
  };
  return {pad(g, g_mark), pad(h, h_mark)};
}

}  // namespace walklab
