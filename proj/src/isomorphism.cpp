#include "walklab/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace walklab {

namespace {

// Post-order subtree codes for a tree rooted at root.
std::vector<std::string> subtree_codes(const Graph& g, int root) {
  const int n = g.n();
  std::vector<std::string> code(static_cast<size_t>(n));
  std::vector<int> parent(static_cast<size_t>(n), -2), order;
  order.reserve(static_cast<size_t>(n));
  parent[static_cast<size_t>(root)] = -1;
  order.push_back(root);
  for (size_t head = 0; head < order.size(); ++head) {
    int u = order[head];
    for (int v : g.neighbors(u))
      if (parent[static_cast<size_t>(v)] == -2) {
        parent[static_cast<size_t>(v)] = u;
        order.push_back(v);
      }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int u = *it;
    std::vector<std::string> child;
    for (int v : g.neighbors(u))
      if (parent[static_cast<size_t>(v)] == u)
        child.push_back(code[static_cast<size_t>(v)]);
    std::sort(child.begin(), child.end());
    std::string s = "(";
    for (const auto& c : child) s += c;
    s += ")";
    code[static_cast<size_t>(u)] = std::move(s);
  }
  return code;
}

std::vector<int> component_of(const Graph& g, int src, std::vector<int>& comp_id,
                              int id) {
  std::vector<int> verts{src};
  comp_id[static_cast<size_t>(src)] = id;
  for (size_t head = 0; head < verts.size(); ++head)
    for (int v : g.neighbors(verts[head]))
      if (comp_id[static_cast<size_t>(v)] < 0) {
        comp_id[static_cast<size_t>(v)] = id;
        verts.push_back(v);
      }
  std::sort(verts.begin(), verts.end());
  return verts;
}

// Recursive alignment of two rooted trees with equal codes.
void align_rooted(const Graph& g, int gu, int gparent,
                  const std::vector<std::string>& gcode, const Graph& h, int hu,
                  int hparent, const std::vector<std::string>& hcode,
                  std::vector<int>& mapping) {
  mapping[static_cast<size_t>(gu)] = hu;
  std::vector<std::pair<std::string, int>> gc, hc;
  for (int v : g.neighbors(gu))
    if (v != gparent) gc.emplace_back(gcode[static_cast<size_t>(v)], v);
  for (int v : h.neighbors(hu))
    if (v != hparent) hc.emplace_back(hcode[static_cast<size_t>(v)], v);
  std::sort(gc.begin(), gc.end());
  std::sort(hc.begin(), hc.end());
  for (size_t i = 0; i < gc.size(); ++i)
    align_rooted(g, gc[i].second, gu, gcode, h, hc[i].second, hu, hcode, mapping);
}

// ---- colour refinement + backtracking for general graphs ----

struct RefineResult {
  std::vector<int> color_g, color_h;
  bool compatible;
};

RefineResult joint_refine(const Graph& g, const Graph& h, std::vector<int> cg,
                          std::vector<int> ch) {
  const int gn = g.n(), hn = h.n();
  int classes = 0;
  {
    std::map<int, int> dict;
    for (int v = 0; v < gn; ++v) {
      auto [it, fresh] = dict.try_emplace(cg[static_cast<size_t>(v)], classes);
      if (fresh) ++classes;
      cg[static_cast<size_t>(v)] = it->second;
    }
    for (int v = 0; v < hn; ++v) {
      auto [it, fresh] = dict.try_emplace(ch[static_cast<size_t>(v)], classes);
      if (fresh) ++classes;
      ch[static_cast<size_t>(v)] = it->second;
    }
  }
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> dict;
    auto signature = [&](const Graph& gr, const std::vector<int>& col, int v) {
      std::vector<int> nb;
      nb.reserve(gr.neighbors(v).size());
      for (int w : gr.neighbors(v)) nb.push_back(col[static_cast<size_t>(w)]);
      std::sort(nb.begin(), nb.end());
      return std::make_pair(col[static_cast<size_t>(v)], std::move(nb));
    };
    std::vector<int> ng(static_cast<size_t>(gn)), nh(static_cast<size_t>(hn));
    int next = 0;
    for (int v = 0; v < gn; ++v) {
      auto [it, fresh] = dict.try_emplace(signature(g, cg, v), next);
      if (fresh) ++next;
      ng[static_cast<size_t>(v)] = it->second;
    }
    for (int v = 0; v < hn; ++v) {
      auto [it, fresh] = dict.try_emplace(signature(h, ch, v), next);
      if (fresh) ++next;
      nh[static_cast<size_t>(v)] = it->second;
    }
    bool stable = next == classes;
    cg.swap(ng);
    ch.swap(nh);
    classes = next;
    if (stable) break;
  }
  // colour histograms must match
  std::vector<int> histg(static_cast<size_t>(classes)), histh(static_cast<size_t>(classes));
  for (int c : cg) ++histg[static_cast<size_t>(c)];
  for (int c : ch) ++histh[static_cast<size_t>(c)];
  return RefineResult{std::move(cg), std::move(ch), histg == histh && gn == hn};
}

struct Backtracker {
  const Graph& g;
  const Graph& h;
  const std::vector<int>& cg;
  const std::vector<int>& ch;
  std::vector<int> order;     // g's vertices, most constrained first
  std::vector<int> mapping;   // g vertex -> h vertex or -1
  std::vector<char> used;     // h vertex taken
  long budget;

  bool extend(size_t pos) {
    if (--budget < 0) throw budget_error("isomorphism search budget exceeded");
    if (pos == order.size()) return true;
    int gu = order[pos];
    for (int hv = 0; hv < h.n(); ++hv) {
      if (used[static_cast<size_t>(hv)] ||
          ch[static_cast<size_t>(hv)] != cg[static_cast<size_t>(gu)])
        continue;
      bool ok = true;
      for (size_t prev = 0; prev < pos && ok; ++prev) {
        int gw = order[prev];
        if (g.has_edge(gu, gw) != h.has_edge(hv, mapping[static_cast<size_t>(gw)]))
          ok = false;
      }
      if (!ok) continue;
      mapping[static_cast<size_t>(gu)] = hv;
      used[static_cast<size_t>(hv)] = 1;
      if (extend(pos + 1)) return true;
      mapping[static_cast<size_t>(gu)] = -1;
      used[static_cast<size_t>(hv)] = 0;
    }
    return false;
  }
};

std::optional<std::vector<int>> backtrack_isomorphism(const Graph& g, const Graph& h,
                                                      std::vector<int> init_g,
                                                      std::vector<int> init_h,
                                                      long node_budget) {
  if (g.n() != h.n() || g.edge_count() != h.edge_count()) return std::nullopt;
  auto refined = joint_refine(g, h, std::move(init_g), std::move(init_h));
  if (!refined.compatible) return std::nullopt;
  // class sizes for ordering
  std::map<int, int> size;
  for (int c : refined.color_g) ++size[c];
  std::vector<int> order(static_cast<size_t>(g.n()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int ca = refined.color_g[static_cast<size_t>(a)];
    int cb = refined.color_g[static_cast<size_t>(b)];
    if (size[ca] != size[cb]) return size[ca] < size[cb];
    if (ca != cb) return ca < cb;
    return a < b;
  });
  Backtracker bt{g,
                 h,
                 refined.color_g,
                 refined.color_h,
                 std::move(order),
                 std::vector<int>(static_cast<size_t>(g.n()), -1),
                 std::vector<char>(static_cast<size_t>(h.n()), 0),
                 node_budget};
  if (bt.extend(0)) return bt.mapping;
  return std::nullopt;
}

}  // namespace

std::string rooted_tree_code(const Graph& tree, int root) {
  return subtree_codes(tree, root)[static_cast<size_t>(root)];
}

std::vector<int> tree_centers(const Graph& tree) {
  const int n = tree.n();
  if (n == 1) return {0};
  std::vector<int> deg(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = tree.degree(v);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v)
    if (deg[static_cast<size_t>(v)] <= 1) layer.push_back(v);
  int remaining = n;
  std::vector<int> current = layer;
  while (remaining > 2) {
    std::vector<int> next;
    remaining -= static_cast<int>(current.size());
    for (int u : current)
      for (int w : tree.neighbors(u))
        if (--deg[static_cast<size_t>(w)] == 1) next.push_back(w);
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  return current;
}

std::string tree_code(const Graph& tree) {
  auto centers = tree_centers(tree);
  if (centers.size() == 1)
    return "1" + rooted_tree_code(tree, centers[0]);
  std::string a = rooted_tree_code(tree, centers[0]);
  std::string b = rooted_tree_code(tree, centers[1]);
  return "2" + std::min(a, b) + std::max(a, b);
}

std::string forest_code(const Graph& forest) {
  std::vector<int> comp_id(static_cast<size_t>(forest.n()), -1);
  std::vector<std::string> codes;
  for (int v = 0; v < forest.n(); ++v) {
    if (comp_id[static_cast<size_t>(v)] >= 0) continue;
    auto verts = component_of(forest, v, comp_id, v);
    codes.push_back(tree_code(induced_subgraph(forest, verts)));
  }
  std::sort(codes.begin(), codes.end());
  std::string out;
  for (const auto& c : codes) {
    out += c;
    out += "|";
  }
  return out;
}

std::optional<std::vector<int>> isomorphic(const Graph& g, const Graph& h,
                                           long node_budget) {
  if (g.n() != h.n() || g.edge_count() != h.edge_count()) return std::nullopt;
  const int n = g.n();
  if (g.is_forest()) {
    if (!h.is_forest()) return std::nullopt;
    // match components by canonical code, then align rooted subtrees
    std::vector<int> cg(static_cast<size_t>(n), -1), ch(static_cast<size_t>(n), -1);
    std::vector<std::pair<std::string, std::vector<int>>> compg, comph;
    for (int v = 0; v < n; ++v)
      if (cg[static_cast<size_t>(v)] < 0) {
        auto verts = component_of(g, v, cg, v);
        compg.emplace_back(tree_code(induced_subgraph(g, verts)), std::move(verts));
      }
    for (int v = 0; v < n; ++v)
      if (ch[static_cast<size_t>(v)] < 0) {
        auto verts = component_of(h, v, ch, v);
        comph.emplace_back(tree_code(induced_subgraph(h, verts)), std::move(verts));
      }
    std::sort(compg.begin(), compg.end());
    std::sort(comph.begin(), comph.end());
    if (compg.size() != comph.size()) return std::nullopt;
    std::vector<int> mapping(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < compg.size(); ++i) {
      if (compg[i].first != comph[i].first) return std::nullopt;
      const auto& vg = compg[i].second;
      const auto& vh = comph[i].second;
      Graph tg = induced_subgraph(g, vg);
      Graph th = induced_subgraph(h, vh);
      auto centers_g = tree_centers(tg);
      auto centers_h = tree_centers(th);
      int rg = centers_g[0], rh = centers_h[0];
      if (centers_g.size() == 2) {
        // root both halves at the centre with the smaller code
        if (rooted_tree_code(tg, centers_g[1]) < rooted_tree_code(tg, centers_g[0]))
          rg = centers_g[1];
        if (rooted_tree_code(th, centers_h[1]) < rooted_tree_code(th, centers_h[0]))
          rh = centers_h[1];
      }
      auto codes_g = subtree_codes(tg, rg);
      auto codes_h = subtree_codes(th, rh);
      std::vector<int> local(static_cast<size_t>(tg.n()), -1);
      align_rooted(tg, rg, -1, codes_g, th, rh, -1, codes_h, local);
      for (size_t k = 0; k < vg.size(); ++k)
        mapping[static_cast<size_t>(vg[k])] = vh[static_cast<size_t>(local[k])];
    }
    return mapping;
  }
  if (h.is_forest()) return std::nullopt;
  return backtrack_isomorphism(g, h, std::vector<int>(static_cast<size_t>(n), 0),
                               std::vector<int>(static_cast<size_t>(n), 0),
                               node_budget);
}

bool rooted_isomorphic(const Graph& g, int x, const Graph& h, int y,
                       long node_budget) {
  if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
  if (g.n() == h.n() && g.is_tree() && h.is_tree())
    return rooted_tree_code(g, x) == rooted_tree_code(h, y);
  std::vector<int> cg(static_cast<size_t>(g.n()), 0), ch(static_cast<size_t>(h.n()), 0);
  cg[static_cast<size_t>(x)] = 1;
  ch[static_cast<size_t>(y)] = 1;
  return backtrack_isomorphism(g, h, std::move(cg), std::move(ch), node_budget)
      .has_value();
}

bool similar(const Graph& g, int x, int y, long node_budget) {
  if (x == y) return true;
  return rooted_isomorphic(g, x, g, y, node_budget);
}

bool similar_backtracking(const Graph& g, int x, int y, long node_budget) {
  if (x == y) return true;
  std::vector<int> cx(static_cast<size_t>(g.n()), 0), cy(static_cast<size_t>(g.n()), 0);
  cx[static_cast<size_t>(x)] = 1;
  cy[static_cast<size_t>(y)] = 1;
  return backtrack_isomorphism(g, g, std::move(cx), std::move(cy), node_budget)
      .has_value();
}

std::optional<std::vector<int>> isomorphic_backtracking(const Graph& g, const Graph& h,
                                                        long node_budget) {
  return backtrack_isomorphism(g, h, std::vector<int>(static_cast<size_t>(g.n()), 0),
                               std::vector<int>(static_cast<size_t>(h.n()), 0),
                               node_budget);
}

}  // namespace walklab
