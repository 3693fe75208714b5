#include "walklab/equivalence.hpp"

#include <json.hpp>
#include <algorithm>
#include <map>

#include "walklab/graph6.hpp"
#include "walklab/matrix.hpp"

namespace walklab {

namespace {

ExactMatrix adjacency_matrix(const Graph& g) {
  ExactMatrix a(g.n(), g.n());
  for (auto [u, v] : g.edges()) {
    a.at(u, v) = 1;
    a.at(v, u) = 1;
  }
  return a;
}

void require_connected(const Graph& g, const Graph& h) {
  if (!g.connected() || !h.connected())
    throw std::invalid_argument("walk equivalence requires connected graphs");
}

}  // namespace

bool walk_equivalent(const Graph& g, int v, const Graph& h, int u) {
  require_connected(g, h);
  const int threshold = g.n() + h.n();  // compare k = 0..threshold-1
  auto pg = walk_counts(g, v, threshold - 1);
  auto ph = walk_counts(h, u, threshold - 1);
  return pg.counts == ph.counts;
}

bool closed_walk_equivalent(const Graph& g, int v, const Graph& h, int u) {
  require_connected(g, h);
  const int threshold = g.n() + h.n();
  auto pg = closed_walk_counts(g, v, threshold - 1);
  auto ph = closed_walk_counts(h, u, threshold - 1);
  return pg.counts == ph.counts;
}

bool strongly_walk_equivalent(const Graph& g, int v, const Graph& h, int u) {
  return walk_equivalent(g, v, h, u) && closed_walk_equivalent(g, v, h, u);
}

bool removal_similar(const Graph& g, int x, int y, long node_budget) {
  if (x == y) return true;
  return isomorphic(vertex_deleted(g, x), vertex_deleted(g, y), node_budget)
      .has_value();
}

bool pseudosimilar(const Graph& g, int x, int y, long node_budget) {
  return removal_similar(g, x, y, node_budget) && !similar(g, x, y, node_budget);
}

bool cospectral_vertices(const Graph& g, int x, int y) {
  if (g.n() < 2) throw std::invalid_argument("needs at least two vertices");
  if (x == y) return true;
  return char_poly(adjacency_matrix(vertex_deleted(g, x))) ==
         char_poly(adjacency_matrix(vertex_deleted(g, y)));
}

std::string PairVerdict::str() const {
  auto flag = [](bool b) { return b ? "true" : "false"; };
  std::string s;
  s += "walk_eq=";
  s += flag(walk_eq);
  s += " closed_walk_eq=";
  s += flag(closed_walk_eq);
  s += " removal_similar=";
  s += flag(removal_similar);
  s += " similar=";
  s += flag(similar);
  s += " cospectral=";
  s += flag(cospectral);
  return s;
}

PairVerdict classify_pair(const Graph& g, int x, const Graph& h, int y,
                          long node_budget) {
  const bool same_graph = &g == &h;
  PairVerdict v;
  v.walk_eq = walk_equivalent(g, x, h, y);
  v.closed_walk_eq = closed_walk_equivalent(g, x, h, y);
  if (same_graph) {
    v.similar = similar(g, x, y, node_budget);
    v.removal_similar = removal_similar(g, x, y, node_budget);
    v.cospectral = cospectral_vertices(g, x, y);
  } else {
    v.similar = rooted_isomorphic(g, x, h, y, node_budget);
    v.removal_similar =
        g.n() == h.n() &&
        (g.n() < 2 ||
         isomorphic(vertex_deleted(g, x), vertex_deleted(h, y), node_budget)
             .has_value());
    v.cospectral = g.n() == h.n() &&
                   (g.n() < 2 ||
                    char_poly(adjacency_matrix(vertex_deleted(g, x))) ==
                        char_poly(adjacency_matrix(vertex_deleted(h, y))));
  }
  // consistency of the independently computed fields
  if (v.similar && !v.removal_similar)
    throw integrity_error("similar pair not removal-similar");
  if (v.removal_similar && !v.cospectral)
    throw integrity_error("removal-similar pair not cospectral");
  if (same_graph) {
    if (v.removal_similar && !v.walk_eq)
      throw integrity_error("removal-similar pair not walk-equivalent");
    if (v.cospectral != v.closed_walk_eq)
      throw integrity_error("cospectrality disagrees with closed-walk equivalence");
  }
  return v;
}

namespace {

std::string row_key(const std::vector<Int>& row) {
  std::string key;
  for (const Int& x : row) {
    key += dec(x);
    key += ',';
  }
  return key;
}

}  // namespace

UniverseIndex::UniverseIndex(std::vector<Graph> graphs, std::string name)
    : graphs_(std::move(graphs)), name_(std::move(name)) {
  if (graphs_.empty()) throw std::invalid_argument("empty universe");
  order_ = graphs_[0].n();
  const int threshold = 2 * order_;
  w_.resize(graphs_.size());
  r_.resize(graphs_.size());
  for (size_t gi = 0; gi < graphs_.size(); ++gi) {
    const Graph& h = graphs_[gi];
    if (h.n() != order_)
      throw std::invalid_argument("universe members of mixed order");
    auto all = walk_counts_all(h, threshold - 1);
    w_[gi].resize(static_cast<size_t>(h.n()));
    r_[gi].resize(static_cast<size_t>(h.n()));
    for (int u = 0; u < h.n(); ++u) {
      w_[gi][static_cast<size_t>(u)] = std::move(all[static_cast<size_t>(u)].counts);
      r_[gi][static_cast<size_t>(u)] =
          closed_walk_counts(h, u, threshold - 1).counts;
      wkey_[row_key(w_[gi][static_cast<size_t>(u)])].emplace_back(static_cast<int>(gi), u);
      rkey_[row_key(r_[gi][static_cast<size_t>(u)])].emplace_back(static_cast<int>(gi), u);
    }
  }
}

const std::vector<Int>& UniverseIndex::w_row(int gi, int v) const {
  return w_[static_cast<size_t>(gi)][static_cast<size_t>(v)];
}

const std::vector<Int>& UniverseIndex::r_row(int gi, int v) const {
  return r_[static_cast<size_t>(gi)][static_cast<size_t>(v)];
}

std::vector<std::pair<int, int>> UniverseIndex::w_matches(
    const std::vector<Int>& row) const {
  auto it = wkey_.find(row_key(row));
  return it == wkey_.end() ? std::vector<std::pair<int, int>>{} : it->second;
}

std::vector<std::pair<int, int>> UniverseIndex::r_matches(
    const std::vector<Int>& row) const {
  auto it = rkey_.find(row_key(row));
  return it == rkey_.end() ? std::vector<std::pair<int, int>>{} : it->second;
}

VertexVerdict vertex_verdict(const Graph& g, int v, const UniverseIndex& universe) {
  if (!g.connected()) throw std::invalid_argument("graph must be connected");
  if (g.n() != universe.order())
    throw std::invalid_argument("universe of different order");
  VertexVerdict out;
  out.universe = universe.name();
  const int threshold = 2 * g.n();
  auto wv = walk_counts(g, v, threshold - 1).counts;
  auto rv = closed_walk_counts(g, v, threshold - 1).counts;
  bool same_class_joint_mismatch = false;
  for (auto [gi, u] : universe.w_matches(wv)) {
    const Graph& h = universe.graphs()[static_cast<size_t>(gi)];
    bool iso = rooted_isomorphic(g, v, h, u);
    if (iso) continue;
    out.w_decisive = false;
    if (universe.r_row(gi, u) == rv) {
      // joint match that is not a rooted isomorphism
      if (isomorphic(g, h).has_value()) {
        same_class_joint_mismatch = true;
      } else if (!out.witness) {
        out.witness = RootedGraph{h, u};
      }
    }
  }
  for (auto [gi, u] : universe.r_matches(rv)) {
    const Graph& h = universe.graphs()[static_cast<size_t>(gi)];
    if (!rooted_isomorphic(g, v, h, u)) {
      out.r_decisive = false;
      break;
    }
  }
  if (out.witness)
    out.status = VertexVerdict::Status::Ambivalent;
  else if (same_class_joint_mismatch)
    out.status = VertexVerdict::Status::NeitherDetermined;
  else
    out.status = VertexVerdict::Status::Decisive;
  return out;
}

VertexVerdict vertex_verdict(const Graph& g, int v, std::span<const Graph> universe,
                             const std::string& universe_name) {
  UniverseIndex index(std::vector<Graph>(universe.begin(), universe.end()),
                      universe_name);
  return vertex_verdict(g, v, index);
}

std::string VertexVerdict::to_json(const Graph& g, int v) const {
  nlohmann::json j;
  j["graph"] = to_graph6(g);
  j["vertex"] = v;
  switch (status) {
    case Status::Decisive:
      j["status"] = "decisive";
      break;
    case Status::Ambivalent:
      j["status"] = "ambivalent";
      break;
    case Status::NeitherDetermined:
      j["status"] = "neither_determined";
      break;
  }
  j["w_decisive"] = w_decisive;
  j["r_decisive"] = r_decisive;
  if (!universe.empty()) j["universe"] = universe;
  if (witness) {
    j["witness_graph6"] = to_graph6(witness->graph);
    j["witness_vertex"] = witness->root;
  }
  return j.dump();
}

TripleLabeling canonical_triple_labeling(const Graph& g) {
  TripleLabeling out;
  out.triples.reserve(static_cast<size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) out.triples.push_back(closed_triple(g, v));
  std::map<std::tuple<Int, Int, Int>, std::vector<int>> classes;
  for (int v = 0; v < g.n(); ++v) {
    const auto& t = out.triples[static_cast<size_t>(v)];
    classes[{t.r2, t.r3, t.r4}].push_back(v);
  }
  for (auto& [key, verts] : classes)
    if (verts.size() > 1) out.collisions.push_back(verts);
  return out;
}

}  // namespace walklab
