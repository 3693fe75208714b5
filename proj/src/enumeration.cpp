#include "walklab/enumeration.hpp"

#include <json.hpp>
#include <algorithm>
#include <map>
#include <unordered_map>

#include "walklab/constructions.hpp"
#include "walklab/graph6.hpp"
#include "walklab/matrix.hpp"
#include "walklab/walks.hpp"

namespace walklab {

namespace {

Graph tree_from_levels(const std::vector<int>& level) {
  const int n = static_cast<int>(level.size());
  Graph g(n);
  std::vector<int> parent_at_level(static_cast<size_t>(n + 2), -1);
  for (int i = 0; i < n; ++i) {
    int l = level[static_cast<size_t>(i)];
    if (l > 1) g.add_edge(i, parent_at_level[static_cast<size_t>(l - 1)]);
    parent_at_level[static_cast<size_t>(l)] = i;
  }
  return g;
}

// FNV-1a, 64 bit; collisions are always re-verified exactly.
uint64_t fnv1a(const std::string& s) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string walk_rows_key(const Graph& g, int upto, bool sorted_rows) {
  auto all = walk_counts_all(g, upto);
  std::vector<std::string> rows;
  rows.reserve(all.size());
  for (const auto& p : all) {
    std::string row;
    for (const Int& x : p.counts) {
      row += dec(x);
      row += ',';
    }
    rows.push_back(std::move(row));
  }
  if (sorted_rows) std::sort(rows.begin(), rows.end());
  std::string key;
  for (const auto& r : rows) {
    key += r;
    key += ';';
  }
  return key;
}

}  // namespace

void enumerate_trees(int n, const std::function<void(const Graph&)>& emit) {
  if (n < 1) throw std::invalid_argument("need at least one vertex");
  if (n == 1) {
    emit(Graph(1));
    return;
  }
  if (n == 2) {
    emit(path(2));
    return;
  }
  // level sequences of rooted trees in reverse lexicographic order
  std::vector<int> level(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) level[static_cast<size_t>(i)] = i + 1;
  while (true) {
    Graph t = tree_from_levels(level);
    auto centers = tree_centers(t);
    bool keep = false;
    if (centers.size() == 1) {
      keep = centers[0] == 0;
    } else if (centers[0] == 0 || centers[1] == 0) {
      int other = centers[0] == 0 ? centers[1] : centers[0];
      keep = rooted_tree_code(t, 0) <= rooted_tree_code(t, other);
    }
    if (keep) emit(t);
    // successor: back up at the last level > 2 and repeat the prefix
    int p = -1;
    for (int i = n - 1; i >= 0; --i)
      if (level[static_cast<size_t>(i)] > 2) {
        p = i;
        break;
      }
    if (p < 0) break;
    int q = -1;
    for (int i = p - 1; i >= 0; --i)
      if (level[static_cast<size_t>(i)] == level[static_cast<size_t>(p)] - 1) {
        q = i;
        break;
      }
    for (int i = p; i < n; ++i)
      level[static_cast<size_t>(i)] = level[static_cast<size_t>(i - (p - q))];
  }
}

std::vector<Graph> all_trees(int n) {
  std::vector<Graph> out;
  enumerate_trees(n, [&](const Graph& t) { out.push_back(t); });
  return out;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("connected-graph enumeration is limited to n <= 7");
  const int m = n * (n - 1) / 2;
  // edge index of each unordered pair
  std::vector<std::vector<int>> eidx(static_cast<size_t>(n),
                                     std::vector<int>(static_cast<size_t>(n), -1));
  {
    int e = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        eidx[static_cast<size_t>(u)][static_cast<size_t>(v)] = e;
        eidx[static_cast<size_t>(v)][static_cast<size_t>(u)] = e;
        ++e;
      }
  }
  // all permutations acting on edge indices
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  std::vector<std::vector<int>> actions;
  do {
    std::vector<int> act(static_cast<size_t>(m));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        act[static_cast<size_t>(eidx[static_cast<size_t>(u)][static_cast<size_t>(v)])] =
            eidx[static_cast<size_t>(perm[static_cast<size_t>(u)])]
                [static_cast<size_t>(perm[static_cast<size_t>(v)])];
    actions.push_back(std::move(act));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<bool> seen(1ull << m, false);
  std::vector<Graph> out;
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (seen[mask]) continue;
    // mark the whole isomorphism orbit
    for (const auto& act : actions) {
      uint32_t image = 0;
      for (int e = 0; e < m; ++e)
        if (mask & (1u << e)) image |= 1u << act[static_cast<size_t>(e)];
      seen[image] = true;
    }
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (mask & (1u << eidx[static_cast<size_t>(u)][static_cast<size_t>(v)]))
          g.add_edge(u, v);
    if (g.connected()) out.push_back(std::move(g));
  }
  return out;
}

std::string CensusRecord::to_json_line() const {
  nlohmann::json j;
  j["class"] = cls;
  j["n"] = n;
  j["index"] = index;
  j["graph6"] = graph6;
  j["profile_key"] = profile_key;
  return j.dump();
}

IdentifiabilityReport walk_identifiability_census(int n_max) {
  IdentifiabilityReport report;
  report.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) {
    std::unordered_map<uint64_t, std::vector<std::string>> buckets;
    enumerate_trees(n, [&](const Graph& t) {
      buckets[fnv1a(walk_rows_key(t, 2 * n - 1, true))].push_back(to_graph6(t));
    });
    for (auto& [hash, members] : buckets) {
      if (members.size() < 2) continue;
      // hash collision: re-verify exactly
      std::map<std::string, std::vector<std::string>> exact;
      for (const auto& g6 : members)
        exact[walk_rows_key(from_graph6(g6), 2 * n - 1, true)].push_back(g6);
      for (auto& [key, hits] : exact)
        if (hits.size() > 1) {
          std::sort(hits.begin(), hits.end());
          report.collisions.push_back(CollisionClass{n, hits});
        }
    }
  }
  return report;
}

namespace {

// Orbit representatives of a tree's vertices under its automorphisms,
// via rooted canonical codes. Returns representative vertex per orbit.
std::vector<int> vertex_orbit_reps(const Graph& tree) {
  std::map<std::string, int> seen;
  std::vector<int> reps;
  for (int v = 0; v < tree.n(); ++v) {
    auto [it, fresh] = seen.try_emplace(rooted_tree_code(tree, v), v);
    if (fresh) reps.push_back(v);
  }
  return reps;
}

}  // namespace

std::vector<AmbivalentMatch> ambivalent_vertex_census(int n) {
  auto trees = all_trees(n);
  struct Entry {
    int tree;
    int vertex;
  };
  const int upto = 2 * n - 1;
  std::vector<std::vector<WalkProfile>> profiles(trees.size());
  std::map<std::string, std::vector<Entry>> buckets;
  for (size_t ti = 0; ti < trees.size(); ++ti) {
    profiles[ti] = walk_counts_all(trees[ti], upto);
    for (int v : vertex_orbit_reps(trees[ti])) {
      std::string key;
      for (const Int& x : profiles[ti][static_cast<size_t>(v)].counts) {
        key += dec(x);
        key += ',';
      }
      buckets[std::move(key)].push_back(Entry{static_cast<int>(ti), v});
    }
  }
  std::vector<AmbivalentMatch> out;
  for (auto& [key, entries] : buckets) {
    for (size_t i = 0; i < entries.size(); ++i)
      for (size_t j = i + 1; j < entries.size(); ++j) {
        const Entry &a = entries[i], &b = entries[j];
        AmbivalentMatch m;
        m.same_tree = a.tree == b.tree;
        m.t_graph6 = to_graph6(trees[static_cast<size_t>(a.tree)]);
        m.s_graph6 = to_graph6(trees[static_cast<size_t>(b.tree)]);
        m.x = a.vertex;
        m.y = b.vertex;
        m.strong =
            closed_walk_counts(trees[static_cast<size_t>(a.tree)], a.vertex, upto)
                .counts ==
            closed_walk_counts(trees[static_cast<size_t>(b.tree)], b.vertex, upto)
                .counts;
        out.push_back(std::move(m));
      }
  }
  return out;
}

std::vector<CrossSizeMatch> cross_size_census(int small_max, int large_max,
                                              CrossMode mode) {
  std::vector<std::vector<Graph>> trees(static_cast<size_t>(large_max + 1));
  for (int n = 1; n <= large_max; ++n) trees[static_cast<size_t>(n)] = all_trees(n);
  std::vector<CrossSizeMatch> out;
  for (int a = 1; a <= small_max; ++a)
    for (int b = a + 1; b <= large_max; ++b) {
      const int upto = a + b - 1;
      struct Row {
        int tree, vertex;
        std::vector<Int> w, r;
      };
      auto rows_for = [&](int n) {
        std::vector<Row> rows;
        const auto& ts = trees[static_cast<size_t>(n)];
        for (size_t ti = 0; ti < ts.size(); ++ti) {
          auto all = walk_counts_all(ts[ti], upto);
          for (int v : vertex_orbit_reps(ts[ti])) {
            Row row{static_cast<int>(ti), v, all[static_cast<size_t>(v)].counts, {}};
            if (mode != CrossMode::Walk)
              row.r = closed_walk_counts(ts[ti], v, upto).counts;
            rows.push_back(std::move(row));
          }
        }
        return rows;
      };
      auto key_of = [&](const Row& row) {
        std::string key;
        if (mode != CrossMode::Closed)
          for (const Int& x : row.w) {
            key += dec(x);
            key += ',';
          }
        key += '#';
        if (mode != CrossMode::Walk)
          for (const Int& x : row.r) {
            key += dec(x);
            key += ',';
          }
        return key;
      };
      auto small_rows = rows_for(a);
      auto large_rows = rows_for(b);
      std::map<std::string, std::vector<const Row*>> index;
      for (const Row& row : small_rows) index[key_of(row)].push_back(&row);
      for (const Row& row : large_rows) {
        auto it = index.find(key_of(row));
        if (it == index.end()) continue;
        for (const Row* srow : it->second)
          out.push_back(CrossSizeMatch{
              a, b, to_graph6(trees[static_cast<size_t>(a)][static_cast<size_t>(srow->tree)]),
              to_graph6(trees[static_cast<size_t>(b)][static_cast<size_t>(row.tree)]),
              srow->vertex, row.vertex});
      }
    }
  return out;
}

int distinct_tree_pairs(const std::vector<CrossSizeMatch>& matches) {
  std::map<std::pair<std::string, std::string>, int> pairs;
  for (const auto& m : matches) ++pairs[{m.small_graph6, m.large_graph6}];
  return static_cast<int>(pairs.size());
}

bool determined_by_spectrum(const Graph& g, std::span<const Graph> universe) {
  ExactMatrix a(g.n(), g.n());
  for (auto [u, v] : g.edges()) {
    a.at(u, v) = 1;
    a.at(v, u) = 1;
  }
  Poly pg = char_poly(a);
  for (const Graph& h : universe) {
    ExactMatrix b(h.n(), h.n());
    for (auto [u, v] : h.edges()) {
      b.at(u, v) = 1;
      b.at(v, u) = 1;
    }
    if (char_poly(b) == pg && !isomorphic(g, h).has_value()) return false;
  }
  return true;
}

DecisiveCensusReport decisive_census(int n) {
  DecisiveCensusReport report;
  report.n = n;
  auto graphs = enumerate_connected_graphs(n);
  report.graphs = static_cast<int>(graphs.size());
  UniverseIndex index(graphs, "connected graphs on " + std::to_string(n));

  // group characteristic polynomials to decide spectral determination
  std::map<std::string, int> poly_count;
  std::vector<Poly> polys;
  polys.reserve(graphs.size());
  for (const Graph& g : graphs) {
    ExactMatrix a(g.n(), g.n());
    for (auto [u, v] : g.edges()) {
      a.at(u, v) = 1;
      a.at(v, u) = 1;
    }
    polys.push_back(char_poly(a));
    ++poly_count[polys.back().str()];
  }
  for (size_t gi = 0; gi < graphs.size(); ++gi) {
    DecisiveCensusRow row;
    row.graph6 = to_graph6(graphs[gi]);
    row.determined_by_spectrum = poly_count[polys[gi].str()] == 1;
    if (row.determined_by_spectrum) ++report.ds_count;
    row.irreducible = n >= 2 && irreducibility_certificate(polys[gi]).irreducible();
    if (row.irreducible) ++report.irreducible_count;
    if (row.determined_by_spectrum && row.irreducible) {
      ++report.hypothesis_count;
      for (int v = 0; v < n; ++v) {
        auto verdict = vertex_verdict(graphs[gi], v, index);
        if (verdict.status == VertexVerdict::Status::Decisive)
          ++row.decisive_vertices;
      }
      if (row.decisive_vertices != n) ++report.violations;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace walklab
