#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "walklab/constructions.hpp"
#include "walklab/enumeration.hpp"
#include "walklab/fixtures.hpp"
#include "walklab/graph6.hpp"
#include "walklab/random_gen.hpp"

using namespace walklab;

namespace {

// free trees per vertex count
const std::vector<long> kTreeCounts = {0,    1,    1,     1,     2,     3,
                                       6,    11,   23,    47,    106,   235,
                                       551,  1301, 3159,  7741,  19320, 48629,
                                       123867};

}  // namespace

TEST_CASE("tree generation matches the known counts") {
  for (int n = 1; n <= 14; ++n) {
    long count = 0;
    enumerate_trees(n, [&](const Graph& t) {
      ++count;
      if (n <= 8) {
        CHECK(t.n() == n);
        CHECK(t.is_tree());
      }
    });
    CHECK(count == kTreeCounts[static_cast<size_t>(n)]);
  }
}

TEST_CASE("tree generation is isomorphism-free and complete") {
  // dedup all Pruefer codes by canonical form: the independent oracle
  for (int n = 3; n <= 8; ++n) {
    std::set<std::string> classes;
    std::vector<int> code(static_cast<size_t>(n - 2), 0);
    while (true) {
      Graph t(n);
      {
        std::vector<int> deg(static_cast<size_t>(n), 1);
        for (int x : code) ++deg[static_cast<size_t>(x)];
        int ptr = 0;
        while (deg[static_cast<size_t>(ptr)] != 1) ++ptr;
        int leaf = ptr;
        for (int x : code) {
          t.add_edge(leaf, x);
          if (--deg[static_cast<size_t>(x)] == 1 && x < ptr) {
            leaf = x;
          } else {
            ++ptr;
            while (deg[static_cast<size_t>(ptr)] != 1) ++ptr;
            leaf = ptr;
          }
        }
        t.add_edge(leaf, n - 1);
      }
      classes.insert(tree_code(t));
      int pos = n - 3;
      while (pos >= 0 && code[static_cast<size_t>(pos)] == n - 1)
        code[static_cast<size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++code[static_cast<size_t>(pos)];
    }
    std::set<std::string> produced;
    enumerate_trees(n, [&](const Graph& t) {
      auto [it, fresh] = produced.insert(tree_code(t));
      CHECK(fresh);  // never the same class twice
    });
    CHECK(produced == classes);
  }
}

TEST_CASE("canonical codes are relabeling-invariant") {
  Rng rng(5151);
  for (int i = 0; i < 100; ++i) {
    int n = 2 + static_cast<int>(rng.below(14));
    Graph t = random_tree(n, rng.next_u64());
    std::vector<int> perm(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) perm[static_cast<size_t>(v)] = v;
    for (int v = n - 1; v > 0; --v)
      std::swap(perm[static_cast<size_t>(v)],
                perm[static_cast<size_t>(rng.below(static_cast<uint64_t>(v + 1)))]);
    CHECK(tree_code(t) == tree_code(relabel(t, perm)));
  }
}

TEST_CASE("connected graph enumeration") {
  CHECK(enumerate_connected_graphs(1).size() == 1);
  CHECK(enumerate_connected_graphs(2).size() == 1);
  CHECK(enumerate_connected_graphs(3).size() == 2);
  CHECK(enumerate_connected_graphs(4).size() == 6);
  CHECK(enumerate_connected_graphs(5).size() == 21);
  CHECK(enumerate_connected_graphs(6).size() == 112);
  CHECK_THROWS_AS(enumerate_connected_graphs(8), std::invalid_argument);

  // pairwise non-isomorphic at n = 5
  auto graphs = enumerate_connected_graphs(5);
  for (size_t i = 0; i < graphs.size(); ++i)
    for (size_t j = i + 1; j < graphs.size(); ++j)
      CHECK_FALSE(isomorphic(graphs[i], graphs[j]).has_value());
}

TEST_CASE("walk identifiability holds through 12 vertices") {
  auto report = walk_identifiability_census(12);
  CHECK(report.collisions.empty());
}

TEST_CASE("ambivalent censuses at the threshold sizes") {
  SUBCASE("nothing below 11") {
    for (int n = 2; n <= 10; ++n) CHECK(ambivalent_vertex_census(n).empty());
  }
  SUBCASE("eleven: only the one special tree, internally") {
    auto matches = ambivalent_vertex_census(11);
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].same_tree);
    CHECK(matches[0].strong);
    Graph found = from_graph6(matches[0].t_graph6);
    CHECK(isomorphic(found, fixture("hp").graph).has_value());
  }
  SUBCASE("twelve: exactly the one cross-tree pair") {
    auto matches = ambivalent_vertex_census(12);
    CHECK_FALSE(matches.empty());
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& m : matches) {
      CHECK_FALSE(m.same_tree);
      CHECK(m.strong);
      pairs.insert({std::min(m.t_graph6, m.s_graph6), std::max(m.t_graph6, m.s_graph6)});
    }
    REQUIRE(pairs.size() == 1);
    Graph a = from_graph6(pairs.begin()->first);
    Graph b = from_graph6(pairs.begin()->second);
    bool ab = isomorphic(a, fixture("amb12_T").graph).has_value() &&
              isomorphic(b, fixture("amb12_S").graph).has_value();
    bool ba = isomorphic(b, fixture("amb12_T").graph).has_value() &&
              isomorphic(a, fixture("amb12_S").graph).has_value();
    CHECK((ab || ba));
  }
}

TEST_CASE("verdicts and the row-key census agree at the threshold size") {
  // two independent routes to the same answer: a vertex of a 12-vertex tree
  // is Ambivalent exactly when the walk census matched its orbit across
  // non-isomorphic trees (and every 12-vertex match is a joint match)
  auto trees = all_trees(12);
  UniverseIndex idx(trees, "trees on 12 vertices");
  std::set<std::pair<std::string, std::string>> census_hits;  // (graph6, orbit code)
  for (const auto& m : ambivalent_vertex_census(12)) {
    CHECK(m.strong);
    census_hits.insert({m.t_graph6, rooted_tree_code(from_graph6(m.t_graph6), m.x)});
    census_hits.insert({m.s_graph6, rooted_tree_code(from_graph6(m.s_graph6), m.y)});
  }
  int ambivalent_found = 0;
  for (const Graph& t : trees) {
    std::string g6 = to_graph6(t);
    for (int v = 0; v < t.n(); ++v) {
      auto verdict = vertex_verdict(t, v, idx);
      bool in_census = census_hits.count({g6, rooted_tree_code(t, v)}) > 0;
      CHECK((verdict.status == VertexVerdict::Status::Ambivalent) == in_census);
      if (verdict.status == VertexVerdict::Status::Ambivalent) ++ambivalent_found;
    }
  }
  CHECK(ambivalent_found > 0);
}

TEST_CASE("cross-size census at seven finds the unique closed pair") {
  auto matches = cross_size_census(7, 7, CrossMode::Closed);
  REQUIRE(distinct_tree_pairs(matches) == 1);
  CHECK(matches[0].n_small == 5);
  CHECK(matches[0].n_large == 7);
  Graph small = from_graph6(matches[0].small_graph6);
  Graph large = from_graph6(matches[0].large_graph6);
  CHECK(isomorphic(small, fixture("y5").graph).has_value());
  CHECK(isomorphic(large, path(7)).has_value());
  // and the matched vertices are the marked ones
  Fixture p7 = fixture("p7"), y5 = fixture("y5");
  CHECK(rooted_tree_code(large, matches[0].large_vertex) ==
        rooted_tree_code(p7.graph, p7.mark("x")));
  CHECK(rooted_tree_code(small, matches[0].small_vertex) ==
        rooted_tree_code(y5.graph, y5.mark("y")));
}

TEST_CASE("spectral determination against the small universe") {
  auto graphs4 = enumerate_connected_graphs(4);
  std::span<const Graph> universe(graphs4);
  // the path and the star on 4 vertices are cospectral mates? they are not;
  // all six connected graphs on 4 vertices are determined by spectrum
  for (const Graph& g : graphs4) CHECK(determined_by_spectrum(g, universe));
}

TEST_CASE("decisive census holds on small orders") {
  auto r5 = decisive_census(5);
  CHECK(r5.graphs == 21);
  CHECK(r5.violations == 0);
  auto r6 = decisive_census(6);
  CHECK(r6.graphs == 112);
  CHECK(r6.violations == 0);
  CHECK(r6.hypothesis_count > 0);
  // sanity of the flags
  int ds = 0, irr = 0;
  for (const auto& row : r6.rows) {
    ds += row.determined_by_spectrum;
    irr += row.irreducible;
  }
  CHECK(ds == r6.ds_count);
  CHECK(irr == r6.irreducible_count);
}

TEST_CASE("census record json") {
  CensusRecord rec{"tree", 5, 2, "DqK", "abc123"};
  auto line = rec.to_json_line();
  CHECK(line.find("\"class\":\"tree\"") != std::string::npos);
  CHECK(line.find("\"graph6\":\"DqK\"") != std::string::npos);
}
