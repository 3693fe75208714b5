#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "walklab/constructions.hpp"
#include "walklab/fixtures.hpp"
#include "walklab/graph6.hpp"
#include "walklab/isomorphism.hpp"
#include "walklab/random_gen.hpp"

using namespace walklab;

TEST_CASE("basic graph structure") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(g.n() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK_FALSE(g.connected());
  g.add_edge(2, 3);
  CHECK(g.connected());
  CHECK(g.is_tree());
  CHECK(g.check_invariants());
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 9), std::out_of_range);
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
}

TEST_CASE("standard families") {
  CHECK(path(2).edge_count() == 1);
  CHECK(isomorphic(cycle(3), complete(3)).has_value());
  CHECK(path(5).degree_sequence() == std::vector<int>{1, 1, 2, 2, 2});
  CHECK(complete(5).edge_count() == 10);
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);

  // forked path: smallest case is the 3-star
  Fixture y4 = y_graph(4);
  CHECK(y4.graph.degree_sequence() == std::vector<int>{1, 1, 1, 3});
  CHECK(y4.graph.degree(y4.mark("u")) == 1);
  Fixture y5f = y_graph(5);
  CHECK(y5f.graph.n() == 5);
  CHECK(isomorphic(y5f.graph, fixture("y5").graph).has_value());
  CHECK(y_graph(7).graph.degree_sequence() ==
        std::vector<int>{1, 1, 1, 2, 2, 2, 3});
  CHECK_THROWS_AS(y_graph(3), std::invalid_argument);
}

TEST_CASE("tadpole") {
  Graph t1 = tadpole(6, 1);
  CHECK(t1.n() == 7);
  CHECK(t1.edge_count() == 7);
  Graph t4 = tadpole(6, 4);
  CHECK(t4.n() == 10);
  auto deg = tadpole(6, 3).degree_sequence();
  CHECK(std::count(deg.begin(), deg.end(), 1) == 1);
  CHECK(std::count(deg.begin(), deg.end(), 3) == 1);
  CHECK_THROWS_AS(tadpole(6, 0), std::invalid_argument);
}

TEST_CASE("vertex deletion") {
  Graph p3 = path(3);
  Graph del = vertex_deleted(p3, 1);
  CHECK(del.n() == 2);
  CHECK(del.edge_count() == 0);
  CHECK(isomorphic(vertex_deleted(complete(4), 2), complete(3)).has_value());
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    Graph t = random_tree(9, rng.next_u64());
    int v = static_cast<int>(rng.below(9));
    CHECK(vertex_deleted(t, v).edge_count() == t.edge_count() - t.degree(v));
  }
  CHECK_THROWS_AS(vertex_deleted(Graph(1), 0), std::invalid_argument);
}

TEST_CASE("coalescence and graftage") {
  RootedGraph p2a{path(2), 1}, p2b{path(2), 0};
  RootedGraph merged = coalescence(p2a, p2b);
  CHECK(merged.graph.n() == 3);
  CHECK(isomorphic(merged.graph, path(3)).has_value());
  CHECK(merged.graph.degree(merged.root) == 2);

  RootedGraph grafted = graftage(RootedGraph{Graph(1), 0}, RootedGraph{Graph(1), 0});
  CHECK(isomorphic(grafted.graph, path(3)).has_value());
  CHECK(grafted.graph.degree(grafted.root) == 2);

  Fixture hp = harary_palmer();
  RootedGraph t = coalescence(RootedGraph{hp.graph, hp.mark("x")}, p2b);
  CHECK(t.graph.n() == 12);
  CHECK(isomorphic(t.graph, fixture("amb12_T").graph).has_value());
  RootedGraph s = coalescence(RootedGraph{hp.graph, hp.mark("y")}, p2b);
  CHECK(isomorphic(s.graph, fixture("amb12_S").graph).has_value());
  CHECK_FALSE(isomorphic(t.graph, s.graph).has_value());

  RootedGraph big = graftage(RootedGraph{hp.graph, hp.mark("x")},
                             RootedGraph{hp.graph, hp.mark("y")});
  CHECK(big.graph.n() == 23);
  CHECK(big.graph.degree(big.root) == 2);

  Rng rng(4242);
  for (int i = 0; i < 25; ++i) {
    Graph a = random_tree(3 + static_cast<int>(rng.below(8)), rng.next_u64());
    Graph b = random_tree(3 + static_cast<int>(rng.below(8)), rng.next_u64());
    RootedGraph ra{a, static_cast<int>(rng.below(static_cast<uint64_t>(a.n())))};
    RootedGraph rb{b, static_cast<int>(rng.below(static_cast<uint64_t>(b.n())))};
    RootedGraph c = coalescence(ra, rb);
    CHECK(c.graph.n() == a.n() + b.n() - 1);
    CHECK(c.graph.edge_count() == a.edge_count() + b.edge_count());
    CHECK(c.graph.degree(c.root) == a.degree(ra.root) + b.degree(rb.root));
    RootedGraph gft = graftage(ra, rb);
    CHECK(gft.graph.n() == a.n() + b.n() + 1);
    CHECK(gft.graph.edge_count() == a.edge_count() + b.edge_count() + 2);
    CHECK(gft.graph.check_invariants());
  }
}

TEST_CASE("graph6 round trip and known values") {
  CHECK(to_graph6(complete(3)) == "Bw");
  CHECK(isomorphic(from_graph6("Bw"), complete(3)).has_value());
  for (const auto& name : fixture_names()) {
    Graph g = fixture(name).graph;
    CHECK(from_graph6(to_graph6(g)) == g);
  }
  Rng rng(31337);
  for (int i = 0; i < 1000; ++i) {
    int n = 1 + static_cast<int>(rng.below(62));
    Graph g = random_gnp(n, 0.3, rng.next_u64());
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("graph6 parse errors carry byte offsets") {
  CHECK_THROWS_AS(to_graph6(Graph(63)), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6(""), graph6_error);
  CHECK_THROWS_AS(from_graph6("B"), graph6_error);    // truncated
  CHECK_THROWS_AS(from_graph6("Bwww"), graph6_error); // trailing garbage
  try {
    from_graph6(std::string("B") + char(2));
    CHECK(false);
  } catch (const graph6_error& e) {
    CHECK(e.byte_offset == 1);
  }
  CHECK_THROWS_AS(from_graph6("~??"), graph6_error);  // long form unsupported
}

TEST_CASE("graph6 parser survives arbitrary input") {
  Rng rng(616263);
  int parsed = 0;
  for (int i = 0; i < 3000; ++i) {
    int len = static_cast<int>(rng.below(12));
    std::string s;
    for (int j = 0; j < len; ++j)
      s.push_back(static_cast<char>(rng.below(96) + 32));
    try {
      Graph g = from_graph6(s);
      ++parsed;
      CHECK(to_graph6(g) == s);  // a successful parse must round-trip
    } catch (const graph6_error&) {
      // rejected with a typed error: fine
    }
  }
  CHECK(parsed > 0);
}

TEST_CASE("fixture registry") {
  auto names = fixture_names();
  std::set<std::string> expect = {
      "hp",           "schwenk",        "amb12_T",        "amb12_S",
      "sporadic13_T", "sporadic13_S",   "walkonly14",     "diststrong_T11",
      "diststrong_S10", "p7",           "y5",             "dist_T8",
      "dist_S11",     "e6"};
  CHECK(std::set<std::string>(names.begin(), names.end()) == expect);
  for (const auto& name : names) {
    Fixture f = fixture(name);
    CHECK(f.graph.check_invariants());
    CHECK(f.graph.connected());
    CHECK(f.graph.is_tree());
    for (const auto& [mark, v] : f.marks) {
      CHECK(v >= 0);
      CHECK(v < f.graph.n());
    }
    CHECK(fixture(name).graph == f.graph);  // reproducible bit for bit
  }
  CHECK_THROWS_AS(fixture("nope"), std::invalid_argument);

  Fixture hp = fixture("hp");
  CHECK(hp.graph.n() == 11);
  CHECK(hp.graph.degree(hp.mark("x")) == 2);
  CHECK(hp.graph.degree(hp.mark("y")) == 2);
  CHECK(fixture("schwenk").graph.n() == 9);
  CHECK(fixture("schwenk").graph.edge_count() == 8);
  CHECK(fixture("p7").mark("x") == 3);
  CHECK(fixture("dist_T8").graph.n() == 8);

  // the 12-vertex tree built by joining the two smaller certificates
  Fixture e6 = fixture("e6");
  Fixture p7 = fixture("p7"), y5 = fixture("y5");
  Graph joined = edge_join(p7.graph, p7.mark("x"), y5.graph, y5.mark("y"));
  CHECK(e6.graph.n() == 12);
  CHECK(isomorphic(e6.graph, joined).has_value());
}

TEST_CASE("fixture json round trip") {
  Fixture f = fixture("dist_T8");
  Fixture g = fixture_from_json("copy", fixture_to_json(f));
  CHECK(g.graph == f.graph);
  CHECK(g.marks == f.marks);
}

TEST_CASE("unicyclic removal-similar construction") {
  // the 12-vertex ring-with-pendants instance collapses to the 11-vertex tree
  Graph u(12);
  for (int i = 0; i < 9; ++i) u.add_edge(i, (i + 1) % 9);
  u.add_edge(2, 9);
  u.add_edge(5, 10);
  u.add_edge(8, 11);
  std::vector<int> alpha(12);
  for (int i = 0; i < 9; ++i) alpha[static_cast<size_t>(i)] = (i + 3) % 9;
  alpha[9] = 10;
  alpha[10] = 11;
  alpha[11] = 9;
  Fixture out = hp_construct(u, alpha, 6);
  CHECK(out.graph.n() == 11);
  Fixture hp = fixture("hp");
  CHECK(isomorphic(out.graph, hp.graph).has_value());
  std::multiset<std::string> got{rooted_tree_code(out.graph, out.mark("x")),
                                 rooted_tree_code(out.graph, out.mark("y"))};
  std::multiset<std::string> want{rooted_tree_code(hp.graph, hp.mark("x")),
                                  rooted_tree_code(hp.graph, hp.mark("y"))};
  CHECK(got == want);

  // smallest case: a triangle collapses to a single edge with both ends marked
  Fixture tiny = hp_construct(cycle(3), {1, 2, 0}, 0);
  CHECK(tiny.graph.n() == 2);
  CHECK(tiny.graph.edge_count() == 1);
  CHECK(std::set<int>{tiny.mark("x"), tiny.mark("y")} == std::set<int>{0, 1});

  SUBCASE("preconditions reported individually") {
    CHECK_THROWS_WITH_AS(hp_construct(path(4), {1, 0, 3, 2}, 1),
                         "graph is not unicyclic", std::invalid_argument);
    CHECK_THROWS_WITH_AS(hp_construct(cycle(4), {1, 2, 3, 0}, 0),
                         "automorphism order is not 3", std::invalid_argument);
    CHECK_THROWS_WITH_AS(hp_construct(cycle(4), {1, 0, 2, 3}, 0), "not an automorphism",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(hp_construct(cycle(3), {0, 2, 1}, 0),
                         "automorphism order is not 3", std::invalid_argument);
    CHECK_THROWS_WITH_AS(hp_construct(u, alpha, 9), "vertex is not on the cycle",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(hp_construct(u, alpha, 2), "cycle vertex degree is not 2",
                         std::invalid_argument);
  }
}

TEST_CASE("krebs-verbitsky construction") {
  KvPair kv = krebs_verbitsky(3, 3);
  CHECK(kv.g.graph.n() == 33);
  CHECK(kv.h.graph.n() == 33);
  CHECK(kv.level == 19);
  CHECK(kv.g.graph.check_invariants());
  CHECK(kv.h.graph.check_invariants());

  // the marked vertices are the unique degree-1 vertices
  for (const Fixture* f : {&kv.g, &kv.h}) {
    int ones = 0;
    for (int v = 0; v < f->graph.n(); ++v)
      if (f->graph.degree(v) == 1) ++ones;
    CHECK(ones == 1);
  }
  CHECK(kv.g.graph.degree(kv.g.mark("v")) == 1);
  CHECK(kv.h.graph.degree(kv.h.mark("u")) == 1);

  // the head of the first graph contains a tadpole copy
  CHECK(isomorphic(induced_subgraph(kv.g.graph, kv.g_head_tadpole), tadpole(6, 3))
            .has_value());

  // marked apexes sit just above the cut level
  CHECK(kv.g.graph.bfs_distances(kv.g.mark("v"))[static_cast<size_t>(kv.g.mark("c"))] ==
        kv.level + 1);
  CHECK(kv.h.graph.bfs_distances(kv.h.mark("u"))[static_cast<size_t>(kv.h.mark("cp"))] ==
        kv.level + 1);
  CHECK(kv.h.graph.bfs_distances(kv.h.mark("u"))[static_cast<size_t>(kv.h.mark("cpp"))] ==
        kv.level + 1);

  CHECK_THROWS_AS(krebs_verbitsky(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(krebs_verbitsky(3, 1), std::invalid_argument);
}

TEST_CASE("krebs-verbitsky colouring is locally regular") {
  // apart from the two marked vertices, equally coloured vertices must have
  // identical colour multisets in their neighbourhoods, across both graphs
  for (auto [s, t] :
       std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 3}, {4, 2}, {5, 3}}) {
    KvPair kv = krebs_verbitsky(s, t);
    auto profile = [](const Graph& g, const std::vector<int>& colors, int v) {
      std::multiset<int> m;
      for (int w : g.neighbors(v)) m.insert(colors[static_cast<size_t>(w)]);
      return m;
    };
    std::map<int, std::multiset<int>> expect;
    auto scan = [&](const Graph& g, const std::vector<int>& colors, int skip) {
      for (int v = 0; v < g.n(); ++v) {
        if (v == skip) continue;
        auto p = profile(g, colors, v);
        auto [it, fresh] = expect.try_emplace(colors[static_cast<size_t>(v)], p);
        if (!fresh) CHECK(it->second == p);
      }
    };
    scan(kv.g.graph, kv.colors_g, kv.g.mark("v"));
    scan(kv.h.graph, kv.colors_h, kv.h.mark("u"));
  }
}

TEST_CASE("pad_with_pendants") {
  KvPair kv = krebs_verbitsky(3, 2);
  auto [g0, h0] = pad_with_pendants(kv.g, "v", kv.h, "u", kv.g.graph.n());
  CHECK(g0.graph == kv.g.graph);
  auto [g7, h7] = pad_with_pendants(kv.g, "v", kv.h, "u", kv.g.graph.n() + 7);
  CHECK(g7.graph.n() == kv.g.graph.n() + 7);
  CHECK(g7.graph.n() == h7.graph.n());
  CHECK(g7.graph.degree(g7.mark("v")) == kv.g.graph.degree(kv.g.mark("v")) + 7);
  CHECK_THROWS_AS(pad_with_pendants(kv.g, "v", kv.h, "u", 5), std::invalid_argument);
}

TEST_CASE("random tree sampling") {
  CHECK(random_tree(1, 7).n() == 1);
  CHECK(random_tree(2, 7).edge_count() == 1);
  Rng rng(99);
  for (int i = 0; i < 50; ++i) {
    int n = 2 + static_cast<int>(rng.below(40));
    uint64_t seed = rng.next_u64();
    Graph t = random_tree(n, seed);
    CHECK(t.edge_count() == n - 1);
    CHECK(t.connected());
    CHECK(t == random_tree(n, seed));  // deterministic
  }
  // labeled trees on 4 vertices: all 16 reachable
  std::set<std::string> seen;
  for (uint64_t s = 0; s < 600; ++s) seen.insert(to_graph6(random_tree(4, s)));
  CHECK(seen.size() == 16);
}

TEST_CASE("random gnp edge counts stay near the mean") {
  // mean n(n-1)/4 and sigma sqrt(n(n-1)/8) per sample
  double total = 0;
  const int runs = 200;
  for (uint64_t s = 0; s < runs; ++s)
    total += random_gnp(100, 0.5, derive_subseed(123, s)).edge_count();
  double mean = total / runs;
  double sigma = std::sqrt(100.0 * 99.0 / 8.0);
  CHECK(std::abs(mean - 2475.0) < 3.0 * sigma / std::sqrt(static_cast<double>(runs)));
  CHECK(random_gnp(30, 0.0, 5).edge_count() == 0);
  CHECK(random_gnp(10, 1.0, 5).edge_count() == 45);
}

TEST_CASE("relabel and induced subgraph") {
  Graph g = path(5);
  std::vector<int> perm{4, 3, 2, 1, 0};
  CHECK(isomorphic(relabel(g, perm), g).has_value());
  std::vector<int> old_to_new;
  Graph sub = induced_subgraph(g, {1, 2, 3}, &old_to_new);
  CHECK(sub.n() == 3);
  CHECK(sub.edge_count() == 2);
  CHECK(old_to_new[0] == -1);
  CHECK(old_to_new[2] == 1);
}
