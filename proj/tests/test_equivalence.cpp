#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "walklab/constructions.hpp"
#include "walklab/enumeration.hpp"
#include "walklab/equivalence.hpp"
#include "walklab/fixtures.hpp"
#include "walklab/graph6.hpp"
#include "walklab/random_gen.hpp"

using namespace walklab;

TEST_CASE("similarity") {
  Graph p4 = path(4);
  CHECK(similar(p4, 0, 3));
  CHECK_FALSE(similar(p4, 0, 1));
  CHECK(similar(path(3), 0, 2));
  Fixture hp = fixture("hp");
  CHECK_FALSE(similar(hp.graph, hp.mark("x"), hp.mark("y")));
  CHECK(similar(hp.graph, hp.mark("x"), hp.mark("x")));
}

TEST_CASE("similarity codes agree with the backtracking search") {
  Rng rng(2718);
  int disagreements = 0;
  for (int i = 0; i < 500; ++i) {
    int n = 3 + static_cast<int>(rng.below(10));
    Graph t = random_tree(n, rng.next_u64());
    int x = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    int y = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    if (similar(t, x, y) != similar_backtracking(t, x, y)) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("tree and forest isomorphism produce valid witnesses") {
  Rng rng(1234);
  for (int i = 0; i < 200; ++i) {
    int n = 2 + static_cast<int>(rng.below(12));
    Graph t = random_tree(n, rng.next_u64());
    std::vector<int> perm(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) perm[static_cast<size_t>(v)] = v;
    for (int v = n - 1; v > 0; --v)
      std::swap(perm[static_cast<size_t>(v)],
                perm[static_cast<size_t>(rng.below(static_cast<uint64_t>(v + 1)))]);
    Graph h = relabel(t, perm);
    auto iso = isomorphic(t, h);
    REQUIRE(iso.has_value());
    for (auto [a, b] : t.edges())
      CHECK(h.has_edge((*iso)[static_cast<size_t>(a)], (*iso)[static_cast<size_t>(b)]));
    // a forest: drop one vertex
    if (n >= 3) {
      int drop = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
      Graph f1 = vertex_deleted(t, drop);
      Graph f2 = vertex_deleted(h, (*iso)[static_cast<size_t>(drop)]);
      CHECK(isomorphic(f1, f2).has_value());
    }
  }
  // different trees are rejected
  CHECK_FALSE(isomorphic(path(6), fixture("y5").graph).has_value());
}

TEST_CASE("tree canonical codes agree with backtracking isomorphism") {
  Rng rng(141);
  int isomorphic_hits = 0;
  for (int i = 0; i < 500; ++i) {
    int n = 2 + static_cast<int>(rng.below(11));
    Graph a = random_tree(n, rng.next_u64());
    Graph b = random_tree(n, rng.next_u64());
    if (rng.chance(0.3)) {  // force some positives via relabeling
      std::vector<int> perm(static_cast<size_t>(n));
      for (int v = 0; v < n; ++v) perm[static_cast<size_t>(v)] = v;
      for (int v = n - 1; v > 0; --v)
        std::swap(perm[static_cast<size_t>(v)],
                  perm[static_cast<size_t>(rng.below(static_cast<uint64_t>(v + 1)))]);
      b = relabel(a, perm);
    }
    bool codes = tree_code(a) == tree_code(b);
    bool search = isomorphic_backtracking(a, b).has_value();
    CHECK(codes == search);
    if (codes) ++isomorphic_hits;
  }
  CHECK(isomorphic_hits > 100);
}

TEST_CASE("general isomorphism backtracking") {
  CHECK(isomorphic(cycle(5), cycle(5)).has_value());
  CHECK_FALSE(isomorphic(cycle(6), tadpole(3, 3)).has_value());
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    int n = 4 + static_cast<int>(rng.below(7));
    Graph g = random_gnp(n, 0.5, rng.next_u64());
    std::vector<int> perm(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) perm[static_cast<size_t>(v)] = v;
    for (int v = n - 1; v > 0; --v)
      std::swap(perm[static_cast<size_t>(v)],
                perm[static_cast<size_t>(rng.below(static_cast<uint64_t>(v + 1)))]);
    Graph h = relabel(g, perm);
    auto iso = isomorphic(g, h);
    REQUIRE(iso.has_value());
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        CHECK(g.has_edge(a, b) ==
              h.has_edge((*iso)[static_cast<size_t>(a)], (*iso)[static_cast<size_t>(b)]));
  }
  // a hopeless budget is reported, not silently truncated
  Graph a = random_gnp(30, 0.5, 7);
  Graph b = random_gnp(30, 0.5, 8);
  if (a.edge_count() == b.edge_count())
    CHECK_THROWS_AS(isomorphic(a, b, 2), budget_error);
  else
    CHECK_THROWS_AS(isomorphic(a, a, 2), budget_error);
}

TEST_CASE("removal similarity and pseudosimilarity") {
  Fixture hp = fixture("hp");
  CHECK(removal_similar(hp.graph, hp.mark("x"), hp.mark("y")));
  CHECK(pseudosimilar(hp.graph, hp.mark("x"), hp.mark("y")));
  Graph p3 = path(3);
  CHECK(removal_similar(p3, 0, 2));
  CHECK_FALSE(pseudosimilar(p3, 0, 2));  // also similar
}

TEST_CASE("cospectral vertices") {
  Fixture schwenk = fixture("schwenk");
  CHECK(cospectral_vertices(schwenk.graph, schwenk.mark("x"), schwenk.mark("y")));
  CHECK(cospectral_vertices(path(4), 0, 3));  // similar pair
  CHECK_FALSE(cospectral_vertices(path(4), 0, 1));
}

TEST_CASE("walk equivalences on the named graphs") {
  Fixture hp = fixture("hp");
  CHECK(strongly_walk_equivalent(hp.graph, hp.mark("x"), hp.graph, hp.mark("y")));
  Fixture schwenk = fixture("schwenk");
  CHECK(closed_walk_equivalent(schwenk.graph, schwenk.mark("x"), schwenk.graph,
                               schwenk.mark("y")));
  CHECK_FALSE(walk_equivalent(schwenk.graph, schwenk.mark("x"), schwenk.graph,
                              schwenk.mark("y")));
  Fixture w14 = fixture("walkonly14");
  CHECK(walk_equivalent(w14.graph, w14.mark("x"), w14.graph, w14.mark("y")));
  CHECK_FALSE(closed_walk_equivalent(w14.graph, w14.mark("x"), w14.graph,
                                     w14.mark("y")));
  // across sizes
  Fixture t11 = fixture("diststrong_T11"), s10 = fixture("diststrong_S10");
  CHECK(strongly_walk_equivalent(t11.graph, t11.mark("x"), s10.graph, s10.mark("y")));
  Fixture p7 = fixture("p7"), y5 = fixture("y5");
  CHECK(closed_walk_equivalent(p7.graph, p7.mark("x"), y5.graph, y5.mark("y")));
  CHECK_FALSE(walk_equivalent(p7.graph, p7.mark("x"), y5.graph, y5.mark("y")));
  // reflexivity
  CHECK(strongly_walk_equivalent(hp.graph, 0, hp.graph, 0));
  // connectivity required
  Graph disc(3);
  disc.add_edge(0, 1);
  CHECK_THROWS_AS(walk_equivalent(disc, 0, disc, 2), std::invalid_argument);
}

TEST_CASE("pair classification lattice") {
  Fixture hp = fixture("hp");
  PairVerdict v = classify_pair(hp.graph, hp.mark("x"), hp.mark("y"));
  CHECK(v.walk_eq);
  CHECK(v.closed_walk_eq);
  CHECK(v.removal_similar);
  CHECK_FALSE(v.similar);
  CHECK(v.cospectral);
  CHECK(v.str() ==
        "walk_eq=true closed_walk_eq=true removal_similar=true similar=false "
        "cospectral=true");

  Fixture w14 = fixture("walkonly14");
  PairVerdict w = classify_pair(w14.graph, w14.mark("x"), w14.mark("y"));
  CHECK(w.walk_eq);
  CHECK_FALSE(w.closed_walk_eq);

  Fixture t = fixture("sporadic13_T"), s = fixture("sporadic13_S");
  PairVerdict sp = classify_pair(t.graph, t.mark("x"), s.graph, s.mark("y"));
  CHECK(sp.walk_eq);
  CHECK_FALSE(sp.closed_walk_eq);

  // identical rooted graphs: everything true
  PairVerdict id = classify_pair(hp.graph, 2, hp.graph, 2);
  CHECK((id.walk_eq && id.closed_walk_eq && id.removal_similar && id.similar &&
         id.cospectral));

  // two one-vertex graphs: all fields vacuously true, no lattice violation
  Graph k1a(1), k1b(1);
  PairVerdict tiny = classify_pair(k1a, 0, k1b, 0);
  CHECK((tiny.walk_eq && tiny.closed_walk_eq && tiny.removal_similar &&
         tiny.similar && tiny.cospectral));

  // the lattice holds across every vertex pair of every small connected graph
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_connected_graphs(n))
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
          CHECK_NOTHROW(classify_pair(g, x, y));
}

TEST_CASE("cospectral iff closed-walk-equivalent, exhaustively") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_connected_graphs(n))
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
          CHECK(cospectral_vertices(g, x, y) ==
                closed_walk_equivalent(g, x, g, y));
}

TEST_CASE("removal-similar implies walk-equivalent, exhaustively") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_connected_graphs(n))
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
          if (removal_similar(g, x, y)) CHECK(walk_equivalent(g, x, g, y));
}

TEST_CASE("coalescence preserves strong equivalence") {
  Fixture hp = fixture("hp");
  Rng rng(606);
  for (int i = 0; i < 20; ++i) {
    Graph h = random_tree(2 + static_cast<int>(rng.below(9)), rng.next_u64());
    int z = static_cast<int>(rng.below(static_cast<uint64_t>(h.n())));
    RootedGraph a = coalescence(RootedGraph{hp.graph, hp.mark("x")}, RootedGraph{h, z});
    RootedGraph b = coalescence(RootedGraph{hp.graph, hp.mark("y")}, RootedGraph{h, z});
    CHECK(strongly_walk_equivalent(a.graph, a.root, b.graph, b.root));
  }
}

TEST_CASE("graftage with a coalesced attachment preserves strong equivalence") {
  Fixture hp = fixture("hp");
  Rng rng(707);
  for (int i = 0; i < 20; ++i) {
    Graph f = random_tree(1 + static_cast<int>(rng.below(8)), rng.next_u64());
    int b = static_cast<int>(rng.below(static_cast<uint64_t>(f.n())));
    RootedGraph grafted = graftage(RootedGraph{hp.graph, hp.mark("x")},
                                   RootedGraph{hp.graph, hp.mark("y")});
    RootedGraph whole = coalescence(grafted, RootedGraph{f, b});
    // the two original marks now live at indices x and 11 + y
    int vx = hp.mark("x");
    int vy = hp.graph.n() + hp.mark("y");
    CHECK(strongly_walk_equivalent(whole.graph, vx, whole.graph, vy));
    CHECK_FALSE(similar(whole.graph, vx, vy));
  }
}

TEST_CASE("edge join preserves both equivalences") {
  Fixture p7 = fixture("p7"), y5 = fixture("y5");
  Graph joined = edge_join(p7.graph, p7.mark("x"), y5.graph, y5.mark("y"));
  CHECK(closed_walk_equivalent(joined, p7.mark("x"), joined,
                               p7.graph.n() + y5.mark("y")));
  Fixture e6 = fixture("e6");
  CHECK(closed_walk_equivalent(e6.graph, e6.mark("x"), e6.graph, e6.mark("y")));
  CHECK_FALSE(similar(e6.graph, e6.mark("x"), e6.mark("y")));

  Rng rng(808);
  for (int i = 0; i < 20; ++i) {
    Graph g = random_tree(2 + static_cast<int>(rng.below(7)), rng.next_u64());
    Graph h = random_tree(2 + static_cast<int>(rng.below(7)), rng.next_u64());
    int v = static_cast<int>(rng.below(static_cast<uint64_t>(g.n())));
    int u = static_cast<int>(rng.below(static_cast<uint64_t>(h.n())));
    Graph joined2 = edge_join(g, v, h, u);
    CHECK(walk_equivalent(g, v, h, u) ==
          walk_equivalent(joined2, v, joined2, g.n() + u));
    CHECK(closed_walk_equivalent(g, v, h, u) ==
          closed_walk_equivalent(joined2, v, joined2, g.n() + u));
  }
}

TEST_CASE("random removal-similar constructions stay removal-similar") {
  Rng rng(909);
  int built = 0;
  while (built < 10) {
    int m = 1 + static_cast<int>(rng.below(4));
    std::vector<int> attach_size(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j)
      attach_size[static_cast<size_t>(j)] = static_cast<int>(rng.below(3));
    attach_size[static_cast<size_t>(rng.below(static_cast<uint64_t>(m)))] = 0;
    int cyc = 3 * m;
    int extra = 0;
    for (int j = 0; j < m; ++j) extra += 3 * attach_size[static_cast<size_t>(j)];
    int n = cyc + extra;
    if (n > 15) continue;
    Graph u(n);
    for (int i = 0; i < cyc; ++i) u.add_edge(i, (i + 1) % cyc);
    std::vector<int> alpha(static_cast<size_t>(n));
    for (int i = 0; i < cyc; ++i) alpha[static_cast<size_t>(i)] = (i + m) % cyc;
    int next = cyc;
    std::vector<std::vector<int>> tails(static_cast<size_t>(cyc));
    for (int p = 0; p < cyc; ++p) {
      int sz = attach_size[static_cast<size_t>(p % m)];
      int prev = p;
      for (int q = 0; q < sz; ++q) {
        u.add_edge(prev, next);
        tails[static_cast<size_t>(p)].push_back(next);
        prev = next++;
      }
    }
    for (int p = 0; p < cyc; ++p)
      for (size_t q = 0; q < tails[static_cast<size_t>(p)].size(); ++q)
        alpha[static_cast<size_t>(tails[static_cast<size_t>(p)][q])] =
            tails[static_cast<size_t>((p + m) % cyc)][q];
    int v = -1;
    for (int p = 0; p < cyc; ++p)
      if (attach_size[static_cast<size_t>(p % m)] == 0) {
        v = p;
        break;
      }
    Fixture out = hp_construct(u, alpha, v);
    CHECK(removal_similar(out.graph, out.mark("x"), out.mark("y")));
    ++built;
  }
}

TEST_CASE("vertex verdicts against explicit universes") {
  // one-vertex world
  std::vector<Graph> k1{Graph(1)};
  auto v1 = vertex_verdict(Graph(1), 0, std::span<const Graph>(k1), "n=1");
  CHECK(v1.status == VertexVerdict::Status::Decisive);

  // the 12-vertex pair: x is ambivalent with the partner tree as witness
  auto trees12 = all_trees(12);
  UniverseIndex idx(trees12, "trees on 12 vertices");
  Fixture t = fixture("amb12_T"), s = fixture("amb12_S");
  auto verdict = vertex_verdict(t.graph, t.mark("x"), idx);
  CHECK(verdict.status == VertexVerdict::Status::Ambivalent);
  REQUIRE(verdict.witness.has_value());
  CHECK(isomorphic(verdict.witness->graph, s.graph).has_value());
  CHECK(rooted_isomorphic(verdict.witness->graph, verdict.witness->root, s.graph,
                          s.mark("y")));
  CHECK_FALSE(verdict.w_decisive);
  CHECK_FALSE(verdict.r_decisive);

  // a typical path vertex is decisive at this size
  Graph p12 = path(12);
  auto pv = vertex_verdict(p12, 0, idx);
  CHECK(pv.status == VertexVerdict::Status::Decisive);
  CHECK(pv.w_decisive);
  CHECK(pv.r_decisive);

  // JSON report shape
  auto json = verdict.to_json(t.graph, t.mark("x"));
  CHECK(json.find("\"status\":\"ambivalent\"") != std::string::npos);
  CHECK(json.find("witness_graph6") != std::string::npos);

  // at 11 vertices the pseudosimilar pair is matched only inside its own
  // tree: not decisive, but no non-isomorphic witness exists either
  auto trees11 = all_trees(11);
  UniverseIndex idx11(trees11, "trees on 11 vertices");
  Fixture hp = fixture("hp");
  auto hv = vertex_verdict(hp.graph, hp.mark("x"), idx11);
  CHECK(hv.status == VertexVerdict::Status::NeitherDetermined);
  CHECK_FALSE(hv.w_decisive);
}

TEST_CASE("every vertex of every small tree is decisive") {
  for (int n = 2; n <= 9; ++n) {
    auto trees = all_trees(n);
    UniverseIndex idx(trees, "trees");
    for (const Graph& t : trees)
      for (int v = 0; v < n; ++v) {
        auto verdict = vertex_verdict(t, v, idx);
        CHECK(verdict.status == VertexVerdict::Status::Decisive);
      }
  }
}

TEST_CASE("triple labeling collision report") {
  auto c5 = canonical_triple_labeling(cycle(5));
  REQUIRE(c5.collisions.size() == 1);
  CHECK(c5.collisions[0].size() == 5);

  // vertices of different degree never collide: the length-2 count is the
  // degree, so each collision class lives inside one degree class
  Rng rng(1212);
  for (int i = 0; i < 20; ++i) {
    Graph g = random_gnp(10, 0.5, rng.next_u64());
    for (const auto& cls : canonical_triple_labeling(g).collisions)
      for (size_t j = 1; j < cls.size(); ++j)
        CHECK(g.degree(cls[j]) == g.degree(cls[0]));
  }

  // asymmetric graphs with collision-free triples exist at six vertices
  bool found = false;
  for (const Graph& g : enumerate_connected_graphs(6))
    if (canonical_triple_labeling(g).collisions.empty()) {
      found = true;
      break;
    }
  CHECK(found);
}
