#include "walklab/random_gen.hpp"

#include <cmath>

namespace walklab {

uint64_t Rng::below(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  // rejection sampling on the top multiple of bound
  uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t v;
  do {
    v = next_u64();
  } while (v >= limit);
  return v % bound;
}

bool Rng::chance(double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  // deterministic 64-bit threshold comparison
  long double scaled = static_cast<long double>(p) * 18446744073709551616.0L;
  uint64_t threshold =
      scaled >= 18446744073709551615.0L ? UINT64_MAX : static_cast<uint64_t>(scaled);
  return next_u64() < threshold;
}

Graph random_tree(int n, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("tree needs a vertex");
  Graph g(n);
  if (n == 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  Rng rng(seed);
  std::vector<int> pruefer(static_cast<size_t>(n - 2));
  for (int& x : pruefer) x = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
  std::vector<int> deg(static_cast<size_t>(n), 1);
  for (int x : pruefer) ++deg[static_cast<size_t>(x)];
  // smallest leaf first decoding
  int ptr = 0;
  while (deg[static_cast<size_t>(ptr)] != 1) ++ptr;
  int leaf = ptr;
  for (int x : pruefer) {
    g.add_edge(leaf, x);
    if (--deg[static_cast<size_t>(x)] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (deg[static_cast<size_t>(ptr)] != 1) ++ptr;
      leaf = ptr;
    }
  }
  // the two remaining degree-1 vertices are leaf and n-1
  g.add_edge(leaf, n - 1);
  return g;
}

Graph random_gnp(int n, double p, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("graph needs a vertex");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p out of range");
  Rng rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p)) g.add_edge(u, v);
  return g;
}

RootedGraph random_rooted_tree(int n, uint64_t seed) {
  return RootedGraph{random_tree(n, seed), 0};
}

}  // namespace walklab
