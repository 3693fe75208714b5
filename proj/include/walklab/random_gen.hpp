#pragma once

#include <cstdint>

#include "walklab/graph.hpp"

namespace walklab {

// splitmix64 step; the project-wide primitive for all randomness so that
// every result is reproducible from a 64-bit seed on any platform.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Sub-seed for independent task number `index` under a master seed:
// one splitmix64 step of (seed XOR mixed index). Order-independent, so
// parallel schedules produce identical streams.
inline uint64_t derive_subseed(uint64_t seed, uint64_t index) {
  uint64_t s = seed ^ (0x9e3779b97f4a7c15ull * (index + 1));
  return splitmix64(s);
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() { return splitmix64(state_); }

  // Uniform value in [0, bound) by rejection; bound > 0.
  uint64_t below(uint64_t bound);

  bool chance(double p);

 private:
  uint64_t state_;
};

// Uniform labeled tree on n vertices (Pruefer decoding), n >= 1.
Graph random_tree(int n, uint64_t seed);

// Erdos-Renyi G(n, p): each pair adjacent independently with probability p.
Graph random_gnp(int n, double p, uint64_t seed);

// Uniform random rooted tree shape on n vertices for property tests:
// a random labeled tree re-rooted at vertex 0.
RootedGraph random_rooted_tree(int n, uint64_t seed);

}  // namespace walklab
