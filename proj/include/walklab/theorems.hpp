#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "walklab/constructions.hpp"
#include "walklab/graph.hpp"

namespace walklab {

// Outcome of one tightness-family comparison: the profiles agree through
// agree_through and first differ at first_difference (-1 when no
// difference was found inside the inspected window).
struct BoundReport {
  std::string family;
  int n = 0;
  int agree_through = -1;
  int first_difference = -1;
  int predicted_agree = -1;
  int predicted_differ = -1;
  bool ok = false;
  std::string detail;

  std::string to_json() const;
};

// Closed-walk profiles of the path end vs the forked path: equality
// exactly through 2n-5, difference at 2n-4, and the one-extra /
// two-extra closed walk decomposition at that length. n >= 5.
BoundReport verify_pn_yn(int n);

// Walk profiles of the two degree-1 vertices: equality exactly below
// 2t(s+4)-1, plus the supporting checks (the colour-locality claim, the
// apex inequality above the cut level, and the level isomorphism).
BoundReport verify_krebs_verbitsky(int s, int t);

// Largest-fitting pair with s = 3t padded by pendant leaves to n vertices;
// asserts agreement for every k < 2n - 16*sqrt(n) (exact integer test).
BoundReport verify_part3_bound(int n);

struct TrialReport {
  int n = 0;
  int trials = 0;
  uint64_t seed = 0;
  int collisions = 0;
  double rate = 0.0;

  std::string to_json(const std::string& kind) const;
};

// Fraction of G(n,1/2) samples containing two vertices with identical
// closed-walk triples (lengths 2,3,4).
TrialReport random_triple_trial(int n, int trials, uint64_t seed, int threads = 1);

std::vector<TrialReport> rate_curve(const std::vector<int>& n_list, int trials,
                                    uint64_t seed, int threads = 1);

std::string rate_curve_csv(const std::vector<TrialReport>& reports);

// Fraction of uniform labeled trees containing a non-similar pair with
// equal walk and closed-walk profiles (threshold 2n). Every reported pair
// is re-verified non-similar by an explicit automorphism search.
TrialReport random_tree_ambivalence_trial(int n, int trials, uint64_t seed,
                                          int threads = 1);

// True when some two vertices share the closed-walk triple; exposed for
// the harness self-test on hand-built graphs.
bool has_triple_collision(const Graph& g);

}  // namespace walklab
