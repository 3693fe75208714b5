#pragma once

#include <vector>

#include "walklab/graph.hpp"
#include "walklab/numbers.hpp"

namespace walklab {

// Exact walk counts from one vertex, index k = walk length.
struct WalkProfile {
  std::vector<Int> counts;  // counts[0] = 1, counts[1] = degree
};

// Exact closed-walk counts; counts[0] = 1, counts[1] = 0, counts[2] = degree.
struct ClosedWalkProfile {
  std::vector<Int> counts;
};

// counts[k] = number of length-k walks starting at v, for k = 0..K,
// computed by iterated adjacency-vector products from the all-ones vector.
WalkProfile walk_counts(const Graph& g, int v, int K);

// One pass for every start vertex: result[v].counts[k].
std::vector<WalkProfile> walk_counts_all(const Graph& g, int K);

ClosedWalkProfile closed_walk_counts(const Graph& g, int v, int K);

// entry k = number of length-k walks from x ending at z.
std::vector<Int> walk_counts_between(const Graph& g, int x, int z, int K);

// walks from x of each length ending inside the subset S.
std::vector<Int> walk_counts_into(const Graph& g, int x,
                                  const std::vector<int>& subset, int K);

// Closed-walk counts of lengths 2, 3, 4 by neighborhood combinatorics
// (degree, twice the edges inside the neighborhood, squared-codegree sum)
// rather than by matrix powers.
struct ClosedTriple {
  Int r2, r3, r4;
  bool operator==(const ClosedTriple& o) const {
    return r2 == o.r2 && r3 == o.r3 && r4 == o.r4;
  }
};
ClosedTriple closed_triple(const Graph& g, int v);

// Same quantities in machine words (valid for n < 1626, where the largest
// possible count n^3 still fits).
struct ClosedTripleI64 {
  long long r2, r3, r4;
  auto operator<=>(const ClosedTripleI64&) const = default;
};
ClosedTripleI64 closed_triple_i64(const Graph& g, int v);

// Closed walks that return to the start only at the end: the unique
// solution of r^k = sum_{s=2..k} rbar^s r^{k-s}. Non-integer solutions
// cannot arise from a genuine profile and raise integrity_error.
std::vector<Int> first_return_counts(const ClosedWalkProfile& r);

// Walks that never revisit the start: solves
// w^k = sum_{s=0..k} r^s wbar^{k-s} given the two profiles of v.
std::vector<Int> never_return_counts(const Graph& g, int v, int K);

// Walks of each length visiting v at least once: total walk count of G
// minus the total of G with v deleted.
std::vector<Int> reaches_counts(const Graph& g, int v, int K);

// Ground-truth oracle: explicit DFS enumeration of all walks. Intended for
// tiny inputs; enumeration beyond the node budget raises budget_error.
Int brute_force_walks(const Graph& g, int v, int k,
                      long long node_budget = 200000000);
Int brute_force_closed(const Graph& g, int v, int k,
                       long long node_budget = 200000000);

// Default profile length 2n-1 (so a profile carries the first 2n counts).
int default_profile_length(const Graph& g);

// CSV rows "vertex,k,count" / JSON with counts as decimal strings.
std::string profiles_to_csv(const std::vector<WalkProfile>& ps);
std::string profile_row_json(const std::vector<Int>& counts);

}  // namespace walklab
