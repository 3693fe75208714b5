#include "walklab/walks.hpp"

#include <sstream>

namespace walklab {

namespace {

// One adjacency application: out[v] = sum of in[w] over neighbors w of v.
void apply_adjacency(const Graph& g, const std::vector<Int>& in, std::vector<Int>& out) {
  const int n = g.n();
  for (int v = 0; v < n; ++v) {
    Int acc = 0;
    for (int w : g.neighbors(v)) acc += in[static_cast<size_t>(w)];
    out[static_cast<size_t>(v)] = std::move(acc);
  }
}

}  // namespace

int default_profile_length(const Graph& g) { return 2 * g.n() - 1; }

WalkProfile walk_counts(const Graph& g, int v, int K) {
  if (v < 0 || v >= g.n()) throw std::out_of_range("vertex out of range");
  if (K < 0) throw std::invalid_argument("negative length");
  WalkProfile p;
  p.counts.reserve(static_cast<size_t>(K + 1));
  std::vector<Int> vec(static_cast<size_t>(g.n()), 1), next(static_cast<size_t>(g.n()));
  p.counts.emplace_back(1);
  for (int k = 1; k <= K; ++k) {
    apply_adjacency(g, vec, next);
    vec.swap(next);
    p.counts.push_back(vec[static_cast<size_t>(v)]);
  }
  return p;
}

std::vector<WalkProfile> walk_counts_all(const Graph& g, int K) {
  const int n = g.n();
  std::vector<WalkProfile> out(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    out[static_cast<size_t>(v)].counts.reserve(static_cast<size_t>(K + 1));
    out[static_cast<size_t>(v)].counts.emplace_back(1);
  }
  std::vector<Int> vec(static_cast<size_t>(n), 1), next(static_cast<size_t>(n));
  for (int k = 1; k <= K; ++k) {
    apply_adjacency(g, vec, next);
    vec.swap(next);
    for (int v = 0; v < n; ++v)
      out[static_cast<size_t>(v)].counts.push_back(vec[static_cast<size_t>(v)]);
  }
  return out;
}

ClosedWalkProfile closed_walk_counts(const Graph& g, int v, int K) {
  if (v < 0 || v >= g.n()) throw std::out_of_range("vertex out of range");
  if (K < 0) throw std::invalid_argument("negative length");
  ClosedWalkProfile p;
  p.counts.reserve(static_cast<size_t>(K + 1));
  std::vector<Int> vec(static_cast<size_t>(g.n())), next(static_cast<size_t>(g.n()));
  vec[static_cast<size_t>(v)] = 1;
  p.counts.emplace_back(1);
  for (int k = 1; k <= K; ++k) {
    apply_adjacency(g, vec, next);
    vec.swap(next);
    p.counts.push_back(vec[static_cast<size_t>(v)]);
  }
  return p;
}

std::vector<Int> walk_counts_between(const Graph& g, int x, int z, int K) {
  if (z < 0 || z >= g.n()) throw std::out_of_range("vertex out of range");
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(K + 1));
  std::vector<Int> vec(static_cast<size_t>(g.n())), next(static_cast<size_t>(g.n()));
  vec[static_cast<size_t>(x)] = 1;
  out.emplace_back(x == z ? 1 : 0);
  for (int k = 1; k <= K; ++k) {
    apply_adjacency(g, vec, next);
    vec.swap(next);
    out.push_back(vec[static_cast<size_t>(z)]);
  }
  return out;
}

std::vector<Int> walk_counts_into(const Graph& g, int x,
                                  const std::vector<int>& subset, int K) {
  if (subset.empty()) throw std::invalid_argument("empty subset");
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(K + 1));
  // iterate from the subset indicator; entry at x after k steps counts the
  // length-k walks from x ending in the subset
  std::vector<Int> vec(static_cast<size_t>(g.n())), next(static_cast<size_t>(g.n()));
  for (int sv : subset) vec.at(static_cast<size_t>(sv)) = 1;
  out.push_back(vec[static_cast<size_t>(x)]);
  for (int k = 1; k <= K; ++k) {
    apply_adjacency(g, vec, next);
    vec.swap(next);
    out.push_back(vec[static_cast<size_t>(x)]);
  }
  return out;
}

ClosedTripleI64 closed_triple_i64(const Graph& g, int v) {
  const int words = g.words();
  const uint64_t* urow = g.row_bits(v);
  long long r3 = 0, r4 = 0;
  for (int w = 0; w < g.n(); ++w) {
    const uint64_t* wrow = g.row_bits(w);
    long long codeg = 0;
    for (int i = 0; i < words; ++i)
      codeg += __builtin_popcountll(wrow[i] & urow[i]);
    if (g.has_edge(v, w)) r3 += codeg;  // adds up to twice the edges inside N(v)
    r4 += codeg * codeg;
  }
  return ClosedTripleI64{g.degree(v), r3, r4};
}

ClosedTriple closed_triple(const Graph& g, int v) {
  auto t = closed_triple_i64(g, v);
  return ClosedTriple{Int(static_cast<long>(t.r2)), Int(static_cast<long>(t.r3)),
                      Int(static_cast<long>(t.r4))};
}

std::vector<Int> first_return_counts(const ClosedWalkProfile& r) {
  const size_t len = r.counts.size();
  if (len == 0 || r.counts[0] != 1 || (len > 1 && r.counts[1] != 0))
    throw integrity_error("malformed closed-walk profile");
  std::vector<Int> rbar(len, Int(0));
  for (size_t k = 2; k < len; ++k) {
    Int acc = r.counts[k];
    for (size_t s = 2; s < k; ++s) acc -= rbar[s] * r.counts[k - s];
    // remaining term is rbar[k] * r^0 = rbar[k]
    rbar[k] = std::move(acc);
  }
  return rbar;
}

std::vector<Int> never_return_counts(const Graph& g, int v, int K) {
  auto w = walk_counts(g, v, K);
  auto r = closed_walk_counts(g, v, K);
  std::vector<Int> wbar(static_cast<size_t>(K + 1));
  for (int k = 0; k <= K; ++k) {
    Int acc = w.counts[static_cast<size_t>(k)];
    for (int s = 1; s <= k; ++s)
      acc -= r.counts[static_cast<size_t>(s)] * wbar[static_cast<size_t>(k - s)];
    wbar[static_cast<size_t>(k)] = std::move(acc);  // r^0 = 1 leads the sum
  }
  return wbar;
}

std::vector<Int> reaches_counts(const Graph& g, int v, int K) {
  auto total = [&](const Graph& graph) {
    std::vector<Int> sums;
    sums.reserve(static_cast<size_t>(K + 1));
    std::vector<Int> vec(static_cast<size_t>(graph.n()), 1), next(static_cast<size_t>(graph.n()));
    Int s = graph.n();
    sums.push_back(s);
    for (int k = 1; k <= K; ++k) {
      apply_adjacency(graph, vec, next);
      vec.swap(next);
      s = 0;
      for (const Int& x : vec) s += x;
      sums.push_back(s);
    }
    return sums;
  };
  auto whole = total(g);
  if (g.n() == 1) return whole;  // every walk of the one-vertex graph sits at v
  auto rest = total(vertex_deleted(g, v));
  std::vector<Int> out(static_cast<size_t>(K + 1));
  for (int k = 0; k <= K; ++k)
    out[static_cast<size_t>(k)] =
        whole[static_cast<size_t>(k)] - rest[static_cast<size_t>(k)];
  return out;
}

namespace {

void walk_dfs(const Graph& g, int at, int remaining, int target, bool closed,
              Int& count, long long& budget) {
  if (--budget < 0) throw budget_error("walk enumeration budget exceeded");
  if (remaining == 0) {
    if (!closed || at == target) ++count;
    return;
  }
  for (int w : g.neighbors(at))
    walk_dfs(g, w, remaining - 1, target, closed, count, budget);
}

}  // namespace

Int brute_force_walks(const Graph& g, int v, int k, long long node_budget) {
  if (k < 0) throw std::invalid_argument("negative length");
  Int count = 0;
  walk_dfs(g, v, k, v, false, count, node_budget);
  return count;
}

Int brute_force_closed(const Graph& g, int v, int k, long long node_budget) {
  if (k < 0) throw std::invalid_argument("negative length");
  Int count = 0;
  walk_dfs(g, v, k, v, true, count, node_budget);
  return count;
}

std::string profiles_to_csv(const std::vector<WalkProfile>& ps) {
  std::ostringstream os;
  os << "vertex,k,count\n";
  for (size_t v = 0; v < ps.size(); ++v)
    for (size_t k = 0; k < ps[v].counts.size(); ++k)
      os << v << "," << k << "," << dec(ps[v].counts[k]) << "\n";
  return os.str();
}

std::string profile_row_json(const std::vector<Int>& counts) {
  std::ostringstream os;
  os << "[";
  for (size_t k = 0; k < counts.size(); ++k) {
    if (k) os << ",";
    os << "\"" << dec(counts[k]) << "\"";
  }
  os << "]";
  return os.str();
}

}  // namespace walklab
