#include "walklab/graph6.hpp"

namespace walklab {

std::string to_graph6(const Graph& g) {
  const int n = g.n();
  if (n > 62) throw std::invalid_argument("graph6 short form limited to 62 vertices");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int bitpos = 0;
  int acc = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++bitpos == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bitpos = 0;
      }
    }
  if (bitpos > 0) out.push_back(static_cast<char>((acc << (6 - bitpos)) + 63));
  return out;
}

Graph from_graph6(const std::string& s) {
  if (s.empty()) throw graph6_error("empty graph6 string", 0);
  size_t pos = 0;
  int c0 = static_cast<unsigned char>(s[0]);
  if (c0 < 63 || c0 > 63 + 62)
    throw graph6_error("unsupported graph6 length byte", 0);
  int n = c0 - 63;
  if (n < 1) throw graph6_error("graph needs at least one vertex", 0);
  ++pos;
  const int nbits = n * (n - 1) / 2;
  const size_t expect = pos + static_cast<size_t>((nbits + 5) / 6);
  if (s.size() != expect)
    throw graph6_error("graph6 length mismatch", s.size() < expect ? s.size() : expect);
  Graph g(n);
  int bit = 0;
  int acc = 0;
  int have = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      if (have == 0) {
        int c = static_cast<unsigned char>(s[pos]);
        if (c < 63 || c > 126) throw graph6_error("invalid graph6 character", pos);
        acc = c - 63;
        have = 6;
        ++pos;
      }
      bit = (acc >> (have - 1)) & 1;
      --have;
      if (bit) g.add_edge(u, v);
    }
  // trailing padding bits must be zero
  while (have > 0) {
    if ((acc >> (have - 1)) & 1)
      throw graph6_error("nonzero padding bits", pos - 1);
    --have;
  }
  return g;
}

}  // namespace walklab
