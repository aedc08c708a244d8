#include "dist2/graph6.hpp"

#include "dist2/canonical.hpp"

namespace dist2 {

std::string encode_graph6(const Graph& g) {
  int n = g.order();
  if (n > 62) fail(Errc::cap_exceeded, "graph6 single-byte size form needs n <= 62");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph decode_graph6(std::string_view s) {
  if (s.empty()) fail(Errc::bad_length, "empty graph6 string");
  unsigned first = static_cast<unsigned char>(s[0]);
  if (first < 63 || first > 126) fail(Errc::bad_char, "size byte out of range");
  if (first == 126) fail(Errc::cap_exceeded, "multi-byte graph6 sizes not supported");
  int n = static_cast<int>(first) - 63;
  if (n == 0) fail(Errc::bad_length, "graph6 order 0");
  int bits = n * (n - 1) / 2;
  size_t want = 1 + (bits + 5) / 6;
  if (s.size() != want) fail(Errc::bad_length, "graph6 byte count mismatch");
  Graph g = Graph::empty(n);
  int b = 0;
  for (size_t pos = 1; pos < s.size(); ++pos) {
    unsigned c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) fail(Errc::bad_char, "graph6 data byte out of range");
    int val = static_cast<int>(c) - 63;
    for (int k = 5; k >= 0; --k, ++b) {
      int bit = (val >> k) & 1;
      if (b >= bits) {
        if (bit) fail(Errc::bad_padding, "nonzero graph6 padding bits");
        continue;
      }
      if (bit) {
        // column-major upper triangle: recover (i, j) from bit index
        int idx = b, j = 1;
        while (idx >= j) idx -= j, ++j;
        g.add_edge(idx, j);
      }
    }
  }
  return g;
}

std::string canonical_graph6(const Graph& g) { return encode_graph6(canonical_relabel(g)); }

}  // namespace dist2
