#include "dist2/canonical.hpp"

#include <algorithm>
#include <cstring>

namespace dist2 {
namespace {

// Ordered partition of the vertices: order[] lists vertices, cell_start bit p
// marks positions where a cell begins.
struct Partition {
  Perm order{};
  uint64_t cell_start = 0;
  int n = 0;
};

struct Cell {
  int start, len;
};

int cells_of(const Partition& p, Cell* out) {
  int count = 0;
  int start = 0;
  for (int pos = 1; pos <= p.n; ++pos) {
    if (pos == p.n || ((p.cell_start >> pos) & 1)) {
      out[count++] = {start, pos - start};
      start = pos;
    }
  }
  return count;
}

// 1-dimensional refinement: split every cell by neighbor counts into every
// other cell until stable. Deterministic: subcells ordered by count ascending.
void refine(const Graph& g, Partition& p) {
  Cell cells[kMaxVertices];
  bool changed = true;
  while (changed) {
    changed = false;
    int nc = cells_of(p, cells);
    uint64_t masks[kMaxVertices];
    for (int c = 0; c < nc; ++c) {
      uint64_t m = 0;
      for (int i = 0; i < cells[c].len; ++i) m |= 1ULL << p.order[cells[c].start + i];
      masks[c] = m;
    }
    for (int c = 0; c < nc && !changed; ++c) {
      if (cells[c].len <= 1) continue;
      for (int s = 0; s < nc && !changed; ++s) {
        int base = cells[c].start;
        int len = cells[c].len;
        int key[kMaxVertices];
        bool uniform = true;
        for (int i = 0; i < len; ++i) {
          key[i] = __builtin_popcountll(g.row(p.order[base + i]) & masks[s]);
          if (key[i] != key[0]) uniform = false;
        }
        if (uniform) continue;
        // stable sort the cell by key, then mark subcell boundaries
        int idx[kMaxVertices];
        for (int i = 0; i < len; ++i) idx[i] = i;
        std::stable_sort(idx, idx + len, [&](int a, int b) { return key[a] < key[b]; });
        uint8_t sorted[kMaxVertices];
        for (int i = 0; i < len; ++i) sorted[i] = p.order[base + idx[i]];
        for (int i = 0; i < len; ++i) p.order[base + i] = sorted[i];
        for (int i = 1; i < len; ++i)
          if (key[idx[i]] != key[idx[i - 1]]) p.cell_start |= 1ULL << (base + i);
        changed = true;
      }
    }
  }
}

struct UnionFind {
  std::array<uint8_t, kMaxVertices> parent{};
  void init(int n) {
    for (int i = 0; i < n; ++i) parent[i] = static_cast<uint8_t>(i);
  }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = static_cast<uint8_t>(a);  // smaller vertex becomes the root
  }
};

constexpr int kMaxStoredGenerators = 64;

struct Searcher {
  const Graph& g;
  int n;
  std::array<uint64_t, kMaxVertices> best_rows{};
  bool have_best = false;
  Perm best_pos{};
  std::array<uint64_t, kMaxVertices> at_pos{};
  std::vector<Perm> gens;
  UnionFind orbits;
  uint8_t prefix[kMaxVertices];
  int prefix_len = 0;
  int leaves = 0;

  explicit Searcher(const Graph& graph) : g(graph), n(graph.order()) { orbits.init(n); }

  void leaf(const Partition& p) {
    ++leaves;
    Perm pos{};
    for (int i = 0; i < n; ++i) pos[p.order[i]] = static_cast<uint8_t>(i);
    std::array<uint64_t, kMaxVertices> rows{};
    for (int i = 0; i < n; ++i) {
      uint64_t r = 0;
      for (uint64_t m = g.row(p.order[i]); m; m &= m - 1) r |= 1ULL << pos[__builtin_ctzll(m)];
      rows[i] = r;
    }
    if (!have_best) {
      have_best = true;
      best_rows = rows;
      best_pos = pos;
      for (int i = 0; i < n; ++i) at_pos[i] = 1ULL << p.order[i];
      return;
    }
    int cmp = 0;
    for (int i = 0; i < n; ++i) {
      if (rows[i] != best_rows[i]) {
        cmp = rows[i] < best_rows[i] ? -1 : 1;
        break;
      }
    }
    if (cmp < 0) {
      best_rows = rows;
      best_pos = pos;
      for (int i = 0; i < n; ++i) at_pos[i] = 1ULL << p.order[i];
      return;
    }
    if (cmp > 0) return;
    // equal encoding: the two labelings differ by an automorphism
    Perm sigma{};
    uint8_t best_order[kMaxVertices];
    for (int v = 0; v < n; ++v) best_order[best_pos[v]] = static_cast<uint8_t>(v);
    bool identity = true;
    for (int v = 0; v < n; ++v) {
      sigma[v] = best_order[pos[v]];
      if (sigma[v] != v) identity = false;
    }
    for (int i = 0; i < n; ++i) at_pos[i] |= 1ULL << p.order[i];
    if (identity) return;
    for (int v = 0; v < n; ++v) orbits.unite(v, sigma[v]);
    if (static_cast<int>(gens.size()) < kMaxStoredGenerators) gens.push_back(sigma);
  }

  void recurse(const Partition& p) {
    Cell cells[kMaxVertices];
    int nc = cells_of(p, cells);
    int target = -1;
    for (int c = 0; c < nc; ++c) {
      if (cells[c].len <= 1) continue;
      if (target < 0 || cells[c].len < cells[target].len) target = c;
    }
    if (target < 0) {
      Partition q = p;
      leaf(q);
      return;
    }
    int base = cells[target].start;
    int len = cells[target].len;
    uint8_t members[kMaxVertices];
    for (int i = 0; i < len; ++i) members[i] = p.order[base + i];
    std::sort(members, members + len);

    uint64_t tried = 0;
    for (int i = 0; i < len; ++i) {
      int u = members[i];
      if (prefix_len == 0) {
        bool pruned = false;
        for (uint64_t t = tried; t; t &= t - 1)
          if (orbits.find(__builtin_ctzll(t)) == orbits.find(u)) {
            pruned = true;
            break;
          }
        if (pruned) continue;
      } else {
        bool pruned = false;
        for (const Perm& s : gens) {
          bool fixes = true;
          for (int k = 0; k < prefix_len; ++k)
            if (s[prefix[k]] != prefix[k]) {
              fixes = false;
              break;
            }
          if (fixes && ((tried >> s[u]) & 1)) {
            pruned = true;
            break;
          }
        }
        if (pruned) continue;
      }
      tried |= 1ULL << u;

      Partition q = p;
      // individualize u: move it to the front of the cell and split
      int at = base;
      while (q.order[at] != u) ++at;
      for (int k = at; k > base; --k) q.order[k] = q.order[k - 1];
      q.order[base] = static_cast<uint8_t>(u);
      q.cell_start |= 1ULL << (base + 1);
      refine(g, q);
      prefix[prefix_len++] = static_cast<uint8_t>(u);
      recurse(q);
      --prefix_len;
    }
  }
};

std::string encode_rows(const uint64_t* rows, int n) {
  std::string bytes;
  bytes.reserve(1 + 8 * n);
  bytes.push_back(static_cast<char>(n));
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < 8; ++b) bytes.push_back(static_cast<char>((rows[i] >> (8 * b)) & 0xff));
  return bytes;
}

}  // namespace

CanonicalResult canonical_analyze(const Graph& g) {
  int n = g.order();
  CanonicalResult res;
  res.n = n;
  if (n == 1) {
    uint64_t row = 0;
    res.form.bytes = encode_rows(&row, 1);
    res.at_position[0] = 1;
    res.orbit[0] = 0;
    res.leaf_count = 1;
    return res;
  }

  // initial partition: one cell, split by degree ascending via refine()
  Partition p;
  p.n = n;
  for (int i = 0; i < n; ++i) p.order[i] = static_cast<uint8_t>(i);
  p.cell_start = 1;
  refine(g, p);

  Searcher s(g);
  s.recurse(p);

  res.form.bytes = encode_rows(s.best_rows.data(), n);
  res.position = s.best_pos;
  res.at_position = s.at_pos;
  res.generators = std::move(s.gens);
  for (int v = 0; v < n; ++v) res.orbit[v] = static_cast<uint8_t>(s.orbits.find(v));
  res.leaf_count = s.leaves;
  return res;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_analyze(g).form; }

Graph canonical_relabel(const Graph& g) {
  CanonicalResult r = canonical_analyze(g);
  int n = g.order();
  uint64_t rows[kMaxVertices] = {};
  for (int v = 0; v < n; ++v)
    for (uint64_t m = g.row(v); m; m &= m - 1)
      rows[r.position[v]] |= 1ULL << r.position[__builtin_ctzll(m)];
  return Graph::from_rows(n, rows);
}

}  // namespace dist2
