#include "dist2/enumerate.hpp"

#include <algorithm>
#include <cstring>
#include <optional>

#include "dist2/canonical.hpp"

namespace dist2 {

uint64_t enumerate_labeled(int n, const GraphVisitor& visit) {
  if (n < 1) fail(Errc::invalid_input, "n must be positive");
  if (n > 7) fail(Errc::cap_exceeded, "labeled enumeration capped at n=7");
  int bits = n * (n - 1) / 2;
  for (uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
    Graph g = Graph::empty(n);
    int b = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++b)
        if ((mask >> b) & 1) g.add_edge(i, j);
    visit(g);
  }
  return 1ULL << bits;
}

namespace {

// Vertices whose removal disconnects the graph (assumes connected input).
uint64_t articulation_points(const uint64_t* rows, int n) {
  int disc[kMaxVertices], low[kMaxVertices];
  std::fill(disc, disc + n, -1);
  uint64_t cut = 0;
  int timer = 0;
  // explicit-parent recursive lowlink
  auto dfs = [&](auto&& self, int u, int parent) -> void {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (uint64_t m = rows[u]; m; m &= m - 1) {
      int w = __builtin_ctzll(m);
      if (disc[w] < 0) {
        ++children;
        self(self, w, u);
        low[u] = std::min(low[u], low[w]);
        if (parent >= 0 && low[w] >= disc[u]) cut |= 1ULL << u;
      } else if (w != parent) {
        low[u] = std::min(low[u], disc[w]);
      }
    }
    if (parent < 0 && children > 1) cut |= 1ULL << u;
  };
  dfs(dfs, 0, -1);
  return cut;
}

// Isomorphism-invariant per-vertex key used to screen the canonical-parent
// test: (|N^2(v)|, sorted neighbor degrees). Degree ties are resolved before
// this key is built.
struct SecondaryKey {
  uint8_t n2 = 0;
  std::array<uint8_t, kMaxVertices> nbr{};

  static SecondaryKey of(const uint64_t* rows, int n, int v) {
    SecondaryKey k;
    uint64_t reach = 0;
    int cnt = 0;
    for (uint64_t m = rows[v]; m; m &= m - 1) {
      int u = __builtin_ctzll(m);
      reach |= rows[u];
      k.nbr[cnt++] = static_cast<uint8_t>(__builtin_popcountll(rows[u]));
    }
    k.n2 = static_cast<uint8_t>(__builtin_popcountll(reach & ~rows[v] & ~(1ULL << v)));
    std::sort(k.nbr.begin(), k.nbr.begin() + cnt);
    (void)n;
    return k;
  }

  auto operator<=>(const SecondaryKey&) const = default;
};

// Canonical-parent acceptance for the child graph given as rows (the new
// vertex is n-1). On the expensive path the canonical result is handed back
// for reuse when the child is expanded further.
bool accept_child(const uint64_t* rows, int n, std::optional<CanonicalResult>& canon_out) {
  int vn = n - 1;
  uint64_t cand = low_mask(n) & ~articulation_points(rows, n);
  // the new vertex is never a cut vertex: removing it leaves the parent
  int deg_vn = __builtin_popcountll(rows[vn]);
  int min_deg = kMaxVertices + 1;
  for (uint64_t m = cand; m; m &= m - 1)
    min_deg = std::min(min_deg, __builtin_popcountll(rows[__builtin_ctzll(m)]));
  if (deg_vn > min_deg) return false;
  uint64_t tier = 0;
  for (uint64_t m = cand; m; m &= m - 1) {
    int v = __builtin_ctzll(m);
    if (__builtin_popcountll(rows[v]) == min_deg) tier |= 1ULL << v;
  }
  if (tier == (1ULL << vn)) return true;

  SecondaryKey key_vn = SecondaryKey::of(rows, n, vn);
  uint64_t argmin = 1ULL << vn;
  for (uint64_t m = tier & ~(1ULL << vn); m; m &= m - 1) {
    int v = __builtin_ctzll(m);
    SecondaryKey kv = SecondaryKey::of(rows, n, v);
    if (kv < key_vn) return false;
    if (kv == key_vn) argmin |= 1ULL << v;
  }
  if (argmin == (1ULL << vn)) return true;

  canon_out = canonical_analyze(Graph::from_rows(n, rows));
  const CanonicalResult& cr = *canon_out;
  for (int p = n - 1; p >= 0; --p) {
    if (cr.at_position[p] & argmin) {
      int rep = __builtin_ctzll(cr.at_position[p]);
      return cr.same_orbit(vn, rep);
    }
  }
  return false;  // unreachable: argmin vertices occupy some position
}

uint64_t apply_perm_to_set(const Perm& p, uint64_t s) {
  uint64_t out = 0;
  for (uint64_t m = s; m; m &= m - 1) out |= 1ULL << p[__builtin_ctzll(m)];
  return out;
}

void mark_subset_orbit(uint64_t s, const std::vector<Perm>& gens, std::vector<uint64_t>& seen,
                       std::vector<uint64_t>& stack) {
  stack.clear();
  stack.push_back(s);
  seen[s >> 6] |= 1ULL << (s & 63);
  while (!stack.empty()) {
    uint64_t t = stack.back();
    stack.pop_back();
    for (const Perm& p : gens) {
      uint64_t u = apply_perm_to_set(p, t);
      if (!((seen[u >> 6] >> (u & 63)) & 1)) {
        seen[u >> 6] |= 1ULL << (u & 63);
        stack.push_back(u);
      }
    }
  }
}

struct Expander {
  int target;
  const GraphVisitor* visit;
  uint64_t count = 0;

  void expand(const Graph& g, const CanonicalResult* canon) {
    if (g.order() == target) {
      (*visit)(g);
      ++count;
      return;
    }
    int k = g.order();
    CanonicalResult local;
    if (!canon) {
      local = canonical_analyze(g);
      canon = &local;
    }
    const std::vector<Perm>& gens = canon->generators;
    bool dedupe = !gens.empty();
    std::vector<uint64_t> seen;   // subset-orbit bitmap, one frame per level
    std::vector<uint64_t> stack;
    if (dedupe) {
      seen.assign(((size_t(1) << k) + 63) / 64, 0);
    }
    uint64_t child[kMaxVertices];
    std::memcpy(child, g.rows(), sizeof(uint64_t) * k);
    for (uint64_t s = 1; s < (1ULL << k); ++s) {
      if (dedupe) {
        if ((seen[s >> 6] >> (s & 63)) & 1) continue;
        mark_subset_orbit(s, gens, seen, stack);
      }
      for (uint64_t m = s; m; m &= m - 1) child[__builtin_ctzll(m)] |= 1ULL << k;
      child[k] = s;
      std::optional<CanonicalResult> child_canon;
      if (accept_child(child, k + 1, child_canon)) {
        Graph cg = Graph::from_rows(k + 1, child);
        expand(cg, child_canon ? &*child_canon : nullptr);
      }
      child[k] = 0;
      for (uint64_t m = s; m; m &= m - 1) child[__builtin_ctzll(m)] &= ~(1ULL << k);
    }
  }
};

}  // namespace

uint64_t enumerate_connected(int n, const GraphVisitor& visit, bool force) {
  if (n < 1 || n > kMaxVertices) fail(Errc::cap_exceeded, "n out of range [1,64]");
  if (n > 11 && !force) fail(Errc::cap_exceeded, "n > 11 needs the force flag");
  Graph k1 = Graph::empty(1);
  if (n == 1) {
    visit(k1);
    return 1;
  }
  Expander e{n, &visit};
  e.expand(k1, nullptr);
  return e.count;
}

std::vector<Graph> connected_seeds(int seed_order) {
  std::vector<Graph> seeds;
  enumerate_connected(seed_order, [&seeds](const Graph& g) { seeds.push_back(g); });
  return seeds;
}

uint64_t expand_connected(const Graph& seed, int n, const GraphVisitor& visit) {
  if (seed.order() > n) fail(Errc::invalid_input, "seed larger than target order");
  Expander e{n, &visit};
  e.expand(seed, nullptr);
  return e.count;
}

}  // namespace dist2
