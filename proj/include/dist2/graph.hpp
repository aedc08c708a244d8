#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>

#include "dist2/errors.hpp"

namespace dist2 {

inline constexpr int kMaxVertices = 64;
inline constexpr int kUnreachable = -1;

inline uint64_t low_mask(int n) { return n >= 64 ? ~0ULL : (1ULL << n) - 1; }

// Subset of vertices as one machine word.
struct VertexSet {
  uint64_t bits = 0;

  VertexSet() = default;
  explicit constexpr VertexSet(uint64_t b) : bits(b) {}
  static VertexSet all(int n) { return VertexSet(low_mask(n)); }
  static VertexSet single(int v) { return VertexSet(1ULL << v); }

  bool contains(int v) const { return (bits >> v) & 1; }
  VertexSet& add(int v) { bits |= 1ULL << v; return *this; }
  VertexSet& remove(int v) { bits &= ~(1ULL << v); return *this; }
  int count() const { return __builtin_popcountll(bits); }
  bool empty() const { return bits == 0; }
  int lowest() const { return bits ? __builtin_ctzll(bits) : -1; }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
  bool operator==(const VertexSet&) const = default;

  // Iterates set bits in ascending order.
  struct iterator {
    uint64_t rest;
    int operator*() const { return __builtin_ctzll(rest); }
    iterator& operator++() { rest &= rest - 1; return *this; }
    bool operator!=(const iterator& o) const { return rest != o.rest; }
  };
  iterator begin() const { return {bits}; }
  iterator end() const { return {0}; }
};

// Undirected simple graph on at most 64 vertices, one bitset row per vertex.
// Rows are kept symmetric, loop-free, and zero at positions >= n.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
  static Graph from_rows(int n, const uint64_t* rows);
  static Graph empty(int n);

  int order() const { return n_; }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
  uint64_t row(int v) const { return adj_[v]; }
  const uint64_t* rows() const { return adj_.data(); }
  int degree(int v) const { return __builtin_popcountll(adj_[v]); }
  int edge_count() const;
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  VertexSet vertices() const { return VertexSet::all(n_); }

  // Mutators for builders and transforms; shared graphs are treated as
  // immutable once constructed.
  void add_edge(int u, int v) { adj_[u] |= 1ULL << v; adj_[v] |= 1ULL << u; }
  void remove_edge(int u, int v) { adj_[u] &= ~(1ULL << v); adj_[v] &= ~(1ULL << u); }

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::array<uint64_t, kMaxVertices> adj_{};
};

using DistRow = std::array<int8_t, kMaxVertices>;

// All-pairs shortest path lengths; kUnreachable marks absent paths.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int n) : n_(n) {}
  int order() const { return n_; }
  int at(int i, int j) const { return d_[i][j]; }
  DistRow& row(int i) { return d_[i]; }
  const DistRow& row(int i) const { return d_[i]; }

 private:
  int n_ = 0;
  std::array<DistRow, kMaxVertices> d_{};
};

DistRow bfs_distances(const Graph& g, int v);
DistanceMatrix distance_matrix(const Graph& g);
int diameter(const Graph& g);  // kUnreachable when disconnected, 0 for n=1
VertexSet neighborhood_i(const Graph& g, int v, int radius);
bool is_clique(const Graph& g, VertexSet s);
Graph induced_subgraph(const Graph& g, VertexSet s);
bool is_connected(const Graph& g);
Graph complement(const Graph& g);

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_star(int leaves);

}  // namespace dist2
