#pragma once

#include <cstdint>

namespace dist2::kernels {

// Word-level inner loops of the G_2 pipeline. All functions take adjacency
// rows (bit j of rows[i] set iff edge {i,j}); out must not alias the input.
//
// two_step:     out[i] = union of rows[j] over j adjacent to i
//               (vertices reachable by a walk of length exactly 2, incl. i itself)
// distance2:    out[i] = two_step[i] minus N(i) and i — the rows of G_2,
//               since d(i,j)=2 iff i,j are distinct non-adjacent vertices
//               with a common neighbor
// popcount_sum: sum of popcounts over n words
// has_triangle: whether any three vertices are pairwise adjacent
struct Ops {
  void (*two_step)(const uint64_t* rows, int n, uint64_t* out);
  void (*distance2)(const uint64_t* rows, int n, uint64_t* out);
  uint64_t (*popcount_sum)(const uint64_t* words, int n);
  bool (*has_triangle)(const uint64_t* rows, int n);
  const char* name;
};

const Ops& scalar_ops();
bool avx2_available();
const Ops& avx2_ops();  // call only when avx2_available()

// Scalar unless AVX2 is detected at runtime; DIST2_KERNEL=scalar|avx2
// overrides (selection happens once, on first use).
const Ops& active_ops();

}  // namespace dist2::kernels
