#include "dist2/kernels.hpp"

namespace dist2::kernels {
namespace {

void two_step_scalar(const uint64_t* rows, int n, uint64_t* out) {
  for (int i = 0; i < n; ++i) {
    uint64_t acc = 0;
    for (uint64_t r = rows[i]; r; r &= r - 1) acc |= rows[__builtin_ctzll(r)];
    out[i] = acc;
  }
}

void distance2_scalar(const uint64_t* rows, int n, uint64_t* out) {
  two_step_scalar(rows, n, out);
  for (int i = 0; i < n; ++i) out[i] &= ~rows[i] & ~(1ULL << i);
}

uint64_t popcount_sum_scalar(const uint64_t* words, int n) {
  uint64_t total = 0;
  for (int i = 0; i < n; ++i) total += __builtin_popcountll(words[i]);
  return total;
}

bool has_triangle_scalar(const uint64_t* rows, int n) {
  for (int i = 0; i < n; ++i) {
    uint64_t above_i = rows[i] & ~((2ULL << i) - 1);
    for (uint64_t r = above_i; r; r &= r - 1) {
      int j = __builtin_ctzll(r);
      if (rows[i] & rows[j] & ~((2ULL << j) - 1)) return true;
    }
  }
  return false;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{two_step_scalar, distance2_scalar, popcount_sum_scalar,
                       has_triangle_scalar, "scalar"};
  return ops;
}

}  // namespace dist2::kernels
