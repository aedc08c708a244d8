#include "dist2/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace dist2::kernels {
namespace {

__attribute__((target("avx2"))) inline __m256i expand_block(const uint64_t* rows, int n,
                                                            __m256i block_rows) {
  __m256i acc = _mm256_setzero_si256();
  for (int j = 0; j < n; ++j) {
    __m256i bit = _mm256_set1_epi64x(1LL << j);
    __m256i sel = _mm256_cmpeq_epi64(_mm256_and_si256(block_rows, bit), bit);
    acc = _mm256_or_si256(acc, _mm256_and_si256(sel, _mm256_set1_epi64x(int64_t(rows[j]))));
  }
  return acc;
}

__attribute__((target("avx2"))) void two_step_avx2(const uint64_t* rows, int n, uint64_t* out) {
  int i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i block = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), expand_block(rows, n, block));
  }
  for (; i < n; ++i) {
    uint64_t acc = 0;
    for (uint64_t r = rows[i]; r; r &= r - 1) acc |= rows[__builtin_ctzll(r)];
    out[i] = acc;
  }
}

__attribute__((target("avx2"))) void distance2_avx2(const uint64_t* rows, int n, uint64_t* out) {
  int i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i block = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + i));
    __m256i acc = expand_block(rows, n, block);
    __m256i self = _mm256_set_epi64x(1LL << (i + 3), 1LL << (i + 2), 1LL << (i + 1), 1LL << i);
    acc = _mm256_andnot_si256(_mm256_or_si256(block, self), acc);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), acc);
  }
  for (; i < n; ++i) {
    uint64_t acc = 0;
    for (uint64_t r = rows[i]; r; r &= r - 1) acc |= rows[__builtin_ctzll(r)];
    out[i] = acc & ~rows[i] & ~(1ULL << i);
  }
}

// Nibble-LUT popcount, 4 words per iteration.
__attribute__((target("avx2"))) uint64_t popcount_sum_avx2(const uint64_t* words, int n) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i nib = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  int i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
    __m256i lo = _mm256_and_si256(v, nib);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi64(v, 4), nib);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
  }
  uint64_t lanes[4];
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(lanes), acc);
  uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) total += __builtin_popcountll(words[i]);
  return total;
}

__attribute__((target("avx2"))) bool has_triangle_avx2(const uint64_t* rows, int n) {
  for (int i = 0; i < n; ++i) {
    uint64_t row_i = rows[i] & ~((2ULL << i) - 1);
    if (!row_i) continue;
    __m256i bc = _mm256_set1_epi64x(int64_t(rows[i]));
    const __m256i one = _mm256_set1_epi64x(1);
    const __m256i all = _mm256_set1_epi64x(-1);
    int j = i + 1;
    for (; j + 4 <= n; j += 4) {
      __m256i sh = _mm256_set_epi64x(j + 3, j + 2, j + 1, j);
      __m256i active =
          _mm256_cmpeq_epi64(_mm256_and_si256(_mm256_srlv_epi64(bc, sh), one), one);
      // bits strictly above lane's j; shift counts >= 64 yield 0
      __m256i above = _mm256_sllv_epi64(all, _mm256_add_epi64(sh, one));
      __m256i rj = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + j));
      __m256i t = _mm256_and_si256(_mm256_and_si256(rj, bc), _mm256_and_si256(above, active));
      if (!_mm256_testz_si256(t, t)) return true;
    }
    for (; j < n; ++j) {
      if (!((rows[i] >> j) & 1)) continue;
      if (rows[i] & rows[j] & ~((2ULL << j) - 1)) return true;
    }
  }
  return false;
}

}  // namespace

bool avx2_available() { return __builtin_cpu_supports("avx2"); }

const Ops& avx2_ops() {
  static const Ops ops{two_step_avx2, distance2_avx2, popcount_sum_avx2, has_triangle_avx2,
                       "avx2"};
  return ops;
}

}  // namespace dist2::kernels

#else  // non-x86: scalar fallback only

namespace dist2::kernels {
bool avx2_available() { return false; }
const Ops& avx2_ops() { return scalar_ops(); }
}  // namespace dist2::kernels

#endif
