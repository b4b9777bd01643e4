// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "affgr/kernels.hpp"

namespace affgr::kernels::detail {

namespace {

// Pairings for lanes [k, k+8) accumulated column by column.
inline __m256i pair8(const RootTable& t, const int32_t* simple, int k) {
  __m256i acc = _mm256_setzero_si256();
  for (int j = 0; j < t.rank; ++j) {
    const __m256i a = _mm256_set1_epi32(simple[j]);
    const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(t.column(j) + k));
    acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(a, c));
  }
  return acc;
}

inline int64_t hsum_epi32(__m256i v) {
  alignas(32) int32_t buf[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(buf), v);
  int64_t s = 0;
  for (int32_t x : buf) s += x;
  return s;
}

void pairings_avx2(const RootTable& t, const int32_t* simple, int32_t* out) {
  for (int k = 0; k < t.stride; k += 8)
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + k), pair8(t, simple, k));
}

int64_t affine_length_avx2(const RootTable& t, const int32_t* lam, const int32_t* rho) {
  const __m256i zero = _mm256_setzero_si256();
  int64_t total = 0;
  for (int k = 0; k < t.stride; k += 8) {
    const __m256i pl = pair8(t, lam, k);
    const __m256i pr = pair8(t, rho, k);
    // cmpgt yields -1 where pr < 0, so adding it subtracts the indicator.
    const __m256i shifted = _mm256_add_epi32(pl, _mm256_cmpgt_epi32(zero, pr));
    total += hsum_epi32(_mm256_abs_epi32(shifted));
  }
  return total;
}

int64_t count_negative_avx2(const RootTable& t, const int32_t* simple) {
  const __m256i zero = _mm256_setzero_si256();
  int64_t n = 0;
  for (int k = 0; k < t.stride; k += 8) {
    const __m256i neg = _mm256_cmpgt_epi32(zero, pair8(t, simple, k));
    n += __builtin_popcount(static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(neg))));
  }
  return n;
}

}  // namespace

const KernelSet& avx2_set() {
  static const KernelSet set{"avx2", pairings_avx2, affine_length_avx2, count_negative_avx2};
  return set;
}

}  // namespace affgr::kernels::detail
