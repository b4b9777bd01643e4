#include <arm_neon.h>

#include "affgr/kernels.hpp"

namespace affgr::kernels::detail {

namespace {

// Two 4-lane halves per 8-lane block.
inline int32x4_t pair4(const RootTable& t, const int32_t* simple, int k) {
  int32x4_t acc = vdupq_n_s32(0);
  for (int j = 0; j < t.rank; ++j) acc = vmlaq_n_s32(acc, vld1q_s32(t.column(j) + k), simple[j]);
  return acc;
}

void pairings_neon(const RootTable& t, const int32_t* simple, int32_t* out) {
  for (int k = 0; k < t.stride; k += 4) vst1q_s32(out + k, pair4(t, simple, k));
}

int64_t affine_length_neon(const RootTable& t, const int32_t* lam, const int32_t* rho) {
  int64_t total = 0;
  for (int k = 0; k < t.stride; k += 4) {
    const int32x4_t pl = pair4(t, lam, k);
    const uint32x4_t neg = vcltzq_s32(pair4(t, rho, k));
    // neg lanes are all-ones, i.e. -1 as signed.
    const int32x4_t shifted = vaddq_s32(pl, vreinterpretq_s32_u32(neg));
    total += vaddvq_s32(vabsq_s32(shifted));
  }
  return total;
}

int64_t count_negative_neon(const RootTable& t, const int32_t* simple) {
  int64_t n = 0;
  for (int k = 0; k < t.stride; k += 4) {
    const uint32x4_t neg = vcltzq_s32(pair4(t, simple, k));
    n += vaddvq_u32(vshrq_n_u32(neg, 31));
  }
  return n;
}

}  // namespace

const KernelSet& neon_set() {
  static const KernelSet set{"neon", pairings_neon, affine_length_neon, count_negative_neon};
  return set;
}

}  // namespace affgr::kernels::detail
