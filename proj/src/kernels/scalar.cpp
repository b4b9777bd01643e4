#include <cstdlib>

#include "affgr/kernels.hpp"

namespace affgr::kernels {

RootTable::RootTable(int rank_, const std::vector<std::vector<int32_t>>& roots)
    : rank(rank_), count(static_cast<int>(roots.size())) {
  stride = (count + kLanes - 1) / kLanes * kLanes;
  if (stride == 0) stride = kLanes;
  cols.assign(size_t(rank) * stride, 0);
  for (int k = 0; k < count; ++k)
    for (int j = 0; j < rank; ++j) cols[size_t(j) * stride + k] = roots[k][j];
}

namespace {

void pairings_scalar(const RootTable& t, const int32_t* simple, int32_t* out) {
  for (int k = 0; k < t.stride; ++k) out[k] = 0;
  for (int j = 0; j < t.rank; ++j) {
    const int32_t a = simple[j];
    if (a == 0) continue;
    const int32_t* col = t.column(j);
    for (int k = 0; k < t.stride; ++k) out[k] += a * col[k];
  }
}

int64_t affine_length_scalar(const RootTable& t, const int32_t* lam, const int32_t* rho) {
  int64_t total = 0;
  for (int k = 0; k < t.count; ++k) {
    int32_t pl = 0, pr = 0;
    for (int j = 0; j < t.rank; ++j) {
      const int32_t c = t.column(j)[k];
      pl += lam[j] * c;
      pr += rho[j] * c;
    }
    total += std::abs(pl - (pr < 0 ? 1 : 0));
  }
  return total;
}

int64_t count_negative_scalar(const RootTable& t, const int32_t* simple) {
  int64_t n = 0;
  for (int k = 0; k < t.count; ++k) {
    int32_t p = 0;
    for (int j = 0; j < t.rank; ++j) p += simple[j] * t.column(j)[k];
    n += p < 0;
  }
  return n;
}

}  // namespace

const KernelSet& scalar() {
  static const KernelSet set{"scalar", pairings_scalar, affine_length_scalar,
                             count_negative_scalar};
  return set;
}

}  // namespace affgr::kernels
