#pragma once

// Inner loops over the positive roots. Every hot path in the engine reduces
// to pairing a coroot-lattice vector against all positive roots at once, so
// the roots are stored column-wise (one padded lane array per simple root)
// and the loops come in a scalar reference form plus SIMD variants chosen at
// startup. All variants are exact integer code and must agree bit-for-bit.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace affgr::kernels {

/// Positive roots in structure-of-arrays layout. Column j holds the j-th
/// simple-root coordinate of every positive root, padded with zeros to a
/// multiple of `kLanes`. Zero padding is neutral for every kernel below.
struct RootTable {
  static constexpr int kLanes = 8;

  int rank = 0;
  int count = 0;
  int stride = 0;
  std::vector<int32_t> cols;

  RootTable() = default;
  RootTable(int rank, const std::vector<std::vector<int32_t>>& roots);

  const int32_t* column(int j) const { return cols.data() + size_t(j) * stride; }
};

struct KernelSet {
  std::string_view name;
  /// out[k] = sum_j simple[j] * root_k[j]; `out` has `stride` entries.
  void (*pairings)(const RootTable&, const int32_t* simple, int32_t* out);
  /// sum_k | <lam, root_k> - [<rho, root_k> < 0] |, where the arguments are the
  /// pairings of lam and rho with the simple roots.
  int64_t (*affine_length)(const RootTable&, const int32_t* lam_simple, const int32_t* rho_simple);
  /// #{k : <v, root_k> < 0}.
  int64_t (*count_negative)(const RootTable&, const int32_t* simple);
};

const KernelSet& scalar();
/// nullptr when not compiled in or not supported by the running CPU.
const KernelSet* avx2();
const KernelSet* neon();

/// The variant used by the library. Picks the widest supported variant unless
/// the AFFGR_KERNELS environment variable names one ("scalar", "avx2", "neon").
const KernelSet& active();

/// Every variant usable on this machine, scalar first.
std::vector<const KernelSet*> available();

}  // namespace affgr::kernels
