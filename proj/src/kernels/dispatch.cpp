#include <cstdlib>
#include <string_view>

#include "affgr/kernels.hpp"

namespace affgr::kernels {

namespace detail {
#if defined(AFFGR_HAVE_AVX2)
const KernelSet& avx2_set();
#endif
#if defined(AFFGR_HAVE_NEON)
const KernelSet& neon_set();
#endif
}  // namespace detail

const KernelSet* avx2() {
#if defined(AFFGR_HAVE_AVX2)
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok ? &detail::avx2_set() : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet* neon() {
#if defined(AFFGR_HAVE_NEON)
  return &detail::neon_set();
#else
  return nullptr;
#endif
}

std::vector<const KernelSet*> available() {
  std::vector<const KernelSet*> out{&scalar()};
  if (auto* k = avx2()) out.push_back(k);
  if (auto* k = neon()) out.push_back(k);
  return out;
}

const KernelSet& active() {
  static const KernelSet* chosen = [] {
    const char* env = std::getenv("AFFGR_KERNELS");
    const std::string_view want = env ? env : "";
    if (want == "scalar") return &scalar();
    const KernelSet* best = &scalar();
    for (const KernelSet* k : available()) {
      if (!want.empty() && k->name == want) return k;
      best = k;
    }
    return best;
  }();
  return *chosen;
}

}  // namespace affgr::kernels
