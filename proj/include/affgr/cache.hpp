#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "affgr/affine.hpp"

namespace affgr {

/// Identifies every convention baked into cached data (Cartan orientation,
/// node numbering, element form, s_0). Cache files written under a different
/// hash are ignored.
const std::string& convention_hash();

/// On-disk cache of minimal-representative levels, one JSON file per type.
/// A file that fails to parse or validate is recomputed with a warning.
class MinRepCache {
 public:
  static constexpr int kSchemaVersion = 1;

  explicit MinRepCache(std::filesystem::path dir);

  /// $AFFGR_CACHE_DIR, else $XDG_CACHE_HOME/affgr, else $HOME/.cache/affgr.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path path_for(LieType t) const;

  /// Cached levels when the file covers max_len, otherwise computed and stored.
  MinRepLevels load_or_compute(const AffineWeylGroup& G, int max_len, std::ostream* warn) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace affgr
