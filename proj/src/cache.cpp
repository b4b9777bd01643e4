#include "affgr/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "affgr/error.hpp"

namespace affgr {

namespace {

std::string fnv1a_hex(std::string_view s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

// Returns false when the file is unusable; the caller recomputes.
bool try_load(const AffineWeylGroup& G, const std::filesystem::path& p, int max_len,
              MinRepLevels& out, std::string& why) {
  std::ifstream in(p);
  if (!in) {
    why = "missing";
    return false;
  }
  nlohmann::json j;
  try {
    in >> j;
    if (j.at("schema_version").get<int>() != MinRepCache::kSchemaVersion) {
      why = "schema version mismatch";
      return false;
    }
    if (j.at("convention_hash").get<std::string>() != convention_hash()) {
      why = "convention hash mismatch";
      return false;
    }
    if (j.at("type").get<std::string>() != G.type().label()) {
      why = "type mismatch";
      return false;
    }
    const int stored = j.at("max_length").get<int>();
    if (stored < max_len) {
      why = "too short";
      return false;
    }
    MinRepLevels lv;
    const auto& levels = j.at("levels");
    for (int k = 0; k <= max_len; ++k) {
      std::vector<AffineElem> level;
      for (const auto& coords : levels.at(k)) {
        CorootVec lam{coords.get<IntVec>()};
        if (static_cast<int>(lam.coords.size()) != G.rank()) throw std::runtime_error("rank");
        AffineElem x = G.min_rep(G.translation(lam));
        if (x.length != k) throw std::runtime_error("length");
        level.push_back(std::move(x));
      }
      lv.by_length.push_back(std::move(level));
    }
    lv.max_length = max_len;
    out = std::move(lv);
    return true;
  } catch (const std::exception& e) {
    why = std::string("corrupt (") + e.what() + ")";
    return false;
  }
}

}  // namespace

const std::string& convention_hash() {
  static const std::string h = fnv1a_hex(
      "cartan:A[i][j]=<alpha_j,alpha_i^v>;nodes:bourbaki;elem:t_lambda*w;"
      "s0:t_{theta^v}s_theta;coords:coroot;schema:1");
  return h;
}

MinRepCache::MinRepCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path MinRepCache::default_dir() {
  if (const char* d = std::getenv("AFFGR_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x)
    return std::filesystem::path(x) / "affgr";
  if (const char* h = std::getenv("HOME"); h && *h)
    return std::filesystem::path(h) / ".cache" / "affgr";
  return std::filesystem::temp_directory_path() / "affgr-cache";
}

std::filesystem::path MinRepCache::path_for(LieType t) const {
  return dir_ / ("minreps-" + t.label() + "-" + convention_hash() + ".json");
}

MinRepLevels MinRepCache::load_or_compute(const AffineWeylGroup& G, int max_len,
                                          std::ostream* warn) const {
  const auto p = path_for(G.type());
  MinRepLevels lv;
  std::string why;
  if (try_load(G, p, max_len, lv, why)) return lv;
  if (warn && why.rfind("corrupt", 0) == 0)
    *warn << "warning: cache file " << p.string() << " is " << why << "; recomputing\n";

  lv = G.enumerate_minreps(max_len);
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["convention_hash"] = convention_hash();
  j["type"] = G.type().label();
  j["max_length"] = lv.max_length;
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& level : lv.by_length) {
    nlohmann::json row = nlohmann::json::array();
    for (const AffineElem& x : level) row.push_back(x.trans.coords);
    levels.push_back(std::move(row));
  }
  j["levels"] = std::move(levels);

  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (out) out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, p, ec);
  if (ec && warn) *warn << "warning: could not write cache file " << p.string() << '\n';
  return lv;
}

}  // namespace affgr
