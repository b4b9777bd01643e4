#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "affgr/cache.hpp"
#include "affgr/cli.hpp"
#include "affgr/report_json.hpp"

using namespace affgr;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "affgr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path fresh_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("affgr-test-" + name);
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("star example") {
  const Run r = run({"star", "A1", "word:0", "word:1,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "word:0,1,0\n");
}

TEST_CASE("chevalley G2 JSON payload") {
  const Run r = run({"--json", "chevalley", "G2"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["command"] == "chevalley");
  CHECK(j["type_label"] == "G2");
  CHECK(j["convention_hash"] == convention_hash());
  CHECK(j["payload"]["a"] == json::array({1, 3, 2, 3, 1}));
}

TEST_CASE("classify-all table") {
  const Run r = run({"classify-all", "--max-rank", "4"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line.find("smooth-genv") != std::string::npos);
  std::vector<std::string> no_genv;
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string type;
    cells >> type;
    if (line.find(" false ") != std::string::npos) no_genv.push_back(type);
  }
  CHECK(no_genv == std::vector<std::string>{"E8", "F4", "G2"});
}

TEST_CASE("exit codes") {
  const Run bad = run({"star", "A1", "word:0", "word:1,x"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("'x'") != std::string::npos);
  CHECK(run({"report", "Q7"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"enumerate", "A2", "--max-len", "abc"}).code == 2);
  const Run big = run({"enumerate", "A2", "--max-len", "40", "--no-cache"});
  CHECK(big.code == 3);
  CHECK(big.err.find("--enum-limit") != std::string::npos);
  CHECK(run({"--enum-limit", "40", "enumerate", "A1", "--max-len", "40", "--no-cache"}).code == 0);
  CHECK(run({"factorize", "A2", "--element", "word:1"}).code == 2);
  CHECK(run({"verify", "A2", "--suite", "nope"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("every command runs and is deterministic") {
  const std::vector<std::vector<std::string>> cmds{
      {"report", "C3"},
      {"enumerate", "G2", "--max-len", "5", "--no-cache"},
      {"poincare", "G2"},
      {"poincare", "A2", "--element", "word:0,1,2,0"},
      {"star", "A2", "word:0", "word:1,0"},
      {"segments", "B3"},
      {"factorize", "C2", "--element", "word:0,1,2,1,0"},
      {"chevalley", "C3"},
      {"classify-all", "--max-rank", "3"},
      {"verify", "A2", "--suite", "minrep-series"},
  };
  for (const auto& c : cmds)
    for (bool as_json : {false, true}) {
      auto args = c;
      if (as_json) args.insert(args.begin(), "--json");
      CAPTURE(args.front() + " " + args[1]);
      const Run a = run(args), b = run(args);
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
      if (as_json) {
        const json j = json::parse(a.out);
        CHECK(j["command"] == (c[0]));
        CHECK(j["payload"].is_object());
      }
    }
}

TEST_CASE("verify reports failures with exit code 1") {
  const Run ok = run({"verify", "G2", "--suite", "all", "--samples", "200"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
}

TEST_CASE("type reports round-trip through JSON") {
  for (LieType t : all_types(8)) {
    const TypeReport r = type_report(t);
    const json j = r;
    const TypeReport back = j.get<TypeReport>();
    CHECK(json(back) == j);
    CHECK(back.type == r.type);
    CHECK(back.pd_status == r.pd_status);
    CHECK(back.levi_poincare == r.levi_poincare);
    CHECK(back.max_smooth_schubert_dim == r.max_smooth_schubert_dim);
  }
  for (PDStatus s : {PDStatus::NotPalindromic, PDStatus::PalindromicOnly, PDStatus::RationalOnly,
                     PDStatus::Integral})
    CHECK(json(s).get<PDStatus>() == s);
  const GradedPoly p({1, 0, 3});
  CHECK(json(p).get<GradedPoly>() == p);
}

TEST_CASE("cache on and off give identical output") {
  const auto dir = fresh_dir("cache");
  setenv("AFFGR_CACHE_DIR", dir.c_str(), 1);
  const std::vector<std::string> base{"--json", "enumerate", "C2", "--max-len", "7"};
  auto no_cache = base;
  no_cache.push_back("--no-cache");
  const Run plain = run(no_cache);
  const Run first = run(base);
  CHECK(std::filesystem::exists(MinRepCache(dir).path_for(parse_type("C2"))));
  const Run second = run(base);
  CHECK(plain.out == first.out);
  CHECK(first.out == second.out);
  // A shorter request is served from the same file.
  auto shorter = base;
  shorter[3] = "4";
  const Run cached_short = run(shorter);
  shorter.push_back("--no-cache");
  CHECK(cached_short.out == run(shorter).out);
}

TEST_CASE("corrupt or foreign cache files are recomputed") {
  const auto dir = fresh_dir("corrupt");
  const AffineWeylGroup G(parse_type("A2"));
  const MinRepCache cache(dir);
  const auto want = G.enumerate_minreps(6).sizes();
  std::ostringstream warn;
  CHECK(cache.load_or_compute(G, 6, &warn).sizes() == want);
  CHECK(warn.str().empty());

  { std::ofstream(cache.path_for(G.type())) << "{not json"; }
  CHECK(cache.load_or_compute(G, 6, &warn).sizes() == want);
  CHECK(warn.str().find("warning") != std::string::npos);

  // Valid JSON with a wrong element at level 1.
  json j = json::parse(std::ifstream(cache.path_for(G.type())));
  j["levels"][1][0] = json::array({5, 5});
  { std::ofstream(cache.path_for(G.type())) << j.dump(); }
  std::ostringstream warn2;
  CHECK(cache.load_or_compute(G, 6, &warn2).sizes() == want);
  CHECK_FALSE(warn2.str().empty());

  // Different conventions: ignored silently and rewritten.
  j = json::parse(std::ifstream(cache.path_for(G.type())));
  j["convention_hash"] = "other";
  { std::ofstream(cache.path_for(G.type())) << j.dump(); }
  CHECK(cache.load_or_compute(G, 6, nullptr).sizes() == want);
  CHECK(json::parse(std::ifstream(cache.path_for(G.type())))["convention_hash"] ==
        convention_hash());
}
