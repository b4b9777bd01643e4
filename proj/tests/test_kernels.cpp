#include <doctest.h>

#include <random>

#include "affgr/kernels.hpp"
#include "affgr/root_datum.hpp"

using namespace affgr;
using namespace affgr::kernels;

namespace {

void compare_on(const RootTable& table, std::mt19937_64& rng, int trials, int range) {
  std::uniform_int_distribution<int32_t> coord(-range, range);
  const KernelSet& ref = scalar();
  std::vector<int32_t> lam(table.rank), rho(table.rank);
  std::vector<int32_t> want(table.stride), got(table.stride);
  for (int i = 0; i < trials; ++i) {
    for (auto& x : lam) x = coord(rng);
    for (auto& x : rho) x = coord(rng);
    ref.pairings(table, lam.data(), want.data());
    const int64_t want_len = ref.affine_length(table, lam.data(), rho.data());
    const int64_t want_neg = ref.count_negative(table, lam.data());
    for (const KernelSet* k : available()) {
      CAPTURE(k->name);
      k->pairings(table, lam.data(), got.data());
      CHECK(got == want);
      CHECK(k->affine_length(table, lam.data(), rho.data()) == want_len);
      CHECK(k->count_negative(table, lam.data()) == want_neg);
    }
  }
}

}  // namespace

TEST_CASE("kernel variants agree with the scalar reference on random tables") {
  std::mt19937_64 rng(0x5eed);
  for (int trial = 0; trial < 200; ++trial) {
    const int rank = 1 + int(rng() % 8);
    const int count = 1 + int(rng() % 130);
    std::vector<std::vector<int32_t>> roots(count, std::vector<int32_t>(rank));
    for (auto& r : roots)
      for (auto& c : r) c = int32_t(rng() % 13) - 6;
    const RootTable table(rank, roots);
    CHECK(table.stride % RootTable::kLanes == 0);
    compare_on(table, rng, 20, 1000);
  }
}

TEST_CASE("kernel variants agree on every root table of rank <= 8") {
  std::mt19937_64 rng(0x5eed);
  for (LieType t : all_types(8)) {
    CAPTURE(t.label());
    compare_on(root_datum(t)->root_table(), rng, 50, 20);
  }
}

TEST_CASE("scalar kernels on a tiny hand example") {
  // Roots of A2: a1, a2, a1 + a2.
  const RootTable table(2, {{1, 0}, {0, 1}, {1, 1}});
  const int32_t lam[2] = {2, -3};
  const int32_t rho[2] = {1, 1};
  std::vector<int32_t> out(table.stride);
  scalar().pairings(table, lam, out.data());
  CHECK(out[0] == 2);
  CHECK(out[1] == -3);
  CHECK(out[2] == -1);
  CHECK(scalar().count_negative(table, lam) == 2);
  CHECK(scalar().affine_length(table, lam, rho) == 2 + 3 + 1);
}

TEST_CASE("active kernel set is one of the available ones") {
  const KernelSet& a = active();
  bool found = false;
  for (const KernelSet* k : available()) found |= (k == &a);
  CHECK(found);
  MESSAGE("active kernels: " << a.name);
}
