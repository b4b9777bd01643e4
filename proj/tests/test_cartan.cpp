#include <doctest.h>

#include <set>

#include "affgr/error.hpp"
#include "affgr/root_datum.hpp"

using namespace affgr;

namespace {

RootDatumPtr rd(const char* label) { return root_datum(parse_type(label)); }

}  // namespace

TEST_CASE("type labels and aliases") {
  CHECK(parse_type("g2").label() == "G2");
  CHECK(parse_type("C1").label() == "A1");
  CHECK(parse_type("B2").label() == "C2");
  CHECK(parse_type("D3").label() == "A3");
  CHECK_THROWS_AS(parse_type("E9"), ParseError);
  CHECK_THROWS_AS(parse_type("G3"), ParseError);
  CHECK_THROWS_AS(parse_type("X2"), ParseError);
  CHECK_THROWS_AS(parse_type("A"), ParseError);
  CHECK_THROWS_AS(parse_type("A0"), ParseError);
  const auto all = all_types(8);
  CHECK(std::set<LieType>(all.begin(), all.end()).size() == all.size());
  // A1..A8, B3..B8, C2..C8, D4..D8, E6..E8, F4, G2
  CHECK(all.size() == 8 + 6 + 7 + 5 + 3 + 1 + 1);
}

TEST_CASE("Cartan matrices are symmetrizable with the expected bonds") {
  for (LieType t : all_types(8)) {
    const auto d = root_datum(t);
    const IntMatrix& a = d->cartan();
    const IntVec& sym = d->symmetrizers();
    for (int i = 0; i < t.rank; ++i) {
      CHECK(a(i, i) == 2);
      for (int j = 0; j < t.rank; ++j) {
        CHECK(sym[i] * a(i, j) == sym[j] * a(j, i));
        if (i != j) CHECK(a(i, j) <= 0);
      }
    }
  }
  // Node 1 of G2 is short: <alpha_1, alpha_2^vee> = -1, <alpha_2, alpha_1^vee> = -3.
  const auto g2 = rd("G2");
  CHECK(g2->cartan()(0, 1) == -3);
  CHECK(g2->cartan()(1, 0) == -1);
  CHECK(g2->is_long(2));
  CHECK_FALSE(g2->is_long(1));
  CHECK(rd("C3")->is_long(3));
  CHECK_FALSE(rd("B3")->is_long(3));
  CHECK(rd("F4")->is_long(1));
  CHECK_FALSE(rd("F4")->is_long(4));
}

TEST_CASE("positive roots, highest roots and Weyl orders") {
  struct Row {
    const char* label;
    size_t roots;
    IntVec highest;
    int64_t order;
  };
  const Row rows[] = {
      {"A1", 1, {1}, 2},
      {"A3", 6, {1, 1, 1}, 24},
      {"C2", 4, {2, 1}, 8},
      {"B3", 9, {1, 2, 2}, 48},
      {"C3", 9, {2, 2, 1}, 48},
      {"D4", 12, {1, 2, 1, 1}, 192},
      {"G2", 6, {3, 2}, 12},
      {"F4", 24, {2, 3, 4, 2}, 1152},
      {"E6", 36, {1, 2, 2, 3, 2, 1}, 51840},
      {"E7", 63, {2, 2, 3, 4, 3, 2, 1}, 2903040},
      {"E8", 120, {2, 3, 4, 6, 5, 4, 3, 2}, 696729600},
  };
  for (const Row& r : rows) {
    CAPTURE(r.label);
    const auto d = rd(r.label);
    CHECK(d->positive_roots().size() == r.roots);
    CHECK(d->highest_root().coords == r.highest);
    CHECK(d->weyl_order() == r.order);
  }
  CHECK(rd("C2")->highest_coroot().coords == IntVec{1, 1});
  CHECK(rd("G2")->highest_coroot().coords == IntVec{1, 2});
}

TEST_CASE("coroots pair to 2 with their roots and reflections preserve the system") {
  for (LieType t : all_types(6)) {
    const auto d = root_datum(t);
    const auto& roots = d->positive_roots();
    const auto& coroots = d->positive_coroots();
    for (size_t k = 0; k < roots.size(); ++k) {
      CHECK(d->pairing(coroots[k], roots[k]) == 2);
      CHECK(d->coroot_of(roots[k]) == coroots[k]);
      // s_beta(gamma) = gamma - <beta^vee, gamma> beta stays a root.
      for (const RootVec& g : roots) {
        RootVec img = g;
        const int p = d->pairing(coroots[k], g);
        for (int i = 0; i < t.rank; ++i) img.coords[i] -= p * roots[k].coords[i];
        RootVec neg = img;
        for (auto& c : neg.coords) c = -c;
        CHECK((d->is_root(img) || d->is_root(neg)));
      }
    }
    // 2 rho^vee pairs to 2 with every simple root.
    for (int v : d->simple_pairings(d->two_rho_coroot())) CHECK(v == 2);
  }
  CHECK_THROWS_AS(rd("A2")->coroot_of(RootVec{{1, 2}}), PreconditionError);
}

TEST_CASE("fundamental coweights are dual to the simple roots") {
  for (LieType t : all_types(6)) {
    const auto d = root_datum(t);
    for (Node s = 1; s <= t.rank; ++s) {
      const RationalVec w = d->fundamental_coweight(s);
      for (Node j = 1; j <= t.rank; ++j) {
        Rational p = 0;
        for (int i = 0; i < t.rank; ++i) p += w[i] * d->cartan()(i, j - 1);
        CHECK(p == Rational(s == j ? 1 : 0));
      }
    }
  }
  CHECK(is_integral(rd("E8")->fundamental_coweight(1)));
  CHECK_FALSE(is_integral(rd("A2")->fundamental_coweight(1)));
}

TEST_CASE("affine Cartan matrices") {
  for (LieType t : all_types(8)) {
    const auto d = root_datum(t);
    const IntMatrix& a = d->affine_cartan();
    CHECK(a(0, 0) == 2);
    // delta = alpha_0 + theta is in the kernel: the coefficient vector of delta
    // is annihilated by each row.
    IntVec delta(t.rank + 1, 1);
    for (int i = 0; i < t.rank; ++i) delta[i + 1] = d->highest_root().coords[i];
    for (int i = 0; i <= t.rank; ++i) {
      int64_t s = 0;
      for (int j = 0; j <= t.rank; ++j) s += int64_t(a(i, j)) * delta[j];
      CHECK(s == 0);
    }
  }
  CHECK(rd("A1")->affine_cartan()(0, 1) == -2);
  CHECK(rd("G2")->node0_neighbors() == std::vector<Node>{2});
  CHECK(rd("A2")->node0_neighbors() == std::vector<Node>{1, 2});
  CHECK(rd("C3")->node0_neighbors() == std::vector<Node>{1});
  CHECK(rd("E8")->node0_neighbors() == std::vector<Node>{8});
}

TEST_CASE("diagram automorphisms and minuscule nodes") {
  CHECK(minuscule_nodes(*rd("E8")).empty());
  CHECK(minuscule_nodes(*rd("F4")).empty());
  CHECK(minuscule_nodes(*rd("G2")).empty());
  CHECK(minuscule_nodes(*rd("C3")) == std::vector<Node>{3});
  CHECK(minuscule_nodes(*rd("A3")) == std::vector<Node>{1, 2, 3});
  CHECK(minuscule_nodes(*rd("D4")) == std::vector<Node>{1, 3, 4});
  CHECK(minuscule_nodes(*rd("E6")) == std::vector<Node>{1, 6});
  CHECK(minuscule_nodes(*rd("E7")) == std::vector<Node>{7});
  // Affine A_n: dihedral group of the (n+1)-cycle.
  CHECK(diagram_automorphisms(*rd("A3")).size() == 8);
  CHECK(diagram_automorphisms(*rd("E8")).size() == 1);
  const auto autos = diagram_automorphisms(*rd("D4"));
  CHECK(autos.size() == 24);
  CHECK(autos.front() == std::vector<Node>{0, 1, 2, 3, 4});
}
