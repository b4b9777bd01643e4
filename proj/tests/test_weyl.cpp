#include <doctest.h>

#include <random>
#include <set>

#include "affgr/error.hpp"
#include "affgr/weyl.hpp"

using namespace affgr;

namespace {

std::vector<WeylElem> all_elements(const WeylGroup& W) {
  std::set<WeylElem> seen{W.identity()};
  std::vector<WeylElem> out{W.identity()};
  for (size_t i = 0; i < out.size(); ++i)
    for (Node s = 1; s <= W.rank(); ++s) {
      WeylElem x = W.mult(out[i], W.simple(s));
      if (seen.insert(x).second) out.push_back(x);
    }
  return out;
}

// u <= w iff u is the product of a subword of a reduced word of w.
std::set<WeylElem> subword_products(const WeylGroup& W, const WeylElem& w) {
  const auto word = W.reduced_word(w);
  std::set<WeylElem> out;
  for (uint32_t mask = 0; mask < (1u << word.size()); ++mask) {
    std::vector<Node> sub;
    for (size_t k = 0; k < word.size(); ++k)
      if (mask >> k & 1) sub.push_back(word[k]);
    out.insert(W.from_word(sub));
  }
  return out;
}

}  // namespace

TEST_CASE("group axioms and length on whole groups") {
  for (const char* label : {"A2", "C2", "G2", "A3", "B3"}) {
    CAPTURE(label);
    WeylGroup W(root_datum(parse_type(label)));
    const auto all = all_elements(W);
    CHECK(int64_t(all.size()) == W.datum().weyl_order());
    int longest = 0;
    for (const WeylElem& w : all) {
      const auto word = W.reduced_word(w);
      CHECK(int(word.size()) == W.length(w));
      CHECK(W.from_word(word) == w);
      CHECK(W.length(W.inverse(w)) == W.length(w));
      CHECK(W.mult(w, W.inverse(w)) == W.identity());
      CHECK(W.from_action(w.action()) == w);
      for (Node s = 1; s <= W.rank(); ++s) {
        CHECK(W.is_left_descent(w, s) == (W.length(W.mult(W.simple(s), w)) < W.length(w)));
        CHECK(W.is_right_descent(w, s) == (W.length(W.mult(w, W.simple(s))) < W.length(w)));
      }
      longest = std::max(longest, W.length(w));
    }
    CHECK(size_t(longest) == W.datum().positive_roots().size());
  }
}

TEST_CASE("reflections fix their hyperplane and negate their root") {
  const auto d = root_datum(parse_type("F4"));
  WeylGroup W(d);
  for (size_t k = 0; k < d->positive_roots().size(); ++k) {
    const RootVec& beta = d->positive_roots()[k];
    const WeylElem r = W.reflection(beta);
    CHECK(W.mult(r, r) == W.identity());
    RootVec neg = beta;
    for (auto& c : neg.coords) c = -c;
    CHECK(W.apply(r, beta) == neg);
    CHECK(W.apply(r, d->positive_coroots()[k]).coords ==
          CorootVec{[&] {
            IntVec v = d->positive_coroots()[k].coords;
            for (auto& c : v) c = -c;
            return v;
          }()}.coords);
  }
}

TEST_CASE("from_action rejects matrices outside W") {
  WeylGroup W(root_datum(parse_type("A2")));
  IntMatrix m = IntMatrix::identity(2);
  m(0, 0) = 3;
  CHECK_THROWS_AS(W.from_action(m), PreconditionError);
}

TEST_CASE("Bruhat order agrees with the subword oracle") {
  for (const char* label : {"A2", "C2", "G2", "A3", "B3"}) {
    CAPTURE(label);
    WeylGroup W(root_datum(parse_type(label)));
    const auto all = all_elements(W);
    for (const WeylElem& w : all) {
      const auto below = subword_products(W, w);
      for (const WeylElem& u : all) CHECK(W.bruhat_leq(u, w) == (below.count(u) > 0));
    }
  }
}

TEST_CASE("minimal coset representatives") {
  std::mt19937_64 rng(0x5eed);
  for (LieType t : all_types(5)) {
    const auto d = root_datum(t);
    WeylGroup W(d);
    // A few subsets per type, always including the empty and the full one.
    std::vector<std::vector<Node>> subsets{{}};
    std::vector<Node> full;
    for (Node s = 1; s <= t.rank; ++s) full.push_back(s);
    subsets.push_back(full);
    for (int k = 0; k < 4; ++k) {
      std::vector<Node> s;
      for (Node n = 1; n <= t.rank; ++n)
        if (rng() & 1) s.push_back(n);
      subsets.push_back(s);
    }
    for (const auto& subset : subsets) {
      CAPTURE(t.label());
      const ParabolicQuotient q = min_coset_reps(W, subset);
      // |W| = |W^I| * |W_I|, with |W_I| the stabilizer orbit count of 2 rho^vee.
      const int64_t wi = W.orbit_size(d->two_rho_coroot(), subset, 1'000'000);
      CHECK(int64_t(q.size()) * wi == d->weyl_order());
      CHECK(quotient_poincare(q).value_at_one() == int64_t(q.size()));
      CHECK(is_palindromic(quotient_poincare(q)));
      for (size_t i = 0; i < q.size(); ++i) {
        CHECK(W.length(q.reps[i]) == q.lengths[i]);
        for (Node s : q.subset) CHECK_FALSE(W.is_right_descent(q.reps[i], s));
        CHECK(q.index_of(W, q.reps[i]) == std::optional<int>(int(i)));
        if (i > 0) CHECK(q.lengths[i - 1] <= q.lengths[i]);
      }
    }
  }
}

TEST_CASE("coset_index finds the representative of any coset") {
  WeylGroup W(root_datum(parse_type("B3")));
  const ParabolicQuotient q = min_coset_reps(W, {1, 3});
  for (const WeylElem& w : all_elements(W)) {
    const WeylElem& rep = q.reps[q.coset_index(W, w)];
    // w = rep * u with u in W_I and lengths adding.
    const WeylElem u = W.mult(W.inverse(rep), w);
    CHECK(W.length(w) == W.length(rep) + W.length(u));
    for (Node s : W.reduced_word(u)) CHECK((s == 1 || s == 3));
  }
}

TEST_CASE("orbit_size honours its limit") {
  const auto d = root_datum(parse_type("E8"));
  WeylGroup W(d);
  std::vector<Node> all{1, 2, 3, 4, 5, 6, 7, 8};
  CHECK_THROWS_AS(W.orbit_size(d->two_rho_coroot(), all, 1000), BoundExceeded);
}
