#include <doctest.h>

#include <algorithm>

#include "affgr/classify.hpp"
#include "affgr/cohomology.hpp"
#include "affgr/error.hpp"

using namespace affgr;

TEST_CASE("Chevalley coefficients along chains") {
  CHECK(chain_coeffs(parse_type("G2")).a == std::vector<int64_t>{1, 3, 2, 3, 1});
  CHECK(chain_coeffs(parse_type("A1")).a == std::vector<int64_t>{2});
  for (int n = 2; n <= 6; ++n) {
    const ChainCoeffs c = chain_coeffs(make_type('C', n));
    CHECK(c.is_chain);
    CHECK(c.a == std::vector<int64_t>(2 * n - 1, 2));
  }
  CHECK_FALSE(chain_coeffs(parse_type("A3")).is_chain);
  CHECK(chain_coeffs(parse_type("A3")).a.empty());
}

TEST_CASE("PD status") {
  CHECK(thom_pd_status(parse_type("G2")) == PDStatus::RationalOnly);
  CHECK(thom_pd_status(parse_type("C3")) == PDStatus::RationalOnly);
  CHECK(thom_pd_status(parse_type("E6")) == PDStatus::NotPalindromic);
  CHECK(pd_status_from(ChainCoeffs{true, {1, -1, 1}}) == PDStatus::Integral);
  CHECK(pd_status_from(ChainCoeffs{true, {1, 0, 1}}) == PDStatus::PalindromicOnly);
  CHECK(pd_status_from(ChainCoeffs{}) == PDStatus::NotPalindromic);
  for (LieType t : all_types(8)) CHECK(thom_pd_status(t) != PDStatus::Integral);
}

TEST_CASE("divisor operators commute and are additive") {
  for (const char* label : {"A3", "B3", "C3", "G2", "D4"}) {
    CAPTURE(label);
    const auto rd = root_datum(parse_type(label));
    for (const std::vector<Node>& subset : {std::vector<Node>{}, I_of_lambda0(*rd)}) {
      const FlagCohomology H(rd, subset);
      const int n = rd->rank();
      // Characters of the parabolic: weights vanishing on the nodes in I.
      std::vector<Node> outside;
      for (Node s = 1; s <= n; ++s)
        if (!std::binary_search(H.quotient().subset.begin(), H.quotient().subset.end(), s))
          outside.push_back(s);
      for (Node i : outside)
        for (Node j : outside) {
          Weight wi{IntVec(n, 0)}, wj{IntVec(n, 0)}, sum{IntVec(n, 0)};
          wi.coords[i - 1] = 1;
          wj.coords[j - 1] = 1;
          sum.coords[i - 1] += 1;
          sum.coords[j - 1] += 1;
          for (size_t k = 0; k < H.quotient().size(); ++k) {
            const CohomClass b = H.basis(int(k));
            CHECK(H.multiply_divisor(wi, H.multiply_divisor(wj, b)) ==
                  H.multiply_divisor(wj, H.multiply_divisor(wi, b)));
            CohomClass lin = H.multiply_divisor(wi, b);
            const CohomClass other = H.multiply_divisor(wj, b);
            for (size_t m = 0; m < lin.coeffs.size(); ++m) lin.coeffs[m] += other.coeffs[m];
            CHECK(H.multiply_divisor(sum, b) == lin);
          }
        }
    }
  }
}

TEST_CASE("divisor classes and the identity class") {
  const auto rd = root_datum(parse_type("A2"));
  const FlagCohomology H(rd, {});
  const Weight w1{{1, 0}};
  // sigma_mu * 1 = sigma_mu.
  CHECK(H.chevalley_divisor_mult(w1, 0) == H.divisor_class(w1));
  CHECK(H.describe(H.divisor_class(w1)) == "s[1]");
  CHECK(H.describe(H.zero()) == "0");
  // Monk: sigma_{omega_1} * sigma_{s_1} = sigma_{s_2 s_1}.
  const WeylGroup& W = H.weyl();
  const std::vector<Node> s1{1}, s21{2, 1};
  CHECK(H.chevalley_divisor_mult(w1, W.from_word(s1)) ==
        H.basis(*H.quotient().index_of(W, W.from_word(s21))));
  const FlagCohomology P(rd, {2});
  const std::vector<Node> s2{2};
  CHECK_THROWS_AS(P.chevalley_divisor_mult(w1, P.weyl().from_word(s2)), PreconditionError);
  CHECK_THROWS_AS(H.divisor_class(Weight{{1}}), MismatchError);
}

TEST_CASE("c1 is the highest-root divisor") {
  CHECK(highest_root_weight(*root_datum(parse_type("G2"))).coords == IntVec{0, 1});
  CHECK(highest_root_weight(*root_datum(parse_type("A3"))).coords == IntVec{1, 0, 1});
  const CohomClass c = c1_class(parse_type("C2"));
  CHECK(c.coeffs == std::vector<int64_t>{0, 2, 0, 0});
}
