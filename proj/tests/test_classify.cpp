#include <doctest.h>

#include <algorithm>

#include "affgr/classify.hpp"
#include "affgr/verify.hpp"

using namespace affgr;

TEST_CASE("I(lambda_0) by pairing and by diagram") {
  for (LieType t : all_types(8)) {
    const auto rd = root_datum(t);
    CHECK(I_of_lambda0(*rd) == I_of_lambda0_by_diagram(*rd));
  }
  CHECK(I_of_lambda0(*root_datum(parse_type("G2"))) == std::vector<Node>{1});
  CHECK(I_of_lambda0(*root_datum(parse_type("A1"))).empty());
  CHECK(I_of_lambda0(*root_datum(parse_type("D5"))) == std::vector<Node>{1, 3, 4, 5});
}

TEST_CASE("subdiagram types") {
  const auto b4 = root_datum(parse_type("B4"));
  CHECK(subdiagram_type(*b4, {1, 3, 4}) == "A1xC2");
  CHECK(subdiagram_type(*b4, {2, 3, 4}) == "B3");
  CHECK(subdiagram_type(*b4, {}) == "");
  CHECK(subdiagram_type(*root_datum(parse_type("E8")), {1, 2, 3, 4, 5, 6, 7}) == "E7");
  CHECK(subdiagram_type(*root_datum(parse_type("D5")), {1, 3, 4, 5}) == "A1xA3");
  CHECK(subdiagram_type(*root_datum(parse_type("F4")), {2, 3, 4}) == "C3");
  CHECK(subdiagram_type(*root_datum(parse_type("C4")), {2, 3, 4}) == "C3");
  CHECK(subdiagram_type(*root_datum(parse_type("E7")), {2, 3, 4, 5, 6, 7}) == "D6");
}

TEST_CASE("Bott nodes") {
  CHECK(bott_nodes(*root_datum(parse_type("G2"))) == std::vector<Node>{2});
  CHECK(bott_nodes(*root_datum(parse_type("B3"))) == std::vector<Node>{2});
  CHECK(bott_nodes(*root_datum(parse_type("D4"))) == std::vector<Node>{2});
  CHECK(bott_nodes(*root_datum(parse_type("E6"))) == std::vector<Node>{2, 4});
  CHECK(bott_nodes(*root_datum(parse_type("F4"))) == std::vector<Node>{1, 2});
  CHECK(bott_nodes(*root_datum(parse_type("E8"))).size() == 8);
}

TEST_CASE("per-type classification properties") {
  for (LieType t : all_types(8)) {
    const CheckResult r = check_classification(t);
    CAPTURE(r.detail);
    CHECK(r.passed);
    CHECK(check_chain(t).passed);
    CHECK(check_exponents(t).passed);
  }
}

TEST_CASE("type reports") {
  const TypeReport g2 = type_report(parse_type("G2"));
  CHECK(g2.levi_descriptor == "G2/A1, dim 5");
  CHECK(g2.chain);
  CHECK(g2.e_top == 5);
  CHECK(g2.max_smooth_schubert_dim == std::optional<int>(2));
  CHECK_FALSE(g2.smooth_schubert_genv);
  const TypeReport a1 = type_report(parse_type("A1"));
  CHECK(a1.levi_descriptor == "A1/T, dim 1");
  CHECK(a1.levi_poincare == GradedPoly({1, 1}));
  const auto all = classify_all(3);
  CHECK(std::any_of(all.begin(), all.end(), [](const TypeReport& r) { return r.type.label() == "E8"; }));
  int exceptional = 0;
  for (const auto& r : all) exceptional += !r.smooth_schubert_genv;
  CHECK(exceptional == 2);  // G2 and E8
}

TEST_CASE("exponent helpers") {
  CHECK(series_coefficients({1, 2}, 6) == std::vector<int64_t>{1, 1, 2, 2, 3, 3, 4});
  CHECK(standard_exponents(parse_type("E8")).back() == 29);
  CHECK(expected_chain(parse_type("C1")));
  CHECK_FALSE(expected_chain(parse_type("B3")));
}
