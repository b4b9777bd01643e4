#include <doctest.h>

#include <random>

#include "affgr/element_text.hpp"
#include "affgr/error.hpp"

using namespace affgr;

TEST_CASE("element grammar") {
  const AffineWeylGroup G(parse_type("G2"));
  CHECK(parse_element(G, "word:") == G.identity());
  CHECK(parse_element(G, "t:0,0") == G.identity());
  CHECK(parse_element(G, "t:-1,-2") == G.lambda0());
  CHECK(parse_element(G, "word:2,1,2,1,2,0") == G.lambda0());
  CHECK(parse_element(G, "t:1,2|w:2,1,2,1,2") == G.generator(0));
  CHECK(format_element(G, G.lambda0()) == "word:2,1,2,1,2,0");
  CHECK(format_translation_form(G, G.lambda0()) == "t:-1,-2|w:");
}

TEST_CASE("formatting round-trips") {
  std::mt19937_64 rng(0x5eed);
  for (const char* label : {"A1", "C2", "G2", "F4", "E6"}) {
    const AffineWeylGroup G(parse_type(label));
    for (int i = 0; i < 100; ++i) {
      std::vector<Node> w(rng() % 10);
      for (auto& s : w) s = int(rng() % (G.rank() + 1));
      const AffineElem x = G.from_word(w);
      CHECK(parse_element(G, format_element(G, x)) == x);
      CHECK(parse_element(G, format_translation_form(G, x)) == x);
      CHECK(format_element(G, parse_element(G, format_element(G, x))) == format_element(G, x));
    }
  }
}

TEST_CASE("parse errors name the offending token") {
  const AffineWeylGroup G(parse_type("A2"));
  auto message = [&](const char* text) -> std::string {
    try {
      parse_element(G, text);
    } catch (const ParseError& e) {
      return e.what();
    }
    return "";
  };
  CHECK(message("word:1,x").find("'x'") != std::string::npos);
  CHECK(message("word:1,7").find("7") != std::string::npos);
  CHECK(message("t:1").find("coordinates") != std::string::npos);
  CHECK(message("s:1") != "");
  CHECK(message("t:1,2|w:3") != "");
  CHECK(message("t:1,2|v:1") != "");
  CHECK(message("") != "");
  CHECK(parse_int_list("3,-4,5", "test") == std::vector<int>{3, -4, 5});
  CHECK_THROWS_AS(parse_int_list("3,,4", "test"), ParseError);
}
