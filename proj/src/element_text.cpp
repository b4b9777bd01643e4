#include "affgr/element_text.hpp"

#include <charconv>
#include <sstream>

#include "affgr/error.hpp"

namespace affgr {

std::vector<int> parse_int_list(std::string_view text, std::string_view context) {
  std::vector<int> out;
  if (text.empty()) return out;
  size_t pos = 0;
  while (true) {
    const size_t comma = text.find(',', pos);
    const std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos
                                                                                : comma - pos);
    int v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (tok.empty() || ec != std::errc() || ptr != last)
      throw ParseError("bad token '" + std::string(tok) + "' in " + std::string(context));
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

AffineElem parse_element(const AffineWeylGroup& G, std::string_view text) {
  const std::string ctx = "element '" + std::string(text) + "'";
  if (text.starts_with("word:")) {
    const auto word = parse_int_list(text.substr(5), ctx);
    return G.from_word(word);
  }
  if (text.starts_with("t:")) {
    std::string_view rest = text.substr(2);
    std::string_view wpart;
    const size_t bar = rest.find('|');
    if (bar != std::string_view::npos) {
      wpart = rest.substr(bar + 1);
      rest = rest.substr(0, bar);
      if (!wpart.starts_with("w:"))
        throw ParseError("bad token '" + std::string(wpart) + "' in " + ctx +
                         " (expected w:<word> after '|')");
      wpart = wpart.substr(2);
    }
    const auto coords = parse_int_list(rest, ctx);
    if (static_cast<int>(coords.size()) != G.rank())
      throw ParseError("translation '" + std::string(rest) + "' has " +
                       std::to_string(coords.size()) + " coordinates; " + G.type().label() +
                       " needs " + std::to_string(G.rank()));
    const auto word = parse_int_list(wpart, ctx);
    for (int s : word)
      if (s < 1 || s > G.rank())
        throw ParseError("bad token '" + std::to_string(s) + "' in " + ctx +
                         " (finite word uses nodes 1.." + std::to_string(G.rank()) + ")");
    CorootVec lam{IntVec(coords.begin(), coords.end())};
    return G.make(lam, G.finite().from_word(std::vector<Node>(word.begin(), word.end())));
  }
  throw ParseError("bad token '" + std::string(text) + "' (expected word:... or t:...)");
}

std::string format_element(const AffineWeylGroup& G, const AffineElem& x) {
  const auto word = G.reduced_word(x);
  std::ostringstream os;
  os << "word:";
  for (size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << word[i];
  return os.str();
}

std::string format_translation_form(const AffineWeylGroup& G, const AffineElem& x) {
  const auto word = G.finite().reduced_word(x.fin);
  std::ostringstream os;
  os << "t:" << format_coords(x.trans.coords) << "|w:";
  for (size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << word[i];
  return os.str();
}

}  // namespace affgr
