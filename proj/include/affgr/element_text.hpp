#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "affgr/affine.hpp"

namespace affgr {

/// Element grammar:
///   word:<i>(,<i>)*          product of generators, left to right ("word:" is 1)
///   t:<c>(,<c>)*             pure translation, coroot coordinates
///   t:<c>(,<c>)*|w:<word>    t_lambda times a finite word
AffineElem parse_element(const AffineWeylGroup& G, std::string_view text);

/// Canonical emission: "word:" followed by the reduced word.
std::string format_element(const AffineWeylGroup& G, const AffineElem& x);

/// "t:<coords>|w:<finite word>".
std::string format_translation_form(const AffineWeylGroup& G, const AffineElem& x);

/// Comma-separated integers; throws ParseError naming the bad token.
std::vector<int> parse_int_list(std::string_view text, std::string_view context);

}  // namespace affgr
