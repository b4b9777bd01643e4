#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace affgr {

/// A simple Lie type: family letter plus rank, always in canonical form.
/// The low-rank coincidences C1=A1, B2=C2, D3=A3 are folded into A1, C2, A3.
struct LieType {
  char family = 'A';
  int rank = 1;

  std::string label() const { return std::string(1, family) + std::to_string(rank); }
  auto operator<=>(const LieType&) const = default;
};

/// Parses labels such as "G2", "e8" or "C1". Throws ParseError on malformed
/// labels or ranks outside the family's bounds.
LieType parse_type(std::string_view label);

/// Builds a canonical type from its parts, applying the same bounds and aliases.
LieType make_type(char family, int rank);

/// Every simple type of rank at most `max_rank`, in (family, rank) order.
/// Aliased labels are not repeated.
std::vector<LieType> all_types(int max_rank);

}  // namespace affgr
