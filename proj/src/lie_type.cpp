#include "affgr/lie_type.hpp"

#include <cctype>

#include "affgr/error.hpp"

namespace affgr {

namespace {

std::string bound_message(char family, int rank, const char* bound) {
  return std::string("rank ") + std::to_string(rank) + " out of bounds for type " + family +
         " (" + bound + ")";
}

}  // namespace

LieType make_type(char family, int rank) {
  family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
  switch (family) {
    case 'A':
      if (rank < 1) throw ParseError(bound_message(family, rank, "A requires rank >= 1"));
      return {'A', rank};
    case 'B':
      if (rank < 2) throw ParseError(bound_message(family, rank, "B requires rank >= 2"));
      if (rank == 2) return {'C', 2};
      return {'B', rank};
    case 'C':
      if (rank < 1) throw ParseError(bound_message(family, rank, "C requires rank >= 1"));
      if (rank == 1) return {'A', 1};
      return {'C', rank};
    case 'D':
      if (rank < 3) throw ParseError(bound_message(family, rank, "D requires rank >= 4"));
      if (rank == 3) return {'A', 3};
      return {'D', rank};
    case 'E':
      if (rank < 6 || rank > 8)
        throw ParseError(bound_message(family, rank, "E requires rank in {6,7,8}"));
      return {'E', rank};
    case 'F':
      if (rank != 4) throw ParseError(bound_message(family, rank, "F requires rank 4"));
      return {'F', 4};
    case 'G':
      if (rank != 2) throw ParseError(bound_message(family, rank, "G requires rank 2"));
      return {'G', 2};
    default:
      throw ParseError(std::string("unknown Lie family '") + family + "'");
  }
}

LieType parse_type(std::string_view label) {
  if (label.size() < 2 || !std::isalpha(static_cast<unsigned char>(label[0])))
    throw ParseError("malformed type label '" + std::string(label) +
                     "' (expected <letter><digits>, e.g. G2)");
  int rank = 0;
  for (char c : label.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("malformed type label '" + std::string(label) +
                       "' (expected <letter><digits>, e.g. G2)");
    rank = rank * 10 + (c - '0');
    if (rank > 1000) throw ParseError("rank too large in type label '" + std::string(label) + "'");
  }
  return make_type(label[0], rank);
}

std::vector<LieType> all_types(int max_rank) {
  std::vector<LieType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({'A', n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({'B', n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({'C', n});
  for (int n = 4; n <= max_rank; ++n) out.push_back({'D', n});
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({'E', n});
  if (max_rank >= 4) out.push_back({'F', 4});
  if (max_rank >= 2) out.push_back({'G', 2});
  return out;
}

}  // namespace affgr
