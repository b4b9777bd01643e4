#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace affgr {

using IntVec = std::vector<int32_t>;

/// Coordinates in the simple-root basis.
struct RootVec {
  IntVec coords;
  auto operator<=>(const RootVec&) const = default;
};

/// Coordinates in the simple-coroot basis; elements of the coroot lattice.
struct CorootVec {
  IntVec coords;
  auto operator<=>(const CorootVec&) const = default;
};

/// Coordinates in the fundamental-weight basis, i.e. the pairings with the
/// simple coroots.
struct Weight {
  IntVec coords;
  auto operator<=>(const Weight&) const = default;
};

std::string format_coords(std::span<const int32_t> v);

/// Dense row-major integer matrix. Ranks here are at most 9 (affine E8), so
/// nothing is tuned for size.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, 0) {}

  static IntMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  int32_t& operator()(int i, int j) { return data_[size_t(i) * cols_ + j]; }
  int32_t operator()(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

  std::span<const int32_t> data() const noexcept { return data_; }

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVec operator*(std::span<const int32_t> v) const;

  auto operator<=>(const IntMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  IntVec data_;
};

}  // namespace affgr
