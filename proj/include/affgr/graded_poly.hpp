#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace affgr {

/// Integer polynomial in q. q^k counts complex dimension k, i.e. topological
/// degree 2k (the q <-> t^2 substitution of Poincare polynomials).
class GradedPoly {
 public:
  GradedPoly() = default;
  explicit GradedPoly(std::vector<int64_t> coeffs);

  static GradedPoly monomial(int degree, int64_t c = 1);

  const std::vector<int64_t>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  int64_t operator[](int k) const;
  int64_t value_at_one() const;

  GradedPoly operator+(const GradedPoly& o) const;
  GradedPoly operator*(const GradedPoly& o) const;
  GradedPoly shifted(int by) const;

  bool operator==(const GradedPoly&) const = default;

  /// "1 + q + 2q^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<int64_t> coeffs_;
};

bool is_palindromic(const GradedPoly& p);
/// 1 + q + ... + q^n for some n >= 0.
bool is_chain(const GradedPoly& p);

}  // namespace affgr
