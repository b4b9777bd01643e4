#include "affgr/graded_poly.hpp"

#include <algorithm>
#include <sstream>

namespace affgr {

GradedPoly::GradedPoly(std::vector<int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

GradedPoly GradedPoly::monomial(int degree, int64_t c) {
  std::vector<int64_t> v(degree + 1, 0);
  v[degree] = c;
  return GradedPoly(std::move(v));
}

void GradedPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int64_t GradedPoly::operator[](int k) const {
  return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : 0;
}

int64_t GradedPoly::value_at_one() const {
  int64_t s = 0;
  for (int64_t c : coeffs_) s += c;
  return s;
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
  std::vector<int64_t> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return GradedPoly(std::move(v));
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return {};
  std::vector<int64_t> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return GradedPoly(std::move(v));
}

GradedPoly GradedPoly::shifted(int by) const {
  if (coeffs_.empty()) return {};
  std::vector<int64_t> v(by, 0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return GradedPoly(std::move(v));
}

std::string GradedPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    int64_t c = coeffs_[k];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const int64_t a = c < 0 ? -c : c;
    if (k == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a;
    os << 'q';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

bool is_palindromic(const GradedPoly& p) {
  const auto& c = p.coeffs();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

bool is_chain(const GradedPoly& p) {
  const auto& c = p.coeffs();
  return !c.empty() && std::all_of(c.begin(), c.end(), [](int64_t x) { return x == 1; });
}

}  // namespace affgr
