#include "affgr/cohomology.hpp"

#include <algorithm>
#include <sstream>

#include "affgr/classify.hpp"
#include "affgr/error.hpp"

namespace affgr {

bool CohomClass::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int64_t c) { return c == 0; });
}

FlagCohomology::FlagCohomology(RootDatumPtr rd, std::vector<Node> subset)
    : rd_(rd), W_(rd), q_(min_coset_reps(W_, std::move(subset))) {
  for (const RootVec& beta : rd_->positive_roots()) reflections_.push_back(W_.reflection(beta));
}

CohomClass FlagCohomology::zero() const {
  return CohomClass{rd_->type(), q_.subset, std::vector<int64_t>(q_.size(), 0)};
}

CohomClass FlagCohomology::basis(int index) const {
  CohomClass c = zero();
  c.coeffs.at(index) = 1;
  return c;
}

std::vector<int> FlagCohomology::degree_basis(int k) const {
  std::vector<int> out;
  for (size_t i = 0; i < q_.size(); ++i)
    if (q_.lengths[i] == k) out.push_back(static_cast<int>(i));
  return out;
}

CohomClass FlagCohomology::divisor_class(const Weight& mu) const {
  if (static_cast<int>(mu.coords.size()) != rd_->rank())
    throw MismatchError("divisor_class: weight rank mismatch");
  CohomClass c = zero();
  for (int idx : degree_basis(1)) {
    const Node s = q_.words[idx].front();
    c.coeffs[idx] = mu.coords[s - 1];
  }
  return c;
}

CohomClass FlagCohomology::chevalley_divisor_mult(const Weight& mu, const WeylElem& w) const {
  const auto idx = q_.index_of(W_, w);
  if (!idx)
    throw PreconditionError("chevalley_divisor_mult: element is not a minimal representative of W/W_I");
  return chevalley_divisor_mult(mu, *idx);
}

CohomClass FlagCohomology::chevalley_divisor_mult(const Weight& mu, int index) const {
  if (static_cast<int>(mu.coords.size()) != rd_->rank())
    throw MismatchError("chevalley_divisor_mult: weight rank mismatch");
  const WeylElem& w = q_.reps.at(index);
  const int lw = q_.lengths[index];
  CohomClass out = zero();
  const auto& coroots = rd_->positive_coroots();
  for (size_t b = 0; b < reflections_.size(); ++b) {
    const int coeff = rd_->pairing(coroots[b], mu);
    if (coeff == 0) continue;
    const WeylElem v = W_.mult(w, reflections_[b]);
    if (W_.length(v) != lw + 1) continue;
    const auto j = q_.index_of(W_, v);
    if (!j) continue;
    out.coeffs[*j] += coeff;
  }
  return out;
}

CohomClass FlagCohomology::multiply_divisor(const Weight& mu, const CohomClass& c) const {
  CohomClass out = zero();
  for (size_t i = 0; i < c.coeffs.size(); ++i) {
    if (c.coeffs[i] == 0) continue;
    const CohomClass term = chevalley_divisor_mult(mu, static_cast<int>(i));
    for (size_t j = 0; j < term.coeffs.size(); ++j) out.coeffs[j] += c.coeffs[i] * term.coeffs[j];
  }
  return out;
}

std::string FlagCohomology::describe(const CohomClass& c) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c.coeffs.size(); ++i) {
    if (c.coeffs[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c.coeffs[i] != 1) os << c.coeffs[i] << '*';
    os << "s[";
    for (size_t k = 0; k < q_.words[i].size(); ++k) os << (k ? "," : "") << q_.words[i][k];
    os << ']';
  }
  return first ? "0" : os.str();
}

Weight highest_root_weight(const RootDatum& rd) { return rd.weight_of(rd.highest_root()); }

CohomClass c1_class(LieType t) {
  const RootDatumPtr rd = root_datum(t);
  FlagCohomology H(rd, I_of_lambda0(*rd));
  return H.divisor_class(highest_root_weight(*rd));
}

ChainCoeffs chain_coeffs(LieType t) {
  const RootDatumPtr rd = root_datum(t);
  WeylGroup W(rd);
  const ParabolicQuotient q = min_coset_reps(W, I_of_lambda0(*rd));
  ChainCoeffs out;
  if (!is_chain(quotient_poincare(q))) return out;
  out.is_chain = true;
  FlagCohomology H(rd, q.subset);
  const Weight mu = highest_root_weight(*rd);
  // In a chain the representatives are already ordered by length: y_k is index k.
  for (int k = 1; k <= q.max_length(); ++k) {
    const CohomClass prod = H.chevalley_divisor_mult(mu, k - 1);
    out.a.push_back(prod.coeffs[k]);
  }
  return out;
}

PDStatus pd_status_from(const ChainCoeffs& c) {
  if (!c.is_chain) return PDStatus::NotPalindromic;
  if (std::all_of(c.a.begin(), c.a.end(), [](int64_t x) { return x == 1 || x == -1; }))
    return PDStatus::Integral;
  if (std::all_of(c.a.begin(), c.a.end(), [](int64_t x) { return x != 0; }))
    return PDStatus::RationalOnly;
  return PDStatus::PalindromicOnly;
}

PDStatus thom_pd_status(LieType t) { return pd_status_from(chain_coeffs(t)); }

std::string to_string(PDStatus s) {
  switch (s) {
    case PDStatus::NotPalindromic: return "NotPalindromic";
    case PDStatus::PalindromicOnly: return "PalindromicOnly";
    case PDStatus::RationalOnly: return "RationalOnly";
    case PDStatus::Integral: return "Integral";
  }
  return "?";
}

}  // namespace affgr
