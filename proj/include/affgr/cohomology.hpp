#pragma once

#include <string>
#include <vector>

#include "affgr/weyl.hpp"

namespace affgr {

/// Integer combination of Schubert classes sigma_w, w in W^I, of G/Q_I.
/// coeffs is indexed by position in the quotient's representative list.
struct CohomClass {
  LieType type;
  std::vector<Node> subset;
  std::vector<int64_t> coeffs;

  bool is_zero() const;
  bool operator==(const CohomClass&) const = default;
};

/// Schubert-basis cohomology of G/Q_I, with multiplication by divisor classes.
class FlagCohomology {
 public:
  FlagCohomology(RootDatumPtr rd, std::vector<Node> subset);

  const WeylGroup& weyl() const noexcept { return W_; }
  const ParabolicQuotient& quotient() const noexcept { return q_; }

  CohomClass zero() const;
  CohomClass basis(int index) const;
  /// Indices of the basis classes of degree k.
  std::vector<int> degree_basis(int k) const;

  /// sigma_mu = sum over s outside I of <alpha_s^vee, mu> sigma_s.
  CohomClass divisor_class(const Weight& mu) const;

  /// Chevalley formula: sigma_mu * sigma_w is the sum, over positive roots beta
  /// with w s_beta in W^I and l(w s_beta) = l(w) + 1, of <beta^vee, mu> sigma_{w s_beta}.
  /// Throws PreconditionError when w is not a minimal representative.
  CohomClass chevalley_divisor_mult(const Weight& mu, const WeylElem& w) const;
  CohomClass chevalley_divisor_mult(const Weight& mu, int index) const;
  /// Linear extension to arbitrary classes.
  CohomClass multiply_divisor(const Weight& mu, const CohomClass& c) const;

  /// "2*s[1] + s[2,1]" using reduced words of the representatives.
  std::string describe(const CohomClass& c) const;

 private:
  RootDatumPtr rd_;
  WeylGroup W_;
  ParabolicQuotient q_;
  std::vector<WeylElem> reflections_;
};

/// The weight of the highest root alpha_0 in fundamental-weight coordinates.
Weight highest_root_weight(const RootDatum& rd);

/// First Chern class of the line bundle of weight +alpha_0 over G/Q_{I(lambda_0)}.
CohomClass c1_class(LieType t);

struct ChainCoeffs {
  bool is_chain = false;
  /// c1 * y_{k-1} = a_k y_k for k = 1..n, y_0 = 1; empty unless is_chain.
  std::vector<int64_t> a;
};

ChainCoeffs chain_coeffs(LieType t);

enum class PDStatus {
  NotPalindromic,
  /// Chain base but some a_k = 0: additive duality only.
  PalindromicOnly,
  RationalOnly,
  Integral,
};

std::string to_string(PDStatus s);

/// Poincare duality of the Thom space over G/Q_{I(lambda_0)}: NotPalindromic
/// unless the base is a chain; then Integral iff every a_k = +-1, RationalOnly
/// iff every a_k != 0.
PDStatus thom_pd_status(LieType t);
PDStatus pd_status_from(const ChainCoeffs& c);

}  // namespace affgr
