#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "affgr/affine.hpp"
#include "affgr/graded_poly.hpp"

namespace affgr {

/// Homology class [X_w] of an affine Schubert variety; w is a minimal coset
/// representative.
struct SchubertClass {
  AffineElem index;
};

/// Throws PreconditionError unless x is a minimal coset representative.
SchubertClass schubert_class(const AffineWeylGroup& G, const AffineElem& x);

/// Either zero or a single Schubert class.
struct StarResult {
  std::optional<SchubertClass> cls;

  bool is_zero() const { return !cls.has_value(); }
};

/// [X_tau] * [X_nu] = [X_{tau nu}] when the product is length-additive and
/// lands in the minimal representatives; zero otherwise.
StarResult star(const AffineWeylGroup& G, const SchubertClass& tau, const SchubertClass& nu);

/// Folds `star` over the classes, left to right. The empty product is [X_1].
StarResult star_fold(const AffineWeylGroup& G, const std::vector<SchubertClass>& factors);

/// True where the two readings of "S-reduced" disagree: tau nu is
/// length-additive but not a minimal representative.
bool star_readings_differ(const AffineWeylGroup& G, const SchubertClass& tau,
                          const SchubertClass& nu);

struct GeneratingStep {
  int n = 0;
  bool is_class = false;
  bool is_translation = false;  // index equals t_{-n alpha_0^vee}
  int length = 0;
  int expected_length = 0;
  std::optional<AffineElem> power;

  bool ok() const { return is_class && is_translation && length == expected_length; }
};

struct GeneratingReport {
  LieType type;
  int base_length = 0;
  std::vector<GeneratingStep> steps;

  bool ok() const;
};

/// Checks that the n-fold star power of [X_{t_{lambda_0}}] is the class at
/// t_{-n alpha_0^vee} of dimension n * l(t_{lambda_0}), for 1 <= n <= n_max.
GeneratingReport verify_canonical_generating(const AffineWeylGroup& G, int n_max);

/// Segments as nu s_0 with nu a minimal representative of W / W_J, J the
/// finite nodes not adjacent to node 0. Ordered canonically.
std::vector<AffineElem> segments(const AffineWeylGroup& G);
/// {min_rep(v s_0) : v in W} minus the identity. Walks all of W.
std::vector<AffineElem> segments_by_orbit(const AffineWeylGroup& G, int64_t w_limit = 2'000'000);
/// Nonidentity minimal representatives below t_{lambda_0} in Bruhat order.
std::vector<AffineElem> segments_by_bruhat(const AffineWeylGroup& G);

class FactorizationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Every tuple of segments with product w, additive lengths, and every left
/// partial product a minimal representative.
std::vector<std::vector<AffineElem>> all_segment_factorizations(const AffineWeylGroup& G,
                                                                const AffineElem& w);
/// The unique such tuple; FactorizationError if there is not exactly one.
std::vector<AffineElem> segment_factorize(const AffineWeylGroup& G, const AffineElem& w);

/// [X_w] equals the star product of the classes of its segment factors.
bool star_refactor_check(const AffineWeylGroup& G, const AffineElem& w);

/// For omega <= min_rep(sigma t_lambda), finds tau <= sigma and nu <= t_lambda,
/// both minimal representatives, with [X_tau] * [X_nu] = [X_omega], taking nu
/// of maximal length.
std::pair<AffineElem, AffineElem> star_decompose(const AffineWeylGroup& G, const AffineElem& omega,
                                                 const AffineElem& sigma,
                                                 const CorootVec& lambda);

/// q^k counts minimal representatives v <= w with l(v) = k.
GradedPoly schubert_poincare(const AffineWeylGroup& G, const AffineElem& w);

}  // namespace affgr
