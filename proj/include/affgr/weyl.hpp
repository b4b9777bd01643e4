#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "affgr/graded_poly.hpp"
#include "affgr/root_datum.hpp"

namespace affgr {

/// Element of the finite Weyl group, stored as its action on the coroot
/// lattice together with the inverse action. The matrix is the canonical form.
class WeylElem {
 public:
  const IntMatrix& action() const noexcept { return act_; }
  const IntMatrix& inverse_action() const noexcept { return inv_; }

  bool operator==(const WeylElem& o) const { return act_ == o.act_; }
  auto operator<=>(const WeylElem& o) const { return act_ <=> o.act_; }

 private:
  friend class WeylGroup;
  WeylElem(IntMatrix act, IntMatrix inv) : act_(std::move(act)), inv_(std::move(inv)) {}
  IntMatrix act_;
  IntMatrix inv_;
};

class WeylGroup {
 public:
  explicit WeylGroup(RootDatumPtr rd);

  const RootDatum& datum() const noexcept { return *rd_; }
  const RootDatumPtr& datum_ptr() const noexcept { return rd_; }
  int rank() const noexcept { return rd_->rank(); }

  WeylElem identity() const;
  WeylElem simple(Node s) const;
  /// s_beta for a root beta (sign irrelevant).
  WeylElem reflection(const RootVec& beta) const;
  WeylElem from_word(std::span<const Node> word) const;
  /// Rebuilds an element from its coroot-lattice action; throws
  /// PreconditionError if the matrix is not in W.
  WeylElem from_action(const IntMatrix& m) const;

  WeylElem mult(const WeylElem& u, const WeylElem& w) const;
  WeylElem inverse(const WeylElem& w) const;

  /// Number of positive roots sent to negative roots.
  int length(const WeylElem& w) const;
  /// Greedy stripping of the smallest left descent; lexicographically first
  /// reduced word.
  std::vector<Node> reduced_word(const WeylElem& w) const;
  bool is_left_descent(const WeylElem& w, Node s) const;
  bool is_right_descent(const WeylElem& w, Node s) const;

  CorootVec apply(const WeylElem& w, const CorootVec& v) const;
  RootVec apply(const WeylElem& w, const RootVec& v) const;
  Weight apply(const WeylElem& w, const Weight& v) const;

  /// Bruhat order via the lifting property along left descents of w.
  bool bruhat_leq(const WeylElem& u, const WeylElem& w) const;

  /// Size of the orbit of v under the subgroup generated by `gens`. Throws
  /// BoundExceeded past `limit` elements.
  int64_t orbit_size(const CorootVec& v, std::span<const Node> gens, int64_t limit) const;

 private:
  void check(const WeylElem& w) const;

  RootDatumPtr rd_;
  std::vector<WeylElem> simples_;
};

/// Minimal-length representatives of W / W_I, graded by length and ordered
/// by (length, reduced word).
struct ParabolicQuotient {
  std::vector<Node> subset;
  /// Coroot-lattice vector whose stabilizer is exactly W_I.
  CorootVec anchor;
  std::vector<WeylElem> reps;
  std::vector<std::vector<Node>> words;
  std::vector<int> lengths;
  std::map<IntVec, int> by_orbit_point;

  size_t size() const { return reps.size(); }
  int max_length() const { return lengths.empty() ? 0 : lengths.back(); }
  /// Position of the representative of the coset wW_I.
  int coset_index(const WeylGroup& W, const WeylElem& w) const;
  /// Position of w if w itself is a minimal representative.
  std::optional<int> index_of(const WeylGroup& W, const WeylElem& w) const;
};

/// Level-synchronous BFS on the W-orbit of the anchor vector. Throws
/// BoundExceeded when more than `limit` representatives would be produced.
ParabolicQuotient min_coset_reps(const WeylGroup& W, std::vector<Node> subset,
                                 int64_t limit = 5'000'000);

GradedPoly quotient_poincare(const ParabolicQuotient& q);
GradedPoly quotient_poincare(LieType t, std::vector<Node> subset);

/// Validates and sorts a node subset of the finite nodes.
std::vector<Node> normalize_subset(const RootDatum& rd, std::vector<Node> subset);

}  // namespace affgr
