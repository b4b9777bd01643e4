#pragma once

#include <map>
#include <span>
#include <vector>

#include "affgr/weyl.hpp"

namespace affgr {

/// Size limits. These are configuration: exceeding one raises BoundExceeded
/// naming the limit, never a silent truncation.
struct Limits {
  /// Longest level produced by enumerate_minreps and everything built on it
  /// (Schubert Poincare polynomials, segment factorization, decompositions).
  int enum_limit = 12;
  /// Deepest level of the Cayley-graph BFS length oracle.
  int bfs_limit = 10;
  /// Longest element accepted by Bruhat comparisons and by star powers.
  int product_limit = 64;

  /// enum_limit 12 for rank <= 2, 10 above.
  static Limits defaults_for(LieType t);
};

/// x = t_lambda * w: translation by a coroot-lattice vector followed by a
/// finite Weyl element. `length` is filled in by the group that built it.
struct AffineElem {
  CorootVec trans;
  WeylElem fin;
  int length = 0;

  bool operator==(const AffineElem& o) const { return trans == o.trans && fin == o.fin; }
};

/// Levels of the minimal coset representatives of W~ / W.
struct MinRepLevels {
  std::vector<std::vector<AffineElem>> by_length;
  int max_length = -1;

  size_t total() const;
  std::vector<int64_t> sizes() const;
};

/// The affine Weyl group Q^vee x| W with generators s_0, s_1, ..., s_r, where
/// s_0 = t_{theta^vee} s_theta.
class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(LieType t);
  AffineWeylGroup(LieType t, Limits limits);
  AffineWeylGroup(RootDatumPtr rd, Limits limits);

  const RootDatum& datum() const noexcept { return W_.datum(); }
  const WeylGroup& finite() const noexcept { return W_; }
  const Limits& limits() const noexcept { return limits_; }
  LieType type() const { return datum().type(); }
  int rank() const { return datum().rank(); }

  AffineElem identity() const;
  /// Node 0 is s_0; nodes 1..r are the finite simple reflections.
  AffineElem generator(Node s) const;
  AffineElem translation(const CorootVec& lambda) const;
  AffineElem finite_elem(const WeylElem& w) const;
  AffineElem make(const CorootVec& lambda, const WeylElem& w) const;
  /// Left-to-right product of generators.
  AffineElem from_word(std::span<const Node> word) const;

  /// (t_l u)(t_m v) = t_{l + u m} (u v).
  AffineElem mult(const AffineElem& x, const AffineElem& y) const;
  /// (t_l w)^{-1} = t_{-w^{-1} l} w^{-1}.
  AffineElem inverse(const AffineElem& x) const;

  /// Closed length formula for t_lambda w:
  ///   sum over alpha > 0 of | <lambda, alpha> - [w^{-1} alpha < 0] |.
  int length(const CorootVec& lambda, const WeylElem& w) const;

  bool is_left_descent(const AffineElem& x, Node s) const;
  bool is_right_descent(const AffineElem& x, Node s) const;
  /// Strips the smallest left descent until the identity is reached.
  std::vector<Node> reduced_word(const AffineElem& x) const;

  /// No right descent among the finite nodes.
  bool is_min_rep(const AffineElem& x) const;
  AffineElem min_rep(const AffineElem& x) const;

  bool is_antidominant(const CorootVec& lambda) const;
  /// t_{-alpha_0^vee}, the index of the canonical generating variety.
  AffineElem lambda0() const;

  /// Bruhat order by the lifting property: for s a left descent of w,
  /// v <= w iff (s v < v ? s v <= s w : v <= s w).
  bool bruhat_leq(const AffineElem& v, const AffineElem& w) const;

  /// Minimal coset representatives by length, BFS over cosets with
  /// deterministic order (length, translation coordinates).
  MinRepLevels enumerate_minreps(int max_len) const;

  /// Order used for reproducible output: (length, translation, finite word).
  bool canonical_less(const AffineElem& a, const AffineElem& b) const;

  void require_product_bound(int len, const char* what) const;

 private:
  void check(const AffineElem& x) const;

  WeylGroup W_;
  Limits limits_;
  WeylElem s_theta_;
};

struct AntidominanceReport {
  bool in_min_reps;      // (a) t_lambda is a minimal coset representative
  bool orbit_maximal;    // (b) t_lambda W is Bruhat-maximal among the t_{v lambda} W
  bool antidominant;     // (c) <lambda, alpha_s> <= 0 for every simple s
};

AntidominanceReport antidominant_equivalences(const AffineWeylGroup& G, const CorootVec& lambda);

/// Canonical key of an element, independent of any length computation.
struct AffineKey {
  IntVec trans;
  IntMatrix fin;
  auto operator<=>(const AffineKey&) const = default;
};

AffineKey key_of(const AffineElem& x);

/// Cayley-graph distance from the identity for every element of length at
/// most `up_to`, by exhaustive BFS that uses only the semidirect product law.
std::map<AffineKey, int> length_bfs_oracle(const AffineWeylGroup& G, int up_to);

}  // namespace affgr
