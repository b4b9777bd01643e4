#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "affgr/kernels.hpp"
#include "affgr/lie_type.hpp"
#include "affgr/matrix.hpp"

namespace affgr {

/// Dynkin node label. Finite nodes are numbered 1..rank following Bourbaki;
/// 0 is the affine node. Vectors are indexed by node - 1.
using Node = int;

using Rational = boost::rational<int64_t>;
using RationalVec = std::vector<Rational>;

/// Root system data for one simple type. Immutable once built; share it
/// through `root_datum()`.
///
/// Conventions: cartan()(i, j) = <alpha_j, alpha_i^vee> (0-based indices),
/// so <lambda, beta> = lambda^T * A * beta for lambda in coroot coordinates
/// and beta in root coordinates. symmetrizers()[i] = (alpha_i, alpha_i) / 2
/// with the shortest roots of length 2.
class RootDatum {
 public:
  explicit RootDatum(LieType t);

  LieType type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank; }

  const IntMatrix& cartan() const noexcept { return cartan_; }
  const IntVec& symmetrizers() const noexcept { return sym_; }
  const std::vector<RootVec>& positive_roots() const noexcept { return roots_; }
  /// Parallel to positive_roots().
  const std::vector<CorootVec>& positive_coroots() const noexcept { return coroots_; }
  const RootVec& highest_root() const noexcept { return roots_.back(); }
  const CorootVec& highest_coroot() const noexcept { return coroots_.back(); }
  const std::vector<int>& exponents() const noexcept { return exponents_; }
  int coxeter_number() const { return height(highest_root()) + 1; }
  /// Sum of the positive coroots: a strictly dominant coroot-lattice vector.
  const CorootVec& two_rho_coroot() const noexcept { return two_rho_; }
  /// Product of (e_i + 1), the order of the finite Weyl group.
  int64_t weyl_order() const;

  /// (rank+1) x (rank+1); row/column 0 is the affine node, whose simple root
  /// is delta - theta.
  const IntMatrix& affine_cartan() const noexcept { return affine_cartan_; }
  /// Finite nodes joined to node 0 in the affine diagram.
  std::vector<Node> node0_neighbors() const;
  bool is_long(Node s) const;

  int height(const RootVec& r) const;
  std::optional<int> root_index(const RootVec& r) const;
  bool is_root(const RootVec& r) const;

  RootVec simple_root(Node s) const;
  CorootVec simple_coroot(Node s) const;

  int pairing(const CorootVec& lambda, const RootVec& alpha) const;
  int pairing(const CorootVec& lambda, const Weight& mu) const;
  /// <lambda, alpha_j> for every simple root.
  IntVec simple_pairings(const CorootVec& lambda) const;
  /// The weight (fundamental-weight coordinates) of a root-lattice vector.
  Weight weight_of(const RootVec& beta) const;

  /// alpha^vee for a root alpha (positive or negative). Throws
  /// PreconditionError if alpha is not a root.
  CorootVec coroot_of(const RootVec& alpha) const;

  /// The vector x with <x, alpha_j> = delta_{s j}, in coroot coordinates.
  RationalVec fundamental_coweight(Node s) const;

  const kernels::RootTable& root_table() const noexcept { return table_; }

 private:
  void check_rank(size_t n, const char* what) const;

  LieType type_;
  IntMatrix cartan_;
  IntVec sym_;
  std::vector<RootVec> roots_;
  std::vector<CorootVec> coroots_;
  std::map<IntVec, int> root_lookup_;
  std::vector<int> exponents_;
  CorootVec two_rho_;
  IntMatrix affine_cartan_;
  kernels::RootTable table_;
};

using RootDatumPtr = std::shared_ptr<const RootDatum>;

/// Shared, lazily built datum per type. Thread-safe.
RootDatumPtr root_datum(LieType t);

/// Exponents of the Weyl group, read off the root-height distribution.
std::vector<int> exponents(LieType t);

bool is_integral(const RationalVec& v);

/// Permutations of the affine nodes 0..rank preserving the affine Cartan
/// matrix; perm[i] is the image of node i. Sorted lexicographically, identity first.
std::vector<std::vector<Node>> diagram_automorphisms(const RootDatum& rd);

/// Finite nodes in the orbit of node 0 under diagram_automorphisms.
std::vector<Node> minuscule_nodes(const RootDatum& rd);

}  // namespace affgr
