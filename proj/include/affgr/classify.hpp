#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affgr/cohomology.hpp"
#include "affgr/root_datum.hpp"

namespace affgr {

/// Finite nodes s with <alpha_0^vee, alpha_s> = 0, i.e. those fixing the coset
/// of lambda_0 = -alpha_0^vee.
std::vector<Node> I_of_lambda0(const RootDatum& rd);
/// Same set read off the affine diagram: finite nodes not joined to node 0.
std::vector<Node> I_of_lambda0_by_diagram(const RootDatum& rd);

/// Long simple roots whose fundamental coweight lies in the coroot lattice.
std::vector<Node> bott_nodes(const RootDatum& rd);

/// Type of the subdiagram on `subset`, e.g. "A1xA1", "C2", "" when empty.
std::string subdiagram_type(const RootDatum& rd, const std::vector<Node>& subset);

/// Largest dimension of a smooth affine Schubert variety, for the types where
/// the classification is needed: E8 14, F4 7, G2 2.
std::optional<int> max_smooth_schubert_dim(LieType t);

/// E8, F4 and G2.
bool in_exceptional_list(LieType t);

struct TypeReport {
  LieType type;
  std::vector<Node> I_lambda0;
  std::string levi_descriptor;
  int levi_orbit_dim = 0;
  GradedPoly levi_poincare;
  bool chain = false;
  std::vector<int64_t> chain_coeffs;
  PDStatus pd_status = PDStatus::NotPalindromic;
  std::vector<Node> bott_nodes;
  std::vector<Node> minuscule_nodes;
  bool smooth_schubert_genv = false;
  /// Minuscule computation agrees with the fixed E8/F4/G2 list.
  bool smooth_sources_agree = false;
  std::vector<int> exponents;
  int e_top = 0;
  std::optional<int> max_smooth_schubert_dim;
};

TypeReport type_report(LieType t);

/// Reports for every type of rank <= max_rank, plus E8 regardless of the bound.
std::vector<TypeReport> classify_all(int max_rank);

}  // namespace affgr
