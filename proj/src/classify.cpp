#include "affgr/classify.hpp"

#include <algorithm>

#include "affgr/weyl.hpp"

namespace affgr {

std::vector<Node> I_of_lambda0(const RootDatum& rd) {
  std::vector<Node> out;
  for (Node s = 1; s <= rd.rank(); ++s)
    if (rd.pairing(rd.highest_coroot(), rd.simple_root(s)) == 0) out.push_back(s);
  return out;
}

std::vector<Node> I_of_lambda0_by_diagram(const RootDatum& rd) {
  std::vector<Node> out;
  for (Node s = 1; s <= rd.rank(); ++s)
    if (rd.affine_cartan()(0, s) == 0 && rd.affine_cartan()(s, 0) == 0) out.push_back(s);
  return out;
}

std::vector<Node> bott_nodes(const RootDatum& rd) {
  std::vector<Node> out;
  for (Node s = 1; s <= rd.rank(); ++s)
    if (rd.is_long(s) && is_integral(rd.fundamental_coweight(s))) out.push_back(s);
  return out;
}

namespace {

std::string component_type(const RootDatum& rd, const std::vector<Node>& comp) {
  const IntMatrix& a = rd.cartan();
  const int n = static_cast<int>(comp.size());
  std::vector<std::vector<int>> adj(n);
  int max_bond = 1;
  int bi = -1, bj = -1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int m = a(comp[i] - 1, comp[j] - 1) * a(comp[j] - 1, comp[i] - 1);
      if (m == 0) continue;
      adj[i].push_back(j);
      if (m > max_bond) {
        max_bond = m;
        bi = i;
        bj = j;
      }
    }
  const std::string r = std::to_string(n);
  if (max_bond == 3) return "G2";
  if (max_bond == 2) {
    if (n == 2) return "C2";
    const bool i_end = adj[bi].size() == 1;
    const bool j_end = adj[bj].size() == 1;
    if (!i_end && !j_end) return "F4";
    const int end = i_end ? bi : bj;
    const int other = i_end ? bj : bi;
    return rd.symmetrizers()[comp[end] - 1] < rd.symmetrizers()[comp[other] - 1] ? "B" + r : "C" + r;
  }
  int branch = -1;
  for (int i = 0; i < n; ++i)
    if (adj[i].size() == 3) branch = i;
  if (branch < 0) return "A" + r;
  std::vector<int> arms;
  for (int start : adj[branch]) {
    int len = 1, prev = branch, cur = start;
    while (adj[cur].size() == 2) {
      const int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + r;
  return "E" + r;
}

}  // namespace

std::string subdiagram_type(const RootDatum& rd, const std::vector<Node>& subset) {
  std::vector<bool> in(rd.rank() + 1, false), done(rd.rank() + 1, false);
  for (Node s : subset) in[s] = true;
  std::vector<std::string> parts;
  for (Node s : subset) {
    if (done[s]) continue;
    std::vector<Node> comp;
    std::vector<Node> stack{s};
    done[s] = true;
    while (!stack.empty()) {
      const Node u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Node v = 1; v <= rd.rank(); ++v)
        if (in[v] && !done[v] && rd.cartan()(u - 1, v - 1) != 0) {
          done[v] = true;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    parts.push_back(component_type(rd, comp));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) out += (i ? "x" : "") + parts[i];
  return out;
}

std::optional<int> max_smooth_schubert_dim(LieType t) {
  if (t == LieType{'E', 8}) return 14;
  if (t == LieType{'F', 4}) return 7;
  if (t == LieType{'G', 2}) return 2;
  return std::nullopt;
}

bool in_exceptional_list(LieType t) {
  return t == LieType{'E', 8} || t == LieType{'F', 4} || t == LieType{'G', 2};
}

TypeReport type_report(LieType t) {
  const RootDatumPtr rd = root_datum(t);
  TypeReport r;
  r.type = t;
  r.I_lambda0 = I_of_lambda0(*rd);
  WeylGroup W(rd);
  const ParabolicQuotient q = min_coset_reps(W, r.I_lambda0);
  r.levi_poincare = quotient_poincare(q);
  r.levi_orbit_dim = q.max_length();
  const std::string levi = subdiagram_type(*rd, r.I_lambda0);
  r.levi_descriptor = t.label() + "/" + (levi.empty() ? "T" : levi) + ", dim " +
                      std::to_string(r.levi_orbit_dim);
  const ChainCoeffs cc = chain_coeffs(t);
  r.chain = cc.is_chain;
  r.chain_coeffs = cc.a;
  r.pd_status = pd_status_from(cc);
  r.bott_nodes = bott_nodes(*rd);
  r.minuscule_nodes = minuscule_nodes(*rd);
  r.smooth_schubert_genv = !r.minuscule_nodes.empty();
  r.smooth_sources_agree = r.smooth_schubert_genv == !in_exceptional_list(t);
  r.exponents = rd->exponents();
  r.e_top = r.exponents.back();
  r.max_smooth_schubert_dim = max_smooth_schubert_dim(t);
  return r;
}

std::vector<TypeReport> classify_all(int max_rank) {
  std::vector<LieType> types = all_types(max_rank);
  if (max_rank < 8) types.push_back({'E', 8});
  std::sort(types.begin(), types.end());
  std::vector<TypeReport> out;
  for (LieType t : types) out.push_back(type_report(t));
  return out;
}

}  // namespace affgr
