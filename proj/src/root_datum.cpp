#include "affgr/root_datum.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <utility>

#include "affgr/error.hpp"

namespace affgr {

namespace {

struct DiagramSpec {
  IntVec sym;
  std::vector<std::pair<int, int>> bonds;  // 0-based node pairs
};

// Bourbaki numbering. sym[i] = (alpha_i, alpha_i) / 2.
DiagramSpec diagram_of(LieType t) {
  const int n = t.rank;
  DiagramSpec d;
  d.sym.assign(n, 1);
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) d.bonds.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case 'A':
      chain(0, n - 1);
      break;
    case 'B':
      chain(0, n - 1);
      std::fill(d.sym.begin(), d.sym.end() - 1, 2);
      break;
    case 'C':
      chain(0, n - 1);
      d.sym[n - 1] = 2;
      break;
    case 'D':
      chain(0, n - 2);
      d.bonds.emplace_back(n - 3, n - 1);
      break;
    case 'E':
      d.bonds.emplace_back(0, 2);
      d.bonds.emplace_back(1, 3);
      chain(2, n - 1);
      break;
    case 'F':
      chain(0, 3);
      d.sym = {2, 2, 1, 1};
      break;
    case 'G':
      d.bonds.emplace_back(0, 1);
      d.sym = {1, 3};
      break;
  }
  return d;
}

IntMatrix cartan_from(const DiagramSpec& d) {
  const int n = static_cast<int>(d.sym.size());
  IntMatrix a(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  for (auto [i, j] : d.bonds) {
    // (alpha_i, alpha_j) = -max(d_i, d_j) for joined nodes.
    const int ip = -std::max(d.sym[i], d.sym[j]);
    a(i, j) = ip / d.sym[i];
    a(j, i) = ip / d.sym[j];
  }
  return a;
}

// Solves M x = b over the rationals; M is square and invertible.
RationalVec solve(const IntMatrix& m, RationalVec b) {
  const int n = m.rows();
  std::vector<RationalVec> a(n, RationalVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (a[piv][col].numerator() == 0) ++piv;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].numerator() == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (int i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

}  // namespace

RootDatum::RootDatum(LieType t) : type_(t) {
  const DiagramSpec spec = diagram_of(t);
  sym_ = spec.sym;
  cartan_ = cartan_from(spec);
  const int n = t.rank;

  // Closure under adding simple roots, one height at a time, using root
  // strings: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0 where p
  // is the length of the alpha_i-string below beta.
  std::vector<IntVec> level;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    level.push_back(e);
  }
  std::vector<IntVec> all;
  std::map<IntVec, int> seen;
  while (!level.empty()) {
    std::sort(level.begin(), level.end());
    for (const IntVec& r : level) {
      seen.emplace(r, 0);
      all.push_back(r);
    }
    std::vector<IntVec> next;
    for (const IntVec& beta : level) {
      for (int i = 0; i < n; ++i) {
        int p = 0;
        IntVec down = beta;
        while (true) {
          down[i] -= 1;
          if (!seen.count(down)) break;
          ++p;
        }
        int pair = 0;
        for (int j = 0; j < n; ++j) pair += cartan_(i, j) * beta[j];
        if (p - pair > 0) {
          IntVec up = beta;
          up[i] += 1;
          if (std::find(next.begin(), next.end(), up) == next.end()) next.push_back(up);
        }
      }
    }
    level = std::move(next);
  }
  for (size_t k = 0; k < all.size(); ++k) {
    roots_.push_back(RootVec{all[k]});
    root_lookup_.emplace(all[k], static_cast<int>(k));
  }
  for (const RootVec& r : roots_) coroots_.push_back(coroot_of(r));

  two_rho_.coords.assign(n, 0);
  for (const CorootVec& c : coroots_)
    for (int i = 0; i < n; ++i) two_rho_.coords[i] += c.coords[i];

  // Exponents: conjugate of the partition k -> #{roots of height k}.
  std::vector<int> by_height;
  for (const RootVec& r : roots_) {
    const int h = height(r);
    if (static_cast<int>(by_height.size()) < h) by_height.resize(h, 0);
    by_height[h - 1] += 1;
  }
  for (int j = 1; j <= n; ++j) {
    int e = 0;
    for (int m : by_height) e += m >= j;
    exponents_.push_back(e);
  }
  std::sort(exponents_.begin(), exponents_.end());

  affine_cartan_ = IntMatrix(n + 1, n + 1);
  affine_cartan_(0, 0) = 2;
  const RootVec& theta = highest_root();
  const CorootVec& theta_v = highest_coroot();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) affine_cartan_(i + 1, j + 1) = cartan_(i, j);
    affine_cartan_(0, i + 1) = -pairing(theta_v, simple_root(i + 1));
    affine_cartan_(i + 1, 0) = -pairing(simple_coroot(i + 1), theta);
  }

  std::vector<std::vector<int32_t>> raw;
  for (const RootVec& r : roots_) raw.push_back(r.coords);
  table_ = kernels::RootTable(n, raw);
}

void RootDatum::check_rank(size_t n, const char* what) const {
  if (static_cast<int>(n) != rank())
    throw MismatchError(std::string(what) + ": vector of length " + std::to_string(n) +
                        " for rank-" + std::to_string(rank()) + " type " + type_.label());
}

int64_t RootDatum::weyl_order() const {
  int64_t o = 1;
  for (int e : exponents_) o *= e + 1;
  return o;
}

std::vector<Node> RootDatum::node0_neighbors() const {
  std::vector<Node> out;
  for (int s = 1; s <= rank(); ++s)
    if (affine_cartan_(0, s) != 0) out.push_back(s);
  return out;
}

bool RootDatum::is_long(Node s) const {
  return sym_[s - 1] == *std::max_element(sym_.begin(), sym_.end());
}

int RootDatum::height(const RootVec& r) const {
  return std::accumulate(r.coords.begin(), r.coords.end(), 0);
}

std::optional<int> RootDatum::root_index(const RootVec& r) const {
  auto it = root_lookup_.find(r.coords);
  if (it == root_lookup_.end()) return std::nullopt;
  return it->second;
}

bool RootDatum::is_root(const RootVec& r) const {
  if (root_index(r)) return true;
  RootVec neg = r;
  for (auto& c : neg.coords) c = -c;
  return root_index(neg).has_value();
}

RootVec RootDatum::simple_root(Node s) const {
  RootVec r{IntVec(rank(), 0)};
  r.coords[s - 1] = 1;
  return r;
}

CorootVec RootDatum::simple_coroot(Node s) const {
  CorootVec r{IntVec(rank(), 0)};
  r.coords[s - 1] = 1;
  return r;
}

int RootDatum::pairing(const CorootVec& lambda, const RootVec& alpha) const {
  check_rank(lambda.coords.size(), "pairing");
  check_rank(alpha.coords.size(), "pairing");
  int acc = 0;
  for (int i = 0; i < rank(); ++i) {
    if (lambda.coords[i] == 0) continue;
    int row = 0;
    for (int j = 0; j < rank(); ++j) row += cartan_(i, j) * alpha.coords[j];
    acc += lambda.coords[i] * row;
  }
  return acc;
}

int RootDatum::pairing(const CorootVec& lambda, const Weight& mu) const {
  check_rank(lambda.coords.size(), "pairing");
  check_rank(mu.coords.size(), "pairing");
  int acc = 0;
  for (int i = 0; i < rank(); ++i) acc += lambda.coords[i] * mu.coords[i];
  return acc;
}

IntVec RootDatum::simple_pairings(const CorootVec& lambda) const {
  check_rank(lambda.coords.size(), "simple_pairings");
  IntVec out(rank(), 0);
  for (int j = 0; j < rank(); ++j)
    for (int i = 0; i < rank(); ++i) out[j] += lambda.coords[i] * cartan_(i, j);
  return out;
}

Weight RootDatum::weight_of(const RootVec& beta) const {
  check_rank(beta.coords.size(), "weight_of");
  Weight w{IntVec(rank(), 0)};
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) w.coords[i] += cartan_(i, j) * beta.coords[j];
  return w;
}

CorootVec RootDatum::coroot_of(const RootVec& alpha) const {
  check_rank(alpha.coords.size(), "coroot_of");
  if (!is_root(alpha))
    throw PreconditionError("coroot_of: (" + format_coords(alpha.coords) + ") is not a root of " +
                            type_.label());
  // (alpha, alpha) = sum_ij c_i c_j d_i A_ij; alpha^vee = sum_i c_i (d_i / d_alpha) alpha_i^vee.
  int64_t norm = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      norm += int64_t(alpha.coords[i]) * alpha.coords[j] * sym_[i] * cartan_(i, j);
  const int64_t d_alpha = norm / 2;
  CorootVec out{IntVec(rank(), 0)};
  for (int i = 0; i < rank(); ++i) {
    const int64_t num = int64_t(alpha.coords[i]) * sym_[i];
    out.coords[i] = static_cast<int32_t>(num / d_alpha);
  }
  return out;
}

RationalVec RootDatum::fundamental_coweight(Node s) const {
  if (s < 1 || s > rank())
    throw PreconditionError("fundamental_coweight: node " + std::to_string(s) +
                            " is not a finite node of " + type_.label());
  // x^T A = e_s^T, i.e. A^T x = e_s.
  RationalVec rhs(rank(), Rational(0));
  rhs[s - 1] = 1;
  return solve(cartan_.transposed(), rhs);
}

bool is_integral(const RationalVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.denominator() == 1; });
}

RootDatumPtr root_datum(LieType t) {
  static std::mutex mu;
  static std::map<LieType, RootDatumPtr> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(t);
  if (it != cache.end()) return it->second;
  auto ptr = std::make_shared<const RootDatum>(t);
  cache.emplace(t, ptr);
  return ptr;
}

std::vector<int> exponents(LieType t) { return root_datum(t)->exponents(); }

std::vector<std::vector<Node>> diagram_automorphisms(const RootDatum& rd) {
  const IntMatrix& a = rd.affine_cartan();
  const int n = a.rows();
  std::vector<std::vector<Node>> out;
  std::vector<Node> perm(n, -1);
  std::vector<bool> used(n, false);
  // Backtracking over images, checking every entry among assigned nodes.
  auto extend = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back(perm);
      return;
    }
    for (int img = 0; img < n; ++img) {
      if (used[img]) continue;
      bool ok = true;
      for (int j = 0; j <= i && ok; ++j) {
        const int pj = j == i ? img : perm[j];
        ok = a(i, j) == a(img, pj) && a(j, i) == a(pj, img);
      }
      if (!ok) continue;
      perm[i] = img;
      used[img] = true;
      self(self, i + 1);
      used[img] = false;
    }
    perm[i] = -1;
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Node> minuscule_nodes(const RootDatum& rd) {
  std::vector<Node> out;
  for (const auto& perm : diagram_automorphisms(rd))
    if (perm[0] != 0) out.push_back(perm[0]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace affgr
