#include "affgr/affine.hpp"

#include <algorithm>
#include <set>

#include "affgr/error.hpp"

namespace affgr {

Limits Limits::defaults_for(LieType t) {
  Limits l;
  l.enum_limit = t.rank <= 2 ? 12 : 10;
  return l;
}

size_t MinRepLevels::total() const {
  size_t n = 0;
  for (const auto& l : by_length) n += l.size();
  return n;
}

std::vector<int64_t> MinRepLevels::sizes() const {
  std::vector<int64_t> out;
  for (const auto& l : by_length) out.push_back(static_cast<int64_t>(l.size()));
  return out;
}

AffineWeylGroup::AffineWeylGroup(LieType t) : AffineWeylGroup(t, Limits::defaults_for(t)) {}

AffineWeylGroup::AffineWeylGroup(LieType t, Limits limits)
    : AffineWeylGroup(root_datum(t), limits) {}

AffineWeylGroup::AffineWeylGroup(RootDatumPtr rd, Limits limits)
    : W_(std::move(rd)), limits_(limits), s_theta_(W_.reflection(W_.datum().highest_root())) {}

void AffineWeylGroup::check(const AffineElem& x) const {
  if (static_cast<int>(x.trans.coords.size()) != rank() || x.fin.action().rows() != rank())
    throw MismatchError("affine element from a different type than " + type().label());
}

void AffineWeylGroup::require_product_bound(int len, const char* what) const {
  if (len > limits_.product_limit)
    throw BoundExceeded(what, "product-limit", len, limits_.product_limit);
}

int AffineWeylGroup::length(const CorootVec& lambda, const WeylElem& w) const {
  const RootDatum& rd = datum();
  const IntVec a_lam = rd.simple_pairings(lambda);
  const CorootVec probe{w.action() * std::span<const int32_t>(rd.two_rho_coroot().coords)};
  const IntVec a_rho = rd.simple_pairings(probe);
  return static_cast<int>(
      kernels::active().affine_length(rd.root_table(), a_lam.data(), a_rho.data()));
}

AffineElem AffineWeylGroup::make(const CorootVec& lambda, const WeylElem& w) const {
  if (static_cast<int>(lambda.coords.size()) != rank())
    throw MismatchError("translation of rank " + std::to_string(lambda.coords.size()) + " for " +
                        type().label());
  return AffineElem{lambda, w, length(lambda, w)};
}

AffineElem AffineWeylGroup::identity() const {
  return AffineElem{CorootVec{IntVec(rank(), 0)}, W_.identity(), 0};
}

AffineElem AffineWeylGroup::generator(Node s) const {
  if (s == 0) return make(datum().highest_coroot(), s_theta_);
  return make(CorootVec{IntVec(rank(), 0)}, W_.simple(s));
}

AffineElem AffineWeylGroup::translation(const CorootVec& lambda) const {
  return make(lambda, W_.identity());
}

AffineElem AffineWeylGroup::finite_elem(const WeylElem& w) const {
  return make(CorootVec{IntVec(rank(), 0)}, w);
}

AffineElem AffineWeylGroup::from_word(std::span<const Node> word) const {
  AffineElem x = identity();
  for (Node s : word) {
    if (s < 0 || s > rank())
      throw ParseError("generator " + std::to_string(s) + " out of range for " + type().label() +
                       " (nodes 0.." + std::to_string(rank()) + ")");
    x = mult(x, generator(s));
  }
  return x;
}

AffineElem AffineWeylGroup::mult(const AffineElem& x, const AffineElem& y) const {
  check(x);
  check(y);
  CorootVec lam = W_.apply(x.fin, y.trans);
  for (int i = 0; i < rank(); ++i) lam.coords[i] += x.trans.coords[i];
  return make(lam, W_.mult(x.fin, y.fin));
}

AffineElem AffineWeylGroup::inverse(const AffineElem& x) const {
  check(x);
  const WeylElem winv = W_.inverse(x.fin);
  CorootVec lam = W_.apply(winv, x.trans);
  for (auto& c : lam.coords) c = -c;
  return AffineElem{lam, winv, x.length};
}

bool AffineWeylGroup::is_left_descent(const AffineElem& x, Node s) const {
  return mult(generator(s), x).length < x.length;
}

bool AffineWeylGroup::is_right_descent(const AffineElem& x, Node s) const {
  return mult(x, generator(s)).length < x.length;
}

std::vector<Node> AffineWeylGroup::reduced_word(const AffineElem& x) const {
  check(x);
  std::vector<Node> word;
  AffineElem cur = x;
  while (cur.length > 0) {
    for (Node s = 0; s <= rank(); ++s) {
      AffineElem y = mult(generator(s), cur);
      if (y.length < cur.length) {
        word.push_back(s);
        cur = std::move(y);
        break;
      }
    }
  }
  return word;
}

bool AffineWeylGroup::is_min_rep(const AffineElem& x) const {
  check(x);
  for (Node s = 1; s <= rank(); ++s)
    if (is_right_descent(x, s)) return false;
  return true;
}

AffineElem AffineWeylGroup::min_rep(const AffineElem& x) const {
  check(x);
  AffineElem cur = x;
  bool moved = true;
  while (moved) {
    moved = false;
    for (Node s = 1; s <= rank(); ++s) {
      AffineElem y = mult(cur, generator(s));
      if (y.length < cur.length) {
        cur = std::move(y);
        moved = true;
        break;
      }
    }
  }
  return cur;
}

bool AffineWeylGroup::is_antidominant(const CorootVec& lambda) const {
  const IntVec p = datum().simple_pairings(lambda);
  return std::all_of(p.begin(), p.end(), [](int32_t v) { return v <= 0; });
}

AffineElem AffineWeylGroup::lambda0() const {
  CorootVec lam = datum().highest_coroot();
  for (auto& c : lam.coords) c = -c;
  return translation(lam);
}

bool AffineWeylGroup::bruhat_leq(const AffineElem& v, const AffineElem& w) const {
  check(v);
  check(w);
  require_product_bound(w.length, "bruhat_leq");
  AffineElem x = v, y = w;
  while (true) {
    if (x.length > y.length) return false;
    if (y.length == 0) return x.length == 0;
    for (Node s = 0; s <= rank(); ++s) {
      const AffineElem g = generator(s);
      AffineElem sy = mult(g, y);
      if (sy.length >= y.length) continue;
      y = std::move(sy);
      AffineElem sx = mult(g, x);
      if (sx.length < x.length) x = std::move(sx);
      break;
    }
  }
}

MinRepLevels AffineWeylGroup::enumerate_minreps(int max_len) const {
  if (max_len > limits_.enum_limit)
    throw BoundExceeded("enumerate_minreps for " + type().label(), "enum-limit", max_len,
                        limits_.enum_limit);
  MinRepLevels out;
  out.by_length.push_back({identity()});
  out.max_length = 0;
  std::set<IntVec> seen{identity().trans.coords};
  for (int k = 0; k < max_len; ++k) {
    std::vector<AffineElem> next;
    for (const AffineElem& x : out.by_length[k])
      for (Node s = 0; s <= rank(); ++s) {
        AffineElem y = min_rep(mult(generator(s), x));
        if (y.length != k + 1 || !seen.insert(y.trans.coords).second) continue;
        next.push_back(std::move(y));
      }
    std::sort(next.begin(), next.end(),
              [](const AffineElem& a, const AffineElem& b) { return a.trans < b.trans; });
    out.by_length.push_back(std::move(next));
    out.max_length = k + 1;
  }
  return out;
}

bool AffineWeylGroup::canonical_less(const AffineElem& a, const AffineElem& b) const {
  if (a.length != b.length) return a.length < b.length;
  if (a.trans != b.trans) return a.trans < b.trans;
  return W_.reduced_word(a.fin) < W_.reduced_word(b.fin);
}

AntidominanceReport antidominant_equivalences(const AffineWeylGroup& G, const CorootVec& lambda) {
  const AffineElem t = G.translation(lambda);
  G.require_product_bound(t.length, "antidominant_equivalences");
  AntidominanceReport r{};
  r.in_min_reps = G.is_min_rep(t);
  r.antidominant = G.is_antidominant(lambda);

  // v t_lambda W = t_{v lambda} W, so it is enough to walk the orbit of lambda.
  const WeylGroup& W = G.finite();
  const AffineElem top = G.min_rep(t);
  std::set<IntVec> seen{lambda.coords};
  std::vector<CorootVec> frontier{lambda};
  r.orbit_maximal = true;
  while (!frontier.empty() && r.orbit_maximal) {
    std::vector<CorootVec> next;
    for (const CorootVec& mu : frontier) {
      if (!G.bruhat_leq(G.min_rep(G.translation(mu)), top)) {
        r.orbit_maximal = false;
        break;
      }
      for (Node s = 1; s <= G.rank(); ++s) {
        CorootVec nu = W.apply(W.simple(s), mu);
        if (seen.insert(nu.coords).second) next.push_back(std::move(nu));
      }
    }
    frontier = std::move(next);
  }
  return r;
}

AffineKey key_of(const AffineElem& x) { return AffineKey{x.trans.coords, x.fin.action()}; }

std::map<AffineKey, int> length_bfs_oracle(const AffineWeylGroup& G, int up_to) {
  if (up_to > G.limits().bfs_limit)
    throw BoundExceeded("length_bfs_oracle for " + G.type().label(), "bfs-limit", up_to,
                        G.limits().bfs_limit);
  const int n = G.rank();
  std::vector<AffineKey> gens;
  for (Node s = 0; s <= n; ++s) gens.push_back(key_of(G.generator(s)));
  // Semidirect law on raw keys; no length formula involved.
  auto step = [n](const AffineKey& x, const AffineKey& g) {
    AffineKey out;
    out.trans = x.fin * std::span<const int32_t>(g.trans);
    for (int i = 0; i < n; ++i) out.trans[i] += x.trans[i];
    out.fin = x.fin * g.fin;
    return out;
  };
  std::map<AffineKey, int> dist;
  AffineKey e{IntVec(n, 0), IntMatrix::identity(n)};
  dist.emplace(e, 0);
  std::vector<AffineKey> frontier{e};
  for (int d = 1; d <= up_to; ++d) {
    std::vector<AffineKey> next;
    for (const AffineKey& x : frontier)
      for (const AffineKey& g : gens) {
        AffineKey y = step(x, g);
        if (dist.emplace(y, d).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace affgr
