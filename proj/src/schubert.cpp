#include "affgr/schubert.hpp"

#include <algorithm>
#include <set>

#include "affgr/error.hpp"
#include "affgr/weyl.hpp"

namespace affgr {

namespace {

void require_min_rep(const AffineWeylGroup& G, const AffineElem& x, const char* what) {
  if (!G.is_min_rep(x))
    throw PreconditionError(std::string(what) + ": element is not a minimal coset representative");
}

void sort_canonical(const AffineWeylGroup& G, std::vector<AffineElem>& v) {
  std::sort(v.begin(), v.end(),
            [&G](const AffineElem& a, const AffineElem& b) { return G.canonical_less(a, b); });
}

// Minimal representatives of length <= len that lie below w.
std::vector<AffineElem> interval_below(const AffineWeylGroup& G, const AffineElem& w) {
  if (w.length > G.limits().enum_limit)
    throw BoundExceeded("Bruhat interval below an element of " + G.type().label(), "enum-limit",
                        w.length, G.limits().enum_limit);
  const MinRepLevels levels = G.enumerate_minreps(w.length);
  std::vector<AffineElem> out;
  for (const auto& level : levels.by_length)
    for (const AffineElem& v : level)
      if (G.bruhat_leq(v, w)) out.push_back(v);
  return out;
}

}  // namespace

SchubertClass schubert_class(const AffineWeylGroup& G, const AffineElem& x) {
  require_min_rep(G, x, "schubert_class");
  return SchubertClass{x};
}

StarResult star(const AffineWeylGroup& G, const SchubertClass& tau, const SchubertClass& nu) {
  AffineElem p = G.mult(tau.index, nu.index);
  if (p.length != tau.index.length + nu.index.length || !G.is_min_rep(p)) return {};
  return StarResult{SchubertClass{std::move(p)}};
}

StarResult star_fold(const AffineWeylGroup& G, const std::vector<SchubertClass>& factors) {
  StarResult acc{SchubertClass{G.identity()}};
  for (const SchubertClass& f : factors) {
    acc = star(G, *acc.cls, f);
    if (acc.is_zero()) break;
  }
  return acc;
}

bool star_readings_differ(const AffineWeylGroup& G, const SchubertClass& tau,
                          const SchubertClass& nu) {
  const AffineElem p = G.mult(tau.index, nu.index);
  return p.length == tau.index.length + nu.index.length && !G.is_min_rep(p);
}

bool GeneratingReport::ok() const {
  return !steps.empty() &&
         std::all_of(steps.begin(), steps.end(), [](const GeneratingStep& s) { return s.ok(); });
}

GeneratingReport verify_canonical_generating(const AffineWeylGroup& G, int n_max) {
  const AffineElem base = G.lambda0();
  G.require_product_bound(n_max * base.length, "verify_canonical_generating");
  GeneratingReport rep;
  rep.type = G.type();
  rep.base_length = base.length;
  const SchubertClass x0{base};
  StarResult acc{x0};
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1 && !acc.is_zero()) acc = star(G, *acc.cls, x0);
    GeneratingStep step;
    step.n = n;
    step.expected_length = n * base.length;
    step.is_class = !acc.is_zero();
    if (step.is_class) {
      const AffineElem& p = acc.cls->index;
      CorootVec target = G.datum().highest_coroot();
      for (auto& c : target.coords) c *= -n;
      step.is_translation = p == G.translation(target);
      step.length = p.length;
      step.power = p;
    }
    rep.steps.push_back(std::move(step));
  }
  return rep;
}

std::vector<AffineElem> segments(const AffineWeylGroup& G) {
  const RootDatum& rd = G.datum();
  const auto adjacent = rd.node0_neighbors();
  std::vector<Node> J;
  for (Node s = 1; s <= rd.rank(); ++s)
    if (std::find(adjacent.begin(), adjacent.end(), s) == adjacent.end()) J.push_back(s);
  const ParabolicQuotient q = min_coset_reps(G.finite(), J);
  const AffineElem s0 = G.generator(0);
  std::vector<AffineElem> out;
  for (const WeylElem& nu : q.reps) out.push_back(G.mult(G.finite_elem(nu), s0));
  sort_canonical(G, out);
  return out;
}

std::vector<AffineElem> segments_by_orbit(const AffineWeylGroup& G, int64_t w_limit) {
  const ParabolicQuotient all = min_coset_reps(G.finite(), {}, w_limit);
  const AffineElem s0 = G.generator(0);
  std::set<IntVec> seen;
  std::vector<AffineElem> out;
  for (const WeylElem& v : all.reps) {
    AffineElem m = G.min_rep(G.mult(G.finite_elem(v), s0));
    if (m.length == 0 || !seen.insert(m.trans.coords).second) continue;
    out.push_back(std::move(m));
  }
  sort_canonical(G, out);
  return out;
}

std::vector<AffineElem> segments_by_bruhat(const AffineWeylGroup& G) {
  std::vector<AffineElem> out;
  for (AffineElem& v : interval_below(G, G.lambda0()))
    if (v.length > 0) out.push_back(std::move(v));
  sort_canonical(G, out);
  return out;
}

std::vector<std::vector<AffineElem>> all_segment_factorizations(const AffineWeylGroup& G,
                                                                const AffineElem& w) {
  require_min_rep(G, w, "segment_factorize");
  if (w.length > G.limits().enum_limit)
    throw BoundExceeded("segment_factorize in " + G.type().label(), "enum-limit", w.length,
                        G.limits().enum_limit);
  const std::vector<AffineElem> segs = segments(G);
  std::vector<AffineElem> inv;
  for (const AffineElem& s : segs) inv.push_back(G.inverse(s));

  // Strip segments off the right; every left part must stay a minimal representative.
  auto rec = [&](auto&& self, const AffineElem& u) -> std::vector<std::vector<AffineElem>> {
    if (u.length == 0) return {{}};
    std::vector<std::vector<AffineElem>> found;
    for (size_t i = 0; i < segs.size(); ++i) {
      if (segs[i].length > u.length) continue;
      const AffineElem left = G.mult(u, inv[i]);
      if (left.length != u.length - segs[i].length || !G.is_min_rep(left)) continue;
      for (auto& f : self(self, left)) {
        f.push_back(segs[i]);
        found.push_back(std::move(f));
      }
    }
    return found;
  };
  return rec(rec, w);
}

std::vector<AffineElem> segment_factorize(const AffineWeylGroup& G, const AffineElem& w) {
  auto all = all_segment_factorizations(G, w);
  if (all.size() != 1)
    throw FactorizationError("expected exactly one segment factorization, found " +
                             std::to_string(all.size()));
  return std::move(all.front());
}

bool star_refactor_check(const AffineWeylGroup& G, const AffineElem& w) {
  std::vector<SchubertClass> factors;
  for (const AffineElem& s : segment_factorize(G, w)) factors.push_back(SchubertClass{s});
  const StarResult r = star_fold(G, factors);
  return !r.is_zero() && r.cls->index == w;
}

std::pair<AffineElem, AffineElem> star_decompose(const AffineWeylGroup& G, const AffineElem& omega,
                                                 const AffineElem& sigma,
                                                 const CorootVec& lambda) {
  require_min_rep(G, sigma, "star_decompose (sigma)");
  require_min_rep(G, omega, "star_decompose (omega)");
  if (!G.is_antidominant(lambda))
    throw PreconditionError("star_decompose: lambda is not antidominant");
  const AffineElem t = G.translation(lambda);
  const AffineElem top = G.min_rep(G.mult(sigma, t));
  if (!G.bruhat_leq(omega, top))
    throw PreconditionError("star_decompose: omega is not below min_rep(sigma t_lambda)");

  std::vector<AffineElem> below = interval_below(G, t);
  std::stable_sort(below.begin(), below.end(),
                   [](const AffineElem& a, const AffineElem& b) { return a.length > b.length; });
  for (const AffineElem& nu : below) {
    if (nu.length > omega.length) continue;
    const AffineElem tau = G.mult(omega, G.inverse(nu));
    if (tau.length != omega.length - nu.length || !G.is_min_rep(tau)) continue;
    if (!G.bruhat_leq(tau, sigma)) continue;
    return {tau, nu};
  }
  throw FactorizationError("star_decompose: no decomposition found");
}

GradedPoly schubert_poincare(const AffineWeylGroup& G, const AffineElem& w) {
  require_min_rep(G, w, "schubert_poincare");
  std::vector<int64_t> c(w.length + 1, 0);
  for (const AffineElem& v : interval_below(G, w)) c[v.length] += 1;
  return GradedPoly(std::move(c));
}

}  // namespace affgr
