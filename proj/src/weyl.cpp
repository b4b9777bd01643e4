#include "affgr/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "affgr/error.hpp"

namespace affgr {

WeylGroup::WeylGroup(RootDatumPtr rd) : rd_(std::move(rd)) {
  const int n = rd_->rank();
  const IntMatrix& a = rd_->cartan();
  for (int s = 0; s < n; ++s) {
    // s(lambda) = lambda - <lambda, alpha_s> alpha_s^vee.
    IntMatrix m = IntMatrix::identity(n);
    for (int j = 0; j < n; ++j) m(s, j) -= a(j, s);
    simples_.push_back(WeylElem(m, m));
  }
}

void WeylGroup::check(const WeylElem& w) const {
  if (w.act_.rows() != rank()) throw MismatchError("Weyl element from a different type");
}

WeylElem WeylGroup::identity() const {
  return WeylElem(IntMatrix::identity(rank()), IntMatrix::identity(rank()));
}

WeylElem WeylGroup::simple(Node s) const {
  if (s < 1 || s > rank())
    throw PreconditionError("no finite node " + std::to_string(s) + " in " +
                            rd_->type().label());
  return simples_[s - 1];
}

WeylElem WeylGroup::reflection(const RootVec& beta) const {
  const CorootVec bv = rd_->coroot_of(beta);
  // s_beta(lambda) = lambda - <lambda, beta> beta^vee, <lambda, beta> = sum_i lambda_i (A beta)_i.
  const int n = rank();
  IntVec abeta(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) abeta[i] += rd_->cartan()(i, j) * beta.coords[j];
  IntMatrix m = IntMatrix::identity(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) m(k, i) -= bv.coords[k] * abeta[i];
  return WeylElem(m, m);
}

WeylElem WeylGroup::from_word(std::span<const Node> word) const {
  WeylElem w = identity();
  for (Node s : word) w = mult(w, simple(s));
  return w;
}

WeylElem WeylGroup::from_action(const IntMatrix& m) const {
  if (m.rows() != rank() || m.cols() != rank()) throw MismatchError("from_action: shape mismatch");
  // Strip right descents (w alpha_s < 0 shows up as a negative column).
  std::vector<Node> rev;
  IntMatrix cur = m;
  const IntMatrix id = IntMatrix::identity(rank());
  while (!(cur == id) && static_cast<int>(rev.size()) <= static_cast<int>(rd_->positive_roots().size())) {
    Node found = 0;
    for (Node s = 1; s <= rank() && !found; ++s)
      for (int i = 0; i < rank(); ++i)
        if (cur(i, s - 1) < 0) {
          found = s;
          break;
        }
    if (!found) break;
    cur = cur * simples_[found - 1].act_;
    rev.push_back(found);
  }
  std::vector<Node> word(rev.rbegin(), rev.rend());
  WeylElem w = from_word(word);
  if (!(w.act_ == m)) throw PreconditionError("from_action: matrix is not a Weyl group element");
  return w;
}

WeylElem WeylGroup::mult(const WeylElem& u, const WeylElem& w) const {
  check(u);
  check(w);
  return WeylElem(u.act_ * w.act_, w.inv_ * u.inv_);
}

WeylElem WeylGroup::inverse(const WeylElem& w) const {
  check(w);
  return WeylElem(w.inv_, w.act_);
}

int WeylGroup::length(const WeylElem& w) const {
  check(w);
  // alpha > 0 with w(alpha) < 0  <=>  <w^{-1} 2rho^vee, alpha> < 0.
  const CorootVec probe{w.inv_ * std::span<const int32_t>(rd_->two_rho_coroot().coords)};
  const IntVec a = rd_->simple_pairings(probe);
  return static_cast<int>(kernels::active().count_negative(rd_->root_table(), a.data()));
}

bool WeylGroup::is_left_descent(const WeylElem& w, Node s) const {
  // s w < w  <=>  w^{-1}(alpha_s) < 0.
  for (int i = 0; i < rank(); ++i)
    if (w.inv_(i, s - 1) < 0) return true;
  return false;
}

bool WeylGroup::is_right_descent(const WeylElem& w, Node s) const {
  for (int i = 0; i < rank(); ++i)
    if (w.act_(i, s - 1) < 0) return true;
  return false;
}

std::vector<Node> WeylGroup::reduced_word(const WeylElem& w) const {
  check(w);
  std::vector<Node> word;
  WeylElem cur = w;
  const WeylElem e = identity();
  while (!(cur == e)) {
    Node s = 1;
    while (!is_left_descent(cur, s)) ++s;
    word.push_back(s);
    cur = mult(simple(s), cur);
  }
  return word;
}

CorootVec WeylGroup::apply(const WeylElem& w, const CorootVec& v) const {
  check(w);
  if (static_cast<int>(v.coords.size()) != rank()) throw MismatchError("weyl_apply: rank mismatch");
  return CorootVec{w.act_ * std::span<const int32_t>(v.coords)};
}

RootVec WeylGroup::apply(const WeylElem& w, const RootVec& v) const {
  check(w);
  if (static_cast<int>(v.coords.size()) != rank()) throw MismatchError("weyl_apply: rank mismatch");
  // The invariant form identifies alpha_i with d_i alpha_i^vee equivariantly.
  const IntVec& d = rd_->symmetrizers();
  IntVec scaled(rank());
  for (int i = 0; i < rank(); ++i) scaled[i] = v.coords[i] * d[i];
  IntVec image = w.act_ * std::span<const int32_t>(scaled);
  for (int i = 0; i < rank(); ++i) image[i] /= d[i];
  return RootVec{std::move(image)};
}

Weight WeylGroup::apply(const WeylElem& w, const Weight& v) const {
  check(w);
  if (static_cast<int>(v.coords.size()) != rank()) throw MismatchError("weyl_apply: rank mismatch");
  // Contragredient: <w lambda, w mu> = <lambda, mu>.
  return Weight{w.inv_.transposed() * std::span<const int32_t>(v.coords)};
}

bool WeylGroup::bruhat_leq(const WeylElem& u, const WeylElem& w) const {
  check(u);
  check(w);
  WeylElem x = u, y = w;
  const WeylElem e = identity();
  int lx = length(x), ly = length(y);
  while (true) {
    if (lx > ly) return false;
    if (y == e) return x == e;
    Node s = 1;
    while (!is_left_descent(y, s)) ++s;
    y = mult(simple(s), y);
    --ly;
    if (is_left_descent(x, s)) {
      x = mult(simple(s), x);
      --lx;
    }
  }
}

int64_t WeylGroup::orbit_size(const CorootVec& v, std::span<const Node> gens, int64_t limit) const {
  std::set<IntVec> seen{v.coords};
  std::vector<IntVec> frontier{v.coords};
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const IntVec& x : frontier)
      for (Node s : gens) {
        IntVec y = simples_[s - 1].act_ * std::span<const int32_t>(x);
        if (seen.insert(y).second) {
          if (static_cast<int64_t>(seen.size()) > limit)
            throw BoundExceeded("orbit enumeration in " + rd_->type().label(), "orbit-limit",
                                static_cast<long>(seen.size()), static_cast<long>(limit));
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  return static_cast<int64_t>(seen.size());
}

std::vector<Node> normalize_subset(const RootDatum& rd, std::vector<Node> subset) {
  for (Node s : subset)
    if (s < 1 || s > rd.rank())
      throw ParseError("node " + std::to_string(s) + " is not a finite node of " +
                       rd.type().label());
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  return subset;
}

int ParabolicQuotient::coset_index(const WeylGroup& W, const WeylElem& w) const {
  return by_orbit_point.at(W.apply(w, anchor).coords);
}

std::optional<int> ParabolicQuotient::index_of(const WeylGroup& W, const WeylElem& w) const {
  auto it = by_orbit_point.find(W.apply(w, anchor).coords);
  if (it == by_orbit_point.end() || !(reps[it->second] == w)) return std::nullopt;
  return it->second;
}

ParabolicQuotient min_coset_reps(const WeylGroup& W, std::vector<Node> subset, int64_t limit) {
  const RootDatum& rd = W.datum();
  ParabolicQuotient q;
  q.subset = normalize_subset(rd, std::move(subset));

  // anchor = sum over s outside I of omega_s^vee, scaled to be integral.
  const int n = rd.rank();
  RationalVec acc(n, Rational(0));
  for (Node s = 1; s <= n; ++s)
    if (!std::binary_search(q.subset.begin(), q.subset.end(), s)) {
      const RationalVec w = rd.fundamental_coweight(s);
      for (int i = 0; i < n; ++i) acc[i] += w[i];
    }
  int64_t denom = 1;
  for (const Rational& r : acc) denom = std::lcm(denom, r.denominator());
  q.anchor.coords.resize(n);
  for (int i = 0; i < n; ++i) q.anchor.coords[i] = static_cast<int32_t>((acc[i] * denom).numerator());

  // From mu = w(anchor), a simple s with <mu, alpha_s> > 0 gives s w in W^I,
  // one longer.
  struct Item {
    WeylElem w;
    IntVec point;
  };
  std::vector<Item> level{{W.identity(), q.anchor.coords}};
  std::vector<std::pair<int, Item>> found;
  std::set<IntVec> seen{q.anchor.coords};
  int len = 0;
  while (!level.empty()) {
    for (auto& it : level) found.push_back({len, it});
    std::vector<Item> next;
    for (const Item& it : level) {
      const IntVec p = rd.simple_pairings(CorootVec{it.point});
      for (Node s = 1; s <= n; ++s) {
        if (p[s - 1] <= 0) continue;
        IntVec y = W.apply(W.simple(s), CorootVec{it.point}).coords;
        if (!seen.insert(y).second) continue;
        if (static_cast<int64_t>(seen.size()) > limit)
          throw BoundExceeded("coset enumeration in " + rd.type().label(), "orbit-limit",
                              static_cast<long>(seen.size()), static_cast<long>(limit));
        next.push_back({W.mult(W.simple(s), it.w), std::move(y)});
      }
    }
    level = std::move(next);
    ++len;
  }

  struct Row {
    int len;
    std::vector<Node> word;
    size_t idx;
  };
  std::vector<Row> rows;
  for (size_t i = 0; i < found.size(); ++i)
    rows.push_back({found[i].first, W.reduced_word(found[i].second.w), i});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.len, a.word) < std::tie(b.len, b.word);
  });
  for (const Row& r : rows) {
    q.by_orbit_point.emplace(found[r.idx].second.point, static_cast<int>(q.reps.size()));
    q.reps.push_back(found[r.idx].second.w);
    q.words.push_back(r.word);
    q.lengths.push_back(r.len);
  }
  return q;
}

GradedPoly quotient_poincare(const ParabolicQuotient& q) {
  std::vector<int64_t> c(q.max_length() + 1, 0);
  for (int l : q.lengths) c[l] += 1;
  return GradedPoly(std::move(c));
}

GradedPoly quotient_poincare(LieType t, std::vector<Node> subset) {
  WeylGroup W(root_datum(t));
  return quotient_poincare(min_coset_reps(W, std::move(subset)));
}

}  // namespace affgr
