#include "posetx/poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace posetx {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

Poset Poset::from_up_sets(int k, std::vector<Mask> up) {
  require(k >= 0 && k <= kMaxPoints, "point count out of range");
  require(static_cast<int>(up.size()) == k, "up-set array size mismatch");
  Poset p;
  p.k_ = k;
  p.up_ = std::move(up);
  p.down_.assign(k, 0);
  for (int x = 0; x < k; ++x) {
    require((p.up_[x] & ~full_mask(k)) == 0, "up-set exceeds ground set");
    for_each_bit(p.up_[x], [&](int y) { p.down_[y] |= bit(x); });
  }
  p.validate();
  return p;
}

void Poset::validate() const {
  for (int x = 0; x < k_; ++x) {
    if (!((up_[x] >> x) & 1)) throw std::invalid_argument("relation not reflexive");
    Mask both = up_[x] & down_[x];
    if (both != bit(x)) throw CycleError("two distinct points related both ways");
    for_each_bit(strict_up(x), [&](int y) {
      if (up_[y] & ~up_[x]) throw std::invalid_argument("relation not transitive");
    });
  }
}

Poset Poset::from_pairs(int k, const std::vector<std::pair<int, int>>& relation_pairs) {
  require(k >= 0 && k <= kMaxPoints, "point count out of range");
  std::vector<Mask> up(k);
  for (int x = 0; x < k; ++x) up[x] = bit(x);
  for (auto [i, j] : relation_pairs) {
    require(i >= 0 && i < k && j >= 0 && j < k, "relation pair out of range");
    up[i] |= bit(j);
  }
  // Warshall closure over bit rows.
  for (int mid = 0; mid < k; ++mid)
    for (int x = 0; x < k; ++x)
      if ((up[x] >> mid) & 1) up[x] |= up[mid];
  for (int x = 0; x < k; ++x)
    for_each_bit(up[x] & ~bit(x), [&](int y) {
      if ((up[y] >> x) & 1) throw CycleError("generators close into a cycle");
    });
  return from_up_sets(k, std::move(up));
}

Poset Poset::antichain(int k) {
  std::vector<Mask> up(k);
  for (int x = 0; x < k; ++x) up[x] = bit(x);
  return from_up_sets(k, std::move(up));
}

Poset Poset::chain(int k) {
  std::vector<Mask> up(k);
  for (int x = 0; x < k; ++x) up[x] = full_mask(k) & ~full_mask(x);
  return from_up_sets(k, std::move(up));
}

Mask Poset::up_closure(Mask a) const {
  require((a & ~ground()) == 0, "subset exceeds ground set");
  Mask r = 0;
  for_each_bit(a, [&](int x) { r |= up_[x]; });
  return r;
}

Mask Poset::down_closure(Mask a) const {
  require((a & ~ground()) == 0, "subset exceeds ground set");
  Mask r = 0;
  for_each_bit(a, [&](int x) { r |= down_[x]; });
  return r;
}

Mask Poset::minimal_points() const {
  Mask r = 0;
  for (int x = 0; x < k_; ++x)
    if (strict_down(x) == 0) r |= bit(x);
  return r;
}

Mask Poset::maximal_points() const {
  Mask r = 0;
  for (int x = 0; x < k_; ++x)
    if (strict_up(x) == 0) r |= bit(x);
  return r;
}

std::vector<int> Poset::levels() const {
  std::vector<int> level(k_, 1);
  for (int x : linear_extension()) {
    for_each_bit(strict_down(x), [&](int y) { level[x] = std::max(level[x], level[y] + 1); });
  }
  return level;
}

int Poset::height() const {
  int h = 0;
  for (int l : levels()) h = std::max(h, l);
  return h;
}

bool Poset::is_antichain(Mask a) const {
  require((a & ~ground()) == 0, "subset exceeds ground set");
  bool ok = true;
  for_each_bit(a, [&](int x) { ok = ok && (comparable(x) & a) == bit(x); });
  return ok;
}

bool Poset::is_downset(Mask a) const {
  require((a & ~ground()) == 0, "subset exceeds ground set");
  return down_closure(a) == a;
}

bool Poset::is_upset(Mask a) const {
  require((a & ~ground()) == 0, "subset exceeds ground set");
  return up_closure(a) == a;
}

Mask Poset::interior(Mask u) const {
  require((u & ~ground()) == 0, "subset exceeds ground set");
  return ground() & ~up_closure(ground() & ~u);
}

Poset Poset::restrict(Mask keep) const {
  require((keep & ~ground()) == 0, "subset exceeds ground set");
  int n = popcount(keep);
  std::vector<int> new_index(k_, -1);
  int next = 0;
  for_each_bit(keep, [&](int x) { new_index[x] = next++; });
  std::vector<Mask> up(n);
  for_each_bit(keep, [&](int x) {
    Mask row = 0;
    for_each_bit(up_[x] & keep, [&](int y) { row |= bit(new_index[y]); });
    up[new_index[x]] = row;
  });
  return from_up_sets(n, std::move(up));
}

Poset Poset::dual() const {
  return from_up_sets(k_, down_);
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> covers;
  for (int x = 0; x < k_; ++x)
    for_each_bit(strict_up(x), [&](int y) {
      if ((strict_up(x) & strict_down(y)) == 0) covers.emplace_back(x, y);
    });
  std::sort(covers.begin(), covers.end());
  return covers;
}

std::vector<int> Poset::linear_extension() const {
  std::vector<int> order(k_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return popcount(down_[a]) < popcount(down_[b]); });
  return order;
}

Poset cardinal_sum(const Poset& o, const Poset& p) {
  int n = o.size() + p.size();
  std::vector<Mask> up(n);
  for (int x = 0; x < o.size(); ++x) up[x] = o.up(x);
  for (int y = 0; y < p.size(); ++y) up[o.size() + y] = p.up(y) << o.size();
  return Poset::from_up_sets(n, std::move(up));
}

Poset ordinal_sum(const Poset& o, const Poset& p) {
  int n = o.size() + p.size();
  Mask upper = full_mask(n) & ~full_mask(o.size());
  std::vector<Mask> up(n);
  for (int x = 0; x < o.size(); ++x) up[x] = o.up(x) | upper;
  for (int y = 0; y < p.size(); ++y) up[o.size() + y] = p.up(y) << o.size();
  return Poset::from_up_sets(n, std::move(up));
}

Poset fence(int t) {
  if (t < 1) throw std::invalid_argument("fence needs t >= 1");
  return zigzag(2 * t);
}

Poset zigzag(int k) {
  if (k < 1) throw std::invalid_argument("zigzag needs k >= 1");
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < k; ++i) {
    if (i % 2 == 0)
      rel.emplace_back(i, i + 1);
    else
      rel.emplace_back(i + 1, i);
  }
  return Poset::from_pairs(k, rel);
}

VerticalRelation::VerticalRelation(Poset lower, Poset upper, std::vector<Mask> rows, bool check)
    : lower_(std::move(lower)), upper_(std::move(upper)), row_(std::move(rows)) {
  rebuild_cols();
  if (check) validate();
}

VerticalRelation::VerticalRelation(Poset lower, Poset upper,
                                   const std::vector<std::pair<int, int>>& pairs)
    : VerticalRelation(std::move(lower), std::move(upper), {}, false) {
  row_.assign(lower_.size(), 0);
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= lower_.size() || y < 0 || y >= upper_.size())
      throw std::invalid_argument("relation pair out of range");
    row_[x] |= bit(y);
  }
  rebuild_cols();
  validate();
}

void VerticalRelation::rebuild_cols() {
  col_.assign(upper_.size(), 0);
  for (int x = 0; x < static_cast<int>(row_.size()); ++x)
    for_each_bit(row_[x], [&](int y) { col_[y] |= bit(x); });
}

void VerticalRelation::validate() const {
  for (int x = 0; x < lower_.size(); ++x) {
    if (!upper_.is_upset(row_[x]))
      throw ClosureError("cross relation row is not an upset of the upper poset");
    for_each_bit(lower_.strict_up(x), [&](int above) {
      if (row_[above] & ~row_[x])
        throw ClosureError("cross relation rows do not shrink upward");
    });
  }
}

VerticalRelation VerticalRelation::closure(Poset lower, Poset upper,
                                           const std::vector<std::pair<int, int>>& seed_pairs) {
  std::vector<Mask> rows(lower.size(), 0);
  for (auto [x, y] : seed_pairs) {
    if (x < 0 || x >= lower.size() || y < 0 || y >= upper.size())
      throw std::invalid_argument("relation pair out of range");
    rows[x] |= bit(y);
  }
  for (auto& r : rows) r = upper.up_closure(r);
  // Rows inherit everything related from above; maximal points first.
  std::vector<int> order(lower.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return popcount(lower.up(a)) < popcount(lower.up(b));
  });
  for (int x : order)
    for_each_bit(lower.strict_up(x), [&](int above) { rows[x] |= rows[above]; });
  return VerticalRelation(std::move(lower), std::move(upper), std::move(rows), true);
}

VerticalRelation VerticalRelation::empty(Poset lower, Poset upper) {
  std::vector<Mask> rows(lower.size(), 0);
  return VerticalRelation(std::move(lower), std::move(upper), std::move(rows), true);
}

VerticalRelation VerticalRelation::total(Poset lower, Poset upper) {
  std::vector<Mask> rows(lower.size(), upper.ground());
  return VerticalRelation(std::move(lower), std::move(upper), std::move(rows), true);
}

Mask VerticalRelation::related_from(Mask d) const {
  Mask r = 0;
  for_each_bit(d, [&](int y) { r |= col_[y]; });
  return r;
}

std::vector<std::pair<int, int>> VerticalRelation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < lower_.size(); ++x)
    for_each_bit(row_[x], [&](int y) { out.emplace_back(x, y); });
  return out;
}

Poset vertical_sum(const VerticalRelation& v) {
  int nx = v.lower().size();
  int n = nx + v.upper().size();
  std::vector<Mask> up(n);
  for (int x = 0; x < nx; ++x) up[x] = v.lower().up(x) | (v.row(x) << nx);
  for (int y = 0; y < v.upper().size(); ++y) up[nx + y] = v.upper().up(y) << nx;
  return Poset::from_up_sets(n, std::move(up));
}

}  // namespace posetx
