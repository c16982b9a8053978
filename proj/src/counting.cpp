#include "posetx/counting.hpp"

#include <algorithm>
#include <functional>

namespace posetx {

namespace {

// Subsets b of mask d in the standard ascending walk; calls f on each.
template <typename F>
void for_each_subset(Mask d, F&& f) {
  Mask b = 0;
  while (true) {
    f(b);
    if (b == d) break;
    b = (b - d) & d;
  }
}

Mask minimal_within(const Poset& p, Mask live) {
  Mask mins = 0;
  for_each_bit(live, [&](int x) {
    if ((p.strict_down(x) & live) == 0) mins |= bit(x);
  });
  return mins;
}

Mask up_closure_within(const Poset& p, Mask live, Mask a) {
  Mask r = 0;
  for_each_bit(a, [&](int x) { r |= p.up(x); });
  return r & live;
}

Mask down_closure_within(const Poset& p, Mask live, Mask a) {
  Mask r = 0;
  for_each_bit(a, [&](int x) { r |= p.down(x); });
  return r & live;
}

// Beyond this many minimal points the subset split degenerates; fall back
// to the two-term point split.
constexpr int kMinSplitCap = 6;

}  // namespace

std::vector<Mask> downset_masks(const Poset& p) {
  std::vector<int> order = p.linear_extension();
  std::vector<Mask> out;
  // Depth-first include/exclude along a linear extension; a point may be
  // included only once everything strictly below it is in, so every leaf is
  // a distinct downset.
  std::function<void(std::size_t, Mask)> rec = [&](std::size_t idx, Mask cur) {
    if (idx == order.size()) {
      out.push_back(cur);
      return;
    }
    int x = order[idx];
    rec(idx + 1, cur);
    if ((p.strict_down(x) & ~cur) == 0) rec(idx + 1, cur | bit(x));
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> upset_masks(const Poset& p) {
  std::vector<Mask> out = downset_masks(p);
  for (auto& m : out) m = p.ground() & ~m;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> antichain_masks_within(const Poset& p, Mask live) {
  std::vector<int> points;
  for_each_bit(live, [&](int x) { points.push_back(x); });
  std::vector<Mask> out;
  std::function<void(std::size_t, Mask)> rec = [&](std::size_t idx, Mask cur) {
    if (idx == points.size()) {
      out.push_back(cur);
      return;
    }
    int x = points[idx];
    rec(idx + 1, cur);
    if ((p.comparable(x) & cur) == 0) rec(idx + 1, cur | bit(x));
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> antichain_masks(const Poset& p) {
  return antichain_masks_within(p, p.ground());
}

Int DownsetCounter::count(Mask live) {
  if (live == 0) return 1;
  if (auto it = memo_.find(live); it != memo_.end()) return it->second;
  Int result = 0;
  Mask mins = minimal_within(p_, live);
  if (popcount(mins) <= kMinSplitCap) {
    for_each_subset(mins, [&](Mask b) {
      Mask removed = up_closure_within(p_, live, mins & ~b) | down_closure_within(p_, live, b);
      result += count(live & ~removed);
    });
  } else {
    int x = pick_pivot(live);
    result = count(live & ~(p_.down(x) & live)) + count(live & ~(p_.up(x) & live));
  }
  return memo_[live] = result;
}

int DownsetCounter::pick_pivot(Mask live) const {
  int best = -1, best_deg = -1;
  for_each_bit(live, [&](int x) {
    int deg = popcount(p_.comparable(x) & live) - 1;
    if (deg > best_deg) {
      best_deg = deg;
      best = x;
    }
  });
  return best;
}

Int d_count(const Poset& p) { return DownsetCounter(p).count_all(); }

Int a_count(const Poset& p) {
  Int n = 0;
  std::function<void(int, Mask)> rec = [&](int x, Mask cur) {
    if (x == p.size()) {
      ++n;
      return;
    }
    rec(x + 1, cur);
    if ((p.comparable(x) & cur) == 0) rec(x + 1, cur | bit(x));
  };
  rec(0, 0);
  return n;
}

Int d_split_upper_bound(const Poset& p, Mask a) {
  DownsetCounter dc(p);
  Mask ground = p.ground();
  Int total = 0;
  for_each_subset(a, [&](Mask b) {
    Mask removed = p.up_closure(a & ~b) | p.down_closure(b);
    total += dc.count(ground & ~removed);
  });
  return total;
}

Int d_split(const Poset& p, Mask a) {
  if (!p.is_antichain(a)) throw NotAntichainError("split set is not an antichain");
  return d_split_upper_bound(p, a);
}

Int d_antichain_formula(const Poset& p, Mask a) {
  if (!p.is_antichain(a)) throw NotAntichainError("split set is not an antichain");
  Int total = 0;
  for (Mask b : antichain_masks_within(p, p.ground() & ~a)) {
    Mask hull = p.down_closure(b) | p.up_closure(b);
    total += Int(1) << popcount(a & ~hull);
  }
  return total;
}

Int d_product_rule(const Poset& o, const Poset& p) { return d_count(o) * d_count(p); }

Int d_ordinal_rule(const Poset& o, const Poset& p) { return d_count(o) + d_count(p) - 1; }

std::vector<Mask> components(const Poset& p) {
  std::vector<Mask> out;
  Mask seen = 0;
  for (int x = 0; x < p.size(); ++x) {
    if ((seen >> x) & 1) continue;
    Mask comp = bit(x);
    while (true) {
      Mask grown = comp;
      for_each_bit(comp, [&](int y) { grown |= p.comparable(y); });
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(comp);
    seen |= comp;
  }
  return out;
}

Int d_by_components(const Poset& p) {
  Int total = 1;
  for (Mask comp : components(p)) total *= d_count(p.restrict(comp));
  return total;
}

Int d_vertical(const VerticalRelation& v) {
  DownsetCounter dc(v.lower());
  Mask lower_ground = v.lower().ground();
  Int total = 0;
  for (Mask d : downset_masks(v.upper())) total += dc.count(lower_ground & ~v.related_from(d));
  return total;
}

ExtremalCount max_d_given_minimals(int k, int m) {
  if (m < 1 || m > k) throw std::invalid_argument("need 1 <= m <= k");
  ExtremalCount r;
  r.max_d = (Int(1) << (m - 1)) + (Int(1) << (k - 1));
  r.maximizers = (m == k) ? Int(1) : binomial(k, m) * m;
  return r;
}

ExtremalCount max_d_given_height(int k, int h) {
  if (h < 1 || h > k) throw std::invalid_argument("need 1 <= h <= k");
  ExtremalCount r;
  r.max_d = (Int(1) << (k - h)) * (h + 1);
  if (h == 1) {
    r.maximizers = 1;
  } else {
    Int falling = 1;
    for (int i = 0; i < h; ++i) falling *= k - i;
    r.maximizers = falling;
  }
  return r;
}

}  // namespace posetx
