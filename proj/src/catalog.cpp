#include "posetx/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "posetx/expo.hpp"

namespace posetx {

namespace {

// Stable point coloring invariant under isomorphism, refined to a fixpoint.
// Color order starts with the chain level, so listing color classes in order
// always yields linear extensions.
std::vector<int> refine_colors(const Poset& p) {
  int k = p.size();
  std::vector<int> level = p.levels();
  std::vector<int> color(k);
  {
    std::map<std::tuple<int, int, int>, int> ids;
    for (int x = 0; x < k; ++x)
      ids.emplace(std::tuple{level[x], popcount(p.down(x)), popcount(p.up(x))}, 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int x = 0; x < k; ++x)
      color[x] = ids[{level[x], popcount(p.down(x)), popcount(p.up(x))}];
  }
  int classes = k == 0 ? 0 : 1 + *std::max_element(color.begin(), color.end());
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> keys(k);
    for (int x = 0; x < k; ++x) {
      std::vector<int> key{color[x], -1};
      std::vector<int> below, above;
      for_each_bit(p.strict_down(x), [&](int y) { below.push_back(color[y]); });
      for_each_bit(p.strict_up(x), [&](int y) { above.push_back(color[y]); });
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      key.insert(key.end(), below.begin(), below.end());
      key.push_back(-2);
      key.insert(key.end(), above.begin(), above.end());
      keys[x] = std::move(key);
      ids.emplace(keys[x], 0);
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int x = 0; x < k; ++x) color[x] = ids[keys[x]];
    if (next == classes || next == k) break;
    classes = next;
  }
  return color;
}

using Encoding = std::vector<std::uint64_t>;

Encoding encode_ordering(const Poset& p, const std::vector<int>& perm) {
  int k = p.size();
  int bits = k * (k - 1) / 2;
  Encoding enc((bits + 63) / 64, 0);
  int b = 0;
  for (int j = 1; j < k; ++j)
    for (int i = 0; i < j; ++i) {
      if (p.leq(perm[i], perm[j])) enc[b / 64] |= std::uint64_t{1} << (63 - b % 64);
      ++b;
    }
  return enc;
}

std::vector<std::uint8_t> pack_code(int k, const Encoding& enc) {
  int bits = k * (k - 1) / 2;
  std::vector<std::uint8_t> code(1 + (bits + 7) / 8, 0);
  code[0] = static_cast<std::uint8_t>(k);
  for (int b = 0; b < bits; ++b) {
    bool set = (enc[b / 64] >> (63 - b % 64)) & 1;
    if (set) code[1 + b / 8] |= static_cast<std::uint8_t>(1u << (7 - b % 8));
  }
  return code;
}

Poset add_maximal_above(const Poset& p, Mask downset) {
  int k = p.size() + 1;
  std::vector<Mask> up(k);
  for (int x = 0; x < p.size(); ++x)
    up[x] = p.up(x) | (((downset >> x) & 1) ? bit(k - 1) : 0);
  up[k - 1] = bit(k - 1);
  return Poset::from_up_sets(k, std::move(up));
}

}  // namespace

CanonicalForm canonical_form(const Poset& p) {
  int k = p.size();
  if (k == 0) return CanonicalForm{{0}, 1, Poset()};

  std::vector<int> color = refine_colors(p);
  // cells grouped by color, colors ascending
  int classes = 1 + *std::max_element(color.begin(), color.end());
  std::vector<std::vector<int>> cells(classes);
  for (int x = 0; x < k; ++x) cells[color[x]].push_back(x);

  std::vector<int> perm, best_perm;
  perm.reserve(k);
  Encoding best;
  Int ties = 0;
  std::vector<bool> used(k, false);

  std::function<void(int, std::size_t)> rec = [&](int cell, std::size_t taken) {
    if (cell == classes) {
      Encoding enc = encode_ordering(p, perm);
      if (best.empty() && ties == 0) {
        best = enc;
        best_perm = perm;
        ties = 1;
      } else if (enc < best) {
        best = enc;
        best_perm = perm;
        ties = 1;
      } else if (enc == best) {
        ++ties;
      }
      return;
    }
    const auto& members = cells[cell];
    if (taken == members.size()) {
      rec(cell + 1, 0);
      return;
    }
    for (int v : members) {
      if (used[v]) continue;
      used[v] = true;
      perm.push_back(v);
      rec(cell, taken + 1);
      perm.pop_back();
      used[v] = false;
    }
  };
  rec(0, 0);

  // relabel so that canonical position i carries best_perm[i]
  std::vector<int> pos_of(k);
  for (int i = 0; i < k; ++i) pos_of[best_perm[i]] = i;
  std::vector<Mask> up(k);
  for (int i = 0; i < k; ++i) {
    Mask row = 0;
    for_each_bit(p.up(best_perm[i]), [&](int y) { row |= bit(pos_of[y]); });
    up[i] = row;
  }
  return CanonicalForm{pack_code(k, best), ties, Poset::from_up_sets(k, std::move(up))};
}

Poset poset_from_code(const std::vector<std::uint8_t>& code) {
  if (code.empty()) throw std::invalid_argument("empty canonical code");
  int k = code[0];
  int bits = k * (k - 1) / 2;
  if (static_cast<int>(code.size()) != 1 + (bits + 7) / 8)
    throw std::invalid_argument("canonical code length mismatch");
  std::vector<std::pair<int, int>> rel;
  int b = 0;
  for (int j = 1; j < k; ++j)
    for (int i = 0; i < j; ++i) {
      if ((code[1 + b / 8] >> (7 - b % 8)) & 1) rel.emplace_back(i, j);
      ++b;
    }
  return Poset::from_pairs(k, rel);
}

std::vector<CatalogEntry> enumerate_catalog(int k_max, int threads) {
  if (k_max < 0 || k_max > 7) throw BudgetExceededError("catalog limited to at most 7 points");
  using ClassMap = std::map<std::vector<std::uint8_t>, std::pair<Poset, Int>>;

  std::vector<CatalogEntry> entries;
  auto append_level = [&](const ClassMap& classes) {
    for (const auto& [code, rep] : classes) {
      CatalogEntry e;
      e.index = static_cast<int>(entries.size()) + 1;
      e.poset = rep.first;
      e.points = rep.first.size();
      e.min_count = popcount(rep.first.minimal_points());
      e.height = rep.first.height();
      e.automorphisms = rep.second;
      e.copies = factorial(static_cast<unsigned>(e.points)) / e.automorphisms;
      e.downsets = d_count(rep.first);
      e.exp = exp_sum(rep.first);
      e.code = code;
      entries.push_back(std::move(e));
    }
  };

  ClassMap level;
  level.emplace(std::vector<std::uint8_t>{0}, std::pair{Poset(), Int(1)});
  append_level(level);

  for (int k = 1; k <= k_max; ++k) {
    std::vector<Poset> parents;
    parents.reserve(level.size());
    for (const auto& [code, rep] : level) parents.push_back(rep.first);

    auto extend_range = [&](std::size_t lo, std::size_t hi, ClassMap& out) {
      for (std::size_t i = lo; i < hi; ++i)
        for (Mask d : downset_masks(parents[i])) {
          CanonicalForm cf = canonical_form(add_maximal_above(parents[i], d));
          out.emplace(std::move(cf.code), std::pair{std::move(cf.canonical), cf.automorphisms});
        }
    };

    ClassMap next;
    int workers = std::max(1, threads);
    if (workers == 1 || parents.size() < 8) {
      extend_range(0, parents.size(), next);
    } else {
      workers = std::min<std::size_t>(workers, parents.size());
      std::vector<ClassMap> partial(workers);
      std::vector<std::thread> pool;
      std::size_t chunk = (parents.size() + workers - 1) / workers;
      for (int w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = std::min(parents.size(), lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(extend_range, lo, hi, std::ref(partial[w]));
      }
      for (auto& t : pool) t.join();
      for (auto& part : partial) next.merge(part);
    }
    append_level(next);
    level = std::move(next);
  }
  return entries;
}

void for_each_labeled_poset(int k, const std::function<void(const Poset&)>& f) {
  if (k < 0 || k > 5) throw BudgetExceededError("labeled streaming limited to 5 points");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);

  // one trit per unordered pair: incomparable, i below j, or j below i
  std::vector<int> trit(pairs.size(), 0);
  std::vector<Mask> up(k);
  while (true) {
    for (int x = 0; x < k; ++x) up[x] = bit(x);
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      if (trit[t] == 1) up[pairs[t].first] |= bit(pairs[t].second);
      if (trit[t] == 2) up[pairs[t].second] |= bit(pairs[t].first);
    }
    bool transitive = true;
    for (int x = 0; x < k && transitive; ++x) {
      Mask above = up[x] & ~bit(x);
      for_each_bit(above, [&](int y) {
        if (up[y] & ~up[x]) transitive = false;
      });
    }
    if (transitive) f(Poset::from_up_sets(k, up));

    std::size_t t = 0;
    while (t < trit.size() && trit[t] == 2) trit[t++] = 0;
    if (t == trit.size()) break;
    ++trit[t];
  }
}

Int labeled_poset_count(int k) {
  Int n = 0;
  for_each_labeled_poset(k, [&](const Poset&) { ++n; });
  return n;
}

CatalogMatrices catalog_matrices(const std::vector<CatalogEntry>& cat, int m_max) {
  CatalogMatrices mats;
  mats.classes = static_cast<int>(cat.size());
  mats.m_max = m_max;
  int n = mats.classes;

  std::map<std::vector<std::uint8_t>, int> index_of;
  for (int j = 0; j < n; ++j) index_of.emplace(cat[j].code, j);

  mats.A.assign(n, std::vector<Int>(n, 0));
  mats.B.assign(n, std::vector<Int>(n, 0));
  mats.C.assign(n, std::vector<Int>(n, 0));
  for (int col = 0; col < n; ++col) {
    const Poset& p = cat[col].poset;
    for (Mask u : upset_masks(p)) {
      CanonicalForm cf = canonical_form(p.restrict(u));
      auto it = index_of.find(cf.code);
      if (it == index_of.end())
        throw IncompleteCatalogError("upset class missing from the catalog");
      int row = it->second;
      mats.B[row][col] += 1;
      mats.A[row][col] += d_count(p.restrict(p.interior(u)));
    }
  }
  for (int col = 0; col < n; ++col) {
    mats.C[col][col] = 1;
    for (int row = col - 1; row >= 0; --row) {
      Int s = 0;
      for (int j = row + 1; j <= col; ++j) s += mats.B[row][j] * mats.C[j][col];
      mats.C[row][col] = -s;
    }
  }

  mats.D.assign(m_max + 1, std::vector<Int>(n, 0));
  mats.E.assign(m_max + 1, std::vector<Int>(n, 0));
  for (int col = 0; col < n; ++col)
    for (int m = 0; m <= m_max; ++m) {
      mats.D[m][col] = pow_int(cat[col].downsets, static_cast<unsigned>(m));
      mats.E[m][col] = cat[col].exp.eval(static_cast<unsigned>(m));
    }
  return mats;
}

namespace {

ExpSum aggregate_filtered(const std::vector<CatalogEntry>& cat,
                          const std::function<bool(const CatalogEntry&)>& keep) {
  ExpSum total;
  for (const auto& e : cat)
    if (keep(e)) total = es_add(total, es_scale(e.exp, e.copies));
  return total;
}

}  // namespace

ExpSum aggregate_exp(const std::vector<CatalogEntry>& cat, int k) {
  return aggregate_filtered(cat, [&](const CatalogEntry& e) { return e.points == k; });
}

ExpSum aggregate_exp_min(const std::vector<CatalogEntry>& cat, int k, int n) {
  return aggregate_filtered(
      cat, [&](const CatalogEntry& e) { return e.points == k && e.min_count == n; });
}

ExpSum aggregate_exp_height(const std::vector<CatalogEntry>& cat, int k, int h) {
  return aggregate_filtered(
      cat, [&](const CatalogEntry& e) { return e.points == k && e.height == h; });
}

Int aggregate_e_k(const std::vector<CatalogEntry>& cat, int k, unsigned m) {
  return aggregate_exp(cat, k).eval(m);
}

Int aggregate_e_kn(const std::vector<CatalogEntry>& cat, int k, int n, unsigned m) {
  return aggregate_exp_min(cat, k, n).eval(m);
}

Int aggregate_e_kh(const std::vector<CatalogEntry>& cat, int k, int h, unsigned m) {
  return aggregate_exp_height(cat, k, h).eval(m);
}

bool HistogramCheckReport::all_pass() const {
  if (!gap_above_half_clear || !top_is_unique) return false;
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

HistogramCheckReport top_downset_census_check(int k) {
  HistogramCheckReport report;
  report.k = k;
  std::map<Int, Int> histogram;
  for_each_labeled_poset(k, [&](const Poset& p) { histogram[d_count(p)] += 1; });

  Int half = Int(1) << (k - 1);
  Int top = Int(1) << k;
  report.top_is_unique = histogram[top] == 1;

  std::map<Int, Int> expected;
  expected[top] = 1;
  auto z = [](int i) -> Int { return i == 2 ? 2 : i == 3 ? 6 : i == 4 ? 20 : 2 * i; };
  for (int i = 2; i <= k; ++i) {
    Int d_value = half + (Int(1) << (k - i));
    Int count = z(i) * binomial(static_cast<unsigned>(k), static_cast<unsigned>(i));
    expected[d_value] = count;
    report.entries.push_back(
        {i, d_value, count, histogram.count(d_value) ? histogram[d_value] : 0,
         histogram.count(d_value) && histogram[d_value] == count});
  }
  report.gap_above_half_clear = true;
  for (const auto& [d_value, count] : histogram)
    if (d_value > half && !expected.count(d_value)) report.gap_above_half_clear = false;
  return report;
}

bool PrimeDivisibilityReport::all_pass() const {
  for (const auto& [m, ok] : per_m)
    if (!ok) return false;
  return true;
}

PrimeDivisibilityReport aggregate_prime_divisibility(const std::vector<CatalogEntry>& cat, int k,
                                                     unsigned m_max) {
  if (k != 2 && k != 3 && k != 5)
    throw std::invalid_argument("prime divisibility check supports k in {2, 3, 5}");
  PrimeDivisibilityReport report;
  report.k = k;
  ExpSum ek = aggregate_exp(cat, k);
  Int sign = (k % 2 == 0) ? 1 : -1;
  for (unsigned m = 1; m <= m_max; ++m) {
    Int value = ek.eval(m) - pow_int(2, m * static_cast<unsigned>(k)) - sign;
    report.per_m.emplace_back(m, value % k == 0);
  }
  return report;
}

}  // namespace posetx
