#include "fishburn/poset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "fishburn/bijection.hpp"

namespace fishburn::poset {

namespace {

std::uint64_t full_mask(int n) {
  return n == 64 ? ~0ull : (1ull << n) - 1;
}

}  // namespace

void check_strict_poset(const StrictPoset& p) {
  if (p.n < 0 || p.n > 64) throw std::invalid_argument("poset size out of range");
  if (static_cast<int>(p.down.size()) != p.n)
    throw std::invalid_argument("down-set table size mismatch");
  for (int x = 0; x < p.n; ++x) {
    if (p.down[x] & ~full_mask(p.n))
      throw std::invalid_argument("down-set mentions unknown element");
    if ((p.down[x] >> x) & 1u) throw std::invalid_argument("order not irreflexive");
    for (int y = 0; y < p.n; ++y)
      if (p.less(y, x) && (p.down[y] & ~p.down[x]))
        throw std::invalid_argument("order not transitive");
  }
}

std::vector<std::pair<int, int>> cover_pairs(const StrictPoset& p) {
  std::vector<std::pair<int, int>> covers;
  for (int x = 0; x < p.n; ++x) {
    for (int y = 0; y < p.n; ++y) {
      if (!p.less(y, x)) continue;
      bool direct = true;
      for (int w = 0; w < p.n && direct; ++w)
        if (p.less(y, w) && p.less(w, x)) direct = false;
      if (direct) covers.emplace_back(y, x);
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

StrictPoset from_cover_pairs(int n,
                             const std::vector<std::pair<int, int>>& covers) {
  if (n < 0 || n > 64) throw std::invalid_argument("poset size out of range");
  StrictPoset p{n, std::vector<std::uint64_t>(n, 0)};
  for (auto [y, x] : covers) {
    if (y < 0 || y >= n || x < 0 || x >= n)
      throw std::invalid_argument("cover pair out of range");
    p.down[x] |= 1ull << y;
  }
  // Transitive closure (repeat until fixpoint; n is small).
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      std::uint64_t acc = p.down[x];
      std::uint64_t rest = p.down[x];
      while (rest) {
        const int y = std::countr_zero(rest);
        rest &= rest - 1;
        acc |= p.down[y];
      }
      if (acc != p.down[x]) {
        p.down[x] = acc;
        changed = true;
      }
    }
  }
  for (int x = 0; x < n; ++x)
    if ((p.down[x] >> x) & 1u)
      throw std::invalid_argument("cover pairs contain a cycle");
  check_strict_poset(p);
  return p;
}

void check_level_poset(const LevelPoset& lp) {
  if (lp.n < 0 || lp.n > 64)
    throw std::invalid_argument("poset size out of range");
  if (static_cast<int>(lp.level_of.size()) != lp.n)
    throw std::invalid_argument("level table size mismatch");
  const int k = lp.rank();
  if (lp.n == 0) {
    if (k != 0) throw std::invalid_argument("empty poset must have empty chain");
    return;
  }
  if (k == 0) throw std::invalid_argument("nonempty poset needs a chain");
  if (lp.chain[0] != 0) throw std::invalid_argument("chain must start at {}");
  std::vector<int> level_size(k, 0);
  for (int x = 0; x < lp.n; ++x) {
    if (lp.level_of[x] < 0 || lp.level_of[x] >= k)
      throw std::invalid_argument("level out of range");
    ++level_size[lp.level_of[x]];
  }
  for (int i = 0; i < k; ++i)
    if (level_size[i] == 0) throw std::invalid_argument("empty level");
  for (int i = 0; i < k; ++i) {
    if (lp.chain[i] & ~full_mask(lp.n))
      throw std::invalid_argument("chain mentions unknown element");
    if (i + 1 < k && (lp.chain[i] & ~lp.chain[i + 1]))
      throw std::invalid_argument("chain not nested");
    if (i + 1 < k && lp.chain[i] == lp.chain[i + 1])
      throw std::invalid_argument("chain not strictly increasing");
    std::uint64_t rest = lp.chain[i];
    while (rest) {
      const int y = std::countr_zero(rest);
      rest &= rest - 1;
      if (lp.level_of[y] >= i)
        throw std::invalid_argument("down-set contains element of higher level");
    }
  }
}

std::vector<int> level_members(const LevelPoset& lp, int i) {
  std::vector<int> out;
  for (int x = 0; x < lp.n; ++x)
    if (lp.level_of[x] == i) out.push_back(x);
  return out;
}

std::uint64_t maximal_mask(const LevelPoset& lp) {
  // Down-sets are nested, so an element is maximal iff it avoids the top one.
  const std::uint64_t below = lp.chain.empty() ? 0 : lp.chain.back();
  return full_mask(lp.n) & ~below;
}

int srank(const LevelPoset& lp) {
  if (lp.n == 0) return 0;
  std::uint64_t rest = maximal_mask(lp);
  int best = lp.rank();
  while (rest) {
    const int x = std::countr_zero(rest);
    rest &= rest - 1;
    best = std::min(best, lp.level_of[x]);
  }
  return best;
}

StrictPoset to_strict(const LevelPoset& lp) {
  StrictPoset p{lp.n, std::vector<std::uint64_t>(lp.n, 0)};
  for (int x = 0; x < lp.n; ++x) p.down[x] = lp.chain[lp.level_of[x]];
  return p;
}

std::variant<LevelPoset, IncomparableDownSets> down_set_chain(
    const StrictPoset& p) {
  check_strict_poset(p);
  // Distinct down-sets sorted by size must form a chain under inclusion.
  std::vector<std::uint64_t> sets(p.down);
  std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
    if (sets[i] & ~sets[i + 1]) {
      // Exhibit elements carrying two inclusion-incomparable down-sets.
      for (int x = 0; x < p.n; ++x)
        for (int y = 0; y < p.n; ++y)
          if ((p.down[x] & ~p.down[y]) && (p.down[y] & ~p.down[x]))
            return IncomparableDownSets{x, y};
      throw std::logic_error("incomparable down-sets without witness");
    }
  }
  LevelPoset lp;
  lp.n = p.n;
  lp.chain = sets;
  lp.level_of.resize(p.n);
  for (int x = 0; x < p.n; ++x) {
    const auto it = std::find(sets.begin(), sets.end(), p.down[x]);
    lp.level_of[x] = static_cast<int>(it - sets.begin());
  }
  check_level_poset(lp);
  return lp;
}

bool contains_two_plus_two(const StrictPoset& p) {
  // Two disjoint related pairs with no relation across them.
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y)
      if (p.less(y, x)) edges.emplace_back(y, x);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [a, b] = edges[i];
      const auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      if (p.less(a, c) || p.less(c, a) || p.less(a, d) || p.less(d, a) ||
          p.less(b, c) || p.less(c, b) || p.less(b, d) || p.less(d, b))
        continue;
      return true;
    }
  }
  return false;
}

bool contains_three_plus_one(const StrictPoset& p) {
  for (int a = 0; a < p.n; ++a)
    for (int b = 0; b < p.n; ++b) {
      if (!p.less(a, b)) continue;
      for (int c = 0; c < p.n; ++c) {
        if (!p.less(b, c)) continue;
        for (int r = 0; r < p.n; ++r) {
          if (r == a || r == b || r == c) continue;
          if (p.less(r, a) || p.less(a, r) || p.less(r, b) || p.less(b, r) ||
              p.less(r, c) || p.less(c, r))
            continue;
          return true;
        }
      }
    }
  return false;
}

StatVector poset_stats(const LevelPoset& lp) {
  StatVector s;
  s.length = lp.n;                        // size
  s.asc = std::max(lp.rank() - 1, 0);     // levels
  s.last = srank(lp);                     // minmax
  s.zeros = lp.n == 0 ? 0 : static_cast<int>(level_members(lp, 0).size());
  s.run = bijection::decompose(lp).lds;   // lds
  return s;
}

namespace {

// Per-element invariant used to prune the isomorphism search.
struct DegreeKey {
  int downs, ups, level;
  bool operator==(const DegreeKey&) const = default;
  auto operator<=>(const DegreeKey&) const = default;
};

std::vector<DegreeKey> degree_keys(const StrictPoset& p) {
  std::vector<DegreeKey> keys(p.n);
  for (int x = 0; x < p.n; ++x) {
    keys[x].downs = std::popcount(p.down[x]);
    keys[x].ups = 0;
    keys[x].level = 0;
  }
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y)
      if (p.less(y, x)) ++keys[y].ups;
  return keys;
}

bool extend(const StrictPoset& p, const StrictPoset& q,
            const std::vector<DegreeKey>& kp, const std::vector<DegreeKey>& kq,
            std::vector<int>& map, std::vector<bool>& used, int x) {
  if (x == p.n) return true;
  for (int y = 0; y < q.n; ++y) {
    if (used[y] || kp[x] != kq[y]) continue;
    bool ok = true;
    for (int w = 0; w < x && ok; ++w)
      ok = p.less(w, x) == q.less(map[w], y) && p.less(x, w) == q.less(y, map[w]);
    if (!ok) continue;
    map[x] = y;
    used[y] = true;
    if (extend(p, q, kp, kq, map, used, x + 1)) return true;
    used[y] = false;
  }
  return false;
}

}  // namespace

bool are_isomorphic(const StrictPoset& p, const StrictPoset& q) {
  if (p.n != q.n) return false;
  auto kp = degree_keys(p), kq = degree_keys(q);
  auto sp = kp, sq = kq;
  std::sort(sp.begin(), sp.end());
  std::sort(sq.begin(), sq.end());
  if (sp != sq) return false;
  std::vector<int> map(p.n, -1);
  std::vector<bool> used(p.n, false);
  return extend(p, q, kp, kq, map, used, 0);
}

std::vector<StrictPoset> enumerate_strict_posets(int n) {
  if (n < 0 || n > 5)
    throw std::invalid_argument("labeled enumeration limited to n <= 5");
  // Ordered pairs (y, x), y != x, as mask bits; keep transitive relations.
  std::vector<std::pair<int, int>> pairs;
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      if (y != x) pairs.emplace_back(y, x);
  std::vector<StrictPoset> out;
  const std::uint64_t limit = 1ull << pairs.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    StrictPoset p{n, std::vector<std::uint64_t>(n, 0)};
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if ((mask >> b) & 1u) p.down[pairs[b].second] |= 1ull << pairs[b].first;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if ((p.down[x] >> x) & 1u) ok = false;
      for (int y = 0; y < n && ok; ++y)
        if (p.less(y, x)) {
          if (p.less(x, y)) ok = false;           // antisymmetry
          else if (p.down[y] & ~p.down[x]) ok = false;  // transitivity
        }
    }
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace fishburn::poset
