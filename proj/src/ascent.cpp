#include "fishburn/ascent.hpp"

#include <algorithm>
#include <stdexcept>

namespace fishburn::ascent {

int asc(const std::vector<int>& entries) {
  int count = 0;
  for (std::size_t j = 1; j < entries.size(); ++j)
    if (entries[j - 1] < entries[j]) ++count;
  return count;
}

std::variant<AscentSequence, Rejection> validate(std::vector<int> entries) {
  int ascents = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const int x = entries[i];
    if (x < 0) return Rejection{i + 1, "negative entry"};
    if (i == 0) {
      if (x != 0) return Rejection{1, "first entry must be 0"};
      continue;
    }
    if (x > 1 + ascents)
      return Rejection{i + 1, "entry exceeds 1 + asc of preceding prefix"};
    if (entries[i - 1] < x) ++ascents;
  }
  return AscentSequence{std::move(entries)};
}

StatVector stats(const AscentSequence& a) {
  StatVector s;
  s.length = static_cast<int>(a.entries.size());
  s.asc = asc(a.entries);
  s.last = a.entries.empty() ? 0 : a.entries.back();
  int lead = 0;
  bool seen_nonzero = false;
  for (int x : a.entries) {
    if (x == 0) {
      ++s.zeros;
      if (!seen_nonzero) ++lead;
    } else {
      seen_nonzero = true;
    }
  }
  s.run = seen_nonzero ? lead : 0;
  return s;
}

namespace {

void enumerate_rec(int n, std::vector<int>& cur, int ascents,
                   const std::function<void(const AscentSequence&)>& fn) {
  if (static_cast<int>(cur.size()) == n) {
    fn(AscentSequence{cur});
    return;
  }
  const bool first = cur.empty();
  const int last = first ? 0 : cur.back();
  const int hi = first ? 0 : 1 + ascents;
  for (int x = 0; x <= hi; ++x) {
    cur.push_back(x);
    enumerate_rec(n, cur, ascents + (!first && last < x), fn);
    cur.pop_back();
  }
}

}  // namespace

void for_each_ascent_sequence(
    int n, const std::function<void(const AscentSequence&)>& fn) {
  if (n < 0) throw std::invalid_argument("negative length");
  std::vector<int> cur;
  cur.reserve(n);
  enumerate_rec(n, cur, 0, fn);
}

std::vector<AscentSequence> enumerate_ascent_sequences(int n) {
  std::vector<AscentSequence> out;
  for_each_ascent_sequence(n, [&](const AscentSequence& a) { out.push_back(a); });
  return out;
}

bool is_restricted(const AscentSequence& a) {
  int maxv = 0;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (i > 0 && a.entries[i] < maxv - 1) return false;
    maxv = std::max(maxv, a.entries[i]);
  }
  return true;
}

namespace {

void enumerate_restricted_rec(int n, std::vector<int>& cur, int ascents,
                              int maxv, std::vector<AscentSequence>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(AscentSequence{cur});
    return;
  }
  const bool first = cur.empty();
  const int last = first ? 0 : cur.back();
  const int lo = first ? 0 : std::max(0, maxv - 1);
  const int hi = first ? 0 : 1 + ascents;
  for (int x = lo; x <= hi; ++x) {
    cur.push_back(x);
    enumerate_restricted_rec(n, cur, ascents + (!first && last < x),
                             std::max(maxv, x), out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<AscentSequence> enumerate_restricted(int n) {
  if (n < 0) throw std::invalid_argument("negative length");
  std::vector<AscentSequence> out;
  std::vector<int> cur;
  cur.reserve(n);
  enumerate_restricted_rec(n, cur, 0, 0, out);
  return out;
}

std::optional<std::pair<int, int>> rightmost_maximum(const AscentSequence& a) {
  // Left-to-right maxima are strictly increasing, so each qualifying value
  // occurs as a maximum exactly once, at its leftmost occurrence.
  std::optional<std::pair<int, int>> found;
  int maxv = -1;
  int ascents = 0;  // asc of the first i entries
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const int x = a.entries[i];
    if (x > maxv) {
      maxv = x;
      if (x == 1 + ascents) found = {x, static_cast<int>(i) + 1};
    }
    if (i >= 1 && a.entries[i - 1] < x) ++ascents;
  }
  return found;
}

namespace {

void require_restricted(const AscentSequence& a, const char* who) {
  if (!std::holds_alternative<AscentSequence>(validate(a.entries)) ||
      !is_restricted(a))
    throw std::invalid_argument(std::string(who) +
                                " requires a restricted ascent sequence");
}

}  // namespace

AscentSequence glue(const AscentSequence& d1, const AscentSequence& d2) {
  require_restricted(d1, "glue");
  require_restricted(d2, "glue");
  if (!d1.entries.empty()) {
    const int a1 = asc(d1.entries);
    std::vector<int> out = d1.entries;
    out.push_back(1 + a1);
    for (int x : d2.entries) out.push_back(x + a1);
    return AscentSequence{std::move(out)};
  }
  // d1 empty: duplicate the rightmost maximum of d2; with no rightmost
  // maximum (d2 all zero or empty) append one more zero.
  auto rm = rightmost_maximum(d2);
  std::vector<int> out = d2.entries;
  if (!rm) {
    out.push_back(0);
  } else {
    out.insert(out.begin() + rm->second, rm->first);
  }
  return AscentSequence{std::move(out)};
}

std::pair<AscentSequence, AscentSequence> split(const AscentSequence& a) {
  require_restricted(a, "split");
  if (a.entries.empty())
    throw std::invalid_argument("split requires a nonempty sequence");
  auto rm = rightmost_maximum(a);
  if (!rm) {
    // All zero: a = glue(empty, a minus one zero).
    std::vector<int> d2(a.entries.begin(), a.entries.end() - 1);
    return {AscentSequence{}, AscentSequence{std::move(d2)}};
  }
  const auto [x, j] = *rm;  // 1-based position j
  const auto& e = a.entries;
  if (static_cast<std::size_t>(j) < e.size() && e[j] == x) {
    // Duplicated rightmost maximum <=> first part empty.
    std::vector<int> d2 = e;
    d2.erase(d2.begin() + j);
    return {AscentSequence{}, AscentSequence{std::move(d2)}};
  }
  std::vector<int> d1(e.begin(), e.begin() + (j - 1));
  std::vector<int> d2;
  for (std::size_t i = j; i < e.size(); ++i) d2.push_back(e[i] - (x - 1));
  return {AscentSequence{std::move(d1)}, AscentSequence{std::move(d2)}};
}

}  // namespace fishburn::ascent
