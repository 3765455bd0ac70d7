#include "fishburn/bijection.hpp"

#include <bit>
#include <stdexcept>

namespace fishburn::bijection {

using poset::LevelPoset;
using poset::maximal_mask;
using poset::srank;

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Add1: return "Add1";
    case Rule::Add2: return "Add2";
    case Rule::Add3: return "Add3";
    case Rule::Rem1: return "Rem1";
    case Rule::Rem2: return "Rem2";
    case Rule::Rem3: return "Rem3";
  }
  return "?";
}

namespace {

std::uint64_t ground_mask(int n) { return n == 64 ? ~0ull : (1ull << n) - 1; }

int level_count(const LevelPoset& lp, int i) {
  int c = 0;
  for (int x = 0; x < lp.n; ++x)
    if (lp.level_of[x] == i) ++c;
  return c;
}

}  // namespace

AddResult add_element_traced(const LevelPoset& lp, int i) {
  const int k = lp.rank();
  if (i < 0 || i > k) throw std::invalid_argument("insertion level out of range");
  LevelPoset q = lp;
  const int z = lp.n;  // next unused label
  if (z >= 64) throw std::invalid_argument("poset too large");
  q.n = z + 1;

  if (i == k) {
    // New top element above everything (covers all maximal elements).
    q.chain.push_back(ground_mask(lp.n));
    q.level_of.push_back(k);
    return {q, Rule::Add2};
  }
  if (i <= srank(lp)) {
    // Join level i: same down-set as its current members.
    q.level_of.push_back(i);
    return {q, Rule::Add1};
  }
  // srank < i < rank: new singleton level for z with down-set D_i; the
  // maximal elements below level i slide underneath everything above.
  std::uint64_t m = 0;
  {
    std::uint64_t rest = maximal_mask(lp);
    while (rest) {
      const int x = std::countr_zero(rest);
      rest &= rest - 1;
      if (lp.level_of[x] < i) m |= 1ull << x;
    }
  }
  std::vector<std::uint64_t> chain(lp.chain.begin(), lp.chain.begin() + i + 1);
  for (int j = i + 1; j <= k; ++j) chain.push_back(lp.chain[j - 1] | m);
  q.chain = std::move(chain);
  for (int x = 0; x < lp.n; ++x)
    if (lp.level_of[x] >= i) ++q.level_of[x];
  q.level_of.push_back(i);
  return {q, Rule::Add3};
}

LevelPoset add_element(const LevelPoset& lp, int i) {
  return add_element_traced(lp, i).poset;
}

RemoveResult remove_element(const LevelPoset& lp) {
  if (lp.n == 0) throw std::invalid_argument("cannot remove from empty poset");
  const int k = lp.rank();
  const int i = srank(lp);

  // Candidate: maximal elements on level i; ties resolved to largest label.
  int b = -1;
  std::uint64_t rest = maximal_mask(lp);
  while (rest) {
    const int x = std::countr_zero(rest);
    rest &= rest - 1;
    if (lp.level_of[x] == i) b = std::max(b, x);
  }
  if (b < 0) throw std::logic_error("no maximal element at srank level");

  LevelPoset q;
  Rule rule;
  const bool alone = level_count(lp, i) == 1;
  if (!alone) {
    rule = Rule::Rem1;
    q.chain = lp.chain;
    q.level_of = lp.level_of;
  } else if (i == k - 1) {
    rule = Rule::Rem2;
    q.chain.assign(lp.chain.begin(), lp.chain.end() - 1);
    q.level_of = lp.level_of;
  } else {
    // Alone on an inner level: elements of N = D_{i+1} - D_i become maximal.
    rule = Rule::Rem3;
    const std::uint64_t strip = lp.chain[i + 1] & ~lp.chain[i];
    q.chain.assign(lp.chain.begin(), lp.chain.begin() + i);
    for (int j = i; j < k - 1; ++j) q.chain.push_back(lp.chain[j + 1] & ~strip);
    q.level_of = lp.level_of;
    for (int x = 0; x < lp.n; ++x)
      if (lp.level_of[x] > i) --q.level_of[x];
  }

  // Drop b; labels above it slide down (no-op when b is the largest label,
  // which is always the case on add_element-built posets).
  q.n = lp.n - 1;
  q.level_of.erase(q.level_of.begin() + b);
  const std::uint64_t low = (1ull << b) - 1;
  for (auto& d : q.chain) d = (d & low) | ((d >> 1) & ~low);
  return {q, i, rule};
}

Decomposition decompose(const LevelPoset& lp) {
  poset::check_level_poset(lp);
  Decomposition d;
  std::vector<int> rev;
  LevelPoset cur = lp;
  d.lds = cur.rank() <= 1 ? 0 : -1;
  while (cur.n > 0) {
    RemoveResult step = remove_element(cur);
    rev.push_back(step.level);
    d.steps.push_back({step.rule, step.level});
    cur = std::move(step.poset);
    if (d.lds < 0 && cur.rank() <= 1) d.lds = cur.n;
  }
  d.sequence.entries.assign(rev.rbegin(), rev.rend());
  return d;
}

AscentSequence poset_to_sequence(const LevelPoset& lp) {
  return decompose(lp).sequence;
}

Construction construct(const AscentSequence& a) {
  const auto checked = ascent::validate(a.entries);
  if (!std::holds_alternative<AscentSequence>(checked))
    throw std::invalid_argument("not a valid ascent sequence");
  Construction c;
  for (int x : a.entries) {
    AddResult step = add_element_traced(c.poset, x);
    c.poset = std::move(step.poset);
    c.steps.push_back({step.rule, x});
  }
  poset::check_level_poset(c.poset);
  return c;
}

LevelPoset sequence_to_poset(const AscentSequence& a) {
  return construct(a).poset;
}

}  // namespace fishburn::bijection
