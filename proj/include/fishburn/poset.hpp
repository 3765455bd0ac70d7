#pragma once

// Finite strict partial orders on labels 0..n-1 (n <= 64, bitmask rows)
// and the level/chain form available exactly for the (2+2)-free ones:
// their strict down-sets are linearly ordered by inclusion.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fishburn/ascent.hpp"  // StatVector

namespace fishburn::poset {

using ascent::StatVector;

struct StrictPoset {
  int n = 0;
  std::vector<std::uint64_t> down;  // down[x] = bitmask of {y : y < x}

  bool less(int y, int x) const { return (down[x] >> y) & 1u; }
  bool operator==(const StrictPoset&) const = default;
};

// Throws std::invalid_argument if irreflexivity/transitivity fail or n > 64.
void check_strict_poset(const StrictPoset& p);

// Cover pairs {(y,x) : y covered by x}, lexicographically sorted.
std::vector<std::pair<int, int>> cover_pairs(const StrictPoset& p);

// Builds the full order as the transitive closure of cover (or arbitrary
// relation) pairs; throws on cycles.
StrictPoset from_cover_pairs(int n, const std::vector<std::pair<int, int>>& covers);

// A (2+2)-free poset presented by its chain of distinct strict down-sets
// D_0 = {} < D_1 < ... < D_{k-1} (rank k) plus each element's level:
// level(x) = i with downset(x) == D_i.  Every element of D_i lies on a
// level < i; y < x iff y is in D_{level(x)}.
struct LevelPoset {
  int n = 0;
  std::vector<int> level_of;           // size n
  std::vector<std::uint64_t> chain;    // chain[i] = bitmask D_i

  int rank() const { return static_cast<int>(chain.size()); }
  bool operator==(const LevelPoset&) const = default;
};

// Structural validity; throws std::invalid_argument on violation.
void check_level_poset(const LevelPoset& lp);

// Level i as a sorted list of labels.
std::vector<int> level_members(const LevelPoset& lp, int i);
// Bitmask of maximal elements (those in no down-set).
std::uint64_t maximal_mask(const LevelPoset& lp);
// Level of a maximal element with inclusion-smallest down-set (0 if empty).
int srank(const LevelPoset& lp);

StrictPoset to_strict(const LevelPoset& lp);

struct IncomparableDownSets {
  int x = 0, y = 0;  // witnesses: neither downset(x) nor downset(y) contains the other
};

// Succeeds exactly on (2+2)-free posets.
std::variant<LevelPoset, IncomparableDownSets> down_set_chain(const StrictPoset& p);

// Induced-subposet pattern checks (brute force over 4-tuples).
bool contains_two_plus_two(const StrictPoset& p);
bool contains_three_plus_one(const StrictPoset& p);

// (size, levels = rank-1, minmax = srank, min = |L_0|, lds) packed into the
// shared StatVector slots (length, asc, last, zeros, run).
StatVector poset_stats(const LevelPoset& lp);

// Label-respecting isomorphism search with degree-profile pruning (n <= 8).
bool are_isomorphic(const StrictPoset& p, const StrictPoset& q);

// All labeled strict orders on 0..n-1, each exactly once, deterministic
// order (n <= 5).
std::vector<StrictPoset> enumerate_strict_posets(int n);

}  // namespace fishburn::poset
