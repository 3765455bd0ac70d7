#pragma once

// Ascent sequences: x_1 = 0 and 0 <= x_i <= 1 + asc(x_1..x_{i-1}).
// Also the Catalan-counted "restricted" subfamily (every entry at least
// one less than the running maximum) with its glue/split decomposition.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fishburn::ascent {

// Number of strict rises x_j < x_{j+1}; defined for arbitrary int lists.
int asc(const std::vector<int>& entries);

struct AscentSequence {
  std::vector<int> entries;
  bool operator==(const AscentSequence&) const = default;
  auto operator<=>(const AscentSequence&) const = default;
};

struct Rejection {
  std::size_t index;  // 1-based position of the first violating entry
  std::string reason;
  bool operator==(const Rejection&) const = default;
};

// Checks the defining growth condition; on failure reports the first
// violating index and why.
std::variant<AscentSequence, Rejection> validate(std::vector<int> entries);

// The five transported statistics.  For a sequence these are
// (length, asc, last, zeros, run); the same record carries a poset's
// (size, levels, minmax, min, lds) under the bijection.
struct StatVector {
  int length = 0;
  int asc = 0;
  int last = 0;
  int zeros = 0;
  int run = 0;  // zeros before the leftmost nonzero entry; 0 if none
  bool operator==(const StatVector&) const = default;
};

StatVector stats(const AscentSequence& a);

// All ascent sequences of length n in lexicographic order.
std::vector<AscentSequence> enumerate_ascent_sequences(int n);
void for_each_ascent_sequence(int n,
                              const std::function<void(const AscentSequence&)>& fn);

// Restricted: x_i >= m - 1 where m = max(x_1..x_{i-1}).
bool is_restricted(const AscentSequence& a);
std::vector<AscentSequence> enumerate_restricted(int n);

// The last left-to-right maximum whose value equals 1 + asc of the prefix
// before it; returns (value, 1-based index of its leftmost occurrence).
// Empty and all-zero sequences have none.
std::optional<std::pair<int, int>> rightmost_maximum(const AscentSequence& a);

// Catalan-structure composition: d1, d2 restricted (possibly empty) ->
// restricted sequence of length |d1| + |d2| + 1.
AscentSequence glue(const AscentSequence& d1, const AscentSequence& d2);

// Inverse of glue on nonempty restricted sequences.
std::pair<AscentSequence, AscentSequence> split(const AscentSequence& a);

}  // namespace fishburn::ascent
