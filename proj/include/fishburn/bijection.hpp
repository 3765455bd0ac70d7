#pragma once

// The recursive bijection between (2+2)-free posets and ascent sequences:
// reading an ascent sequence left to right inserts one element per entry
// (three insertion rules keyed to how the entry compares with srank and
// rank); decomposing a poset removes one element per step and reads the
// sequence off in reverse.

#include <string>
#include <utility>
#include <vector>

#include "fishburn/ascent.hpp"
#include "fishburn/poset.hpp"

namespace fishburn::bijection {

using ascent::AscentSequence;
using poset::LevelPoset;

enum class Rule { Add1, Add2, Add3, Rem1, Rem2, Rem3 };
const char* rule_name(Rule r);

struct AddResult {
  LevelPoset poset;
  Rule rule;
};

// Insert a new maximal element at level i, 0 <= i <= rank.  The new element
// gets label n; the result satisfies srank == i.
AddResult add_element_traced(const LevelPoset& lp, int i);
LevelPoset add_element(const LevelPoset& lp, int i);

struct RemoveResult {
  LevelPoset poset;
  int level;  // the srank of the input, i.e. the recovered sequence entry
  Rule rule;
};

// Inverse step: removes a maximal element with smallest down-set (largest
// label among ties).  On posets produced by add_element that element is
// always the most recently added one, so labels never need compacting;
// on other inputs labels above the removed one slide down by one.
RemoveResult remove_element(const LevelPoset& lp);

struct TraceStep {
  Rule rule;
  int level;
  bool operator==(const TraceStep&) const = default;
};

struct Decomposition {
  AscentSequence sequence;
  int lds = 0;  // ground-set size when the remainder first becomes an antichain
  std::vector<TraceStep> steps;  // in removal order
};

Decomposition decompose(const LevelPoset& lp);
AscentSequence poset_to_sequence(const LevelPoset& lp);

struct Construction {
  LevelPoset poset;
  std::vector<TraceStep> steps;  // per sequence entry
};

Construction construct(const AscentSequence& a);
LevelPoset sequence_to_poset(const AscentSequence& a);

}  // namespace fishburn::bijection
