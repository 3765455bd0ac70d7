#pragma once

// Brute-force oracles (exhaustive enumeration, no closed forms) and the
// verification suites that pit the formulas module against them.

#include <vector>

#include "fishburn/ascent.hpp"
#include "fishburn/report.hpp"
#include "fishburn/series.hpp"

namespace fishburn::harness {

using ascent::AscentSequence;
using report::Report;
using series::Series;

// Exact master series by enumerating every ascent sequence of length <= N:
// G = sum t^length u^asc v^last z^zeros x^run (empty sequence included).
// Guarded at N <= 10.
Series dp_G(int order);

// Same without x and without the empty sequence:
// H = sum_{length >= 1} t^length u^asc v^last z^zeros.
Series dp_H(int order);

// For every ascent sequence of length n (n <= 7): build the poset, check
// statistic transport, the round trip, (2+2)-freeness, and pairwise
// non-isomorphism; for n <= 5 also cross-check the unlabeled count against
// the labeled enumeration oracle.
Report verify_lemma1(int n);

struct RestrictedStudy {
  int n = 0;
  long long restricted_31free = 0;
  long long restricted_with31 = 0;
  long long unrestricted_31free = 0;
  long long unrestricted_with31 = 0;
  std::vector<AscentSequence> witnesses_restricted_with31;
  std::vector<AscentSequence> witnesses_unrestricted_31free;
  Report report;
};

// Compares "restricted" with "(3+1)-free image".  For n <= 6 the two
// classifications must coincide; at n = 7 both kinds of disagreement must
// exist (witnesses re-validated and returned).
RestrictedStudy restricted_study(int n);
Report verify_restricted_study(int n);

// Appending any entry x < max(a) - 1 to a restricted sequence a must give
// a poset containing 3+1 (exhaustive over extended lengths <= bound <= 7).
Report verify_violation_yields_31(int bound);

// Restricted sequences are Catalan-counted and glue/split is the structural
// bijection behind the recursion (exhaustive for lengths <= n_max <= 12).
Report verify_catalan(int n_max);

// Every suite at (capped) order, reports sorted by identity and parameters.
std::vector<Report> verify_all(int order, int jobs);

}  // namespace fishburn::harness
