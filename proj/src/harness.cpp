#include "fishburn/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>

#include "fishburn/bijection.hpp"
#include "fishburn/formulas.hpp"
#include "fishburn/json_io.hpp"
#include "fishburn/poset.hpp"

namespace fishburn::harness {

using ascent::StatVector;
using nlohmann::json;
using poset::LevelPoset;
using poset::StrictPoset;
using series::Exponents;

namespace {

constexpr int kEnumerationCap = 10;  // sequence counts grow too fast beyond

void check_enumeration_order(int order) {
  if (order < 0 || order > kEnumerationCap)
    throw std::invalid_argument("enumeration oracle capped at order 10");
}

// Records the first failure only; later ones cannot add information.
void fail(report::Report& rep, json witness) {
  if (!rep.pass) return;
  rep.pass = false;
  rep.witness = std::move(witness);
}

report::Report make_report(std::string identity, json params, int order) {
  report::Report rep;
  rep.identity = std::move(identity);
  rep.params = std::move(params);
  rep.order = order;
  rep.pass = true;
  return rep;
}

// Isomorphism-invariant signature used to keep pairwise searches out of
// the quadratic regime: sorted (indegree, outdegree) profile.
std::string degree_signature(const StrictPoset& p) {
  std::vector<std::uint64_t> up(p.n, 0);
  for (int x = 0; x < p.n; ++x) {
    std::uint64_t rest = p.down[x];
    while (rest) {
      const int y = std::countr_zero(rest);
      rest &= rest - 1;
      up[y] |= std::uint64_t{1} << x;
    }
  }
  std::vector<std::pair<int, int>> deg(p.n);
  for (int x = 0; x < p.n; ++x)
    deg[x] = {std::popcount(p.down[x]), std::popcount(up[x])};
  std::sort(deg.begin(), deg.end());
  std::string sig;
  for (const auto& [d, u] : deg) {
    sig += std::to_string(d);
    sig += ',';
    sig += std::to_string(u);
    sig += ';';
  }
  return sig;
}

}  // namespace

Series dp_G(int order) {
  check_enumeration_order(order);
  Series g(order);
  for (int n = 0; n <= order; ++n)
    ascent::for_each_ascent_sequence(n, [&](const AscentSequence& a) {
      const StatVector s = ascent::stats(a);
      g += Series::monomial(order,
                            Exponents{s.length, s.asc, s.last, s.zeros, s.run},
                            1);
    });
  return g;
}

Series dp_H(int order) {
  check_enumeration_order(order);
  Series h(order);
  for (int n = 1; n <= order; ++n)
    ascent::for_each_ascent_sequence(n, [&](const AscentSequence& a) {
      const StatVector s = ascent::stats(a);
      h += Series::monomial(order,
                            Exponents{s.length, s.asc, s.last, s.zeros, 0}, 1);
    });
  return h;
}

Report verify_lemma1(int n) {
  if (n < 0 || n > 7)
    throw std::invalid_argument("transport suite capped at n = 7");
  Report rep = make_report("lemma1", {{"n", n}}, n);

  const auto seqs = ascent::enumerate_ascent_sequences(n);
  std::vector<StrictPoset> stricts;
  stricts.reserve(seqs.size());

  for (const auto& a : seqs) {
    const LevelPoset lp = bijection::sequence_to_poset(a);
    const StrictPoset sp = poset::to_strict(lp);
    const json ja = json_io::sequence_to_json(a);

    const StatVector from_seq = ascent::stats(a);
    const StatVector from_poset = poset::poset_stats(lp);
    if (!(from_seq == from_poset))
      fail(rep, {{"kind", "statistics"},
                 {"sequence", ja},
                 {"sequence_stats", json_io::stats_to_json(from_seq)},
                 {"poset_stats", json_io::stats_to_json(from_poset)}});

    const AscentSequence back = bijection::poset_to_sequence(lp);
    if (!(back == a))
      fail(rep, {{"kind", "roundtrip"},
                 {"sequence", ja},
                 {"recovered", json_io::sequence_to_json(back)}});

    if (poset::contains_two_plus_two(sp))
      fail(rep, {{"kind", "two-plus-two"},
                 {"sequence", ja},
                 {"poset", json_io::strict_poset_to_json(sp)}});

    const auto chain = poset::down_set_chain(sp);
    if (!std::holds_alternative<LevelPoset>(chain) ||
        !(std::get<LevelPoset>(chain) == lp))
      fail(rep, {{"kind", "chain-mismatch"}, {"sequence", ja}});

    stricts.push_back(sp);
  }

  // Pairwise non-isomorphism, searched only inside equal-signature buckets.
  std::map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < stricts.size(); ++i)
    buckets[degree_signature(stricts[i])].push_back(i);
  for (const auto& [sig, members] : buckets)
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        if (poset::are_isomorphic(stricts[members[a]], stricts[members[b]]))
          fail(rep,
               {{"kind", "isomorphic-pair"},
                {"first", json_io::sequence_to_json(seqs[members[a]])},
                {"second", json_io::sequence_to_json(seqs[members[b]])}});

  // Cross-oracle where the labeled enumeration is feasible: the images must
  // represent every unlabeled (2+2)-free poset exactly once.
  if (n <= 5) {
    std::vector<StrictPoset> reps;
    std::map<std::string, std::vector<std::size_t>> rep_buckets;
    for (const auto& p : poset::enumerate_strict_posets(n)) {
      if (poset::contains_two_plus_two(p)) continue;
      auto& bucket = rep_buckets[degree_signature(p)];
      const bool fresh =
          std::none_of(bucket.begin(), bucket.end(), [&](std::size_t i) {
            return poset::are_isomorphic(reps[i], p);
          });
      if (fresh) {
        bucket.push_back(reps.size());
        reps.push_back(p);
      }
    }
    if (reps.size() != seqs.size())
      fail(rep, {{"kind", "unlabeled-count"},
                 {"images", seqs.size()},
                 {"enumerated", reps.size()}});
    std::vector<int> hits_per_image(stricts.size(), 0);
    for (std::size_t r = 0; r < reps.size(); ++r) {
      int hits = 0;
      for (std::size_t i = 0; i < stricts.size(); ++i)
        if (poset::are_isomorphic(reps[r], stricts[i])) {
          ++hits;
          ++hits_per_image[i];
        }
      if (hits != 1)
        fail(rep, {{"kind", "matching"},
                   {"poset", json_io::strict_poset_to_json(reps[r])},
                   {"matches", hits}});
    }
    for (std::size_t i = 0; i < hits_per_image.size(); ++i)
      if (hits_per_image[i] != 1)
        fail(rep, {{"kind", "matching"},
                   {"sequence", json_io::sequence_to_json(seqs[i])},
                   {"matches", hits_per_image[i]}});
    rep.note = std::to_string(seqs.size()) + " sequences; cross-checked " +
               "against the labeled enumeration";
  } else {
    rep.note = std::to_string(seqs.size()) + " sequences";
  }
  return rep;
}

RestrictedStudy restricted_study(int n) {
  if (n < 0 || n > 7)
    throw std::invalid_argument("study capped at n = 7");
  RestrictedStudy st;
  st.n = n;
  st.report = make_report("restricted-study", {{"n", n}}, n);

  for (const auto& a : ascent::enumerate_ascent_sequences(n)) {
    const bool restricted = ascent::is_restricted(a);
    const bool has31 = poset::contains_three_plus_one(
        poset::to_strict(bijection::sequence_to_poset(a)));
    if (restricted && has31) {
      ++st.restricted_with31;
      st.witnesses_restricted_with31.push_back(a);
    } else if (restricted) {
      ++st.restricted_31free;
    } else if (has31) {
      ++st.unrestricted_with31;
    } else {
      ++st.unrestricted_31free;
      st.witnesses_unrestricted_31free.push_back(a);
    }
  }

  // Replay every witness through the primitive predicates before reporting.
  auto replays = [&](const AscentSequence& a, bool want_restricted,
                     bool want_31) {
    if (!std::holds_alternative<AscentSequence>(ascent::validate(a.entries)))
      return false;
    if (ascent::is_restricted(a) != want_restricted) return false;
    return poset::contains_three_plus_one(poset::to_strict(
               bijection::sequence_to_poset(a))) == want_31;
  };
  for (const auto& a : st.witnesses_restricted_with31)
    if (!replays(a, true, true))
      fail(st.report,
           {{"kind", "replay"}, {"sequence", json_io::sequence_to_json(a)}});
  for (const auto& a : st.witnesses_unrestricted_31free)
    if (!replays(a, false, false))
      fail(st.report,
           {{"kind", "replay"}, {"sequence", json_io::sequence_to_json(a)}});

  auto witness_lists = [&] {
    json w{{"restricted_with_3+1_count", st.restricted_with31},
           {"not_restricted_3+1_free_count", st.unrestricted_31free}};
    json lists = json::array();
    for (const auto& a : st.witnesses_restricted_with31)
      lists.push_back(json_io::sequence_to_json(a));
    w["restricted_with_3+1"] = lists;
    lists = json::array();
    for (const auto& a : st.witnesses_unrestricted_31free)
      lists.push_back(json_io::sequence_to_json(a));
    w["not_restricted_3+1_free"] = lists;
    return w;
  };

  if (n <= 6) {
    // The two classifications must coincide below size seven.
    if (st.restricted_with31 != 0 || st.unrestricted_31free != 0)
      fail(st.report, witness_lists());
    st.report.note = "restricted coincides with (3+1)-free image";
  } else {
    // Both disagreement directions must occur; this is a search report, so
    // the witnesses ride along even on pass.
    if (st.restricted_with31 == 0 || st.unrestricted_31free == 0) {
      fail(st.report, witness_lists());
    } else if (st.report.pass) {
      st.report.witness = witness_lists();
    }
    st.report.note = "both disagreement directions searched";
  }
  return st;
}

Report verify_restricted_study(int n) { return restricted_study(n).report; }

Report verify_violation_yields_31(int bound) {
  if (bound < 0 || bound > 7)
    throw std::invalid_argument("violation suite capped at bound = 7");
  Report rep = make_report("violation", {{"bound", bound}}, bound);

  long long checked = 0;
  for (int len = 1; len < bound; ++len) {
    for (const auto& a : ascent::enumerate_restricted(len)) {
      const int m =
          *std::max_element(a.entries.begin(), a.entries.end());
      if (m < 2) continue;
      const int ceiling = 1 + ascent::asc(a.entries);
      for (int x = 0; x <= std::min(m - 2, ceiling); ++x) {
        std::vector<int> extended = a.entries;
        extended.push_back(x);
        const auto validated = ascent::validate(std::move(extended));
        if (!std::holds_alternative<AscentSequence>(validated)) {
          fail(rep, {{"kind", "invalid-extension"},
                     {"sequence", json_io::sequence_to_json(a)},
                     {"appended", x}});
          continue;
        }
        const auto& ax = std::get<AscentSequence>(validated);
        ++checked;
        if (!poset::contains_three_plus_one(
                poset::to_strict(bijection::sequence_to_poset(ax))))
          fail(rep, {{"kind", "no-three-plus-one"},
                     {"sequence", json_io::sequence_to_json(ax)}});
      }
    }
  }
  rep.note = std::to_string(checked) + " below-threshold extensions checked";
  return rep;
}

Report verify_catalan(int n_max) {
  if (n_max < 0 || n_max > 12)
    throw std::invalid_argument("catalan suite capped at n_max = 12");
  Report rep = make_report("catalan", {{"n_max", n_max}}, n_max);

  std::vector<long long> catalan(n_max + 1, 0);
  catalan[0] = 1;
  for (int n = 0; n < n_max; ++n) {
    long long s = 0;
    for (int k = 0; k <= n; ++k) s += catalan[k] * catalan[n - k];
    catalan[n + 1] = s;
  }

  std::vector<std::vector<AscentSequence>> restricted(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    restricted[n] = ascent::enumerate_restricted(n);
    if (static_cast<long long>(restricted[n].size()) != catalan[n])
      fail(rep, {{"kind", "count"},
                 {"n", n},
                 {"count", restricted[n].size()},
                 {"expected", catalan[n]}});
  }

  // glue must biject pairs (d1, d2) onto the next length, with split as
  // its two-sided inverse; exhaustive within the feasible window.
  const int structural_max = std::min(n_max, 9);
  for (int n = 1; n <= structural_max; ++n) {
    std::set<AscentSequence> images;
    for (int k = 0; k + 1 <= n; ++k) {
      for (const auto& d1 : restricted[k]) {
        for (const auto& d2 : restricted[n - 1 - k]) {
          const AscentSequence g = ascent::glue(d1, d2);
          if (static_cast<int>(g.entries.size()) != n ||
              !std::holds_alternative<AscentSequence>(
                  ascent::validate(g.entries)) ||
              !ascent::is_restricted(g)) {
            fail(rep, {{"kind", "glue-image"},
                       {"d1", json_io::sequence_to_json(d1)},
                       {"d2", json_io::sequence_to_json(d2)},
                       {"image", json(g.entries)}});
            continue;
          }
          if (!images.insert(g).second)
            fail(rep, {{"kind", "glue-collision"},
                       {"image", json_io::sequence_to_json(g)}});
          const auto [s1, s2] = ascent::split(g);
          if (!(s1 == d1) || !(s2 == d2))
            fail(rep, {{"kind", "split-of-glue"},
                       {"d1", json_io::sequence_to_json(d1)},
                       {"d2", json_io::sequence_to_json(d2)},
                       {"image", json_io::sequence_to_json(g)},
                       {"split_1", json_io::sequence_to_json(s1)},
                       {"split_2", json_io::sequence_to_json(s2)}});
        }
      }
    }
    if (images.size() != restricted[n].size() ||
        !std::equal(images.begin(), images.end(), restricted[n].begin(),
                    restricted[n].end()))
      fail(rep, {{"kind", "glue-exhaustiveness"},
                 {"n", n},
                 {"images", images.size()},
                 {"expected", restricted[n].size()}});
  }

  const int roundtrip_max = std::min(n_max, 10);
  for (int n = 1; n <= roundtrip_max; ++n)
    for (const auto& a : restricted[n]) {
      const auto [d1, d2] = ascent::split(a);
      if (!(ascent::glue(d1, d2) == a))
        fail(rep, {{"kind", "glue-of-split"},
                   {"sequence", json_io::sequence_to_json(a)},
                   {"d1", json_io::sequence_to_json(d1)},
                   {"d2", json_io::sequence_to_json(d2)}});
    }

  rep.note = "counts through n = " + std::to_string(n_max) +
             "; structural bijection through n = " +
             std::to_string(structural_max);
  return rep;
}

std::vector<Report> verify_all(int order, int jobs) {
  if (order < 0) throw std::invalid_argument("negative order");
  const int formula_cap = std::min(order, 14);
  const int oracle_cap = std::min(order, kEnumerationCap);
  const int poset_cap = std::min(order, 7);
  const int catalan_cap = std::min(order, 12);

  std::vector<std::function<Report()>> tasks;
  for (int r = 1; r <= 3; ++r)
    tasks.push_back([=] { return formulas::check_lemma2(r, oracle_cap); });
  for (int r = 1; r <= 3; ++r)
    tasks.push_back([=] { return formulas::check_theorem_gr(r, oracle_cap); });
  for (int r = 1; r <= 3; ++r)
    tasks.push_back(
        [=] { return formulas::check_kernel_relation(r, formula_cap); });
  tasks.push_back([=] { return formulas::check_theorem_main(oracle_cap); });
  tasks.push_back([=] { return formulas::check_lemma_h(oracle_cap); });
  for (int m = 0; m <= 5; ++m)
    tasks.push_back([=] { return formulas::check_psi(m, formula_cap); });
  tasks.push_back([=] { return formulas::check_pt_from_ptz(formula_cap); });
  tasks.push_back([=] { return formulas::check_conjecture(formula_cap); });
  for (int n = 0; n <= poset_cap; ++n)
    tasks.push_back([=] { return verify_lemma1(n); });
  tasks.push_back([=] { return verify_catalan(catalan_cap); });
  tasks.push_back([=] { return verify_restricted_study(poset_cap); });
  tasks.push_back([=] { return verify_violation_yields_31(poset_cap); });

  std::vector<Report> out(tasks.size());
  auto run_task = [&](std::size_t i) {
    try {
      out[i] = tasks[i]();
    } catch (const std::exception& e) {
      out[i] = make_report("internal-error", json::object(), order);
      out[i].pass = false;
      out[i].witness = {{"kind", "exception"}, {"what", e.what()}};
    }
  };

  int width = jobs > 0 ? jobs
                       : static_cast<int>(std::thread::hardware_concurrency());
  width = std::clamp(width, 1, static_cast<int>(tasks.size()));
  if (width == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();)
        run_task(i);
    };
    std::vector<std::thread> pool;
    pool.reserve(width);
    for (int w = 0; w < width; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Width-independent order: sort by identity, then parameters, then order.
  std::stable_sort(out.begin(), out.end(),
                   [](const Report& a, const Report& b) {
                     if (a.identity != b.identity)
                       return a.identity < b.identity;
                     const std::string pa = a.params.dump();
                     const std::string pb = b.params.dump();
                     if (pa != pb) return pa < pb;
                     return a.order < b.order;
                   });
  return out;
}

}  // namespace fishburn::harness
