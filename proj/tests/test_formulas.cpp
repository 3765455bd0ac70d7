#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"

#include "fishburn/formulas.hpp"
#include "fishburn/harness.hpp"

using namespace fishburn;
using formulas::compare_series;
using series::Exponents;
using series::Int;
using series::Series;
using series::Var;
using test_util::Row;
using test_util::check_rows;

namespace {
Series one(int order) { return Series::one(order); }
}  // namespace

TEST_CASE("delta and gamma kernel factors") {
  const int N = 6;
  CHECK(formulas::delta(0, N) == one(N));
  CHECK(formulas::gamma(0, N) == one(N));
  CHECK(formulas::delta_bar(0, N) == one(N));
  CHECK(formulas::gamma_bar(0, N) == one(N));

  // delta_1 = 1 + t(u-1), gamma_1 = 1 + zt(u-1); bars substitute u := uv.
  check_rows(formulas::delta(1, N),
             {{0, 0, 0, 0, 0, 1}, {1, 1, 0, 0, 0, 1}, {1, 0, 0, 0, 0, -1}}, N);
  check_rows(formulas::gamma(1, N),
             {{0, 0, 0, 0, 0, 1}, {1, 1, 0, 1, 0, 1}, {1, 0, 0, 1, 0, -1}}, N);
  check_rows(formulas::delta_bar(1, N),
             {{0, 0, 0, 0, 0, 1}, {1, 1, 1, 0, 0, 1}, {1, 0, 0, 0, 0, -1}}, N);
  check_rows(formulas::gamma_bar(1, N),
             {{0, 0, 0, 0, 0, 1}, {1, 1, 1, 1, 0, 1}, {1, 0, 0, 1, 0, -1}}, N);

  // All four are units: constant term 1, so inverse() is defined.
  for (int k = 1; k <= 4; ++k) {
    CHECK(formulas::delta(k, N) * formulas::delta(k, N).inverse() == one(N));
    CHECK(formulas::gamma(k, N) * formulas::gamma(k, N).inverse() == one(N));
    CHECK(formulas::gamma_bar(k, N) ==
          formulas::gamma(k, N).substitute(Var::u,
                                           Series::variable(N, Var::u) *
                                               Series::variable(N, Var::v)));
  }
  CHECK_THROWS_AS(formulas::delta(-1, N), std::invalid_argument);
  CHECK_THROWS_AS(formulas::gamma(-1, N), std::invalid_argument);
}

TEST_CASE("bivariate poset count: golden table through t^6") {
  const auto p = formulas::p_tz(6);
  check_rows(p,
             {
                 {0, 0, 0, 0, 0, 1},
                 {1, 0, 0, 1, 0, 1},
                 {2, 0, 0, 1, 0, 1},
                 {2, 0, 0, 2, 0, 1},
                 {3, 0, 0, 1, 0, 2},
                 {3, 0, 0, 2, 0, 2},
                 {3, 0, 0, 3, 0, 1},
                 {4, 0, 0, 1, 0, 5},
                 {4, 0, 0, 2, 0, 6},
                 {4, 0, 0, 3, 0, 3},
                 {4, 0, 0, 4, 0, 1},
                 {5, 0, 0, 1, 0, 15},
                 {5, 0, 0, 2, 0, 21},
                 {5, 0, 0, 3, 0, 12},
                 {5, 0, 0, 4, 0, 4},
                 {5, 0, 0, 5, 0, 1},
                 {6, 0, 0, 1, 0, 53},
                 {6, 0, 0, 2, 0, 84},
                 {6, 0, 0, 3, 0, 54},
                 {6, 0, 0, 4, 0, 20},
                 {6, 0, 0, 5, 0, 5},
                 {6, 0, 0, 6, 0, 1},
             },
             6);
  // Antichains give the diagonal, and nothing lies above it.
  for (int n = 0; n <= 6; ++n)
    CHECK(p.coefficient(Exponents{n, 0, 0, n, 0}) == 1);
}

TEST_CASE("univariate count matches the known sequence and is log-convex") {
  const auto p = formulas::p_t(8);
  const std::vector<long long> counts{1, 1, 2, 5, 15, 53, 217, 1014, 5335};
  for (int n = 0; n <= 8; ++n)
    CHECK(p.coefficient(Exponents{n, 0, 0, 0, 0}) == Int(counts[n]));
  for (const auto& [e, c] : p.terms()) {
    CHECK((e[1] == 0 && e[2] == 0 && e[3] == 0 && e[4] == 0));
    CHECK(c > 0);
  }
  for (int n = 1; n + 1 <= 8; ++n)
    CHECK(Int(counts[n]) * Int(counts[n]) <=
          Int(counts[n - 1]) * Int(counts[n + 1]));
}

TEST_CASE("run component at v=1: golden table through t^5") {
  const auto g = formulas::gr_u1(1, 5);
  check_rows(g,
             {
                 {2, 1, 0, 1, 0, 1},
                 {3, 1, 0, 1, 0, 1},
                 {3, 2, 0, 1, 0, 1},
                 {3, 1, 0, 2, 0, 1},
                 {4, 1, 0, 1, 0, 1},
                 {4, 2, 0, 1, 0, 3},
                 {4, 3, 0, 1, 0, 1},
                 {4, 1, 0, 2, 0, 1},
                 {4, 2, 0, 2, 0, 3},
                 {4, 1, 0, 3, 0, 1},
                 {5, 1, 0, 1, 0, 1},
                 {5, 2, 0, 1, 0, 6},
                 {5, 3, 0, 1, 0, 7},
                 {5, 4, 0, 1, 0, 1},
                 {5, 1, 0, 2, 0, 1},
                 {5, 2, 0, 2, 0, 8},
                 {5, 3, 0, 2, 0, 7},
                 {5, 1, 0, 3, 0, 1},
                 {5, 2, 0, 3, 0, 5},
                 {5, 1, 0, 4, 0, 1},
             },
             5);
}

TEST_CASE("run components scale by (tz)^{r-1}") {
  const int N = 6;
  const auto g1 = formulas::gr_u1(1, N);
  for (int r = 2; r <= 4; ++r) {
    const auto shift =
        Series::monomial(N, Exponents{r - 1, 0, 0, r - 1, 0}, 1);
    CHECK(formulas::gr_u1(r, N) == shift * g1);
  }
  CHECK_THROWS_AS(formulas::gr_u1(0, N), std::invalid_argument);
}

TEST_CASE("functional equations hold at order 6-8") {
  for (int r = 1; r <= 3; ++r) {
    const auto l2 = formulas::check_lemma2(r, 6);
    CHECK(l2.pass);
    CHECK(l2.identity == "lemma2");
    CHECK(l2.params == nlohmann::json{{"r", r}});
    CHECK(l2.witness.is_null());

    CHECK(formulas::check_kernel_relation(r, 8).pass);
    CHECK(formulas::check_theorem_gr(r, 6).pass);
  }

  const auto main6 = formulas::check_theorem_main(6);
  CHECK(main6.pass);
  CHECK(main6.note.find("assembly") != std::string::npos);

  CHECK(formulas::check_lemma_h(6).pass);
  CHECK(formulas::check_pt_from_ptz(8).pass);

  const auto conj = formulas::check_conjecture(10);
  CHECK(conj.pass);
  CHECK(conj.note.find("bounded-order evidence") != std::string::npos);
}

TEST_CASE("psi family: series equals polynomial and satisfies the recursion") {
  for (int m = 0; m <= 5; ++m) {
    const auto r = formulas::check_psi(m, 8);
    CHECK(r.pass);
    CHECK(r.params == nlohmann::json{{"m", m}});
  }
  // Sign pins for the two smallest members.
  CHECK(formulas::psi_poly(0, 6) == -one(6));
  check_rows(formulas::psi_poly(1, 6),
             {{0, 0, 0, 0, 0, 1},
              {0, 1, 0, 0, 0, -1},
              {1, 1, 0, 0, 0, -1},
              {1, 1, 0, 1, 0, 1},
              {1, 0, 0, 1, 0, -1}},
             6);
  CHECK(formulas::psi_series(0, 8) == formulas::psi_poly(0, 8));
}

TEST_CASE("H closed form specializes to the poset count") {
  const auto h = formulas::h_closed(6);
  CHECK(h.substitute(Var::u, one(6)) == formulas::p_tz(6) - Int(1));
  // H starts at t^1 z^1 u^0 (the one-element sequence).
  CHECK(h.coefficient(Exponents{1, 0, 0, 1, 0}) == 1);
  CHECK(h.coefficient(Exponents{0, 0, 0, 0, 0}) == 0);
}

TEST_CASE("mutation: perturbed identities are rejected with a witness") {
  const int N = 6;
  const auto good = formulas::gr_u1(1, N);

  // A single bumped coefficient is caught and located exactly.
  const auto bumped =
      good + Series::monomial(N, Exponents{3, 2, 0, 1, 0}, 1);
  const auto rep = compare_series("mutation", {{"which", "bump"}}, good, bumped);
  CHECK_FALSE(rep.pass);
  REQUIRE_FALSE(rep.witness.is_null());
  CHECK(rep.witness["e"] == nlohmann::json({3, 2, 0, 1, 0}));
  CHECK(rep.witness["lhs"] == "1");
  CHECK(rep.witness["rhs"] == "2");

  // Using the wrong kernel factor breaks the relation.
  const auto d1 = formulas::delta(1, N);
  const auto d2 = formulas::delta(2, N);
  const auto mono = [&](int a, int b, int c) {
    Exponents e{};
    e[static_cast<int>(Var::t)] = a;
    e[static_cast<int>(Var::z)] = b;
    e[static_cast<int>(Var::u)] = c;
    return Series::monomial(N, e, 1);
  };
  const auto u = Series::variable(N, Var::u);
  const auto lhs = d1 * formulas::gamma(1, N) * good;
  const auto rhs_ok = mono(2, 1, 1) * (one(N) - u) +
                      u * good.substitute(Var::u, u * d1.inverse());
  const auto rhs_bad = mono(2, 1, 1) * (one(N) - u) +
                       u * good.substitute(Var::u, u * d2.inverse());
  CHECK(lhs == rhs_ok);
  CHECK(lhs != rhs_bad);
  CHECK_FALSE(compare_series("mutation", {{"which", "delta2"}}, lhs, rhs_bad)
                  .pass);

  // Dropping a term from a functional equation is caught too.
  const auto h = formulas::h_closed(N);
  const auto missing = h - Series::monomial(N, Exponents{1, 0, 0, 1, 0}, 1);
  CHECK_FALSE(
      compare_series("mutation", {{"which", "dropped"}}, h, missing).pass);
}

TEST_CASE("reports serialize deterministically") {
  const auto r = formulas::check_conjecture(4);
  const auto j = r.to_json();
  CHECK_FALSE(j.contains("wall_ms"));
  CHECK(j.contains("identity"));
  CHECK(j.contains("pass"));
  CHECK(j["order"] == 4);
  CHECK(formulas::check_conjecture(4).to_json() == j);
}
