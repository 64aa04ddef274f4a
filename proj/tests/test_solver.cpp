#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "helpers.hpp"
#include "symip/solver.hpp"

using namespace symip;
using namespace symip::testing;

TEST_CASE("check_applicability") {
  SUBCASE("fig1 with its full group") {
    auto app = check_applicability(fig1_instance(), sym_group_gens(2));
    CHECK(app.ok);
  }
  SUBCASE("n=6 with a small group is not 4-transitive") {
    PermGroup g{6, {Permutation::from_cycles("(1 2)(3 4)", 6)}};
    auto app = check_applicability(cube_sum_instance(6, 2, 7), g);
    CHECK_FALSE(app.ok);
    CHECK(app.reason.find("transitive") != std::string::npos);
  }
  SUBCASE("c not parallel to all-ones") {
    auto inst = make_instance("l", {rv({1, 0}), rv({0, 1})},
                              {Rational(3), Rational(3)}, rv({1, 2}));
    auto app = check_applicability(inst, PermGroup::trivial(2));
    CHECK_FALSE(app.ok);
    CHECK(app.reason.find("(1,...,1)") != std::string::npos);
  }
  SUBCASE("a non-symmetry generator is rejected") {
    auto inst = make_instance("l", {rv({1, 0}), rv({0, 2})},
                              {Rational(3), Rational(3)}, rv({1, 1}));
    PermGroup g{2, {Permutation::from_cycles("(1 2)", 2)}};
    CHECK_THROWS_AS(check_applicability(inst, g), std::invalid_argument);
  }
}

TEST_CASE("solve_fixed_line") {
  SUBCASE("fig1 hits the diagonal cut at a = 37/20") {
    auto sol = solve_fixed_line(fig1_instance());
    REQUIRE(sol.status == LineStatus::Bounded);
    CHECK(sol.a == Rational(37, 20));
    CHECK(sol.gamma == 1);
  }
  SUBCASE("no positive row sum means unbounded") {
    auto inst = make_instance("u", {rv({-1, -1})}, {Rational(0)}, rv({1, 1}));
    CHECK(solve_fixed_line(inst).status == LineStatus::Unbounded);
  }
  SUBCASE("empty interval is line-infeasible") {
    auto inst = make_instance("e", {rv({1, 1}), rv({-1, -1})},
                              {Rational(1), Rational(-3)}, rv({1, 1}));
    CHECK(solve_fixed_line(inst).status == LineStatus::LineInfeasible);
  }
  SUBCASE("zero row sum with negative rhs is line-infeasible") {
    auto inst = make_instance("z", {rv({1, -1})}, {Rational(-1)}, rv({1, 1}));
    CHECK(solve_fixed_line(inst).status == LineStatus::LineInfeasible);
  }
  SUBCASE("negative gamma takes the lower end of the interval") {
    auto inst = make_instance("neg", {rv({-1, -1})}, {Rational(-3)},
                              rv({-1, -1}));
    auto sol = solve_fixed_line(inst);
    REQUIRE(sol.status == LineStatus::Bounded);
    CHECK(sol.a == Rational(3, 2));
  }
  SUBCASE("rejects c not parallel to all-ones") {
    auto inst = make_instance("l", {rv({1, 1})}, {Rational(1)}, rv({1, 2}));
    CHECK_THROWS_AS(solve_fixed_line(inst), std::invalid_argument);
  }
}

TEST_CASE("is_center_feasible") {
  CHECK(is_center_feasible(fig1_instance(), 3));
  CHECK(is_center_feasible(fig1_instance(), 0));
  CHECK_FALSE(is_center_feasible(infeas2_instance(), 3));
}

TEST_CASE("sift_solve on fig1") {
  auto report = sift_solve(fig1_instance(), sym_group_gens(2));
  REQUIRE(report.status == SolveStatus::Optimal);
  CHECK(report.value == 3);
  CHECK(report.layer == 3);
  CHECK(report.point == IntVector{2, 1});
  CHECK(report.stats.layers_visited == 1);
}

TEST_CASE("sift_solve detects infeasibility with a witness layer") {
  auto report = sift_solve(infeas2_instance(), sym_group_gens(2));
  REQUIRE(report.status == SolveStatus::Infeasible);
  CHECK(report.has_witness_layer);
  CHECK(report.witness_layer == 3);
  CHECK(report.stats.layers_visited == 1);
}

TEST_CASE("sift_solve on the n=5 cube-sum instance") {
  auto report = sift_solve(cube_sum_instance(), sym_group_gens(5));
  REQUIRE(report.status == SolveStatus::Optimal);
  CHECK(report.value == 7);
  CHECK(report.point == IntVector{2, 2, 1, 1, 1});
  CHECK(report.stats.layers_visited <= 5);
}

TEST_CASE("sift_solve statuses propagate") {
  SUBCASE("unbounded fixed line") {
    auto inst = make_instance("u", {rv({-1, -1})}, {Rational(0)}, rv({1, 1}));
    auto report = sift_solve(inst, sym_group_gens(2));
    CHECK(report.status == SolveStatus::Unbounded);
  }
  SUBCASE("line infeasibility means IP infeasibility") {
    auto inst = make_instance("e", {rv({1, 1}), rv({-1, -1})},
                              {Rational(1), Rational(-3)}, rv({1, 1}));
    auto report = sift_solve(inst, sym_group_gens(2));
    REQUIRE(report.status == SolveStatus::Infeasible);
    CHECK(report.line_infeasible);
  }
  SUBCASE("not applicable without enough transitivity") {
    PermGroup g{6, {Permutation::from_cycles("(1 2)(3 4)", 6)}};
    auto report = sift_solve(cube_sum_instance(6, 2, 7), g);
    CHECK(report.status == SolveStatus::NotApplicable);
  }
  SUBCASE("assume-applicable override records itself") {
    PermGroup g = sym_group_gens(6);
    g.generators.pop_back();  // just (1 2): far from 4-transitive
    auto report = sift_solve(cube_sum_instance(6, 2, 7), g, true);
    CHECK(report.applicability.assumed);
    CHECK(report.status == SolveStatus::Optimal);
  }
}

TEST_CASE("sift_solve with negative gamma minimizes the coordinate sum") {
  // max -(x1+x2) with sum >= 16/5: optimum sum 4, value -4.
  auto inst = make_instance("negdir", {rv({-1, -1}), rv({1, 1})},
                            {Rational(-16, 5), Rational(10)}, rv({-1, -1}));
  auto report = sift_solve(inst, sym_group_gens(2));
  REQUIRE(report.status == SolveStatus::Optimal);
  CHECK(report.value == -4);
  CHECK(report.layer == 4);
}

TEST_CASE("step_toward_neighbors case 1 midpoint") {
  auto inst = cube_sum_instance(4, 2, 3);
  auto G = sym_group_gens(4);
  IntVector x{2, 0, 0, 0};
  auto y = step_toward_neighbors(inst, G, x);
  CHECK(std::accumulate(y.begin(), y.end(), 0LL) == 2);
  CHECK(std::count(y.begin(), y.end(), 1) == 2);
  CHECK(std::count(y.begin(), y.end(), 0) == 2);
}

TEST_CASE("step_toward_neighbors rejects neighbors and infeasible points") {
  auto inst = cube_sum_instance(4, 3, 12);
  auto G = sym_group_gens(4);
  CHECK_THROWS_AS(step_toward_neighbors(inst, G, IntVector{1, 1, 1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(step_toward_neighbors(inst, G, IntVector{9, 0, 0, 0}),
                  std::invalid_argument);
}

TEST_CASE("step_toward_neighbors case 2 on a two-valued point") {
  auto inst = cube_sum_instance(5, 3, 20);
  auto G = sym_group_gens(5);
  IntVector x{3, 3, 1, 1, 1};  // values 3 and 1, same parity: case 1
  auto y = step_toward_neighbors(inst, G, x);
  CHECK(std::accumulate(y.begin(), y.end(), 0LL) == 9);

  IntVector z{3, 0, 0, 0, 0};  // constant classes across parities: case 2
  auto w = step_toward_neighbors(inst, G, z);
  CHECK(std::accumulate(w.begin(), w.end(), 0LL) == 3);
}

TEST_CASE("descend_to_neighbor") {
  auto inst = cube_sum_instance(4, 2, 3);
  auto G = sym_group_gens(4);

  IntVector already{1, 1, 0, 1};
  CHECK(descend_to_neighbor(inst, G, already) == already);

  auto y = descend_to_neighbor(inst, G, IntVector{2, 0, 0, 0});
  CHECK(is_neighbor(y));
  CHECK(std::accumulate(y.begin(), y.end(), 0LL) == 2);

  auto inst5 = cube_sum_instance(5, 3, 4);
  auto z = descend_to_neighbor(inst5, sym_group_gens(5), IntVector{3, 1, 0, 0, 0});
  CHECK(is_neighbor(z));
  CHECK(std::accumulate(z.begin(), z.end(), 0LL) == 4);
  CHECK(is_feasible_point(inst5, to_rat_vector(z)));
}

TEST_CASE("descent strictly decreases distance to the center") {
  auto inst = cube_sum_instance(6, 4, 12);
  auto G = sym_group_gens(6);
  std::mt19937 rng(31);
  int samples = 0;
  while (samples < 50) {
    IntVector x(6);
    for (auto& v : x) v = rng() % 5;
    if (!is_feasible_point(inst, to_rat_vector(x)) || is_neighbor(x)) continue;
    ++samples;
    long long k = std::accumulate(x.begin(), x.end(), 0LL);
    auto sq = [&](const IntVector& p) {
      Rational s = 0;
      Point m = center(6, k);
      for (int i = 0; i < 6; ++i) {
        Rational d = Rational(static_cast<long>(p[i])) - m[i];
        s += d * d;
      }
      return s;
    };
    int steps = 0;
    IntVector cur = x;
    while (!is_neighbor(cur)) {
      auto next = step_toward_neighbors(inst, G, cur);
      CHECK(std::accumulate(next.begin(), next.end(), 0LL) == k);
      CHECK(sq(next) < sq(cur));
      CHECK(is_feasible_point(inst, to_rat_vector(next)));
      cur = next;
      REQUIRE(++steps <= 64);
    }
  }
}
