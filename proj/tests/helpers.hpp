#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "symip/oracle.hpp"

namespace symip::testing {

inline IpInstance make_instance(const std::string& name,
                                std::vector<RatVector> rows, RatVector rhs,
                                RatVector c) {
  IpInstance inst;
  inst.name = name;
  inst.n = static_cast<int>(c.size());
  inst.m = static_cast<int>(rows.size());
  inst.A = RatMatrix(inst.m, inst.n);
  for (int i = 0; i < inst.m; ++i)
    for (int j = 0; j < inst.n; ++j) inst.A.at(i, j) = rows[i][j];
  inst.b = std::move(rhs);
  inst.c = std::move(c);
  inst.validate();
  return inst;
}

inline RatVector rv(std::initializer_list<long> vals) {
  RatVector out;
  for (long v : vals) out.emplace_back(v);
  return out;
}

inline Point pt(std::initializer_list<long> vals) { return rv(vals); }

inline IpInstance fig1_instance() {
  return make_instance("fig1",
                       {rv({1, 0}), rv({0, 1}), rv({1, 1})},
                       {Rational(5, 2), Rational(5, 2), Rational(37, 10)},
                       rv({1, 1}));
}

inline IpInstance infeas2_instance() {
  return make_instance("infeas2", {rv({1, 1}), rv({-1, -1})},
                       {Rational(37, 10), Rational(-16, 5)}, rv({1, 1}));
}

// n variables in [0, 2], coordinate sum at most 7.
inline IpInstance cube_sum_instance(int n = 5, long box = 2, long sum = 7) {
  std::vector<RatVector> rows;
  RatVector rhs;
  for (int i = 0; i < n; ++i) {
    RatVector row(n, Rational(0));
    row[i] = 1;
    rows.push_back(row);
    rhs.emplace_back(box);
  }
  rows.push_back(RatVector(n, Rational(1)));
  rhs.emplace_back(sum);
  return make_instance("cube_sum", rows, rhs, RatVector(n, Rational(1)));
}

inline PermGroup sym_group_gens(int n) {
  PermGroup g;
  g.degree = n;
  if (n >= 2) g.generators.push_back(Permutation::from_cycles("(1 2)", n));
  if (n >= 3) {
    std::string cycle = "(";
    for (int i = 1; i <= n; ++i) cycle += (i > 1 ? " " : "") + std::to_string(i);
    cycle += ")";
    g.generators.push_back(Permutation::from_cycles(cycle, n));
  }
  return g;
}

inline PermGroup alt5_gens() {
  PermGroup g;
  g.degree = 5;
  g.generators.push_back(Permutation::from_cycles("(1 2 3)", 5));
  g.generators.push_back(Permutation::from_cycles("(3 4 5)", 5));
  return g;
}

// Fully S_n-symmetric random instance: the orbit closure of a handful of
// row templates under all coordinate permutations, with rational right-hand
// sides. Always includes the box rows x_i <= u so the brute-force box
// [0, u]^n covers the entire feasible region.
struct RandomSymmetricInstance {
  IpInstance inst;
  long box_hi;
};

inline RandomSymmetricInstance random_symmetric_instance(int n,
                                                         std::mt19937& rng) {
  auto rand_int = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  auto rand_rat = [&](int lo_num, int hi_num) {
    Rational q(rand_int(lo_num, hi_num), rand_int(1, 4));
    q.canonicalize();
    return q;
  };

  long box_hi = rand_int(1, 3);
  std::vector<RatVector> rows;
  RatVector rhs;

  auto add_orbit_rows = [&](const RatVector& tmpl, const Rational& beta) {
    // All distinct permutations of the template row.
    std::vector<Rational> sorted(tmpl);
    std::sort(sorted.begin(), sorted.end());
    std::set<RatVector> seen;
    do {
      if (seen.insert(sorted).second) {
        rows.push_back(sorted);
        rhs.push_back(beta);
      }
    } while (std::next_permutation(sorted.begin(), sorted.end()));
  };

  // Box rows: orbit of (1, 0, ..., 0).
  {
    RatVector tmpl(n, Rational(0));
    tmpl[0] = 1;
    add_orbit_rows(tmpl, Rational(box_hi));
  }

  int extra = rand_int(1, 3);
  for (int t = 0; t < extra; ++t) {
    switch (rand_int(0, 3)) {
      case 0:  // sum cap
        add_orbit_rows(RatVector(n, Rational(1)),
                       rand_rat(0, 2 * n * static_cast<int>(box_hi)));
        break;
      case 1:  // sum lower bound, written as a <= row
        add_orbit_rows(RatVector(n, Rational(-1)), rand_rat(-n, 0));
        break;
      case 2: {  // pair-sum cap: orbit of (1, 1, 0, ..., 0)
        RatVector tmpl(n, Rational(0));
        tmpl[0] = tmpl[1] = 1;
        add_orbit_rows(tmpl, rand_rat(0, 3 * static_cast<int>(box_hi)));
        break;
      }
      default: {  // weighted row: orbit of (2, 1, ..., 1)
        RatVector tmpl(n, Rational(1));
        tmpl[0] = 2;
        add_orbit_rows(tmpl, rand_rat(0, 2 * n * static_cast<int>(box_hi)));
        break;
      }
    }
  }

  return RandomSymmetricInstance{
      make_instance("random_sym", rows, rhs, RatVector(n, Rational(1))),
      box_hi};
}

}  // namespace symip::testing
