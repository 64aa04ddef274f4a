#include "symip/solver.hpp"

#include <algorithm>
#include <cassert>

namespace symip {

namespace {

Rational rat_of(long long v) { return Rational(static_cast<long>(v)); }

long long floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (!f.fits_slong_p()) throw std::overflow_error("layer index out of range");
  return f.get_si();
}

long long ceil_of(const Rational& q) {
  Integer f;
  mpz_cdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (!f.fits_slong_p()) throw std::overflow_error("layer index out of range");
  return f.get_si();
}

Rational squared_norm_int(const IntVector& x) {
  Rational s = 0;
  for (long long v : x) s += rat_of(v) * rat_of(v);
  return s;
}

long long coordinate_sum(const IntVector& x) {
  long long s = 0;
  for (long long v : x) s += v;
  return s;
}

}  // namespace

Applicability check_applicability(const IpInstance& inst, const PermGroup& G) {
  if (G.degree != inst.n)
    throw DimensionError("group degree does not match instance dimension");
  for (const auto& g : G.generators) {
    if (!is_symmetry(inst, g))
      throw std::invalid_argument("generator " + g.cycle_str() +
                                  " is not a symmetry of the instance");
  }
  Applicability app;
  if (inst.n < 2) {
    app.reason = "dimension must be at least 2";
    return app;
  }
  if (!coprime_multiple(inst.c).is_all_ones()) {
    app.reason = "utility vector is not parallel to (1,...,1)";
    return app;
  }
  int degree = inst.n / 2 + 1;
  if (!is_k_transitive(G, degree)) {
    app.reason = "group is not " + std::to_string(degree) +
                 "-transitive on the standard basis";
    return app;
  }
  app.ok = true;
  return app;
}

FixedLineSolution solve_fixed_line(const IpInstance& inst) {
  const Rational gamma = inst.c[0];
  for (const auto& cj : inst.c)
    if (cj != gamma)
      throw std::invalid_argument("utility vector is not parallel to (1,...,1)");
  if (gamma == 0) throw std::invalid_argument("utility vector is zero");

  FixedLineSolution sol;
  sol.gamma = gamma;

  bool has_upper = false;
  Rational upper, lower = 0;  // x >= 0 bounds the line below at a = 0
  for (int i = 0; i < inst.m; ++i) {
    Rational s = 0;
    for (int j = 0; j < inst.n; ++j) s += inst.A.at(i, j);
    if (s == 0) {
      if (inst.b[i] < 0) {
        sol.status = LineStatus::LineInfeasible;
        return sol;
      }
      continue;
    }
    Rational ratio = inst.b[i] / s;
    if (s > 0) {
      if (!has_upper || ratio < upper) upper = ratio;
      has_upper = true;
    } else {
      if (ratio > lower) lower = ratio;
    }
  }
  if (has_upper && lower > upper) {
    sol.status = LineStatus::LineInfeasible;
    return sol;
  }
  if (gamma > 0) {
    if (!has_upper) {
      sol.status = LineStatus::Unbounded;
      return sol;
    }
    sol.a = upper;
  } else {
    sol.a = lower;
  }
  sol.status = LineStatus::Bounded;
  return sol;
}

bool is_center_feasible(const IpInstance& inst, long long k) {
  return is_feasible_point(inst, center(inst.n, k));
}

SolveReport sift_solve(const IpInstance& inst, const PermGroup& G,
                       bool assume_applicable) {
  SolveReport report;
  report.applicability = check_applicability(inst, G);
  if (!report.applicability.ok) {
    bool overridable =
        inst.n >= 2 && coprime_multiple(inst.c).is_all_ones();
    if (assume_applicable && overridable) {
      report.applicability.assumed = true;
    } else {
      report.status = SolveStatus::NotApplicable;
      report.note = report.applicability.reason;
      return report;
    }
  }

  const int n = inst.n;
  auto line = solve_fixed_line(inst);
  if (line.status == LineStatus::Unbounded) {
    // The LP relaxation restricted to the fixed line is unbounded; no claim
    // is made about the IP.
    report.status = SolveStatus::Unbounded;
    report.note = "fixed-line LP is unbounded";
    return report;
  }
  if (line.status == LineStatus::LineInfeasible) {
    // An empty fixed line means an empty feasible region under a transitive
    // group (fixed-point theorem of the companion results), hence IP
    // infeasibility.
    report.status = SolveStatus::Infeasible;
    report.line_infeasible = true;
    report.note = "fixed line does not meet the feasible region";
    return report;
  }

  const Rational gamma = line.gamma;
  const Rational na = rat_of(n) * line.a;
  long long k_start, k_end, step;
  if (gamma > 0) {
    k_start = floor_of(na);
    k_end = n * floor_of(line.a);
    step = -1;
  } else {
    k_start = ceil_of(na);
    k_end = n * ceil_of(line.a);
    step = 1;
  }
  assert(step * (k_end - k_start) >= 0);

  for (long long k = k_start;; k += step) {
    ++report.stats.layers_visited;
    ++report.stats.feasibility_checks;
    if (!is_center_feasible(inst, k)) {
      report.status = SolveStatus::Infeasible;
      report.has_witness_layer = true;
      report.witness_layer = k;
      return report;
    }
    auto neighbor = canonical_neighbor(n, k);
    ++report.stats.feasibility_checks;
    if (is_feasible_point(inst, to_rat_vector(neighbor))) {
      report.status = SolveStatus::Optimal;
      report.point = std::move(neighbor);
      report.value = gamma * rat_of(k);
      report.layer = k;
      return report;
    }
    if (k == k_end) break;
  }

  // The last layer's center is integral and equals its only neighbor, so
  // reaching this point means every tested layer was ruled out.
  report.status = SolveStatus::Infeasible;
  report.exhausted_layers = true;
  return report;
}

IntVector step_toward_neighbors(const IpInstance& inst, const PermGroup& G,
                                const IntVector& x) {
  const int n = inst.n;
  if (static_cast<int>(x.size()) != n)
    throw DimensionError("point dimension mismatch");
  if (is_neighbor(x))
    throw std::invalid_argument("point is already a neighbor of its layer");
  if (!is_feasible_point(inst, to_rat_vector(x)))
    throw std::invalid_argument("descent requires a feasible point");

  // Split indices (1-based) by parity of the coordinate value; I is the
  // majority class, J the minority.
  std::vector<int> even_idx, odd_idx;
  for (int i = 0; i < n; ++i)
    ((x[i] % 2 + 2) % 2 == 0 ? even_idx : odd_idx).push_back(i + 1);
  const std::vector<int>& class_I =
      even_idx.size() >= odd_idx.size() ? even_idx : odd_idx;
  const std::vector<int>& class_J =
      even_idx.size() >= odd_idx.size() ? odd_idx : even_idx;
  std::set<int> J(class_J.begin(), class_J.end());

  // Case 1: two distinct values inside one parity class.
  std::optional<std::pair<int, int>> pair;  // (i, i') 1-based
  for (const auto* cls : {&class_I, &class_J}) {
    for (size_t a = 0; !pair && a < cls->size(); ++a)
      for (size_t b = a + 1; !pair && b < cls->size(); ++b)
        if (x[(*cls)[a] - 1] != x[(*cls)[b] - 1])
          pair = {(*cls)[a], (*cls)[b]};
  }

  Point y_rat;
  if (pair) {
    auto [i, iprime] = *pair;
    auto g = find_mapping_element(G, iprime, i, J);
    if (!g)
      throw std::runtime_error(
          "no group element realizes the descent mapping; the group does not "
          "satisfy the transitivity hypothesis");
    auto xg = g->apply_to_point(x);
    y_rat.resize(n);
    for (int l = 0; l < n; ++l)
      y_rat[l] = (rat_of(x[l]) + rat_of(xg[l])) / 2;
  } else {
    // Case 2: each parity class is constant, so x takes exactly two values
    // across the classes.
    if (class_J.empty())
      throw std::logic_error("constant point must be a neighbor");
    int i = class_I.front();
    int iprime = class_J.front();
    long long diff = std::abs(x[i - 1] - x[iprime - 1]);
    assert(diff >= 2);
    auto g = find_mapping_element(G, iprime, i, {});
    if (!g)
      throw std::runtime_error(
          "no group element realizes the descent mapping; the group does not "
          "satisfy the transitivity hypothesis");
    auto xg = g->apply_to_point(x);
    Rational p(1, static_cast<long>(diff));
    y_rat.resize(n);
    for (int l = 0; l < n; ++l)
      y_rat[l] = p * rat_of(x[l]) + (1 - p) * rat_of(xg[l]);
  }

  IntVector y = to_int_vector(y_rat);
  if (coordinate_sum(y) != coordinate_sum(x))
    throw std::logic_error("descent step left the layer");
  if (!is_feasible_point(inst, y_rat))
    throw std::logic_error("descent step produced an infeasible point");
  if (squared_norm_int(y) >= squared_norm_int(x))
    throw std::logic_error("descent step did not move closer to the center");
  return y;
}

IntVector descend_to_neighbor(const IpInstance& inst, const PermGroup& G,
                              const IntVector& x) {
  IntVector cur = x;
  while (!is_neighbor(cur)) cur = step_toward_neighbors(inst, G, cur);
  return cur;
}

}  // namespace symip
