#include "symip/oracle.hpp"

namespace symip {

namespace {

// Odometer scan over the box in lexicographic order.
template <typename Visit>
void enumerate_box(const Box& box, Visit&& visit) {
  IntVector x = box.lo;
  const size_t n = x.size();
  for (;;) {
    if (!visit(x)) return;
    size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < box.hi[i]) {
        ++x[i];
        for (size_t j = i + 1; j < n; ++j) x[j] = box.lo[j];
        break;
      }
      if (i == 0) return;
    }
  }
}

}  // namespace

Box Box::cube(int n, long long lo, long long hi) {
  return Box{IntVector(n, lo), IntVector(n, hi)};
}

void Box::validate(int n, long long cap) const {
  if (static_cast<int>(lo.size()) != n || static_cast<int>(hi.size()) != n)
    throw DimensionError("box dimension mismatch");
  for (int i = 0; i < n; ++i)
    if (lo[i] > hi[i]) throw std::invalid_argument("empty box: lower > upper");
  if (volume() > Integer(static_cast<long>(cap)))
    throw std::runtime_error("enumeration cap exceeded: box volume " +
                             volume().get_str());
}

Integer Box::volume() const {
  Integer v = 1;
  for (size_t i = 0; i < lo.size(); ++i)
    v *= Integer(static_cast<long>(hi[i] - lo[i] + 1));
  return v;
}

Box default_box(const IpInstance& inst) {
  auto line = solve_fixed_line(inst);
  if (line.status != LineStatus::Bounded)
    throw std::runtime_error(
        "no default box: fixed-line LP is not bounded; supply --box");
  Integer hi_i;
  mpz_cdiv_q(hi_i.get_mpz_t(), line.a.get_num().get_mpz_t(),
             line.a.get_den().get_mpz_t());
  long long hi = hi_i.get_si() + inst.n;
  if (hi < 1) hi = 1;
  return Box::cube(inst.n, 0, hi);
}

OracleReport brute_force_solve(const IpInstance& inst, const Box& box,
                               long long cap) {
  box.validate(inst.n, cap);
  OracleReport report;
  enumerate_box(box, [&](const IntVector& x) {
    ++report.points_enumerated;
    if (!is_feasible_point(inst, to_rat_vector(x))) return true;
    Rational v = utility_value(inst, to_rat_vector(x));
    if (!report.feasible || v > report.value) {
      report.feasible = true;
      report.value = v;
      report.argmax.clear();
      report.argmax.push_back(x);
    } else if (v == report.value) {
      report.argmax.push_back(x);
    }
    return true;
  });
  return report;
}

bool layer_feasible_brute(const IpInstance& inst, long long k, const Box& box,
                          long long cap) {
  box.validate(inst.n, cap);
  bool found = false;
  enumerate_box(box, [&](const IntVector& x) {
    long long sum = 0;
    for (long long v : x) sum += v;
    if (sum == k && is_feasible_point(inst, to_rat_vector(x))) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

bool layer_feasible_lp(const IpInstance& inst, long long k) {
  // Phase-1 simplex on {Ax <= b, sum x = k, x >= 0}, exact rationals,
  // Bland's rule (so termination is guaranteed).  Feasible iff the optimal
  // artificial objective is zero.
  const int n = inst.n;
  const int m = inst.m + 2;  // rows of A plus sum<=k and -sum<=-k

  // Row i: coeffs over structural vars, then rhs.  Slacks are implicit at
  // column n+i; artificials are appended only where needed.
  std::vector<RatVector> rows(m, RatVector(n));
  RatVector rhs(m);
  for (int i = 0; i < inst.m; ++i) {
    for (int j = 0; j < n; ++j) rows[i][j] = inst.A.at(i, j);
    rhs[i] = inst.b[i];
  }
  Rational kq(static_cast<long>(k));
  for (int j = 0; j < n; ++j) {
    rows[inst.m][j] = 1;
    rows[inst.m + 1][j] = -1;
  }
  rhs[inst.m] = kq;
  rhs[inst.m + 1] = -kq;

  // Tableau columns: n structural + m slack + (#artificials) + 1 rhs.
  int art_count = 0;
  for (int i = 0; i < m; ++i)
    if (rhs[i] < 0) ++art_count;
  const int cols = n + m + art_count + 1;
  const int rhs_col = cols - 1;
  std::vector<RatVector> T(m, RatVector(cols));
  std::vector<int> basis(m);
  int art_next = n + m;
  for (int i = 0; i < m; ++i) {
    int sgn = rhs[i] < 0 ? -1 : 1;
    for (int j = 0; j < n; ++j) T[i][j] = Rational(sgn) * rows[i][j];
    T[i][n + i] = sgn;
    T[i][rhs_col] = Rational(sgn) * rhs[i];
    if (sgn < 0) {
      T[i][art_next] = 1;
      basis[i] = art_next++;
    } else {
      basis[i] = n + i;
    }
  }

  // Reduced-cost row for minimizing the sum of artificials; obj[rhs_col]
  // is minus the current objective value.
  RatVector obj(cols);
  for (int j = n + m; j < rhs_col; ++j) obj[j] = 1;
  for (int i = 0; i < m; ++i)
    if (basis[i] >= n + m)
      for (int j = 0; j < cols; ++j) obj[j] -= T[i][j];

  for (;;) {
    int enter = -1;
    for (int j = 0; j < rhs_col; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;

    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][rhs_col] / T[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0)
      throw std::logic_error("phase-1 simplex objective unbounded");

    Rational piv = T[leave][enter];
    for (int j = 0; j < cols; ++j) T[leave][j] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational f = T[i][enter];
      for (int j = 0; j < cols; ++j) T[i][j] -= f * T[leave][j];
    }
    if (obj[enter] != 0) {
      Rational f = obj[enter];
      for (int j = 0; j < cols; ++j) obj[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  return obj[rhs_col] == 0;
}

CrossValidation cross_validate(const IpInstance& inst, const PermGroup& G,
                               const Box& box, long long cap) {
  CrossValidation cv;
  cv.sift = sift_solve(inst, G);
  cv.brute = brute_force_solve(inst, box, cap);

  switch (cv.sift.status) {
    case SolveStatus::Optimal:
      cv.agree = cv.brute.feasible && cv.brute.value == cv.sift.value;
      cv.detail = cv.agree ? "both optimal with equal value"
                           : "status or value mismatch";
      break;
    case SolveStatus::Infeasible:
      cv.agree = !cv.brute.feasible;
      cv.detail = cv.agree ? "both infeasible" : "status mismatch";
      break;
    default:
      cv.agree = false;
      cv.detail = "sift solver did not run to a comparable status";
      return cv;
  }

  // Per-layer agreement across the sift range.
  auto line = solve_fixed_line(inst);
  if (line.status == LineStatus::Bounded && line.gamma > 0) {
    Rational na = Rational(static_cast<long>(inst.n)) * line.a;
    Integer kf, af;
    mpz_fdiv_q(kf.get_mpz_t(), na.get_num().get_mpz_t(),
               na.get_den().get_mpz_t());
    mpz_fdiv_q(af.get_mpz_t(), line.a.get_num().get_mpz_t(),
               line.a.get_den().get_mpz_t());
    long long k_hi = kf.get_si();
    long long k_lo = inst.n * af.get_si();
    for (long long k = k_hi; k >= k_lo; --k) {
      LayerAgreement la;
      la.k = k;
      la.center_feasible = is_center_feasible(inst, k);
      la.neighbor_feasible =
          is_feasible_point(inst, to_rat_vector(canonical_neighbor(inst.n, k)));
      la.brute_feasible = layer_feasible_brute(inst, k, box, cap);
      la.lp_feasible = layer_feasible_lp(inst, k);
      cv.layers.push_back(la);
    }
  }
  return cv;
}

}  // namespace symip
