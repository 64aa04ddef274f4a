#pragma once

#include "symip/solver.hpp"

namespace symip {

// Integer enumeration box; the default lower bound 0 comes from x >= 0.
struct Box {
  IntVector lo;
  IntVector hi;

  static Box cube(int n, long long lo, long long hi);
  void validate(int n, long long cap) const;
  Integer volume() const;
};

// A box large enough to certify optimality relative to the fixed-line bound.
Box default_box(const IpInstance& inst);

inline constexpr long long kDefaultEnumerationCap = 10000000;

struct OracleReport {
  bool feasible = false;
  Rational value;
  std::vector<IntVector> argmax;  // all maximizers, lexicographic order
  long long points_enumerated = 0;
};

// Exhaustive scan of all integer points in the box; never consults symmetry.
OracleReport brute_force_solve(const IpInstance& inst, const Box& box,
                               long long cap = kDefaultEnumerationCap);

// True iff some feasible integer point in the box has coordinate sum k.
bool layer_feasible_brute(const IpInstance& inst, long long k, const Box& box,
                          long long cap = kDefaultEnumerationCap);

// True iff the layer hyperplane {sum x = k} meets the feasible region
// {Ax <= b, x >= 0} at all (over the rationals, not just integer points).
// Decided exactly by a phase-1 simplex with Bland's rule; independent of the
// center test it is used to cross-check.
bool layer_feasible_lp(const IpInstance& inst, long long k);

// Consistency per layer k of the sift range.  Two exact equivalences hold for
// applicable instances and are checked:
//   - the layer meets the feasible region iff its center is feasible;
//   - the layer holds a feasible integer point iff the canonical neighbor is
//     feasible.
// A feasible center does NOT promise an integer point on the layer (the
// sifting loop keeps descending in that case), so center_feasible is compared
// with lp_feasible, not with brute_feasible.
struct LayerAgreement {
  long long k = 0;
  bool center_feasible = false;
  bool neighbor_feasible = false;
  bool brute_feasible = false;
  bool lp_feasible = false;

  bool consistent() const {
    return center_feasible == lp_feasible &&
           neighbor_feasible == brute_feasible &&
           (brute_feasible ? lp_feasible : true);
  }
};

struct CrossValidation {
  bool agree = false;
  SolveReport sift;
  OracleReport brute;
  std::vector<LayerAgreement> layers;  // the sift range, when bounded
  std::string detail;
};

CrossValidation cross_validate(const IpInstance& inst, const PermGroup& G,
                               const Box& box,
                               long long cap = kDefaultEnumerationCap);

}  // namespace symip
