#pragma once

#include "symip/layers.hpp"
#include "symip/symmetry.hpp"

namespace symip {

struct Applicability {
  bool ok = false;
  bool assumed = false;  // user override in force
  std::string reason;    // failed condition when !ok
};

// Preconditions of the sifting algorithm: every generator is a verified
// symmetry, n >= 2, c parallel to (1,...,1), and G at least
// (floor(n/2)+1)-transitive on the standard basis.
Applicability check_applicability(const IpInstance& inst, const PermGroup& G);

enum class LineStatus { Bounded, Unbounded, LineInfeasible };

// Restriction of the LP to the fixed line {(a,...,a) : a >= 0}.
struct FixedLineSolution {
  LineStatus status = LineStatus::LineInfeasible;
  Rational a;      // the common coordinate, when bounded
  Rational gamma;  // c = gamma * (1,...,1)
};

FixedLineSolution solve_fixed_line(const IpInstance& inst);

bool is_center_feasible(const IpInstance& inst, long long k);

enum class SolveStatus { Optimal, Infeasible, Unbounded, NotApplicable };

struct SolveStats {
  long long layers_visited = 0;
  long long feasibility_checks = 0;
};

struct SolveReport {
  SolveStatus status = SolveStatus::NotApplicable;
  // Optimal:
  IntVector point;
  Rational value;
  long long layer = 0;
  // Infeasible:
  bool has_witness_layer = false;
  long long witness_layer = 0;  // first layer with an infeasible center
  bool exhausted_layers = false;
  bool line_infeasible = false;
  std::string note;
  Applicability applicability;
  SolveStats stats;
};

// Sift from the floor(n a)-th layer down to the (n floor(a))-th, testing the
// center and then one neighbor per layer; at most n layers.
SolveReport sift_solve(const IpInstance& inst, const PermGroup& G,
                       bool assume_applicable = false);

// One constructive descent step: a feasible integer point on the same layer
// strictly closer to the center. x must be feasible, integral, and not a
// neighbor.
IntVector step_toward_neighbors(const IpInstance& inst, const PermGroup& G,
                                const IntVector& x);

// Iterates descent steps until a neighbor is reached.
IntVector descend_to_neighbor(const IpInstance& inst, const PermGroup& G,
                              const IntVector& x);

}  // namespace symip
