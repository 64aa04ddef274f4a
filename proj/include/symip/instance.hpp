#pragma once

#include <string>

#include "symip/rational.hpp"

namespace symip {

// max c^t x  s.t.  A x <= b,  x >= 0.
// Nonnegativity is part of the model, never written as rows, so the
// symmetry group stays inside the permutation matrices.
struct IpInstance {
  std::string name;
  int n = 0;  // dimension (columns)
  int m = 0;  // rows
  RatMatrix A;
  RatVector b;
  RatVector c;  // nonzero

  void validate() const;
};

IpInstance parse_instance(const std::string& text);
IpInstance load_instance(const std::string& path);
std::string serialize_instance(const IpInstance& inst);

// Ax <= b componentwise and x >= 0 componentwise, exact comparisons.
bool is_feasible_point(const IpInstance& inst, const Point& x);

Rational utility_value(const IpInstance& inst, const Point& x);

}  // namespace symip
