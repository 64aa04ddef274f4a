#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace symip {

// All geometry in this library is exact. Rational is a canonical fraction:
// gcd(|num|, den) = 1, den > 0, zero is 0/1. mpq_class maintains exactly
// this form as long as values are built through canonicalizing operations.
using Integer = mpz_class;
using Rational = mpq_class;

using RatVector = std::vector<Rational>;
using IntVector = std::vector<long long>;
using Point = RatVector;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts an optional sign followed by an integer, a fraction p/q, or a
// finite decimal. Decimals convert exactly: d.ddd -> digits / 10^k.
Rational parse_rational(const std::string& text);

// "p/q" for non-integers, plain "p" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const RatVector& v);

bool is_integral(const Rational& q);
bool is_integral(const RatVector& v);

// Requires every entry integral.
IntVector to_int_vector(const RatVector& v);
RatVector to_rat_vector(const IntVector& v);

Rational inner_product(const RatVector& a, const RatVector& b);
Rational squared_norm(const RatVector& v);

struct RatMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> data;  // row-major

  RatMatrix() = default;
  RatMatrix(int m, int n) : rows(m), cols(n), data(static_cast<size_t>(m) * n) {}

  Rational& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  const Rational& at(int i, int j) const {
    return data[static_cast<size_t>(i) * cols + j];
  }

  RatVector row(int i) const {
    return RatVector(data.begin() + static_cast<size_t>(i) * cols,
                     data.begin() + static_cast<size_t>(i + 1) * cols);
  }

  bool operator==(const RatMatrix& o) const {
    return rows == o.rows && cols == o.cols && data == o.data;
  }
};

}  // namespace symip
