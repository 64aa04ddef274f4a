#pragma once

#include <functional>

#include "symip/rational.hpp"

namespace symip {

// Integer multiple of a projectively rational utility vector with coprime
// entries and positive first nonzero entry. Unique for each direction.
struct CoprimeMultiple {
  std::vector<Integer> vec;

  int dimension() const { return static_cast<int>(vec.size()); }
  bool is_all_ones() const;
  bool operator==(const CoprimeMultiple&) const = default;

  std::string str() const;
};

CoprimeMultiple coprime_multiple(const RatVector& c);

// k = c'^t x; the unique layer index of an integral point.
long long layer_index(const CoprimeMultiple& cprime, const Point& x);

// t = k / ||c'||^2, the hyperplane parameter of the k-th layer.
Rational layer_parameter(const CoprimeMultiple& cprime, long long k);

// ||c'||^2: the number of layers between m c' (inclusive) and (m+1) c'
// (exclusive).
Integer layers_per_period(const CoprimeMultiple& cprime);

// The transitive case below assumes c' = (1,...,1); the layer index k then
// splits as k = d*n + r with 0 <= r < n.
struct LayerSplit {
  long long d;
  int r;
};
LayerSplit layer_split(int n, long long k);

// Center m_k = (k/n, ..., k/n) of the k-th layer.
Point center(int n, long long k);

// The neighbor with its d+1 entries placed first. Any representative works
// when the group acts transitively on neighbors; a fixed one keeps runs
// deterministic.
IntVector canonical_neighbor(int n, long long k);

// A point with max - min <= 1 is exactly a neighbor of its own layer.
bool is_neighbor(const IntVector& x);

// Points with r entries d+1 and n-r entries d; |N_k| = binom(n, r).
struct NeighborSet {
  int n;
  long long k;

  Integer cardinality() const;
  // Visits all members; stops early if the callback returns false.
  void for_each(const std::function<bool(const IntVector&)>& visit) const;
  std::vector<IntVector> all() const;
};

NeighborSet neighbor_set(int n, long long k);

}  // namespace symip
