#pragma once

#include <optional>
#include <set>

#include "symip/instance.hpp"

namespace symip {

// Coordinate permutation. Indices are 1-based at the API surface to match
// cycle notation; storage is a 0-based image table.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int degree);
  // images[i] is the 0-based image of index i.
  static Permutation from_images(std::vector<int> images);
  // "(1 2)(3 4)"; fixed points omitted.
  static Permutation from_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int image(int i) const { return img_[i]; }  // 0-based
  bool is_identity() const;

  Permutation inverse() const;
  // (*this) followed by other: composed(i) = other(this(i)).
  Permutation then(const Permutation& other) const;

  // y[i^g] = x[i].
  Point apply_to_point(const Point& x) const;
  IntVector apply_to_point(const IntVector& x) const;

  std::string cycle_str() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

struct PermGroup {
  int degree = 0;
  std::vector<Permutation> generators;  // identity implied

  static PermGroup trivial(int degree);
  // One permutation per line in cycle notation; '#' comments, blank lines ok.
  static PermGroup parse_generators(const std::string& text, int degree);
  static PermGroup load_generators(const std::string& path, int degree);

  // Full element enumeration by closure BFS; throws if the order exceeds cap.
  std::vector<Permutation> elements(size_t cap = 1000000) const;
};

struct SymmetryWitness {
  Permutation column_perm;  // g
  Permutation row_perm;     // sigma, permuting the rows of (A|b)
};

// Checks c^g = c and matches the multiset of g-column-permuted augmented
// rows against the originals; returns the row permutation built by stable
// first-available assignment, or nullopt.
std::optional<SymmetryWitness> is_symmetry(const IpInstance& inst,
                                           const Permutation& g);

// All symmetries of (A, b, c), found by backtracking over column images
// pruned by column signatures. Only for n <= cap.
struct FullGroupResult {
  PermGroup group;                    // reduced generator list
  std::vector<Permutation> elements;  // the full set
};
FullGroupResult full_symmetry_group(const IpInstance& inst, int cap = 10);

std::set<Point> orbit_of_point(const PermGroup& G, const Point& x);
std::set<IntVector> orbit_of_point(const PermGroup& G, const IntVector& x);

// Orbit BFS on ordered index tuples; true iff the orbit of (1,...,k) has
// size n(n-1)...(n-k+1).
bool is_k_transitive(const PermGroup& G, int k);

// Orbit BFS on k-subsets; true iff the orbit of {1,...,k} has size binom(n,k).
bool is_k_homogeneous(const PermGroup& G, int k);

struct NeighborOrbit {
  IntVector representative;  // lexicographically least member
  size_t size;
};
// Partition of the layer-k neighbor set into G-orbits; representatives in
// lexicographic order. Throws if binom(n,r) exceeds the cap.
std::vector<NeighborOrbit> neighbor_orbits(const PermGroup& G, int n,
                                           long long k, size_t cap = 1000000);

// BFS over generator words for some g with from^g = to and J^g = J
// (indices 1-based). Refusal is nullopt.
std::optional<Permutation> find_mapping_element(const PermGroup& G, int from,
                                                int to, const std::set<int>& J);

}  // namespace symip
