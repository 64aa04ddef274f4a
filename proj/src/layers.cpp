#include "symip/layers.hpp"

#include <algorithm>

namespace symip {

bool CoprimeMultiple::is_all_ones() const {
  return std::all_of(vec.begin(), vec.end(),
                     [](const Integer& e) { return e == 1; });
}

std::string CoprimeMultiple::str() const {
  std::string out = "(";
  for (size_t i = 0; i < vec.size(); ++i) {
    if (i) out += ", ";
    out += vec[i].get_str();
  }
  return out + ")";
}

CoprimeMultiple coprime_multiple(const RatVector& c) {
  if (c.empty()) throw DimensionError("empty utility vector");
  bool all_zero = std::all_of(c.begin(), c.end(),
                              [](const Rational& q) { return q == 0; });
  if (all_zero) throw DimensionError("utility vector must be nonzero");

  // Clear denominators by their LCM, then divide out the gcd of the
  // resulting integer entries.
  Integer lcm = 1;
  for (const auto& q : c) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    lcm = l;
  }

  CoprimeMultiple out;
  out.vec.reserve(c.size());
  Integer gcd = 0;
  for (const auto& q : c) {
    Integer e = q.get_num() * (lcm / q.get_den());
    Integer g;
    mpz_gcd(g.get_mpz_t(), gcd.get_mpz_t(), e.get_mpz_t());
    gcd = g;
    out.vec.push_back(std::move(e));
  }
  for (auto& e : out.vec) e /= gcd;

  for (const auto& e : out.vec) {
    if (e == 0) continue;
    if (e < 0)
      for (auto& f : out.vec) f = -f;
    break;
  }
  return out;
}

long long layer_index(const CoprimeMultiple& cprime, const Point& x) {
  if (static_cast<int>(x.size()) != cprime.dimension())
    throw DimensionError("layer_index dimension mismatch");
  if (!is_integral(x)) throw DimensionError("layer_index needs an integral point");
  Integer k = 0;
  for (size_t i = 0; i < x.size(); ++i) k += cprime.vec[i] * x[i].get_num();
  if (!k.fits_slong_p()) throw std::overflow_error("layer index out of range");
  return k.get_si();
}

Rational layer_parameter(const CoprimeMultiple& cprime, long long k) {
  Rational t(static_cast<long>(k));
  t /= Rational(layers_per_period(cprime));
  return t;
}

Integer layers_per_period(const CoprimeMultiple& cprime) {
  Integer s = 0;
  for (const auto& e : cprime.vec) s += e * e;
  return s;
}

LayerSplit layer_split(int n, long long k) {
  long long d = k / n;
  long long r = k - static_cast<long long>(n) * d;
  if (r < 0) {  // floor division
    --d;
    r += n;
  }
  return {d, static_cast<int>(r)};
}

Point center(int n, long long k) {
  Rational coord(static_cast<long>(k), static_cast<long>(n));
  coord.canonicalize();
  return Point(n, coord);
}

IntVector canonical_neighbor(int n, long long k) {
  auto [d, r] = layer_split(n, k);
  IntVector x(n, d);
  for (int i = 0; i < r; ++i) x[i] = d + 1;
  return x;
}

bool is_neighbor(const IntVector& x) {
  auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  return *hi - *lo <= 1;
}

Integer NeighborSet::cardinality() const {
  auto [d, r] = layer_split(n, k);
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, r);
  return b;
}

void NeighborSet::for_each(
    const std::function<bool(const IntVector&)>& visit) const {
  auto [d, r] = layer_split(n, k);
  // Iterate r-subsets of {0,...,n-1} in lexicographic order.
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  for (;;) {
    IntVector x(n, d);
    for (int i : idx) x[i] = d + 1;
    if (!visit(x)) return;
    if (r == 0) return;
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<IntVector> NeighborSet::all() const {
  std::vector<IntVector> out;
  for_each([&](const IntVector& x) {
    out.push_back(x);
    return true;
  });
  return out;
}

NeighborSet neighbor_set(int n, long long k) { return NeighborSet{n, k}; }

}  // namespace symip
