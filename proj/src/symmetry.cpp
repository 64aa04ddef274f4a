#include "symip/symmetry.hpp"

#include "symip/layers.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace symip {

Permutation Permutation::identity(int degree) {
  Permutation p;
  p.img_.resize(degree);
  std::iota(p.img_.begin(), p.img_.end(), 0);
  return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || seen[v])
      throw ParseError("image table is not a bijection");
    seen[v] = true;
  }
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(const std::string& text, int degree) {
  auto p = identity(degree);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      size_t end = pos;
      while (end < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[end]))))
        ++end;
      if (end == pos) throw ParseError("malformed cycle: " + text);
      int v = std::stoi(text.substr(pos, end - pos));
      if (v < 1 || v > degree)
        throw ParseError("cycle entry out of range 1.." + std::to_string(degree) +
                         ": " + text);
      cycle.push_back(v - 1);
      pos = end;
    }
    for (size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (p.img_[from] != from)
        throw ParseError("repeated index in cycles: " + text);
      p.img_[from] = to;
    }
    skip_ws();
  }
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
  return from_images(std::move(inv));
}

Permutation Permutation::then(const Permutation& other) const {
  if (degree() != other.degree()) throw DimensionError("degree mismatch");
  std::vector<int> out(img_.size());
  for (int i = 0; i < degree(); ++i) out[i] = other.img_[img_[i]];
  return from_images(std::move(out));
}

Point Permutation::apply_to_point(const Point& x) const {
  if (static_cast<int>(x.size()) != degree())
    throw DimensionError("point/permutation degree mismatch");
  Point y(x.size());
  for (int i = 0; i < degree(); ++i) y[img_[i]] = x[i];
  return y;
}

IntVector Permutation::apply_to_point(const IntVector& x) const {
  if (static_cast<int>(x.size()) != degree())
    throw DimensionError("point/permutation degree mismatch");
  IntVector y(x.size());
  for (int i = 0; i < degree(); ++i) y[img_[i]] = x[i];
  return y;
}

std::string Permutation::cycle_str() const {
  std::string out;
  std::vector<bool> done(img_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (done[i] || img_[i] == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    while (!done[j]) {
      if (!first) out += " ";
      out += std::to_string(j + 1);
      done[j] = true;
      first = false;
      j = img_[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

PermGroup PermGroup::trivial(int degree) { return PermGroup{degree, {}}; }

PermGroup PermGroup::parse_generators(const std::string& text, int degree) {
  PermGroup g;
  g.degree = degree;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string body = line.substr(0, line.find('#'));
    bool blank = std::all_of(body.begin(), body.end(), [](char c) {
      return std::isspace(static_cast<unsigned char>(c));
    });
    if (blank) continue;
    auto p = Permutation::from_cycles(body, degree);
    if (!p.is_identity()) g.generators.push_back(std::move(p));
  }
  return g;
}

PermGroup PermGroup::load_generators(const std::string& path, int degree) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open generator file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_generators(buf.str(), degree);
}

std::vector<Permutation> PermGroup::elements(size_t cap) const {
  std::set<Permutation> seen;
  std::deque<Permutation> queue;
  auto id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      auto next = cur.then(g);
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw std::runtime_error("group enumeration cap exceeded");
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

using AugRow = std::pair<RatVector, Rational>;

std::vector<AugRow> augmented_rows(const IpInstance& inst) {
  std::vector<AugRow> rows;
  rows.reserve(inst.m);
  for (int i = 0; i < inst.m; ++i) rows.emplace_back(inst.A.row(i), inst.b[i]);
  return rows;
}

}  // namespace

std::optional<SymmetryWitness> is_symmetry(const IpInstance& inst,
                                           const Permutation& g) {
  if (g.degree() != inst.n) throw DimensionError("permutation degree != n");
  if (g.apply_to_point(inst.c) != inst.c) return std::nullopt;

  // Column-permute each row, then match the permuted augmented rows against
  // the originals by stable first-available assignment.
  auto original = augmented_rows(inst);
  std::vector<AugRow> permuted;
  permuted.reserve(inst.m);
  for (const auto& [row, rhs] : original)
    permuted.emplace_back(g.apply_to_point(row), rhs);

  std::vector<int> sigma(inst.m, -1);
  std::vector<bool> taken(inst.m, false);
  for (int j = 0; j < inst.m; ++j) {
    for (int i = 0; i < inst.m; ++i) {
      if (!taken[i] && permuted[j] == original[i]) {
        sigma[j] = i;
        taken[i] = true;
        break;
      }
    }
    if (sigma[j] < 0) return std::nullopt;
  }
  return SymmetryWitness{g, Permutation::from_images(std::move(sigma))};
}

FullGroupResult full_symmetry_group(const IpInstance& inst, int cap) {
  if (inst.n > cap)
    throw std::runtime_error(
        "dimension exceeds symmetry detection cap; supply generators instead");

  // Column signature: c entry plus the sorted multiset of (A entry, b entry)
  // pairs down the column. Columns can only map to columns with equal
  // signatures.
  using ColSig = std::pair<Rational, std::vector<std::pair<Rational, Rational>>>;
  std::vector<ColSig> sig(inst.n);
  for (int j = 0; j < inst.n; ++j) {
    sig[j].first = inst.c[j];
    for (int i = 0; i < inst.m; ++i)
      sig[j].second.emplace_back(inst.A.at(i, j), inst.b[i]);
    std::sort(sig[j].second.begin(), sig[j].second.end());
  }

  std::vector<Permutation> elements;
  std::vector<int> images(inst.n, -1);
  std::vector<bool> used(inst.n, false);

  auto backtrack = [&](auto&& self, int col) -> void {
    if (col == inst.n) {
      auto g = Permutation::from_images(images);
      if (is_symmetry(inst, g)) elements.push_back(std::move(g));
      return;
    }
    for (int target = 0; target < inst.n; ++target) {
      if (used[target] || sig[col] != sig[target]) continue;
      images[col] = target;
      used[target] = true;
      self(self, col + 1);
      used[target] = false;
    }
    images[col] = -1;
  };
  backtrack(backtrack, 0);
  std::sort(elements.begin(), elements.end());

  // Greedy generator reduction over the explicit element list.
  PermGroup group;
  group.degree = inst.n;
  std::set<Permutation> closure{Permutation::identity(inst.n)};
  for (const auto& e : elements) {
    if (closure.contains(e)) continue;
    group.generators.push_back(e);
    auto closed = group.elements(elements.size());
    closure = {closed.begin(), closed.end()};
  }
  return FullGroupResult{std::move(group), std::move(elements)};
}

namespace {

template <typename P>
std::set<P> orbit_bfs(const PermGroup& G, const P& x) {
  std::set<P> seen{x};
  std::deque<P> queue{x};
  while (!queue.empty()) {
    P cur = queue.front();
    queue.pop_front();
    for (const auto& g : G.generators) {
      P next = g.apply_to_point(cur);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen;
}

}  // namespace

std::set<Point> orbit_of_point(const PermGroup& G, const Point& x) {
  if (static_cast<int>(x.size()) != G.degree)
    throw DimensionError("orbit degree mismatch");
  return orbit_bfs(G, x);
}

std::set<IntVector> orbit_of_point(const PermGroup& G, const IntVector& x) {
  if (static_cast<int>(x.size()) != G.degree)
    throw DimensionError("orbit degree mismatch");
  return orbit_bfs(G, x);
}

bool is_k_transitive(const PermGroup& G, int k) {
  const int n = G.degree;
  if (k < 1 || k > n) throw DimensionError("transitivity degree out of range");

  std::vector<int> start(k);
  std::iota(start.begin(), start.end(), 0);
  std::set<std::vector<int>> seen{start};
  std::deque<std::vector<int>> queue{start};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (const auto& g : G.generators) {
      std::vector<int> next(k);
      for (int i = 0; i < k; ++i) next[i] = g.image(cur[i]);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  size_t target = 1;
  for (int i = 0; i < k; ++i) target *= static_cast<size_t>(n - i);
  return seen.size() == target;
}

bool is_k_homogeneous(const PermGroup& G, int k) {
  const int n = G.degree;
  if (k < 1 || k > n) throw DimensionError("homogeneity degree out of range");

  std::vector<int> start(k);
  std::iota(start.begin(), start.end(), 0);
  std::set<std::vector<int>> seen{start};
  std::deque<std::vector<int>> queue{start};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (const auto& g : G.generators) {
      std::vector<int> next(k);
      for (int i = 0; i < k; ++i) next[i] = g.image(cur[i]);
      std::sort(next.begin(), next.end());
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  Integer target;
  mpz_bin_uiui(target.get_mpz_t(), n, k);
  return Integer(static_cast<unsigned long>(seen.size())) == target;
}

std::vector<NeighborOrbit> neighbor_orbits(const PermGroup& G, int n,
                                           long long k, size_t cap) {
  NeighborSet ns{n, k};
  if (ns.cardinality() > Integer(static_cast<unsigned long>(cap)))
    throw std::runtime_error("neighbor enumeration cap exceeded");

  auto members = ns.all();
  std::sort(members.begin(), members.end());  // lexicographic representatives
  std::set<IntVector> visited;
  std::vector<NeighborOrbit> orbits;
  for (const auto& x : members) {
    if (visited.contains(x)) continue;
    auto orbit = orbit_bfs(G, x);
    orbits.push_back(NeighborOrbit{x, orbit.size()});
    visited.insert(orbit.begin(), orbit.end());
  }
  return orbits;
}

std::optional<Permutation> find_mapping_element(const PermGroup& G, int from,
                                                int to, const std::set<int>& J) {
  const int n = G.degree;
  if (from < 1 || from > n || to < 1 || to > n)
    throw DimensionError("index out of range in mapping search");
  for (int j : J)
    if (j < 1 || j > n) throw DimensionError("J index out of range");

  using State = std::pair<int, std::vector<int>>;  // (image of from, image of J)
  auto make_state = [](int pos, std::vector<int> set) {
    std::sort(set.begin(), set.end());
    return State{pos, std::move(set)};
  };

  std::vector<int> j0(J.begin(), J.end());
  for (auto& v : j0) --v;  // 0-based
  State start = make_state(from - 1, j0);
  State target = make_state(to - 1, j0);

  std::map<State, Permutation> reached;
  reached.emplace(start, Permutation::identity(n));
  std::deque<State> queue{start};
  while (!queue.empty()) {
    State cur = queue.front();
    queue.pop_front();
    const Permutation word = reached.at(cur);
    if (cur == target) return word;
    for (const auto& g : G.generators) {
      std::vector<int> jset(cur.second.size());
      for (size_t i = 0; i < jset.size(); ++i) jset[i] = g.image(cur.second[i]);
      State next = make_state(g.image(cur.first), std::move(jset));
      if (reached.emplace(next, word.then(g)).second) queue.push_back(next);
    }
  }
  return std::nullopt;
}

}  // namespace symip
