#include "abelian/covers.hpp"

#include <algorithm>
#include <array>
#include <queue>

namespace abelian {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)]) {
      throw DomainError("not_a_permutation", "image list is not a bijection");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw DomainError("invalid_degree", "degree must be positive");
  std::vector<int> im(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) im[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::cycle(int degree, const std::vector<int>& points) {
  std::vector<int> im = identity(degree).images_;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int from = points[i];
    if (from < 0 || from >= degree) throw DomainError("not_a_permutation", "cycle point out of range");
    im[static_cast<std::size_t>(from)] = points[(i + 1) % points.size()];
  }
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) im[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(images_[x])) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

int Permutation::cycle_count() const { return static_cast<int>(cycle_type().size()); }

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DomainError("degree_mismatch", "permutations of different degree");
  std::vector<int> im(q.images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = p(q.images_[i]);
  return Permutation(std::move(im));
}

Permutation commutator(const Permutation& a, const Permutation& b) { return a * b * a.inverse() * b.inverse(); }

bool is_connected(const std::vector<Permutation>& perms) {
  if (perms.empty()) throw DomainError("invalid_degree", "no permutations given");
  const int d = perms.front().degree();
  for (const auto& p : perms) {
    if (p.degree() != d) throw DomainError("degree_mismatch", "permutations of different degree");
  }
  std::vector<bool> seen(static_cast<std::size_t>(d), false);
  std::queue<int> todo;
  todo.push(0);
  seen[0] = true;
  int reached = 1;
  while (!todo.empty()) {
    const int x = todo.front();
    todo.pop();
    for (const auto& p : perms) {
      for (int y : {p(x), p.inverse()(x)}) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          ++reached;
          todo.push(y);
        }
      }
    }
  }
  return reached == d;
}

int genus_of_origami(const Origami& o) {
  if (!is_connected({o.h, o.v})) throw DomainError("disconnected_cover", "origami is not connected");
  const int d = o.degree();
  return 1 + (d - commutator(o.h, o.v).cycle_count()) / 2;
}

bool BranchedTorusCover::relation_holds() const {
  Permutation r = commutator(a, b);
  for (const auto& c : branch) r = r * c;
  return r.is_identity();
}

std::vector<Permutation> BranchedTorusCover::generators() const {
  std::vector<Permutation> g{a, b};
  g.insert(g.end(), branch.begin(), branch.end());
  return g;
}

void validate(const BranchedTorusCover& c) {
  if (c.degree < 1) throw DomainError("invalid_degree", "degree must be positive");
  for (const auto& p : c.generators()) {
    if (p.degree() != c.degree) throw DomainError("degree_mismatch", "monodromy degree differs from cover degree");
  }
  if (!c.relation_holds()) throw DomainError("monodromy_relation_violated", "monodromy relation violated");
  if (!is_connected(c.generators())) throw DomainError("disconnected_cover", "cover is not connected");
}

int genus_of_branched_cover(const BranchedTorusCover& c) {
  validate(c);
  int ramification = 0;
  for (const auto& p : c.branch) ramification += c.degree - p.cycle_count();
  return 1 + ramification / 2;
}

BranchedTorusCover construct_cover(int genus, int degree) {
  if (genus < 2) throw DomainError("invalid_genus", "construction needs genus >= 2");
  if (degree <= 0) throw DomainError("invalid_degree", "degree must be positive");
  if (degree == 1) throw DomainError("no_degree_one_cover", "no degree-1 cover of higher genus");
  std::vector<int> all(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) all[static_cast<std::size_t>(i)] = i;
  BranchedTorusCover c;
  c.degree = degree;
  c.a = Permutation::cycle(degree, all);
  c.b = Permutation::identity(degree);
  c.branch.assign(static_cast<std::size_t>(2 * genus - 2), Permutation::cycle(degree, {0, 1}));
  return c;
}

PlanarLattice period_lattice_of_cover(const BranchedTorusCover& c) {
  validate(c);
  struct Edge {
    const Permutation* perm;
    long wx, wy;
  };
  std::vector<Edge> edges{{&c.a, 1, 0}, {&c.b, 0, 1}};
  for (const auto& p : c.branch) edges.push_back({&p, 0, 0});

  // Potentials along a BFS spanning tree; every edge then contributes one cycle weight.
  const auto d = static_cast<std::size_t>(c.degree);
  std::vector<std::array<long, 2>> pot(d);
  std::vector<bool> seen(d, false);
  std::queue<int> todo;
  todo.push(0);
  seen[0] = true;
  while (!todo.empty()) {
    const int s = todo.front();
    todo.pop();
    for (const auto& e : edges) {
      for (int dir : {1, -1}) {
        const int t = dir == 1 ? (*e.perm)(s) : e.perm->inverse()(s);
        const auto ti = static_cast<std::size_t>(t);
        if (seen[ti]) continue;
        seen[ti] = true;
        pot[ti] = {pot[static_cast<std::size_t>(s)][0] + dir * e.wx, pot[static_cast<std::size_t>(s)][1] + dir * e.wy};
        todo.push(t);
      }
    }
  }
  std::vector<IntVector> cycles;
  for (const auto& e : edges) {
    for (std::size_t s = 0; s < d; ++s) {
      const auto t = static_cast<std::size_t>((*e.perm)(static_cast<int>(s)));
      const long x = pot[s][0] + e.wx - pot[t][0];
      const long y = pot[s][1] + e.wy - pot[t][1];
      if (x != 0 || y != 0) cycles.push_back({Integer(x), Integer(y)});
    }
  }
  PlanarLattice out;
  if (cycles.empty()) return out;
  const IntMatrix h = hermite_rows(IntMatrix::from_rows(cycles));
  out.rank = h.rows();
  for (std::size_t r = 0; r < h.rows(); ++r) out.basis.emplace_back(Rational(h(r, 0)), Rational(h(r, 1)));
  return out;
}

CoverInvariants cover_class_invariants(const BranchedTorusCover& c) {
  CoverInvariants inv;
  inv.genus = genus_of_branched_cover(c);
  inv.area = c.degree;
  const Rational cov = covolume(period_lattice_of_cover(c));
  if (cov.get_den() != 1) throw std::logic_error("cover period lattice is not integral");
  inv.covolume = cov.get_num();
  if (!divides(inv.covolume, inv.area)) throw std::logic_error("degree is not a multiple of the covolume");
  inv.det = inv.area / inv.covolume;
  return inv;
}

}  // namespace abelian
