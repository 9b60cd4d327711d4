#pragma once

#include <vector>

#include "abelian/arith.hpp"
#include "abelian/realizability.hpp"

namespace abelian {

/// Permutation of {0, ..., d-1}. Composition acts on the left: (p * q)(x) = p(q(x)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws DomainError("not_a_permutation") unless images is a bijection of [0, d).
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  /// Single cycle (c0 c1 ... ck) on `degree` points.
  static Permutation cycle(int degree, const std::vector<int>& points);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_.at(static_cast<std::size_t>(x)); }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  int cycle_count() const;
  /// Cycle lengths, sorted descending.
  std::vector<int> cycle_type() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation& p, const Permutation& q) { return p.images_ == q.images_; }

 private:
  std::vector<int> images_;
};

/// a b a^{-1} b^{-1}
Permutation commutator(const Permutation& a, const Permutation& b);

/// True iff the group generated by perms acts transitively. Throws on degree mismatch.
bool is_connected(const std::vector<Permutation>& perms);

/// Square-tiled surface: square i has square h(i) to its right and v(i) above it.
struct Origami {
  Permutation h;
  Permutation v;
  int degree() const { return h.degree(); }
};

int genus_of_origami(const Origami& o);

/// Cover of the square torus branched over k points, monodromy relation [a,b] c_1 ... c_k = id.
struct BranchedTorusCover {
  int degree = 0;
  Permutation a;
  Permutation b;
  std::vector<Permutation> branch;

  bool relation_holds() const;
  std::vector<Permutation> generators() const;
};

/// Validates sizes, relation ("monodromy_relation_violated") and transitivity ("disconnected_cover").
void validate(const BranchedTorusCover& c);

int genus_of_branched_cover(const BranchedTorusCover& c);

/// a = d-cycle, b = id, 2g-2 copies of (0 1).
BranchedTorusCover construct_cover(int genus, int degree);

/// Subgroup of Z + Zi generated by the periods of dz along closed lifts.
PlanarLattice period_lattice_of_cover(const BranchedTorusCover& c);

struct CoverInvariants {
  int genus = 0;
  Integer area;
  Integer covolume;
  Integer det;
};

CoverInvariants cover_class_invariants(const BranchedTorusCover& c);

}  // namespace abelian
