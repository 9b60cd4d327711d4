#pragma once

#include <vector>

#include "abelian/arith.hpp"
#include "abelian/matrix.hpp"

namespace abelian {

/// Block-diagonal alternating matrix with blocks [[0,1],[-1,0]]; coordinates are
/// ordered e_0, f_0, e_1, f_1, ... so that w(e_i, f_i) = 1.
IntMatrix standard_gram(int genus);

/// The integral lattice Z^{2g} together with an alternating Gram matrix.
class SymplecticSpace {
 public:
  explicit SymplecticSpace(int genus);
  SymplecticSpace(int genus, IntMatrix gram);

  int genus() const { return genus_; }
  std::size_t dimension() const { return static_cast<std::size_t>(2 * genus_); }
  const IntMatrix& gram() const { return gram_; }
  Integer pairing(const IntVector& u, const IntVector& v) const;

 private:
  int genus_;
  IntMatrix gram_;
};

/// Standard pairing sum_i (u_{2i} v_{2i+1} - u_{2i+1} v_{2i}); works over any ring.
template <class T>
T omega(const std::vector<T>& u, const std::vector<T>& v) {
  if (u.size() != v.size() || u.size() % 2 != 0) {
    throw std::invalid_argument("omega: vectors must have equal even length");
  }
  T acc(0);
  for (std::size_t i = 0; i + 1 < u.size(); i += 2) acc += u[i] * v[i + 1] - u[i + 1] * v[i];
  return acc;
}

/// Standard basis vector: index 2i is e_i, 2i+1 is f_i.
IntVector unit_vector(int genus, std::size_t index);

bool is_indivisible(const IntVector& v);

/// Finite-rank subgroup of Z^{2g}, stored by a basis of linearly independent vectors.
class Sublattice {
 public:
  /// Throws DomainError("rank_deficient") if the vectors are dependent over Q.
  Sublattice(int genus, std::vector<IntVector> basis);

  static Sublattice full(int genus);

  int genus() const { return genus_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }

  /// 2g x r matrix whose columns are the basis vectors.
  IntMatrix basis_matrix() const;
  /// Canonical representative: nonzero rows of the row-style Hermite normal form.
  std::vector<IntVector> hermite_basis() const;
  /// Restricted Gram matrix B^T J B.
  IntMatrix gram() const;
  bool contains(const IntVector& v) const;

  friend bool operator==(const Sublattice& a, const Sublattice& b);

 private:
  int genus_;
  std::vector<IntVector> basis_;
};

Sublattice saturate(const Sublattice& s);
bool is_complete(const Sublattice& s);

/// |Pfaffian| of the restricted form; throws DomainError("not_symplectic_sublattice").
Integer determinant(const Sublattice& s);

struct AlternatingNormalForm {
  std::vector<Integer> divisors;   // d_1 | d_2 | ... | d_k, all positive
  std::vector<IntVector> basis;    // x_1, y_1, x_2, y_2, ... with w(x_i, y_i) = d_i
  IntMatrix change;                // r x r unimodular P with P^T G P block diagonal
};

/// Normal form of a nondegenerate integral alternating Gram matrix; `basis` holds the columns of P.
AlternatingNormalForm alternating_normal_form(const IntMatrix& gram);
AlternatingNormalForm alternating_normal_form(const Sublattice& s);

/// Integral 2g x 2g matrix A with A^T J A = J.
class SpMatrix {
 public:
  /// Validates the symplectic condition; throws DomainError("not_symplectic_matrix").
  explicit SpMatrix(IntMatrix entries);
  static SpMatrix identity(int genus);

  int genus() const { return static_cast<int>(entries_.rows() / 2); }
  const IntMatrix& entries() const { return entries_; }

  IntVector apply(const IntVector& v) const { return entries_ * v; }
  Sublattice apply(const Sublattice& s) const;
  SpMatrix inverse() const;

  friend SpMatrix operator*(const SpMatrix& a, const SpMatrix& b);
  friend bool operator==(const SpMatrix& a, const SpMatrix& b) { return a.entries_ == b.entries_; }

 private:
  struct Trusted {};
  SpMatrix(IntMatrix entries, Trusted) : entries_(std::move(entries)) {}
  IntMatrix entries_;
};

bool is_symplectic(const IntMatrix& a);

/// A in Sp(2g, Z) with A e_0 = v; throws DomainError("vector_not_primitive").
SpMatrix extend_to_symplectic_basis(const IntVector& v);

/// delta in Sp(2g, Z) with delta U = U2, for complete rank-2 symplectic sublattices of equal determinant.
SpMatrix map_rank2_sublattice(const Sublattice& u, const Sublattice& u2);

/// Same for complete rank-4 sublattices whose normal form has divisors (1, d).
SpMatrix map_rank4_sublattice(const Sublattice& u, const Sublattice& u2);

}  // namespace abelian
