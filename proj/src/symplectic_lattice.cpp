#include "abelian/symplectic_lattice.hpp"

#include <algorithm>
#include <optional>

namespace abelian {

IntMatrix standard_gram(int genus) {
  if (genus < 1) throw DomainError("invalid_genus", "genus must be positive");
  const auto n = static_cast<std::size_t>(2 * genus);
  IntMatrix j(n, n);
  for (std::size_t i = 0; i < n; i += 2) {
    j(i, i + 1) = 1;
    j(i + 1, i) = -1;
  }
  return j;
}

SymplecticSpace::SymplecticSpace(int genus) : SymplecticSpace(genus, standard_gram(genus)) {}

SymplecticSpace::SymplecticSpace(int genus, IntMatrix gram) : genus_(genus), gram_(std::move(gram)) {
  if (genus < 1) throw DomainError("invalid_genus", "genus must be positive");
  const auto n = dimension();
  if (gram_.rows() != n || gram_.cols() != n) {
    throw std::invalid_argument("gram matrix has wrong size");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_(i, i) != 0) throw std::invalid_argument("gram matrix has nonzero diagonal");
    for (std::size_t k = i + 1; k < n; ++k) {
      if (gram_(i, k) != -gram_(k, i)) throw std::invalid_argument("gram matrix is not alternating");
    }
  }
}

Integer SymplecticSpace::pairing(const IntVector& u, const IntVector& v) const {
  if (u.size() != dimension() || v.size() != dimension()) {
    throw std::invalid_argument("vector length does not match ambient dimension");
  }
  Integer acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t k = 0; k < v.size(); ++k) acc += u[i] * gram_(i, k) * v[k];
  }
  return acc;
}

IntVector unit_vector(int genus, std::size_t index) {
  IntVector v(static_cast<std::size_t>(2 * genus), 0);
  v.at(index) = 1;
  return v;
}

bool is_indivisible(const IntVector& v) {
  if (is_zero(v)) throw DomainError("zero_vector", "zero vector has no divisibility");
  return content(v) == 1;
}

// ---------------------------------------------------------------------------
// Sublattice

Sublattice::Sublattice(int genus, std::vector<IntVector> basis) : genus_(genus), basis_(std::move(basis)) {
  if (genus < 1) throw DomainError("invalid_genus", "genus must be positive");
  const auto n = static_cast<std::size_t>(2 * genus);
  for (const auto& b : basis_) {
    if (b.size() != n) throw std::invalid_argument("basis vector length does not match 2g");
  }
  if (!basis_.empty() && abelian::rank(to_rational(IntMatrix::from_rows(basis_))) != basis_.size()) {
    throw DomainError("rank_deficient", "basis vectors are linearly dependent");
  }
}

Sublattice Sublattice::full(int genus) {
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < static_cast<std::size_t>(2 * genus); ++i) basis.push_back(unit_vector(genus, i));
  return Sublattice(genus, std::move(basis));
}

IntMatrix Sublattice::basis_matrix() const {
  if (basis_.empty()) return IntMatrix(static_cast<std::size_t>(2 * genus_), 0);
  return IntMatrix::from_columns(basis_);
}

std::vector<IntVector> Sublattice::hermite_basis() const {
  if (basis_.empty()) return {};
  return hermite_rows(IntMatrix::from_rows(basis_)).row_list();
}

IntMatrix Sublattice::gram() const {
  const IntMatrix b = basis_matrix();
  return b.transpose() * standard_gram(genus_) * b;
}

bool Sublattice::contains(const IntVector& v) const {
  if (v.size() != static_cast<std::size_t>(2 * genus_)) return false;
  IntVector rest = v;
  for (const auto& row : hermite_basis()) {
    const auto pivot = static_cast<std::size_t>(
        std::find_if(row.begin(), row.end(), [](const Integer& x) { return x != 0; }) - row.begin());
    if (!divides(row[pivot], rest[pivot])) return false;
    const Integer q = rest[pivot] / row[pivot];
    for (std::size_t i = pivot; i < rest.size(); ++i) rest[i] -= q * row[i];
  }
  return is_zero(rest);
}

bool operator==(const Sublattice& a, const Sublattice& b) {
  return a.genus_ == b.genus_ && a.rank() == b.rank() && a.hermite_basis() == b.hermite_basis();
}

Sublattice saturate(const Sublattice& s) {
  const auto n = static_cast<std::size_t>(2 * s.genus());
  if (s.rank() == n) return Sublattice::full(s.genus());
  if (s.rank() == 0) return s;
  // Double orthogonal complement with respect to the dot product.
  const IntMatrix perp = integer_kernel(IntMatrix::from_rows(s.basis()));
  return Sublattice(s.genus(), integer_kernel(perp).row_list());
}

bool is_complete(const Sublattice& s) { return saturate(s) == s; }

Integer determinant(const Sublattice& s) {
  if (s.rank() % 2 != 0) throw DomainError("not_symplectic_sublattice", "odd rank sublattice");
  if (s.rank() == 0) return 1;
  const Integer det = integer_determinant(s.gram());
  if (det == 0) throw DomainError("not_symplectic_sublattice", "restricted form is degenerate");
  Integer root;
  mpz_sqrt(root.get_mpz_t(), Integer(abs(det)).get_mpz_t());
  return root;
}

// ---------------------------------------------------------------------------
// Alternating normal form

namespace {

Integer pair(const IntMatrix& g, const IntVector& p, const IntVector& q) {
  Integer acc = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    for (std::size_t k = 0; k < q.size(); ++k) acc += p[i] * g(i, k) * q[k];
  }
  return acc;
}

void axpy(IntVector& y, const Integer& a, const IntVector& x) {
  if (a == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

}  // namespace

AlternatingNormalForm alternating_normal_form(const IntMatrix& gram) {
  const std::size_t r = gram.rows();
  if (gram.cols() != r) throw std::invalid_argument("gram matrix must be square");
  if (r % 2 != 0) throw DomainError("not_symplectic_sublattice", "odd rank sublattice");
  std::vector<IntVector> p = IntMatrix::identity(r).column_list();

  AlternatingNormalForm out;
  for (std::size_t pos = 0; pos < r; pos += 2) {
    while (true) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      Integer best_abs;
      for (std::size_t i = pos; i < r; ++i) {
        for (std::size_t k = i + 1; k < r; ++k) {
          const Integer w = abs(pair(gram, p[i], p[k]));
          if (w != 0 && (!best || w < best_abs)) {
            best = {i, k};
            best_abs = w;
          }
        }
      }
      if (!best) throw DomainError("not_symplectic_sublattice", "restricted form is degenerate");
      auto [i, k] = *best;
      std::swap(p[pos], p[i]);
      if (k == pos) k = i;
      std::swap(p[pos + 1], p[k]);
      if (pair(gram, p[pos], p[pos + 1]) < 0) std::swap(p[pos], p[pos + 1]);
      const Integer d = pair(gram, p[pos], p[pos + 1]);

      bool restart = false;
      for (std::size_t l = pos + 2; l < r && !restart; ++l) {
        const Integer a = pair(gram, p[pos], p[l]);
        const Integer c = pair(gram, p[pos + 1], p[l]);
        if (!divides(d, a)) {
          axpy(p[l], -floor_div(a, d), p[pos + 1]);
          restart = true;
        } else if (!divides(d, c)) {
          axpy(p[l], floor_div(c, d), p[pos]);
          restart = true;
        } else {
          axpy(p[l], -(a / d), p[pos + 1]);
          axpy(p[l], c / d, p[pos]);
        }
      }
      if (restart) continue;

      for (std::size_t l = pos + 2; l < r && !restart; ++l) {
        for (std::size_t m = l + 1; m < r; ++m) {
          if (!divides(d, pair(gram, p[l], p[m]))) {
            axpy(p[pos], 1, p[l]);
            restart = true;
            break;
          }
        }
      }
      if (restart) continue;
      out.divisors.push_back(d);
      break;
    }
  }
  out.change = r == 0 ? IntMatrix() : IntMatrix::from_columns(p);
  out.basis = std::move(p);
  return out;
}

AlternatingNormalForm alternating_normal_form(const Sublattice& s) {
  auto nf = alternating_normal_form(s.gram());
  const IntMatrix b = s.basis_matrix();
  for (auto& v : nf.basis) v = b * v;
  return nf;
}

// ---------------------------------------------------------------------------
// Sp(2g, Z)

bool is_symplectic(const IntMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0 || a.rows() % 2 != 0) return false;
  const IntMatrix j = standard_gram(static_cast<int>(a.rows() / 2));
  return a.transpose() * j * a == j;
}

SpMatrix::SpMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (!is_symplectic(entries_)) throw DomainError("not_symplectic_matrix", "matrix does not preserve the form");
}

SpMatrix SpMatrix::identity(int genus) {
  return SpMatrix(IntMatrix::identity(static_cast<std::size_t>(2 * genus)), Trusted{});
}

Sublattice SpMatrix::apply(const Sublattice& s) const {
  std::vector<IntVector> image;
  for (const auto& b : s.basis()) image.push_back(entries_ * b);
  return Sublattice(s.genus(), std::move(image));
}

SpMatrix SpMatrix::inverse() const {
  // A^T J A = J gives A^{-1} = -J A^T J.
  const IntMatrix j = standard_gram(genus());
  IntMatrix inv = j * entries_.transpose() * j;
  for (std::size_t r = 0; r < inv.rows(); ++r) {
    for (std::size_t c = 0; c < inv.cols(); ++c) inv(r, c) = -inv(r, c);
  }
  return SpMatrix(std::move(inv), Trusted{});
}

SpMatrix operator*(const SpMatrix& a, const SpMatrix& b) {
  if (a.genus() != b.genus()) throw std::invalid_argument("genus mismatch in product");
  return SpMatrix(a.entries_ * b.entries_, SpMatrix::Trusted{});
}

namespace {

// blockdiag(I_{2(g-h)}, m) for m acting on the last 2h coordinates.
SpMatrix embed_tail(const SpMatrix& m, int genus) {
  const auto n = static_cast<std::size_t>(2 * genus);
  const std::size_t off = n - m.entries().rows();
  IntMatrix big = IntMatrix::identity(n);
  for (std::size_t r = 0; r < m.entries().rows(); ++r) {
    for (std::size_t c = 0; c < m.entries().cols(); ++c) big(off + r, off + c) = m.entries()(r, c);
  }
  return SpMatrix(std::move(big));
}

IntVector tail(const IntVector& v, std::size_t drop) {
  return IntVector(v.begin() + static_cast<std::ptrdiff_t>(drop), v.end());
}

}  // namespace

SpMatrix extend_to_symplectic_basis(const IntVector& v) {
  if (v.empty() || v.size() % 2 != 0) throw std::invalid_argument("vector must have even positive length");
  if (content(v) != 1) throw DomainError("vector_not_primitive", "vector is not primitive");
  const int g = static_cast<int>(v.size() / 2);

  // w(v, w) = sum c_k w_k with c = (-v1, v0, -v3, v2, ...); Bezout gives w(v, w) = 1.
  IntVector c(v.size());
  for (std::size_t i = 0; i < v.size(); i += 2) {
    c[i] = -v[i + 1];
    c[i + 1] = v[i];
  }
  const IntVector w = bezout_coefficients(c);

  std::vector<IntVector> columns{v, w};
  if (g > 1) {
    std::vector<IntVector> projected;
    for (std::size_t i = 0; i < v.size(); ++i) {
      IntVector x = unit_vector(g, i);
      const Integer wx = omega(w, x);
      const Integer vx = omega(v, x);
      axpy(x, wx, v);
      axpy(x, -vx, w);
      projected.push_back(std::move(x));
    }
    const Sublattice complement(g, hermite_rows(IntMatrix::from_rows(projected)).row_list());
    const auto nf = alternating_normal_form(complement);
    for (const auto& d : nf.divisors) {
      if (d != 1) throw std::logic_error("complement of a hyperbolic pair is not unimodular");
    }
    columns.insert(columns.end(), nf.basis.begin(), nf.basis.end());
  }
  return SpMatrix(IntMatrix::from_columns(columns));
}

namespace {

void require_same_genus(const Sublattice& u, const Sublattice& u2) {
  if (u.genus() != u2.genus()) throw DomainError("genus_mismatch", "sublattices live in different genera");
}

void require_complete(const Sublattice& u) {
  if (!is_complete(u)) throw DomainError("incomplete_sublattice", "sublattice is not complete");
}

// P with P U = span(e0, d f0 + e1), or the identity when g = 1 (then U = Z^2).
SpMatrix canonicalize_rank2(const Sublattice& u) {
  const int g = u.genus();
  const auto nf = alternating_normal_form(u);
  const Integer d = nf.divisors.front();
  if (g == 1) return SpMatrix::identity(1);

  SpMatrix p = extend_to_symplectic_basis(nf.basis[0]).inverse();
  IntVector y = p.apply(nf.basis[1]);

  IntVector rest = tail(y, 2);
  if (!is_zero(rest)) {
    const Integer c = content(rest);
    for (auto& x : rest) x /= c;
    p = embed_tail(extend_to_symplectic_basis(rest).inverse(), g) * p;
  }

  // Transvection fixing e0 with f0 -> f0 + f1 and x -> x + w(f1, x) e0 on the complement.
  IntMatrix t = IntMatrix::identity(static_cast<std::size_t>(2 * g));
  t(3, 1) = 1;
  t(0, 2) = -1;
  p = SpMatrix(std::move(t)) * p;

  y = p.apply(nf.basis[1]);
  const IntVector u_prime = tail(y, 2);
  if (content(u_prime) != 1) throw std::logic_error("residue after transvection is not primitive");
  p = embed_tail(extend_to_symplectic_basis(u_prime).inverse(), g) * p;

  IntVector y0 = unit_vector(g, 1);
  for (auto& x : y0) x *= d;
  y0[2] = 1;
  if (!(p.apply(u) == Sublattice(g, {unit_vector(g, 0), y0}))) {
    throw std::logic_error("rank-2 canonicalization failed");
  }
  return p;
}

SpMatrix canonicalize_rank4(const Sublattice& u) {
  const int g = u.genus();
  const auto nf = alternating_normal_form(u);
  if (nf.divisors[0] != 1) {
    throw DomainError("restriction_not_indivisible", "restricted form has first divisor > 1");
  }
  const Sublattice q(g, {nf.basis[0], nf.basis[1]});
  const Sublattice hyperbolic(g, {unit_vector(g, 0), unit_vector(g, 1)});
  const SpMatrix delta1 = map_rank2_sublattice(q, hyperbolic);

  // delta1 U = span(e0, f0) + R with R inside the complement of the first block.
  std::vector<IntVector> residue;
  for (std::size_t i = 2; i < 4; ++i) residue.push_back(tail(delta1.apply(nf.basis[i]), 2));
  const Sublattice r(g - 1, residue);
  return embed_tail(canonicalize_rank2(r), g) * delta1;
}

}  // namespace

SpMatrix map_rank2_sublattice(const Sublattice& u, const Sublattice& u2) {
  require_same_genus(u, u2);
  if (u.rank() != 2 || u2.rank() != 2) throw DomainError("wrong_rank", "rank-2 sublattices expected");
  require_complete(u);
  require_complete(u2);
  if (determinant(u) != determinant(u2)) throw DomainError("unequal_determinants", "determinants differ");
  return canonicalize_rank2(u2).inverse() * canonicalize_rank2(u);
}

SpMatrix map_rank4_sublattice(const Sublattice& u, const Sublattice& u2) {
  require_same_genus(u, u2);
  if (u.rank() != 4 || u2.rank() != 4) throw DomainError("wrong_rank", "rank-4 sublattices expected");
  require_complete(u);
  require_complete(u2);
  if (determinant(u) != determinant(u2)) throw DomainError("unequal_determinants", "determinants differ");
  return canonicalize_rank4(u2).inverse() * canonicalize_rank4(u);
}

}  // namespace abelian
