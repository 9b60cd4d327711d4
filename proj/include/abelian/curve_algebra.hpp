#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "abelian/arith.hpp"
#include "abelian/matrix.hpp"
#include "abelian/polynomial.hpp"

namespace abelian {

/// Holomorphic 1-form as a coordinate vector in the curve's basis of H^0(K).
struct Differential {
  RatVector coeffs;
  bool is_zero() const { return abelian::is_zero(coeffs); }
};

/// A curve together with explicit bases of H^0(K) and H^0(K^2).
class CanonicalCurve {
 public:
  virtual ~CanonicalCurve() = default;
  virtual int genus() const = 0;
  /// dim H^0(K^2) = 3g - 3
  std::size_t quadratic_dim() const { return static_cast<std::size_t>(3 * genus() - 3); }
  /// Product of two 1-forms in the H^0(K^2) basis.
  virtual RatVector multiply(const Differential& a, const Differential& b) const = 0;
  /// Throws DomainError("invalid_differential") on a wrong-length coefficient vector.
  void check(const Differential& a) const;
  Differential basis_element(std::size_t i) const;
};

/// y^2 = f(x), deg f = 2g+1 or 2g+2. H^0(K) = <x^i dx/y : i < g>;
/// H^0(K^2) = <x^j dx^2/y^2 : j <= 2g-2> + <x^k y dx^2/y^2 : k <= g-3>.
class HyperellipticCurve : public CanonicalCurve {
 public:
  /// Throws DomainError("not_squarefree") or ("invalid_genus") for deg f < 5.
  explicit HyperellipticCurve(Polynomial f);

  int genus() const override { return genus_; }
  const Polynomial& f() const { return f_; }
  bool odd_degree() const { return f_.degree() % 2 == 1; }
  RatVector multiply(const Differential& a, const Differential& b) const override;

  Differential differential(const Polynomial& p) const;
  Polynomial polynomial(const Differential& a) const;

 private:
  Polynomial f_;
  int genus_;
};

/// (q(x) + r(x) y) dx^2 / y^2 on a hyperelliptic curve.
struct QuadDifferential {
  Polynomial q;
  Polynomial r;
};

/// Smooth plane quartic F(x, y, z) = 0; H^0(K) = linear forms, H^0(K^2) = conics.
class PlaneQuartic : public CanonicalCurve {
 public:
  /// Throws DomainError("not_quartic") or ("singular_quartic").
  explicit PlaneQuartic(TernaryForm f);

  int genus() const override { return 3; }
  const TernaryForm& form() const { return f_; }
  RatVector multiply(const Differential& a, const Differential& b) const override;

  static Differential line(const Rational& a, const Rational& b, const Rational& c);
  static TernaryForm linear_form(const Differential& a);

 private:
  TernaryForm f_;
};

/// Partials of F have no common zero: the degree-7 Macaulay matrix of (F_x, F_y, F_z) has full rank 36.
bool is_smooth_quartic(const TernaryForm& f);

std::size_t dividend_dim(const CanonicalCurve& c, const Differential& alpha);
/// Rank of tau (x) H^0(K) -> H^0(K^2).
std::size_t multiplication_image_dim(const CanonicalCurve& c, const std::vector<Differential>& tau);
/// Kernel dimension of tau (x) H^0(K) -> H^0(K^2). Throws DomainError("dependent_differentials").
std::size_t obscurant_dim(const CanonicalCurve& c, const std::vector<Differential>& tau);

enum class Linkage { coprime, linked };
std::string to_string(Linkage l);
/// Throws DomainError("wrong_dimension") unless tau has 2 or 3 elements.
Linkage classify(const CanonicalCurve& c, const std::vector<Differential>& tau);

/// Degree of the overlap divisor sum min(ord a, ord b), split by location.
struct OverlapDegree {
  int branch = 0;      // Weierstrass points (roots of f)
  int non_branch = 0;  // pairs of conjugate affine points
  int infinity = 0;
  int total() const { return branch + non_branch + infinity; }
};

OverlapDegree overlap_degree(const HyperellipticCurve& c, const Differential& a, const Differential& b);

/// <(x-a)(x-b) dx/y, (x-a)(x-d) dx/y> on a genus-3 curve.
std::vector<Differential> veronese_linked_pair(const HyperellipticCurve& c, const Rational& a, const Rational& b,
                                               const Rational& d);

/// (3g - 3) - dim of the image of tau (x) H^0(K).
long isoperiodic_deformation_dim(const CanonicalCurve& c, const std::vector<Differential>& tau);

/// Rank of Sym^2 H^0(K) -> H^0(K^2).
std::size_t noether_image_dim(const CanonicalCurve& c);

/// Value of a section at a zero of alpha; sheet is +1 or -1 for y = +-sqrt(f(x)).
struct ZeroValue {
  Rational x;
  int sheet = 1;
  Rational value;
};

/// gamma/beta at the 2g-2 zeroes of alpha, listed as conjugate pairs (+, -).
std::vector<ZeroValue> section_values(const HyperellipticCurve& c, const Differential& gamma,
                                      const Differential& beta, const Differential& alpha);

struct NumericZeroValue {
  std::complex<long double> x;
  int sheet = 1;
  std::complex<long double> value;
};

/// Same as section_values, for zero loci with irrational coordinates.
std::vector<NumericZeroValue> section_values_numeric(const HyperellipticCurve& c, const Differential& gamma,
                                                     const Differential& beta, const Differential& alpha);

/// True iff s(z_{2i}) + s(z_{2i+1}) takes the same value for every conjugate pair.
bool skew_pairs_constant(const std::vector<ZeroValue>& values);

/// a + b sqrt(radicand)
struct QuadraticSurd {
  Rational a;
  Rational b;
  Rational radicand;
};

struct PointResidue {
  Rational x;
  int sheet = 1;
  QuadraticSurd residue;
};

/// Exact sum of surds; irrational parts are grouped by the radicand as given.
struct SurdSum {
  Rational rational;
  std::map<Rational, Rational> irrational;
  void add(const QuadraticSurd& s);
  bool is_zero() const;
};

/// Residues of omega/alpha at the zeroes of alpha. Requires deg p_alpha = g-1 with simple
/// rational roots off the branch locus.
std::vector<PointResidue> residues_of_quotient(const HyperellipticCurve& c, const QuadDifferential& omega,
                                               const Differential& alpha);
SurdSum residue_sum(const std::vector<PointResidue>& residues);
QuadDifferential product(const HyperellipticCurve& c, const Differential& a, const Differential& b);

/// sum_i s_i Res_i(beta delta / alpha) with s = section_values(gamma, beta, alpha).
SurdSum weighted_residue_sum(const HyperellipticCurve& c, const Differential& alpha, const Differential& beta,
                             const Differential& gamma, const Differential& delta);

using Complex = std::complex<long double>;

/// ((a - c)(b - d)) / ((b - c)(a - d))
Complex cross_ratio(Complex a, Complex b, Complex c, Complex d);
std::array<Complex, 6> anharmonic_orbit(Complex lambda);
bool in_anharmonic_orbit(Complex value, Complex lambda, double tolerance);

struct CrossRatioReport {
  std::array<Complex, 4> parameters;  // t_i with z_i = P + t_i Q on the alpha-line
  std::array<Complex, 4> values;      // gamma(z_i) / beta(z_i)
  Complex b_forms;
  Complex b_points;
  bool matches = false;
};

/// Cross-ratio of gamma/beta at the four points where the alpha-line meets the quartic,
/// against the cross-ratio of the points themselves.
CrossRatioReport quartic_cross_ratio(const PlaneQuartic& f, const Differential& alpha, const Differential& beta,
                                     const Differential& gamma, double tolerance = 1e-9);

}  // namespace abelian
