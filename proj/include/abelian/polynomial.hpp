#pragma once

#include <array>
#include <complex>
#include <map>
#include <vector>

#include "abelian/arith.hpp"

namespace abelian {

/// Dense univariate polynomial over Q, coefficients from the constant term up.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RatVector coeffs);
  static Polynomial monomial(int degree, const Rational& c = 1);
  /// prod (x - r) over the given roots
  static Polynomial from_roots(const RatVector& roots);

  /// -1 for the zero polynomial
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const RatVector& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  std::complex<long double> operator()(std::complex<long double> x) const;

  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division: a = q b + r with deg r < deg b.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

 private:
  void trim();
  RatVector coeffs_;
};

/// Monic gcd (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
bool is_squarefree(const Polynomial& p);
/// Distinct rational roots (rational root test on the cleared integer polynomial).
RatVector rational_roots(const Polynomial& p);
/// Numerical roots: companion-matrix eigenvalues refined by Newton steps on the exact
/// coefficients in 256-bit floating point, rounded to long double.
std::vector<std::complex<long double>> complex_roots(const Polynomial& p);

std::string to_string(const Polynomial& p);

/// Homogeneous polynomial in x, y, z; exponent triples map to coefficients.
class TernaryForm {
 public:
  using Exponent = std::array<int, 3>;

  TernaryForm() = default;
  /// Throws DomainError("not_homogeneous") when the terms have different total degree.
  explicit TernaryForm(std::map<Exponent, Rational> terms);
  static TernaryForm linear(const Rational& a, const Rational& b, const Rational& c);

  int degree() const { return degree_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational operator()(const std::array<Rational, 3>& p) const;
  std::complex<long double> operator()(const std::array<std::complex<long double>, 3>& p) const;
  TernaryForm partial(int variable) const;
  /// F(P + t Q) as a polynomial in t.
  Polynomial restrict_to_line(const std::array<Rational, 3>& p, const std::array<Rational, 3>& q) const;

  friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b);

 private:
  std::map<Exponent, Rational> terms_;
  int degree_ = 0;
};

/// Monomials of degree d in x, y, z in lexicographic order (x^d first).
std::vector<TernaryForm::Exponent> ternary_monomials(int degree);

}  // namespace abelian
