#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace abelian {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Error raised when an input violates a mathematical precondition.
/// The tag is a short stable identifier used by the CLI and the tests.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string tag, const std::string& message)
      : std::runtime_error(message), tag_(std::move(tag)) {}

  const std::string& tag() const noexcept { return tag_; }

 private:
  std::string tag_;
};

/// Parses "p", "-p" or "p/q" (whitespace not allowed). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
/// Floor division, remainder has the sign of the divisor.
Integer floor_div(const Integer& a, const Integer& b);
bool divides(const Integer& d, const Integer& a);

/// gcd of all entries (0 for the zero vector), always nonnegative.
Integer content(const IntVector& v);
/// Returns x with sum(v[i] * x[i]) == content(v).
IntVector bezout_coefficients(const IntVector& v);

/// Least common multiple of all denominators.
Integer common_denominator(const RatVector& v);
/// Multiplies by the common denominator; the result spans the same line.
IntVector clear_denominators(const RatVector& v);

RatVector to_rational(const IntVector& v);
bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

/// Exact field element a + b*i with rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(implicit)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(int r) : re(r) {}  // NOLINT(implicit)

  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
};

GaussianRational operator+(GaussianRational a, const GaussianRational& b);
GaussianRational operator-(GaussianRational a, const GaussianRational& b);
GaussianRational operator*(GaussianRational a, const GaussianRational& b);
GaussianRational operator/(GaussianRational a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a);
bool operator==(const GaussianRational& a, const GaussianRational& b);
inline bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

std::string to_string(const GaussianRational& z);

}  // namespace abelian
