#include "abelian/curve_algebra.hpp"

#include <algorithm>

namespace abelian {

void CanonicalCurve::check(const Differential& a) const {
  const auto expected = static_cast<std::size_t>(genus());
  if (a.coeffs.size() != expected) {
    throw DomainError("invalid_differential",
                      "differential needs " + std::to_string(expected) + " coefficients, got " +
                          std::to_string(a.coeffs.size()));
  }
}

Differential CanonicalCurve::basis_element(std::size_t i) const {
  Differential d{RatVector(static_cast<std::size_t>(genus()), Rational(0))};
  d.coeffs.at(i) = 1;
  return d;
}

// ---------------------------------------------------------------------------
// Hyperelliptic curves

HyperellipticCurve::HyperellipticCurve(Polynomial f) : f_(std::move(f)), genus_((f_.degree() - 1) / 2) {
  if (f_.degree() < 5) throw DomainError("invalid_genus", "y^2 = f needs deg f >= 5 for genus >= 2");
  if (!is_squarefree(f_)) throw DomainError("not_squarefree", "f has a repeated root");
}

Differential HyperellipticCurve::differential(const Polynomial& p) const {
  if (p.degree() > genus_ - 1) throw DomainError("invalid_differential", "deg p must be at most g-1");
  Differential d{RatVector(static_cast<std::size_t>(genus_), Rational(0))};
  for (int i = 0; i <= p.degree(); ++i) d.coeffs[static_cast<std::size_t>(i)] = p.coeff(i);
  return d;
}

Polynomial HyperellipticCurve::polynomial(const Differential& a) const {
  check(a);
  return Polynomial(a.coeffs);
}

RatVector HyperellipticCurve::multiply(const Differential& a, const Differential& b) const {
  const Polynomial q = polynomial(a) * polynomial(b);
  RatVector out(quadratic_dim(), Rational(0));
  for (int i = 0; i <= q.degree(); ++i) out[static_cast<std::size_t>(i)] = q.coeff(i);
  return out;
}

// ---------------------------------------------------------------------------
// Plane quartics

bool is_smooth_quartic(const TernaryForm& f) {
  const auto source = ternary_monomials(4);
  const auto target = ternary_monomials(7);
  std::map<TernaryForm::Exponent, std::size_t> row;
  for (std::size_t i = 0; i < target.size(); ++i) row[target[i]] = i;
  RatMatrix m(target.size(), 3 * source.size());
  std::size_t col = 0;
  for (int v = 0; v < 3; ++v) {
    const TernaryForm partial = f.partial(v);
    for (const auto& e : source) {
      for (const auto& [pe, c] : partial.terms()) m(row.at({pe[0] + e[0], pe[1] + e[1], pe[2] + e[2]}), col) += c;
      ++col;
    }
  }
  return rank(m) == target.size();
}

PlaneQuartic::PlaneQuartic(TernaryForm f) : f_(std::move(f)) {
  if (f_.is_zero() || f_.degree() != 4) throw DomainError("not_quartic", "form is not a nonzero quartic");
  if (!is_smooth_quartic(f_)) throw DomainError("singular_quartic", "quartic is singular");
}

Differential PlaneQuartic::line(const Rational& a, const Rational& b, const Rational& c) { return {{a, b, c}}; }

TernaryForm PlaneQuartic::linear_form(const Differential& a) {
  if (a.coeffs.size() != 3) throw DomainError("invalid_differential", "a line needs three coefficients");
  return TernaryForm::linear(a.coeffs[0], a.coeffs[1], a.coeffs[2]);
}

RatVector PlaneQuartic::multiply(const Differential& a, const Differential& b) const {
  const TernaryForm conic = linear_form(a) * linear_form(b);
  const auto monomials = ternary_monomials(2);
  RatVector out(monomials.size(), Rational(0));
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    auto it = conic.terms().find(monomials[i]);
    if (it != conic.terms().end()) out[i] = it->second;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Multiplication maps

namespace {

RatMatrix multiplication_matrix(const CanonicalCurve& c, const std::vector<Differential>& tau) {
  std::vector<RatVector> cols;
  for (const auto& t : tau) {
    c.check(t);
    for (int i = 0; i < c.genus(); ++i) cols.push_back(c.multiply(t, c.basis_element(static_cast<std::size_t>(i))));
  }
  return RatMatrix::from_columns(cols);
}

void require_independent(const CanonicalCurve& c, const std::vector<Differential>& tau) {
  if (tau.empty()) throw DomainError("wrong_dimension", "empty subspace");
  std::vector<RatVector> rows;
  for (const auto& t : tau) {
    c.check(t);
    rows.push_back(t.coeffs);
  }
  if (rank(RatMatrix::from_rows(rows)) != tau.size()) {
    throw DomainError("dependent_differentials", "differentials are linearly dependent");
  }
}

}  // namespace

std::size_t dividend_dim(const CanonicalCurve& c, const Differential& alpha) {
  c.check(alpha);
  if (alpha.is_zero()) throw DomainError("zero_differential", "zero differential");
  return rank(multiplication_matrix(c, {alpha}));
}

std::size_t multiplication_image_dim(const CanonicalCurve& c, const std::vector<Differential>& tau) {
  require_independent(c, tau);
  return rank(multiplication_matrix(c, tau));
}

std::size_t obscurant_dim(const CanonicalCurve& c, const std::vector<Differential>& tau) {
  return tau.size() * static_cast<std::size_t>(c.genus()) - multiplication_image_dim(c, tau);
}

std::string to_string(Linkage l) { return l == Linkage::coprime ? "coprime" : "linked"; }

Linkage classify(const CanonicalCurve& c, const std::vector<Differential>& tau) {
  if (tau.size() == 2) return obscurant_dim(c, tau) == 1 ? Linkage::coprime : Linkage::linked;
  if (tau.size() == 3) {
    const bool coprime = obscurant_dim(c, tau) == 3 && multiplication_image_dim(c, tau) == c.quadratic_dim();
    return coprime ? Linkage::coprime : Linkage::linked;
  }
  throw DomainError("wrong_dimension", "classification needs two or three differentials");
}

long isoperiodic_deformation_dim(const CanonicalCurve& c, const std::vector<Differential>& tau) {
  if (tau.size() != 2 && tau.size() != 3) {
    throw DomainError("wrong_dimension", "isoperiodic dimension needs two or three differentials");
  }
  return static_cast<long>(c.quadratic_dim()) - static_cast<long>(multiplication_image_dim(c, tau));
}

std::size_t noether_image_dim(const CanonicalCurve& c) {
  std::vector<RatVector> cols;
  const auto g = static_cast<std::size_t>(c.genus());
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t k = i; k < g; ++k) cols.push_back(c.multiply(c.basis_element(i), c.basis_element(k)));
  }
  return rank(RatMatrix::from_columns(cols));
}

OverlapDegree overlap_degree(const HyperellipticCurve& c, const Differential& a, const Differential& b) {
  const Polynomial pa = c.polynomial(a);
  const Polynomial pb = c.polynomial(b);
  if (pa.is_zero() || pb.is_zero()) throw DomainError("zero_differential", "zero differential");
  // Affine zeroes: each root of p off the branch locus is a pair of simple zeroes, a root on it a double zero.
  Polynomial common = gcd(pa, pb);
  Polynomial on_branch({Rational(1)});
  while (true) {
    const Polynomial g = gcd(common, c.f());
    if (g.degree() <= 0) break;
    on_branch = on_branch * g;
    common = Polynomial::divmod(common, g).first;
  }
  OverlapDegree out;
  out.branch = 2 * on_branch.degree();
  out.non_branch = 2 * common.degree();
  out.infinity = 2 * (c.genus() - 1 - std::max(pa.degree(), pb.degree()));
  return out;
}

std::vector<Differential> veronese_linked_pair(const HyperellipticCurve& c, const Rational& a, const Rational& b,
                                               const Rational& d) {
  if (c.genus() != 3) throw DomainError("invalid_genus", "the Veronese family lives in genus 3");
  if (a == b || a == d || b == d) throw DomainError("coincident_parameters", "a, b, d must be distinct");
  for (const auto& x : {a, b, d}) {
    if (c.f()(x) == 0) throw DomainError("parameter_at_branch_point", "parameter is a root of f");
  }
  return {c.differential(Polynomial::from_roots({a, b})), c.differential(Polynomial::from_roots({a, d}))};
}

// ---------------------------------------------------------------------------
// Sections and residues at the zeroes of alpha

namespace {

// Rational x-coordinates of the zeroes of alpha, each carrying two conjugate points.
RatVector simple_affine_zeroes(const HyperellipticCurve& c, const Polynomial& p, const std::string& repeated_msg) {
  if (p.is_zero()) throw DomainError("zero_differential", "zero differential");
  if (p.degree() < c.genus() - 1) throw DomainError("zero_at_infinity", "alpha vanishes at infinity");
  if (!is_squarefree(p)) throw DomainError("non_simple_zero", repeated_msg);
  RatVector roots = rational_roots(p);
  if (static_cast<int>(roots.size()) != p.degree()) {
    throw DomainError("irrational_zero_locus", "alpha has zeroes with irrational x-coordinate");
  }
  for (const auto& x : roots) {
    if (c.f()(x) == 0) throw DomainError("zero_at_branch_point", "alpha vanishes at a Weierstrass point");
  }
  return roots;
}

}  // namespace

std::vector<ZeroValue> section_values(const HyperellipticCurve& c, const Differential& gamma,
                                      const Differential& beta, const Differential& alpha) {
  const Polynomial pg = c.polynomial(gamma);
  const Polynomial pb = c.polynomial(beta);
  const RatVector xs = simple_affine_zeroes(c, c.polynomial(alpha), "alpha has a repeated zero");
  std::vector<ZeroValue> out;
  for (const auto& x : xs) {
    const Rational den = pb(x);
    if (den == 0) throw DomainError("beta_vanishes_at_zero", "beta vanishes at a zero of alpha");
    const Rational v = pg(x) / den;
    out.push_back({x, 1, v});
    out.push_back({x, -1, v});
  }
  return out;
}

std::vector<NumericZeroValue> section_values_numeric(const HyperellipticCurve& c, const Differential& gamma,
                                                     const Differential& beta, const Differential& alpha) {
  const Polynomial pa = c.polynomial(alpha);
  const Polynomial pg = c.polynomial(gamma);
  const Polynomial pb = c.polynomial(beta);
  if (pa.is_zero()) throw DomainError("zero_differential", "zero differential");
  if (pa.degree() < c.genus() - 1) throw DomainError("zero_at_infinity", "alpha vanishes at infinity");
  if (!is_squarefree(pa)) throw DomainError("non_simple_zero", "alpha has a repeated zero");
  if (gcd(pa, pb).degree() > 0) throw DomainError("beta_vanishes_at_zero", "beta vanishes at a zero of alpha");
  if (gcd(pa, c.f()).degree() > 0) throw DomainError("zero_at_branch_point", "alpha vanishes at a Weierstrass point");
  std::vector<NumericZeroValue> out;
  for (const auto& x : complex_roots(pa)) {
    const Complex v = pg(x) / pb(x);
    out.push_back({x, 1, v});
    out.push_back({x, -1, v});
  }
  return out;
}

bool skew_pairs_constant(const std::vector<ZeroValue>& values) {
  if (values.size() % 2 != 0) throw DomainError("unpaired_zeroes", "values must come in conjugate pairs");
  for (std::size_t i = 2; i < values.size(); i += 2) {
    if (values[i].value + values[i + 1].value != values[0].value + values[1].value) return false;
  }
  return true;
}

void SurdSum::add(const QuadraticSurd& s) {
  rational += s.a;
  if (s.b == 0) return;
  Rational& slot = irrational[s.radicand];
  slot += s.b;
  if (slot == 0) irrational.erase(s.radicand);
}

bool SurdSum::is_zero() const { return rational == 0 && irrational.empty(); }

std::vector<PointResidue> residues_of_quotient(const HyperellipticCurve& c, const QuadDifferential& omega,
                                               const Differential& alpha) {
  const int g = c.genus();
  if (omega.q.degree() > 2 * g - 2 || omega.r.degree() > g - 3) {
    throw DomainError("invalid_quadratic_differential", "quadratic differential exceeds the degree bounds");
  }
  const Polynomial p = c.polynomial(alpha);
  const Polynomial dp = p.derivative();
  // Res at (x_i, y) of (q + r y) dx / (p y) = r/p' + q y / (p' f)
  std::vector<PointResidue> out;
  for (const auto& x : simple_affine_zeroes(c, p, "higher-order zero unsupported in residue mode")) {
    const Rational d = dp(x);
    const Rational fx = c.f()(x);
    const Rational a = omega.r(x) / d;
    const Rational b = omega.q(x) / (d * fx);
    out.push_back({x, 1, {a, b, fx}});
    out.push_back({x, -1, {a, -b, fx}});
  }
  return out;
}

SurdSum residue_sum(const std::vector<PointResidue>& residues) {
  SurdSum s;
  for (const auto& r : residues) s.add(r.residue);
  return s;
}

QuadDifferential product(const HyperellipticCurve& c, const Differential& a, const Differential& b) {
  return {c.polynomial(a) * c.polynomial(b), Polynomial()};
}

SurdSum weighted_residue_sum(const HyperellipticCurve& c, const Differential& alpha, const Differential& beta,
                             const Differential& gamma, const Differential& delta) {
  const auto s = section_values(c, gamma, beta, alpha);
  const auto res = residues_of_quotient(c, product(c, beta, delta), alpha);
  SurdSum total;
  for (std::size_t i = 0; i < res.size(); ++i) {
    const auto& r = res[i].residue;
    total.add({s[i].value * r.a, s[i].value * r.b, r.radicand});
  }
  return total;
}

// ---------------------------------------------------------------------------
// Cross-ratios on plane quartics

Complex cross_ratio(Complex a, Complex b, Complex c, Complex d) { return ((a - c) * (b - d)) / ((b - c) * (a - d)); }

std::array<Complex, 6> anharmonic_orbit(Complex l) {
  const Complex one = 1;
  return {l, one - l, one / l, one / (one - l), l / (l - one), (l - one) / l};
}

bool in_anharmonic_orbit(Complex value, Complex lambda, double tolerance) {
  for (const auto& o : anharmonic_orbit(lambda)) {
    if (std::abs(value - o) <= static_cast<long double>(tolerance) * std::max(1.0L, std::abs(o))) return true;
  }
  return false;
}

CrossRatioReport quartic_cross_ratio(const PlaneQuartic& f, const Differential& alpha, const Differential& beta,
                                     const Differential& gamma, double tolerance) {
  const TernaryForm la = PlaneQuartic::linear_form(alpha);
  const TernaryForm lb = PlaneQuartic::linear_form(beta);
  const TernaryForm lg = PlaneQuartic::linear_form(gamma);
  if (alpha.is_zero() || beta.is_zero() || gamma.is_zero()) throw DomainError("zero_differential", "zero line");

  // Points P, Q spanning the alpha-line, with F(Q) != 0 so all four intersections are affine in t.
  const auto kernel = kernel_basis(RatMatrix::from_rows({alpha.coeffs}));
  auto point = [](const RatVector& v) { return std::array<Rational, 3>{v[0], v[1], v[2]}; };
  const auto p = point(kernel[0]);
  std::array<Rational, 3> q{};
  bool found = false;
  for (int k = 0; k <= 5 && !found; ++k) {
    for (std::size_t i = 0; i < 3; ++i) q[i] = kernel[1][i] + k * kernel[0][i];
    found = f.form()(q) != 0;
  }
  if (!found) throw std::logic_error("quartic vanishes on too many points of a line");

  const Polynomial phi = f.form().restrict_to_line(p, q);
  if (!is_squarefree(phi)) throw DomainError("non_simple_zeroes", "non-simple zeroes");

  auto check_nonvanishing = [&](const TernaryForm& l, const char* name) {
    const Rational lp = l(p), lq = l(q);
    if (lp == 0 && lq == 0) {
      throw DomainError(std::string(name) + "_vanishes_at_zero", std::string(name) + " vanishes on the alpha-line");
    }
    if (lq != 0 && phi(Rational(-lp / lq)) == 0) {
      throw DomainError(std::string(name) + "_vanishes_at_zero",
                        std::string(name) + " vanishes at an intersection point");
    }
  };
  check_nonvanishing(lb, "beta");
  check_nonvanishing(lg, "gamma");

  const Rational bp = lb(p), bq = lb(q), gp = lg(p), gq = lg(q);
  if (gp * bq - gq * bp == 0) throw DomainError("degenerate_quadruple", "degenerate quadruple");

  const auto roots = complex_roots(phi);
  if (roots.size() != 4) throw std::logic_error("restricted quartic lost degree");
  CrossRatioReport r;
  for (std::size_t i = 0; i < 4; ++i) {
    const Complex t = roots[i];
    r.parameters[i] = t;
    r.values[i] = (Complex(gp.get_d()) + t * Complex(gq.get_d())) / (Complex(bp.get_d()) + t * Complex(bq.get_d()));
  }
  r.b_points = cross_ratio(r.parameters[0], r.parameters[1], r.parameters[2], r.parameters[3]);
  r.b_forms = cross_ratio(r.values[0], r.values[1], r.values[2], r.values[3]);
  r.matches = in_anharmonic_orbit(r.b_forms, r.b_points, tolerance);
  return r;
}

}  // namespace abelian
