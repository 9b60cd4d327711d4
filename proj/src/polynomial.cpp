#include "abelian/polynomial.hpp"

#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <set>

namespace abelian {

Polynomial::Polynomial(RatVector coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(int degree, const Rational& c) {
  RatVector v(static_cast<std::size_t>(degree + 1), Rational(0));
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const RatVector& roots) {
  Polynomial p({Rational(1)});
  for (const auto& r : roots) p = p * Polynomial({Rational(-r), Rational(1)});
  return p;
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<long double> Polynomial::operator()(std::complex<long double> x) const {
  std::complex<long double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + static_cast<long double>(it->get_d());
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  RatVector d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return Rational(1 / leading()) * *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  RatVector c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RatVector c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[i + k] += a.coeffs_[i] * b.coeffs_[k];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  RatVector out;
  for (const auto& x : a.coeffs_) out.push_back(c * x);
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial rem = a;
  RatVector quot(static_cast<std::size_t>(std::max(0, a.degree() - b.degree() + 1)), Rational(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const Rational c = rem.leading() / b.leading();
    quot[static_cast<std::size_t>(shift)] = c;
    rem = rem - monomial(shift, c) * b;
  }
  return {Polynomial(std::move(quot)), rem};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = Polynomial::divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool is_squarefree(const Polynomial& p) { return !p.is_zero() && gcd(p, p.derivative()).degree() == 0; }

namespace {

std::vector<Integer> positive_divisors(const Integer& n) {
  const Integer m = abs(n);
  if (m > Integer("1000000000000")) throw DomainError("coefficients_too_large", "rational root search bound exceeded");
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= m; ++d) {
    if (divides(d, m)) {
      out.push_back(d);
      if (d * d != m) out.push_back(m / d);
    }
  }
  return out;
}

}  // namespace

RatVector rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("zero_polynomial", "zero polynomial has every root");
  const IntVector c = clear_denominators(p.coeffs());
  std::set<Rational> found;
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) found.insert(Rational(0));
  if (low + 1 < c.size()) {
    for (const auto& num : positive_divisors(c[low])) {
      for (const auto& den : positive_divisors(c.back())) {
        for (int sign : {1, -1}) {
          Rational r(Integer(sign * num), den);
          r.canonicalize();
          if (p(r) == 0) found.insert(r);
        }
      }
    }
  }
  return RatVector(found.begin(), found.end());
}

namespace {

constexpr unsigned kPolishBits = 256;

// Minimal complex arithmetic over mpf_class for root polishing.
struct BigComplex {
  mpf_class re{0, kPolishBits};
  mpf_class im{0, kPolishBits};
};

BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  const mpf_class n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

long double to_long_double(const mpf_class& x) {
  const double hi = x.get_d();
  const mpf_class rest = x - hi;
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

}  // namespace

std::vector<std::complex<long double>> complex_roots(const Polynomial& p) {
  if (p.degree() < 1) return {};
  Eigen::VectorXd coeffs(p.degree() + 1);
  const Rational lead = p.leading();
  for (int i = 0; i <= p.degree(); ++i) coeffs(i) = Rational(p.coeff(i) / lead).get_d();
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);

  std::vector<mpf_class> c, dc;
  for (int i = 0; i <= p.degree(); ++i) c.emplace_back(p.coeff(i), kPolishBits);
  for (int i = 1; i <= p.degree(); ++i) dc.emplace_back(p.coeff(i) * i, kPolishBits);
  auto eval = [](const std::vector<mpf_class>& cs, const BigComplex& z) {
    BigComplex acc;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
      acc = acc * z;
      acc.re += *it;
    }
    return acc;
  };
  const mpf_class eps("1e-70", kPolishBits);

  std::vector<std::complex<long double>> roots;
  for (Eigen::Index i = 0; i < solver.roots().size(); ++i) {
    BigComplex z;
    z.re = solver.roots()(i).real();
    z.im = solver.roots()(i).imag();
    for (int step = 0; step < 200; ++step) {
      const BigComplex d = eval(dc, z);
      if (d.re == 0 && d.im == 0) break;
      const BigComplex delta = eval(c, z) / d;
      z = z - delta;
      if (abs(delta.re) + abs(delta.im) <= eps * (1 + abs(z.re) + abs(z.im))) break;
    }
    roots.emplace_back(to_long_double(z.re), to_long_double(z.im));
  }
  return roots;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational c = p.coeff(i);
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    const Rational a = abs(c);
    if (a != 1 || i == 0) out += to_string(a);
    if (i > 0) out += (a != 1 ? "*x" : "x") + (i > 1 ? "^" + std::to_string(i) : std::string());
  }
  return out;
}

// ---------------------------------------------------------------------------

TernaryForm::TernaryForm(std::map<Exponent, Rational> terms) {
  bool first = true;
  for (auto& [e, c] : terms) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw DomainError("not_homogeneous", "negative exponent");
    if (c == 0) continue;
    const int d = e[0] + e[1] + e[2];
    if (first) {
      degree_ = d;
      first = false;
    } else if (d != degree_) {
      throw DomainError("not_homogeneous", "terms of different total degree");
    }
    terms_.emplace(e, c);
  }
}

TernaryForm TernaryForm::linear(const Rational& a, const Rational& b, const Rational& c) {
  return TernaryForm({{{1, 0, 0}, a}, {{0, 1, 0}, b}, {{0, 0, 1}, c}});
}

Rational TernaryForm::operator()(const std::array<Rational, 3>& p) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (int v = 0; v < 3; ++v) {
      for (int k = 0; k < e[static_cast<std::size_t>(v)]; ++k) m *= p[static_cast<std::size_t>(v)];
    }
    acc += m;
  }
  return acc;
}

std::complex<long double> TernaryForm::operator()(const std::array<std::complex<long double>, 3>& p) const {
  std::complex<long double> acc = 0;
  for (const auto& [e, c] : terms_) {
    std::complex<long double> m = static_cast<long double>(c.get_d());
    for (int v = 0; v < 3; ++v) {
      for (int k = 0; k < e[static_cast<std::size_t>(v)]; ++k) m *= p[static_cast<std::size_t>(v)];
    }
    acc += m;
  }
  return acc;
}

TernaryForm TernaryForm::partial(int variable) const {
  std::map<Exponent, Rational> out;
  const auto v = static_cast<std::size_t>(variable);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponent f = e;
    --f[v];
    out[f] += c * e[v];
  }
  TernaryForm t(std::move(out));
  if (t.is_zero()) t.degree_ = std::max(0, degree_ - 1);
  return t;
}

Polynomial TernaryForm::restrict_to_line(const std::array<Rational, 3>& p, const std::array<Rational, 3>& q) const {
  std::array<Polynomial, 3> lin;
  for (std::size_t v = 0; v < 3; ++v) lin[v] = Polynomial({p[v], q[v]});
  Polynomial acc;
  for (const auto& [e, c] : terms_) {
    Polynomial m({c});
    for (std::size_t v = 0; v < 3; ++v) {
      for (int k = 0; k < e[v]; ++k) m = m * lin[v];
    }
    acc = acc + m;
  }
  return acc;
}

TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
  std::map<TernaryForm::Exponent, Rational> out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out[{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}] += ca * cb;
  }
  TernaryForm t(std::move(out));
  if (t.is_zero()) t.degree_ = a.degree_ + b.degree_;
  return t;
}

std::vector<TernaryForm::Exponent> ternary_monomials(int degree) {
  std::vector<TernaryForm::Exponent> out;
  for (int i = degree; i >= 0; --i) {
    for (int j = degree - i; j >= 0; --j) out.push_back({i, j, degree - i - j});
  }
  return out;
}

}  // namespace abelian
