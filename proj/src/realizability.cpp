#include "abelian/realizability.hpp"

#include <cmath>
#include <limits>

namespace abelian {

CohomologyClass::CohomologyClass(int g, std::vector<GaussianRational> p) : genus(g), periods(std::move(p)) {
  if (g < 1) throw DomainError("invalid_genus", "genus must be positive");
  if (periods.size() != static_cast<std::size_t>(2 * g)) {
    throw DomainError("wrong_length", "a genus " + std::to_string(g) + " class needs " + std::to_string(2 * g) +
                                          " periods");
  }
}

RatVector CohomologyClass::real_part() const {
  RatVector out;
  for (const auto& z : periods) out.push_back(z.re);
  return out;
}

RatVector CohomologyClass::imag_part() const {
  RatVector out;
  for (const auto& z : periods) out.push_back(z.im);
  return out;
}

CohomologyClass CohomologyClass::conj() const {
  std::vector<GaussianRational> p;
  for (const auto& z : periods) p.push_back(z.conj());
  return {genus, std::move(p)};
}

bool CohomologyClass::is_zero() const {
  for (const auto& z : periods) {
    if (!z.is_zero()) return false;
  }
  return true;
}

GaussianRational omega(const CohomologyClass& a, const CohomologyClass& b) {
  if (a.genus != b.genus) throw DomainError("genus_mismatch", "classes live in different genera");
  return omega(a.periods, b.periods);
}

Rational area(const CohomologyClass& c) { return omega(c.real_part(), c.imag_part()); }

PlanarLattice period_group(const CohomologyClass& c) {
  RatVector all;
  for (const auto& z : c.periods) {
    all.push_back(z.re);
    all.push_back(z.im);
  }
  const Integer den = common_denominator(all);
  IntMatrix gens(c.periods.size(), 2);
  for (std::size_t i = 0; i < c.periods.size(); ++i) {
    gens(i, 0) = Rational(c.periods[i].re * den).get_num();
    gens(i, 1) = Rational(c.periods[i].im * den).get_num();
  }
  const IntMatrix h = hermite_rows(gens);
  PlanarLattice out;
  out.rank = h.rows();
  for (std::size_t r = 0; r < h.rows(); ++r) {
    Rational re(h(r, 0), den);
    Rational im(h(r, 1), den);
    re.canonicalize();
    im.canonicalize();
    out.basis.emplace_back(re, im);
  }
  return out;
}

Rational covolume(const PlanarLattice& lattice) {
  if (lattice.rank < 2) throw DomainError("degenerate_period_group", "period group has rank < 2");
  const auto& z1 = lattice.basis[0];
  const auto& z2 = lattice.basis[1];
  return abs(Rational(z1.re * z2.im - z1.im * z2.re));
}

Sublattice real_lattice(const CohomologyClass& c) {
  const RatVector re = c.real_part();
  const RatVector im = c.imag_part();
  if (rank(RatMatrix::from_rows({re, im})) < 2) {
    throw DomainError("degenerate_real_part", "real and imaginary parts are linearly dependent");
  }
  return saturate(Sublattice(c.genus, {clear_denominators(re), clear_denominators(im)}));
}

Integer line_determinant(const CohomologyClass& c) { return determinant(real_lattice(c)); }

std::string to_string(Reason r) {
  switch (r) {
    case Reason::realizable:
      return "realizable";
    case Reason::area_not_positive:
      return "area <= 0";
    case Reason::not_above_covolume:
      return "area not above covolume";
    case Reason::odd_determinant:
      return "odd determinant";
    case Reason::below_genus_bound:
      return "det < 2g-2";
    case Reason::criterion_not_applicable:
      return "criterion not applicable";
    case Reason::presumed_dense:
      return "presumed dense => realizable (heuristic)";
    case Reason::degenerate_periods:
      return "degenerate period group";
  }
  return "unknown";
}

RealizabilityVerdict is_realizable_line(const CohomologyClass& c) {
  if (c.genus < 2) throw DomainError("invalid_genus", "realizability needs genus >= 2");
  if (c.is_zero()) throw DomainError("zero_class", "the zero class is not a realizability query");

  RealizabilityVerdict v;
  v.area = area(c);
  const PlanarLattice periods = period_group(c);
  v.period_rank = periods.rank;
  if (periods.rank == 2) v.covolume = covolume(periods);
  if (v.area != 0) v.det = line_determinant(c);
  if (v.covolume && v.det && abs(v.area) != *v.det * *v.covolume) {
    throw std::logic_error("area differs from det * covolume");
  }
  if (v.area <= 0) {
    v.reason = Reason::area_not_positive;
    return v;
  }
  v.realizable = v.area > *v.covolume;
  v.reason = v.realizable ? Reason::realizable : Reason::not_above_covolume;
  return v;
}

namespace {

// Best rational approximation by continued fractions with denominator <= max_den.
std::optional<Rational> reconstruct(double x, double tol, long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  const double whole = std::floor(x);
  double frac = x - whole;
  long p0 = 1, q0 = 0, p1 = static_cast<long>(whole), q1 = 1;
  for (int iter = 0; iter < 64; ++iter) {
    const double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(approx - x) <= tol * std::max(1.0, std::abs(x))) {
      Rational q{Integer(p1), Integer(q1)};
      q.canonicalize();
      return q;
    }
    if (frac < 1e-15) break;
    const double inv = 1.0 / frac;
    const auto a = static_cast<long>(std::floor(inv));
    frac = inv - static_cast<double>(a);
    const long p2 = a * p1 + p0;
    const long q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  return std::nullopt;
}

}  // namespace

NumericVerdict is_realizable_line_numeric(int genus, const std::vector<std::complex<double>>& periods,
                                          double tolerance, long max_denominator) {
  if (genus < 2) throw DomainError("invalid_genus", "realizability needs genus >= 2");
  if (periods.size() != static_cast<std::size_t>(2 * genus)) {
    throw DomainError("wrong_length", "period vector length must be 2g");
  }
  NumericVerdict v;
  double scale = 0;
  for (std::size_t i = 0; i < periods.size(); i += 2) {
    v.area += periods[i].real() * periods[i + 1].imag() - periods[i + 1].real() * periods[i].imag();
    scale = std::max(scale, std::norm(periods[i]) + std::norm(periods[i + 1]));
  }
  if (scale == 0) throw DomainError("zero_class", "the zero class is not a realizability query");
  if (v.area <= tolerance * scale) {
    v.reason = Reason::area_not_positive;
    return v;
  }

  auto cross = [](std::complex<double> a, std::complex<double> b) { return a.real() * b.imag() - a.imag() * b.real(); };
  std::size_t bi = 0, bj = 1;
  double best = -1;
  for (std::size_t i = 0; i < periods.size(); ++i) {
    for (std::size_t j = i + 1; j < periods.size(); ++j) {
      const double c = std::abs(cross(periods[i], periods[j]));
      if (c > best) {
        best = c;
        bi = i;
        bj = j;
      }
    }
  }
  if (best <= tolerance * scale) {
    v.reason = Reason::degenerate_periods;
    return v;
  }

  // Coordinates of every period in the basis (z_i, z_j); rational coordinates mean a lattice.
  const auto z1 = periods[bi];
  const auto z2 = periods[bj];
  const double d = cross(z1, z2);
  std::vector<std::array<Rational, 2>> coords{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  for (const auto& p : periods) {
    const double s = cross(p, z2) / d;
    const double t = cross(z1, p) / d;
    const auto rs = reconstruct(s, tolerance, max_denominator);
    const auto rt = reconstruct(t, tolerance, max_denominator);
    if (!rs || !rt) {
      v.realizable = true;
      v.heuristic = true;
      v.reason = Reason::presumed_dense;
      return v;
    }
    coords.push_back({*rs, *rt});
  }
  RatVector flat;
  for (const auto& c : coords) flat.insert(flat.end(), c.begin(), c.end());
  const Integer den = common_denominator(flat);
  IntMatrix gens(coords.size(), 2);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    for (std::size_t k = 0; k < 2; ++k) gens(i, k) = Rational(coords[i][k] * den).get_num();
  }
  const IntMatrix h = hermite_rows(gens);
  const Rational index_ratio(h(0, 0) * h(1, 1), den * den);
  const double cov = std::abs(d) * index_ratio.get_d();
  v.covolume = cov;
  v.det = std::llround(v.area / cov);
  v.realizable = v.area > cov * (1 + tolerance);
  v.reason = v.realizable ? Reason::realizable : Reason::not_above_covolume;
  return v;
}

namespace {

GaussMatrix as_rows(const std::vector<CohomologyClass>& taus) {
  std::vector<std::vector<GaussianRational>> rows;
  for (const auto& t : taus) rows.push_back(t.periods);
  return GaussMatrix::from_rows(rows);
}

void require_common_genus(const std::vector<CohomologyClass>& taus) {
  for (const auto& t : taus) {
    if (t.genus != taus.front().genus) throw DomainError("genus_mismatch", "classes live in different genera");
  }
}

}  // namespace

bool hodge_riemann_check(const std::vector<CohomologyClass>& taus) {
  if (taus.empty() || taus.size() > 3) throw DomainError("wrong_count", "between one and three classes expected");
  require_common_genus(taus);
  if (rank(as_rows(taus)) != taus.size()) throw DomainError("dependent_classes", "classes are linearly dependent");
  const std::size_t k = taus.size();
  const GaussianRational i_unit(Rational(0), Rational(1));
  GaussMatrix h(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t l = 0; l < k; ++l) h(j, l) = i_unit * omega(taus[j], taus[l].conj());
  }
  for (std::size_t m = 1; m <= k; ++m) {
    GaussMatrix minor(m, m);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) minor(r, c) = h(r, c);
    }
    const GaussianRational det = determinant(minor);
    if (!det.is_real() || det.re <= 0) return false;
  }
  return true;
}

bool isotropy_check(const CohomologyClass& a, const CohomologyClass& b) { return omega(a, b).is_zero(); }

PairVerdict elliptic_pair_criterion(const Integer& det, int genus) {
  if (genus < 2) throw DomainError("invalid_genus", "elliptic pairs need genus >= 2");
  if (det <= 0) throw DomainError("invalid_determinant", "determinant must be positive");
  PairVerdict v;
  v.det = det;
  v.even = divides(2, det);
  v.above_bound = det >= 2 * genus - 2;
  v.realizable = v.even && v.above_bound;
  v.reason = !v.even ? Reason::odd_determinant : !v.above_bound ? Reason::below_genus_bound : Reason::realizable;
  return v;
}

namespace {

struct PairSetup {
  Sublattice lattice;
  RatMatrix real_map;  // 2g x 4: (l_re, l_im, m_re, m_im) -> Re(l a + m b)
  RatMatrix imag_map;  // 2g x 4: same coefficients -> Im(l a + m b)
};

PairSetup validate_pair(const CohomologyClass& a, const CohomologyClass& b) {
  if (a.genus != b.genus) throw DomainError("genus_mismatch", "classes live in different genera");
  if (!isotropy_check(a, b)) throw DomainError("not_isotropic", "w(a, b) is not zero");
  if (!hodge_riemann_check({a, b})) throw DomainError("not_positive", "pair is not Hodge-Riemann positive");
  const std::vector<RatVector> reals{a.real_part(), a.imag_part(), b.real_part(), b.imag_part()};
  if (rank(RatMatrix::from_rows(reals)) != 4) {
    throw DomainError("degenerate_real_part", "real part of the pair has rank < 4");
  }
  std::vector<IntVector> cleared;
  for (const auto& r : reals) cleared.push_back(clear_denominators(r));
  const std::size_t n = a.periods.size();
  RatMatrix re_map(n, 4), im_map(n, 4);
  for (std::size_t i = 0; i < n; ++i) {
    // (x + iy)(p + iq) = (xp - yq) + i(xq + yp)
    re_map(i, 0) = a.periods[i].re;
    re_map(i, 1) = -a.periods[i].im;
    re_map(i, 2) = b.periods[i].re;
    re_map(i, 3) = -b.periods[i].im;
    im_map(i, 0) = a.periods[i].im;
    im_map(i, 1) = a.periods[i].re;
    im_map(i, 2) = b.periods[i].im;
    im_map(i, 3) = b.periods[i].re;
  }
  return {saturate(Sublattice(a.genus, cleared)), std::move(re_map), std::move(im_map)};
}

std::optional<SimplicityWitness> witness_for(const PairSetup& setup, const CohomologyClass& a,
                                             const CohomologyClass& b, const IntVector& xi) {
  RatVector coeffs;
  if (!solve(setup.real_map, to_rational(xi), coeffs)) return std::nullopt;
  const RatVector eta_q = setup.imag_map * coeffs;
  const IntVector eta = clear_denominators(eta_q);
  if (omega(xi, eta) == 0) return std::nullopt;
  // span(a, b, xi, eta) must have rank < 4 for the plane to meet tau.
  std::vector<std::vector<GaussianRational>> rows{a.periods, b.periods};
  std::vector<GaussianRational> x, y;
  for (std::size_t i = 0; i < xi.size(); ++i) {
    x.emplace_back(Rational(xi[i]));
    y.emplace_back(Rational(eta[i]));
  }
  rows.push_back(std::move(x));
  rows.push_back(std::move(y));
  if (rank(GaussMatrix::from_rows(rows)) >= 4) return std::nullopt;
  return SimplicityWitness{xi, eta};
}

}  // namespace

std::optional<SimplicityWitness> find_split_witness(const CohomologyClass& a, const CohomologyClass& b, int height) {
  const PairSetup setup = validate_pair(a, b);
  const auto basis = setup.lattice.hermite_basis();
  for (long h = 1; h <= height; ++h) {
    std::vector<long> c(4, -h);
    while (true) {
      long top = 0;
      for (long x : c) top = std::max(top, std::abs(x));
      if (top == h) {
        IntVector xi(basis.front().size(), 0);
        for (std::size_t k = 0; k < 4; ++k) {
          for (std::size_t i = 0; i < xi.size(); ++i) xi[i] += c[k] * basis[k][i];
        }
        if (auto w = witness_for(setup, a, b, xi)) return w;
      }
      std::size_t k = 0;
      while (k < 4 && c[k] == h) c[k++] = -h;
      if (k == 4) break;
      ++c[k];
    }
  }
  return std::nullopt;
}

PairVerdict is_realizable_elliptic_pair(const CohomologyClass& a, const CohomologyClass& b, bool assume_simple,
                                        int height) {
  const PairSetup setup = validate_pair(a, b);
  const Integer pf = determinant(setup.lattice);
  PairVerdict v = elliptic_pair_criterion(2 * pf, a.genus);
  v.pfaffian = pf;
  if (!assume_simple) {
    v.witness = find_split_witness(a, b, height);
    if (v.witness) {
      v.realizable = false;
      v.reason = Reason::criterion_not_applicable;
    }
  }
  return v;
}

std::vector<std::pair<int, int>> severi_range(const Integer& det) {
  if (det <= 0) throw DomainError("invalid_determinant", "determinant must be positive");
  if (!divides(2, det)) throw DomainError("odd_determinant", "determinant must be even");
  const long n = Integer(det / 2).get_si();
  std::vector<std::pair<int, int>> out;
  for (long g = 2; g <= n + 1; ++g) out.emplace_back(static_cast<int>(g), static_cast<int>(n + 1 - g));
  return out;
}

CohomologyClass sl2_act(const RatMatrix2& m, const CohomologyClass& c) {
  if (m[0][0] * m[1][1] - m[0][1] * m[1][0] != 1) throw DomainError("not_unimodular", "matrix determinant is not 1");
  std::vector<GaussianRational> out;
  for (const auto& z : c.periods) out.emplace_back(m[0][0] * z.re + m[0][1] * z.im, m[1][0] * z.re + m[1][1] * z.im);
  return {c.genus, std::move(out)};
}

CohomologyClass symplectic_act(const SpMatrix& a, const CohomologyClass& c) {
  if (a.genus() != c.genus) throw DomainError("genus_mismatch", "matrix and class have different genera");
  std::vector<GaussianRational> out(c.periods.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (a.entries()(i, k) != 0) out[i] += GaussianRational(Rational(a.entries()(i, k))) * c.periods[k];
    }
  }
  return {c.genus, std::move(out)};
}

CohomologyClass scale(const GaussianRational& lambda, const CohomologyClass& c) {
  std::vector<GaussianRational> out;
  for (const auto& z : c.periods) out.push_back(lambda * z);
  return {c.genus, std::move(out)};
}

TorusData torus_data(const std::vector<CohomologyClass>& taus) {
  if (taus.empty() || taus.size() > 2) throw DomainError("wrong_count", "one or two classes expected");
  require_common_genus(taus);
  if (!hodge_riemann_check(taus)) throw DomainError("not_positive", "classes are not Hodge-Riemann positive");
  const std::size_t k = taus.size();
  std::vector<RatVector> reals;
  for (const auto& t : taus) {
    reals.push_back(t.real_part());
    reals.push_back(t.imag_part());
  }
  if (rank(RatMatrix::from_rows(reals)) != 2 * k) {
    throw DomainError("degenerate_real_part", "real part has rank below 2k");
  }
  std::vector<IntVector> cleared;
  for (const auto& r : reals) cleared.push_back(clear_denominators(r));
  Sublattice lattice = saturate(Sublattice(taus.front().genus, cleared));
  const auto basis = lattice.hermite_basis();
  lattice = Sublattice(lattice.genus(), basis);

  std::vector<std::vector<GaussianRational>> cols;
  for (const auto& b : basis) {
    std::vector<GaussianRational> col;
    for (const auto& x : b) col.emplace_back(Rational(x));
    cols.push_back(std::move(col));
  }
  const GaussMatrix b = GaussMatrix::from_columns(cols);
  GaussMatrix m(k, 2 * k);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<GaussianRational> coords;
    if (!solve(b, taus[j].periods, coords)) throw std::logic_error("class outside its real lattice");
    for (std::size_t l = 0; l < 2 * k; ++l) m(j, l) = coords[l];
  }
  GaussMatrix stacked(2 * k, 2 * k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t l = 0; l < 2 * k; ++l) {
      stacked(j, l) = m(j, l);
      stacked(k + j, l) = m(j, l).conj();
    }
  }
  if (rank(stacked) != 2 * k) throw DomainError("degenerate_real_part", "tau meets its conjugate");
  return {std::move(lattice), std::move(m)};
}

long polyperiod_dimension_gap(long g, long k) {
  if (k < 1 || k > g) throw DomainError("invalid_dimension", "need 1 <= k <= g");
  const long isotropic = 2 * g * k - (3 * k * k - k) / 2;
  const long grassmannian = 3 * g - 3 + k * (g - k);
  return isotropic - grassmannian;
}

}  // namespace abelian
