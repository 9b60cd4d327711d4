#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abelian/arith.hpp"
#include "abelian/matrix.hpp"
#include "abelian/symplectic_lattice.hpp"

namespace abelian {

/// Periods of a class on the standard symplectic basis e_0, f_0, ..., e_{g-1}, f_{g-1}.
struct CohomologyClass {
  int genus = 0;
  std::vector<GaussianRational> periods;

  CohomologyClass() = default;
  CohomologyClass(int g, std::vector<GaussianRational> p);

  RatVector real_part() const;
  RatVector imag_part() const;
  CohomologyClass conj() const;
  bool is_zero() const;
};

/// Subgroup of C = R^2 generated by finitely many Gaussian rationals.
struct PlanarLattice {
  std::size_t rank = 0;
  std::vector<GaussianRational> basis;  // Hermite-reduced, `rank` elements
};

GaussianRational omega(const CohomologyClass& a, const CohomologyClass& b);

/// w(Re a, Im a), i.e. (i/2) w(a, conj a).
Rational area(const CohomologyClass& c);
PlanarLattice period_group(const CohomologyClass& c);
/// Throws DomainError("degenerate_period_group") for rank < 2.
Rational covolume(const PlanarLattice& lattice);
/// Saturated integral lattice of span(Re a, Im a); throws DomainError("degenerate_real_part").
Sublattice real_lattice(const CohomologyClass& c);
Integer line_determinant(const CohomologyClass& c);

enum class Reason {
  realizable,
  area_not_positive,
  not_above_covolume,
  odd_determinant,
  below_genus_bound,
  criterion_not_applicable,
  presumed_dense,
  degenerate_periods,
};

std::string to_string(Reason r);

struct RealizabilityVerdict {
  bool realizable = false;
  Reason reason = Reason::area_not_positive;
  Rational area;
  std::size_t period_rank = 0;
  std::optional<Rational> covolume;
  std::optional<Integer> det;
};

/// Single-class decision: realizable iff area > 0 and area exceeds the covolume of the periods.
RealizabilityVerdict is_realizable_line(const CohomologyClass& c);

struct NumericVerdict {
  bool realizable = false;
  bool heuristic = false;  // true when the periods look dense and no lattice was found
  Reason reason = Reason::area_not_positive;
  double area = 0;
  std::optional<double> covolume;
  std::optional<long long> det;
};

/// Floating-point variant. Periods whose coordinates in a basis pair reconstruct as
/// rationals (error <= tolerance, denominator <= max_denominator) are treated as a lattice.
NumericVerdict is_realizable_line_numeric(int genus, const std::vector<std::complex<double>>& periods,
                                          double tolerance = 1e-9, long max_denominator = 10000);

/// h_jk = i w(t_j, conj t_k) positive definite; throws DomainError("dependent_classes").
bool hodge_riemann_check(const std::vector<CohomologyClass>& taus);
bool isotropy_check(const CohomologyClass& a, const CohomologyClass& b);

/// Rational J-invariant plane of U(tau) whose complexification meets tau.
struct SimplicityWitness {
  IntVector xi;
  IntVector eta;
};

struct PairVerdict {
  bool realizable = false;
  Reason reason = Reason::odd_determinant;
  Integer pfaffian;  // |Pf| of the restricted form on the saturated real lattice
  Integer det;       // self-intersection number, 2 |Pf|
  bool even = false;
  bool above_bound = false;
  std::optional<SimplicityWitness> witness;
};

/// Criterion on the determinant alone: det even and det >= 2g - 2.
PairVerdict elliptic_pair_criterion(const Integer& det, int genus);

/// Bounded-height search over U_Z for a rational complex line inside the pair.
std::optional<SimplicityWitness> find_split_witness(const CohomologyClass& a, const CohomologyClass& b,
                                                    int height = 10);

PairVerdict is_realizable_elliptic_pair(const CohomologyClass& a, const CohomologyClass& b, bool assume_simple,
                                        int height = 10);

/// (genus, node count) for every genus reachable with determinant det = 2n.
std::vector<std::pair<int, int>> severi_range(const Integer& det);

using RatMatrix2 = std::array<std::array<Rational, 2>, 2>;
CohomologyClass sl2_act(const RatMatrix2& m, const CohomologyClass& c);
/// Ambient action a -> A a; preserves w, the period group and the real lattice up to A.
CohomologyClass symplectic_act(const SpMatrix& a, const CohomologyClass& c);
CohomologyClass scale(const GaussianRational& lambda, const CohomologyClass& c);

struct TorusData {
  Sublattice lattice;     // U_Z
  GaussMatrix periods;    // k x 2k, coordinates of tau_j in the U_Z basis
};

TorusData torus_data(const std::vector<CohomologyClass>& taus);

/// dim of the isotropic Grassmannian minus dim of Gr(k, Omega T).
long polyperiod_dimension_gap(long g, long k);

}  // namespace abelian
