#include "abelian/matrix.hpp"

namespace abelian {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  }
  return out;
}

Integer integer_determinant(const IntMatrix& m) {
  const Rational det = determinant(to_rational(m));
  return det.get_num();
}

namespace {

// Applies [[s, t], [u, v]] to rows (a, b) of m.
void combine_rows(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                  const Integer& u, const Integer& v) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Integer x = m(a, c);
    Integer y = m(b, c);
    m(a, c) = s * x + t * y;
    m(b, c) = u * x + v * y;
  }
}

void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& k) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(target, c) += k * m(source, c);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace

IntegerEchelon hermite_with_transform(IntMatrix m) {
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      if (m(row, col) == 0) {
        m.swap_rows(row, i);
        u.swap_rows(row, i);
        continue;
      }
      const Integer a = m(row, col);
      const Integer b = m(i, col);
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const Integer ua = -b / g;
      const Integer va = a / g;
      combine_rows(m, row, i, s, t, ua, va);
      combine_rows(u, row, i, s, t, ua, va);
    }
    if (m(row, col) == 0) continue;
    if (m(row, col) < 0) {
      negate_row(m, row);
      negate_row(u, row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      const Integer q = floor_div(m(i, col), m(row, col));
      if (q == 0) continue;
      add_row_multiple(m, i, row, -q);
      add_row_multiple(u, i, row, -q);
    }
    ++row;
  }
  return {std::move(m), std::move(u), row};
}

IntMatrix hermite_rows(const IntMatrix& m) {
  auto ech = hermite_with_transform(m);
  IntMatrix out(ech.rank, m.cols());
  for (std::size_t r = 0; r < ech.rank; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = ech.echelon(r, c);
  }
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  // Rows of U with U m^T = H and a zero H-row are kernel vectors; U unimodular makes them a basis.
  const auto ech = hermite_with_transform(m.transpose());
  const std::size_t n = m.cols();
  IntMatrix kernel(n - ech.rank, n);
  for (std::size_t r = ech.rank; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) kernel(r - ech.rank, c) = ech.transform(r, c);
  }
  if (kernel.rows() == 0) return kernel;
  return hermite_rows(kernel);
}

}  // namespace abelian
