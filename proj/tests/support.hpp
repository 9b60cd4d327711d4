// Shared generators and oracles for the test binaries.
#pragma once

#include <random>
#include <vector>

#include "abelian/arith.hpp"
#include "abelian/matrix.hpp"
#include "abelian/symplectic_lattice.hpp"

namespace testing_support {

using namespace abelian;

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntVector random_vector(std::mt19937_64& rng, std::size_t n, long bound) {
  IntVector v(n);
  for (auto& x : v) x = uniform(rng, -bound, bound);
  return v;
}

inline Rational random_rational(std::mt19937_64& rng, long bound) {
  Rational q(Integer(uniform(rng, -bound, bound)), Integer(uniform(rng, 1, bound)));
  q.canonicalize();
  return q;
}

// Symplectic transvection x -> x + k w(x, v) v.
inline IntMatrix transvection(const IntVector& v, const Integer& k) {
  const std::size_t n = v.size();
  IntMatrix t = IntMatrix::identity(n);
  const int g = static_cast<int>(n / 2);
  for (std::size_t j = 0; j < n; ++j) {
    const Integer s = k * omega(unit_vector(g, j), v);
    for (std::size_t i = 0; i < n; ++i) t(i, j) += s * v[i];
  }
  return t;
}

// Product of random transvections: a random element of Sp(2g, Z), generated
// without touching the library's own Sp code.
inline IntMatrix random_symplectic(std::mt19937_64& rng, int g, int steps = 6) {
  const auto n = static_cast<std::size_t>(2 * g);
  IntMatrix a = IntMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    IntVector v = random_vector(rng, n, 1);
    if (is_zero(v)) v[0] = 1;
    a = transvection(v, uniform(rng, -1, 1) == 0 ? 1 : -1) * a;
  }
  return a;
}

// gcd of all k x k minors, by brute force over row/column subsets.
inline Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
  const std::size_t n = m.rows();
  Integer g = 0;
  std::vector<std::size_t> rows(k), cols(k);
  auto next = [n, k](std::vector<std::size_t>& c) {
    for (std::size_t i = k; i-- > 0;) {
      if (c[i] < n - k + i) {
        ++c[i];
        for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < k; ++i) rows[i] = i;
  do {
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    do {
      IntMatrix sub(k, k);
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) sub(r, c) = m(rows[r], cols[c]);
      }
      g = gcd(g, integer_determinant(sub));
    } while (next(cols));
  } while (next(rows));
  return g;
}

}  // namespace testing_support
