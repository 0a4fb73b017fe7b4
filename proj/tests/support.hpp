#pragma once

// Random input generators shared by the test binaries.

#include "germlab/binary_form.hpp"

#include <random>

namespace germlab {

using Rng = std::mt19937_64;

inline long random_int(Rng& rng, long bound) { return std::uniform_int_distribution<long>(-bound, bound)(rng); }

inline mpq_class random_rational(Rng& rng, long bound) {
  long den = std::uniform_int_distribution<long>(1, bound)(rng);
  mpq_class q(random_int(rng, bound), den);
  q.canonicalize();
  return q;
}

/// Random integer binary form with plain coefficients in [-bound, bound].
inline BinaryForm random_binary_form(Rng& rng, int degree, long bound) {
  std::vector<ExactScalar> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(random_int(rng, bound));
  return BinaryForm::from_coefficients(c);
}

/// Product of a random form of degree n-2 with the square of a random linear form.
inline BinaryForm random_form_with_square_factor(Rng& rng, int degree, long bound) {
  auto vars = binary_variables();
  Polynomial l(vars);
  l.add_term(Monomial({1, 0}), ExactScalar(random_int(rng, bound)));
  l.add_term(Monomial({0, 1}), ExactScalar(1 + std::abs(random_int(rng, bound))));
  Polynomial rest = random_binary_form(rng, degree - 2, bound).to_polynomial(vars);
  Polynomial p = l * l * rest;
  if (p.is_zero()) return BinaryForm(std::vector<ExactScalar>(static_cast<std::size_t>(degree) + 1));
  return BinaryForm::from_polynomial(p);
}

/// Product of random elementary matrices; determinant 1.
inline Matrix random_unimodular(Rng& rng, std::size_t n) {
  Matrix m = Matrix::identity(n);
  for (int step = 0; step < 4; ++step) {
    std::size_t i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    std::size_t j = std::uniform_int_distribution<std::size_t>(0, n - 2)(rng);
    if (j >= i) ++j;
    Matrix e = Matrix::identity(n);
    long k = random_int(rng, 2);
    e(i, j) = ExactScalar(k == 0 ? 1 : k);
    m = e * m;
  }
  return m;
}

}  // namespace germlab
