#include "doctest.h"

#include "germlab/binary_form.hpp"
#include "germlab/parser.hpp"
#include "support.hpp"

using namespace germlab;

TEST_CASE("scalar canonical form and quadratic field") {
  ExactScalar a(6, -4);
  CHECK(a.to_string() == "-3/2");
  ExactScalar q = ExactScalar::quadratic(3, 5, 7);
  CHECK((q * q.conjugate()) == ExactScalar(mpq_class(9 - 7 * 25)));
  CHECK(ExactScalar::parse("1/2 - 3/4*sqrt(7)") == ExactScalar::quadratic(mpq_class(1, 2), mpq_class(-3, 4), 7));
  CHECK(ExactScalar::parse(q.to_string()) == q);
  CHECK_THROWS_AS(ExactScalar::quadratic(0, 1, 7) + ExactScalar::quadratic(0, 1, 5), ScalarContextError);
  CHECK((q * q.inverse()).is_one());
  CHECK(ExactScalar::quadratic(-5, 2, 7).sign() == 1);
  CHECK(ExactScalar::quadratic(-6, 2, 7).sign() == -1);
}

TEST_CASE("quadratic field norm over random elements") {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    mpq_class p = random_rational(rng, 50), r = random_rational(rng, 50);
    if (r == 0) continue;
    ExactScalar x = ExactScalar::quadratic(p, r, 7);
    CHECK((x * x.conjugate()) == ExactScalar(mpq_class(p * p - 7 * r * r)));
  }
}

TEST_CASE("polynomial arithmetic") {
  auto p = parse_form("(z1 + z2)*(z1 - z2)");
  CHECK(p == parse_form("z1^2 - z2^2"));
  auto zero = Polynomial(p.variables());
  CHECK(p + zero == p);
  ParseOptions with_s;
  with_s.parameters = {"s"};
  auto f = parse_form("z1^5 + s*z1^4*z2", with_s);
  CHECK(f * Polynomial::constant(f.variables(), 1) == f);
  CHECK_THROWS_AS(p + parse_form("x^2"), PolynomialError);
}

TEST_CASE("parser round trip and errors") {
  ParseOptions field;
  field.radicand = 7;
  auto p = parse_form("z1^6+18z1^5*z2+40(1-2r)z1^3z2^3+32(115-41r)z2^6", field);
  CHECK(parse_form(p.to_string(), field) == p);
  auto f = parse_form("z1^5 + z1^4*z2 + z1^3*z2^2 + z2^5");
  CHECK(f.term_count() == 4);
  CHECK(parse_form("x^6 - y^6").variable_count() == 2);
  CHECK_THROWS_AS(parse_form("z1 + w"), ParseError);
  CHECK_THROWS_AS(parse_form("z1 +"), ParseError);
  CHECK_THROWS_AS(parse_form("r*z1"), ParseError);
  CHECK(parse_form("1/2 z1^2 - 3/4*z2^2").to_string() == "1/2*z1^2 - 3/4*z2^2");
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    auto q = random_binary_form(rng, 3 + i % 6, 20).to_polynomial(binary_variables());
    CHECK(parse_form(q.to_string()) == q);
  }
}

TEST_CASE("linear change") {
  auto p = parse_form("z1^4*z2^2");
  CHECK(linear_change(p, Matrix::identity(2)) == p);
  CHECK(linear_change(p, Matrix::from_integers({{0, 1}, {1, 0}})) == parse_form("z1^2*z2^4"));
  Matrix lam = Matrix::from_integers({{3, 0}, {0, 3}});
  auto q = parse_form("z1^4 + 5*z1^2*z2^2 + z2^4");
  CHECK(linear_change(q, lam) == q.scaled(81));
  CHECK_THROWS_AS(linear_change(p, Matrix::from_integers({{1, 2}, {2, 4}})), SingularMatrix);
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    Matrix a = random_unimodular(rng, 2), b = random_unimodular(rng, 2);
    auto f = random_binary_form(rng, 5, 9).to_polynomial(binary_variables());
    CHECK(linear_change(linear_change(f, a), b) == linear_change(f, a * b));
  }
}

TEST_CASE("resultant by hand-expanded Sylvester determinants") {
  // Sylvester matrix of (1, 0, -1) and (2, 0): rows (1 0 -1), (2 0 0), (0 2 0).
  auto p = parse_form("z1^2 - z2^2");
  CHECK(resultant(p, parse_form("2*z1")) == ExactScalar(-4));
  // (a z1 + b z2, c z1 + d z2) -> a d - b c.
  CHECK(resultant(std::vector<ExactScalar>{2, 3}, std::vector<ExactScalar>{5, 7}) == ExactScalar(2 * 7 - 3 * 5));
  auto f = parse_form("z1^3 - 2*z1*z2^2 + z2^3");
  CHECK(resultant(f, f).is_zero());
}

TEST_CASE("discriminant normalization") {
  CHECK(discriminant(BinaryForm::from_polynomial(parse_form("z1^5 + z2^5"))) == ExactScalar(1));
  for (long t = -3; t <= 3; ++t) {
    auto ft = BinaryForm::from_polynomial(parse_form("z1^4*z2 + " + std::to_string(t) + "*z1^3*z2^2 + z2^5"));
    CHECK(discriminant(ft) == ExactScalar(mpq_class(256 - 27 * t * t * t * t, 3125)));
  }
  for (long s = -2; s <= 2; ++s) {
    for (long t = -2; t <= 2; ++t) {
      auto f = BinaryForm::from_polynomial(parse_form("z1^5 + " + std::to_string(s) + "*z1^4*z2 + " +
                                                      std::to_string(t) + "*z1^3*z2^2 + z2^5"));
      long num = 256 * s * s * s * s * s - 1600 * s * s * s * t - 27 * s * s * t * t * t * t + 2250 * s * t * t +
                 108 * t * t * t * t * t + 3125;
      CHECK(discriminant(f) == ExactScalar(mpq_class(num, 3125)));
    }
  }
  CHECK(discriminant(BinaryForm::from_polynomial(parse_form("z1^4*z2^2"))).is_zero());
  // f0 = z1^4 z2 + z2^5 has a5 = 0; the sheared value agrees with 5^5 a5 Delta after the shear.
  auto f0 = BinaryForm::from_polynomial(parse_form("z1^4*z2 + z2^5"));
  auto sheared = f0.linear_change(Matrix::from_integers({{1, 0}, {1, 1}}));
  auto poly = sheared.to_polynomial(binary_variables());
  CHECK(resultant(poly, poly.derivative(0)) == ExactScalar(3125) * sheared.a(5) * discriminant(f0));
}

TEST_CASE("multiplicity patterns") {
  auto pattern = [](const char* text) { return multiplicity_pattern(BinaryForm::from_polynomial(parse_form(text))); };
  CHECK(pattern("z1^4*z2^2") == std::vector<int>{4, 2});
  CHECK(pattern("z1^5*z2") == std::vector<int>{5, 1});
  CHECK(pattern("z1^6 + z2^6") == std::vector<int>{1, 1, 1, 1, 1, 1});
  CHECK(pattern("z1^2*z2^2*(z1+z2)*(z1-z2)") == std::vector<int>{2, 2, 1, 1});
  CHECK(is_square_free(BinaryForm::from_polynomial(parse_form("z1*(z1^5 + z2^5)"))));
  CHECK_FALSE(is_square_free(BinaryForm::from_polynomial(parse_form("z1^3*z2^3"))));
  CHECK_FALSE(is_square_free(BinaryForm(std::vector<ExactScalar>(7))));
}

TEST_CASE("discriminant vanishes exactly on repeated roots") {
  Rng rng(2024);
  int degenerate = 0;
  for (int i = 0; i < 200; ++i) {
    int n = 3 + i % 6;
    BinaryForm q = i % 3 == 0 ? random_form_with_square_factor(rng, n, 4) : random_binary_form(rng, n, 4);
    if (q.is_zero()) continue;
    auto pattern = multiplicity_pattern(q);
    bool repeated = std::any_of(pattern.begin(), pattern.end(), [](int m) { return m > 1; });
    CHECK(discriminant(q).is_zero() == repeated);
    degenerate += repeated ? 1 : 0;
  }
  CHECK(degenerate > 20);
}

TEST_CASE("discriminant is unimodular invariant") {
  Rng rng(17);
  for (int i = 0; i < 30; ++i) {
    BinaryForm q = random_binary_form(rng, 3 + i % 6, 6);
    Matrix c = random_unimodular(rng, 2);
    CHECK(discriminant(q.linear_change(c.inverse())) == discriminant(q));
  }
}
