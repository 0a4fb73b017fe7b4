#include "doctest.h"

#include "germlab/associated.hpp"
#include "germlab/parser.hpp"
#include "support.hpp"

using namespace germlab;

namespace {

Polynomial w(const std::string& text, std::size_t m = 2) { return parse_polynomial(text, form_variables(m)); }

std::string q_t(long t) { return "z1^4 + " + std::to_string(t) + "*z1^2*z2^2 + z2^4"; }

}  // namespace

TEST_CASE("buchberger small ideals") {
  auto vars = binary_variables();
  auto g = buchberger({parse_polynomial("z1", vars), parse_polynomial("z2", vars)});
  REQUIRE(g.elements().size() == 2);
  CHECK(g.elements()[0] == parse_polynomial("z1", vars));
  auto fermat = buchberger(jacobian(parse_form("z1^5 + z2^5")));
  REQUIRE(fermat.elements().size() == 2);
  CHECK(fermat.elements()[0] == parse_form("z1^4"));
  CHECK(fermat.elements()[1] == parse_form("z2^4"));
  auto f11 = buchberger(jacobian(parse_form("z1^5 + z1^4*z2 + z1^3*z2^2 + z2^5")));
  CHECK(is_groebner(f11));
  CHECK(is_reduced(f11));
  CHECK(standard_monomials(f11).size() == 16);
}

TEST_CASE("standard monomials") {
  auto box = standard_monomials(buchberger(jacobian(parse_form("z1^5 + z2^5"))));
  REQUIRE(box.size() == 16);
  for (const auto& m : box) CHECK((m[0] <= 3 && m[1] <= 3));
  auto cubic = standard_monomials(buchberger(jacobian(parse_form("z1^3 + z2^3 + z3^3"))));
  CHECK(cubic.size() == 8);
  CHECK_THROWS_AS(standard_monomials(buchberger(jacobian(parse_form("z1^4*z2^2")))), InfiniteQuotient);
}

TEST_CASE("normal forms") {
  auto g = buchberger(jacobian(parse_form("z1^5 + z1^4*z2 + 2*z1^3*z2^2 + z2^5")));
  auto vars = g.variables();
  CHECK(normal_form(Polynomial::constant(vars, 1), g) == Polynomial::constant(vars, 1));
  auto fermat = buchberger(jacobian(parse_form("z1^5 + z2^5")));
  CHECK(normal_form(parse_form("z1^3*z2^3"), fermat) == parse_form("z1^3*z2^3"));
  Rng rng(9);
  for (int i = 0; i < 20; ++i) {
    Polynomial combo(vars);
    for (const auto& gen : g.elements()) combo += gen * random_binary_form(rng, i % 4, 5).to_polynomial(vars);
    CHECK(normal_form(combo, g).is_zero());
    auto p = random_binary_form(rng, 3 + i % 6, 7).to_polynomial(vars);
    auto r = normal_form(p, g);
    CHECK(normal_form(r, g) == r);
  }
}

TEST_CASE("lex and graded-lex staircases agree") {
  Rng rng(4);
  for (int n : {4, 5, 6}) {
    for (int k = 0; k < 3; ++k) {
      BinaryForm q = random_binary_form(rng, n, 5);
      if (!is_square_free(q)) continue;
      auto p = q.to_polynomial(binary_variables());
      auto lex = standard_monomials(buchberger(jacobian(p)));
      auto grlex = standard_monomials(buchberger(jacobian(p.with_order(MonomialOrder::GradedLex))));
      CHECK(lex.size() == static_cast<std::size_t>((n - 1) * (n - 1)));
      CHECK(lex.size() == grlex.size());
    }
  }
  auto c = parse_form("z1^3 + z2^3 + z3^3 + 5*z1*z2*z3");
  CHECK(standard_monomials(buchberger(jacobian(c.with_order(MonomialOrder::GradedLex)))).size() == 8);
  CHECK(standard_monomials(buchberger(jacobian(c))).size() == 8);
}

TEST_CASE("milnor algebra structure") {
  QuotientAlgebra fermat(parse_form("z1^5 + z2^5"));
  CHECK(fermat.dimension() == 16);
  CHECK(fermat.nil_index() == 6);
  CHECK(fermat.socle() == Monomial({3, 3}));
  QuotientAlgebra cubic(parse_form("z1^3 + z2^3 + z3^3"));
  CHECK(cubic.dimension() == 8);
  CHECK(cubic.nil_index() == 3);
  CHECK(cubic.socle() == Monomial({1, 1, 1}));
  for (long t : {0L, 1L, 3L, -5L}) {
    QuotientAlgebra quartic(parse_form(q_t(t)));
    CHECK(quartic.dimension() == 9);
    CHECK(quartic.nil_index() == 4);
  }
  CHECK_THROWS_AS(QuotientAlgebra(parse_form(q_t(2))), InfiniteQuotient);
}

TEST_CASE("quotient multiplication") {
  QuotientAlgebra a(parse_form("z1^5 + z2^5"));
  auto z13 = a.element_of(parse_form("z1^3"));
  auto z23 = a.element_of(parse_form("z2^3"));
  CHECK(a.multiply(z13, z23) == a.basis_element(a.socle_index()));
  CHECK(a.multiply(a.variable_class(0), a.basis_element(a.socle_index())) == a.zero());
  Rng rng(8);
  QuotientAlgebra b(parse_form("z1^5 + 2*z1^4*z2 - z1^3*z2^2 + z2^5"));
  auto random_element = [&]() {
    AlgebraElement e = b.zero();
    for (auto& c : e) c = ExactScalar(random_rational(rng, 5));
    return e;
  };
  for (int i = 0; i < 10; ++i) {
    auto x = random_element(), y = random_element(), z = random_element();
    CHECK(b.multiply(x, b.unit()) == x);
    CHECK(b.multiply(x, y) == b.multiply(y, x));
    CHECK(b.multiply(b.multiply(x, y), z) == b.multiply(x, b.multiply(y, z)));
  }
}

TEST_CASE("powers of the maximal ideal") {
  QuotientAlgebra a(parse_form("z1^5 + z2^5"));
  CHECK(a.power_of_maximal_ideal(a.nil_index()).size() == 1);
  CHECK(a.power_of_maximal_ideal(a.nil_index() + 1).empty());
  CHECK(a.power_of_maximal_ideal(1).size() == 15);
}

TEST_CASE("gorenstein pairing") {
  CHECK(QuotientAlgebra(parse_form(q_t(1))).gorenstein_pairing_holds());
  CHECK(QuotientAlgebra(parse_form("z1^5 + z1^4*z2 + z1^3*z2^2 + z2^5")).gorenstein_pairing_holds());
  CHECK(QuotientAlgebra(parse_form("2*z1^6 + 18*z1^5*z2 + 10*z1^3*z2^3 - z2^6")).gorenstein_pairing_holds());
  CHECK(QuotientAlgebra(parse_form("z1^3 + z2^3 + z3^3 + z1*z2*z3")).gorenstein_pairing_holds());
}

TEST_CASE("nil-polynomial") {
  QuotientAlgebra a(parse_form("z1^4 + z2^4"));
  NilPolynomial p(a);
  std::vector<ExactScalar> origin(p.coordinates().size());
  CHECK(p.polynomial().evaluate(origin).is_zero());
  CHECK(p.polynomial().total_degree() == 4);
  CHECK(p.polynomial().homogeneous_component(0).is_zero());
  CHECK(p.polynomial().homogeneous_component(1).is_zero());
  CHECK(proportional(p.top_form(), w("-12*w1^2*w2^2")).has_value());

  // P^[2] is the socle pairing.
  auto quadratic = p.component(2);
  std::size_t k = p.coordinates().size();
  Matrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (const auto& [idx, c] : a.product(p.coordinates()[i], p.coordinates()[j])) {
        if (idx == a.socle_index()) gram(i, j) = c / ExactScalar(2);
      }
    }
  }
  Polynomial expected(quadratic.variables(), quadratic.order());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      expected += Polynomial::variable(quadratic.variables(), i, quadratic.order()) *
                  Polynomial::variable(quadratic.variables(), j, quadratic.order()).scaled(gram(i, j));
    }
  }
  CHECK(quadratic == expected);
  CHECK(!gram.determinant().is_zero());
}

TEST_CASE("nil-polynomial components descend") {
  QuotientAlgebra a(parse_form("z1^5 + z2^5"));
  NilPolynomial p(a);
  int nu = a.nil_index();
  for (int s = 2; s <= nu; ++s) {
    auto comp = p.component(s);
    for (const auto& [m, c] : comp.terms()) {
      for (std::size_t k = 0; k < p.coordinates().size(); ++k) {
        if (m[k] > 0) CHECK(a.grading(p.coordinates()[k]) <= nu + 1 - s);
      }
    }
  }
  auto top = p.component(nu);
  for (const auto& [m, c] : top.terms()) {
    for (std::size_t k = 0; k < p.coordinates().size(); ++k) {
      if (m[k] > 0) CHECK(a.grading(p.coordinates()[k]) == 1);
    }
  }
}

TEST_CASE("second socle functional gives the same top form up to scale") {
  QuotientAlgebra a(parse_form("z1^5 + 3*z1^4*z2 - z1^3*z2^2 + z2^5"));
  std::vector<ExactScalar> omega(a.dimension());
  omega[a.socle_index()] = ExactScalar(1);
  omega[a.index_of(Monomial({1, 1}))] = ExactScalar(1);
  NilPolynomial p(a), q(a, omega);
  CHECK(!(p.polynomial() == q.polynomial()));
  CHECK(proportional(q.top_form(), p.top_form()).has_value());
}

TEST_CASE("associated quartics and ternary cubics") {
  for (long t : {1L, 3L, 5L, -1L}) {
    std::string expected = std::to_string(t) + "*w1^4 - 12*w1^2*w2^2 + " + std::to_string(t) + "*w2^4";
    auto exp2 = associated_form_exp2(parse_form(q_t(t)));
    auto nf = associated_form_normalform(parse_form(q_t(t)));
    CHECK(proportional(exp2, w(expected)).has_value());
    CHECK(proportional(nf, w(expected)).has_value());
  }
  for (long t : {1L, 2L, 12L}) {
    auto c = parse_form("z1^3 + z2^3 + z3^3 + " + std::to_string(t) + "*z1*z2*z3");
    std::string expected = std::to_string(t) + "*(w1^3 + w2^3 + w3^3) - 18*w1*w2*w3";
    CHECK(proportional(associated_form_exp2(c), w(expected, 3)).has_value());
    CHECK(proportional(associated_form_normalform(c), w(expected, 3)).has_value());
  }
}

TEST_CASE("associated octavics of sextics (v) and (vi)") {
  auto v = parse_form("z1*(z1^5 + z2^5)");
  CHECK(proportional(associated_form_exp2(v), w("28*w1^5*w2^3 - 3*w2^8")).has_value());
  auto vi = parse_form("2*z1^6 + 18*z1^5*z2 + 10*z1^3*z2^3 - z2^6");
  auto octavic = w("35*w1^8 + 8*w1^7*w2 - 280*w1^6*w2^2 - 952*w1^5*w2^3 + 2072*w1^4*w2^4 + 3080*w1^3*w2^5 - "
                   "2296*w1^2*w2^6 + 944*w1*w2^7 + 224*w2^8");
  CHECK(proportional(associated_form_normalform(vi), octavic).has_value());
  CHECK(proportional(associated_form_exp2(vi), octavic).has_value());
}

TEST_CASE("associated sextic of f_t") {
  for (long t : {1L, 2L, -3L}) {
    auto f = parse_form("z1^4*z2 + " + std::to_string(t) + "*z1^3*z2^2 + z2^5");
    long t2 = t * t, t3 = t2 * t, t4 = t3 * t;
    std::string expected = std::to_string(27 * t4 - 160) + "*w1^6 + " + std::to_string(-81 * t3) + "*w1^5*w2 + " +
                           std::to_string(270 * t2) + "*w1^4*w2^2 + " + std::to_string(-480 * t) + "*w1^3*w2^3 + " +
                           "480*w1^2*w2^4 + " + std::to_string(-27 * t3) + "*w1*w2^5 + " + std::to_string(6 * t2) +
                           "*w2^6";
    CHECK(proportional(associated_form_normalform(f), w(expected)).has_value());
  }
}

TEST_CASE("proportional and normalization") {
  CHECK(*proportional(w("2*w1^2"), w("w1^2")) == ExactScalar(2));
  CHECK_FALSE(proportional(w("w1^2"), w("w2^2")).has_value());
  CHECK(normalize_form(w("-3/2*w1^2 + 9/4*w2^2")) == w("2*w1^2 - 3*w2^2"));
}
