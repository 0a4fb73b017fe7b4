#include "doctest.h"

#include "germlab/parser.hpp"
#include "germlab/sextic.hpp"
#include "support.hpp"

#include <set>

using namespace germlab;

namespace {

BinaryForm form(const std::string& text, long radicand = 0) {
  ParseOptions opts;
  opts.radicand = radicand;
  return BinaryForm::from_polynomial(parse_form(text, opts));
}

BinaryForm random_square_free_sextic(Rng& rng) {
  while (true) {
    auto f = random_binary_form(rng, 6, 9);
    if (!f.is_zero() && !discriminant(f).is_zero()) return f;
  }
}

}  // namespace

TEST_CASE("qhat matrix") {
  auto zero = qhat(BinaryForm(std::vector<ExactScalar>(7)));
  CHECK(zero.matrix == Matrix(4, 4));
  CHECK(zero.charpoly == std::vector<ExactScalar>{0, 0, 0, 0, 1});

  auto fermat = qhat(form("z1^6 + z2^6"));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      ExactScalar expected = (i == 0 && j == 3) ? ExactScalar(-1) : (i == 3 && j == 0) ? ExactScalar(1) : ExactScalar();
      CHECK(fermat.matrix(i, j) == expected);
    }
  }
  CHECK(fermat.charpoly == std::vector<ExactScalar>{0, 0, 1, 0, 1});

  auto m = qhat(form("z1^3*z2^3")).matrix;
  std::vector<ExactScalar> diagonal = {ExactScalar(-1, 20), ExactScalar(3, 20), ExactScalar(-3, 20), ExactScalar(1, 20)};
  for (std::size_t i = 0; i < 4; ++i) CHECK(m(i, i) == diagonal[i]);

  Rng rng(45);
  for (int k = 0; k < 50; ++k) CHECK_NOTHROW(qhat(random_binary_form(rng, 6, 20)));
}

TEST_CASE("the seven exceptional sextics get seven labels") {
  std::set<SexticLabel> seen;
  for (const auto& [label, text] : exceptional_sextics()) {
    auto c = classify(form(text));
    CHECK(c.label == label);
    seen.insert(c.label);
  }
  CHECK(seen.size() == 7);
  auto iii = classify(form("z1^3*z2^3"));
  CHECK(iii.pattern == std::vector<int>{3, 3});
  CHECK(label_name(iii.label) == "(iii)");
}

TEST_CASE("classification examples") {
  CHECK(classify(form("z1^6 + 18*z1^5*z2 + 40*(1 - 2*r)*z1^3*z2^3 + 32*(115 - 41*r)*z2^6", 7)).label ==
        SexticLabel::VII);
  auto degenerate = classify(form("z1^4*z2^2 - z1^2*z2^4"));
  CHECK(degenerate.pattern == std::vector<int>{2, 2, 1, 1});
  CHECK(degenerate.label == SexticLabel::SylvesterGeneric);
  CHECK_THROWS_AS(classify(BinaryForm(std::vector<ExactScalar>(7))), ZeroForm);
}

TEST_CASE("stored (vi) fingerprint regenerates") {
  auto v = sextic_invariants(form(exceptional_sextics()[5].second));
  CHECK(fingerprint(Family::Sextic, v).values == stored_fingerprint_vi());
}

TEST_CASE("classification is invariant under linear changes") {
  Rng rng(7);
  for (const auto& [label, text] : exceptional_sextics()) {
    auto f = form(text);
    for (int k = 0; k < 3; ++k) {
      auto g = f.linear_change(random_unimodular(rng, 2)).scaled(ExactScalar(-3, 2));
      CHECK(classify(g).label == label);
    }
  }
}

TEST_CASE("random square-free sextics are Sylvester generic") {
  Rng rng(100);
  for (int k = 0; k < 100; ++k) CHECK(classify(random_square_free_sextic(rng)).label == SexticLabel::SylvesterGeneric);
  for (int k = 0; k < 10; ++k) {
    auto report = eigencubics_numeric(random_square_free_sextic(rng));
    CHECK(report.any_square_free());
  }
}

TEST_CASE("eigencubic diagnostic on exceptional sextics") {
  auto i = eigencubics_numeric(form("z1^4*z2^2"));
  REQUIRE(i.branches.size() == 1);
  CHECK(i.branches[0].exact);
  CHECK(i.branches[0].eigenvalue == "0");
  CHECK(i.branches[0].cubic[1] == "0");
  CHECK(i.branches[0].cubic[2] == "0");
  CHECK(i.branches[0].cubic[3] == "0");

  auto iv = eigencubics_numeric(form("z1^5*z2"));
  REQUIRE(iv.branches.size() == 1);
  CHECK(iv.branches[0].eigenspace_dimension == 2);
  CHECK_FALSE(iv.branches[0].square_free);

  auto iii = eigencubics_numeric(form("z1^3*z2^3"));
  CHECK(iii.branches.size() == 4);
  for (const auto& b : iii.branches) CHECK(b.exact);

  for (const auto& [label, text] : exceptional_sextics()) {
    auto report = eigencubics_numeric(form(text));
    CHECK_MESSAGE(!report.any_square_free(), label_name(label));
  }
  auto vii = eigencubics_numeric(form(exceptional_sextics()[6].second));
  CHECK(vii.branches.size() == 4);
  CHECK_THROWS(eigencubics_numeric(form("z1^6 + z2^6"), 20));
}

TEST_CASE("Sylvester forms") {
  auto f = sylvester_form(1, 1, 1, 0);
  CHECK(f.coefficient(6) == ExactScalar(2));
  Rng rng(3);
  for (int k = 0; k < 5; ++k) {
    auto g = sylvester_form(random_rational(rng, 5), random_rational(rng, 5), random_rational(rng, 5),
                            random_rational(rng, 5));
    if (g.is_zero() || discriminant(g).is_zero()) continue;
    CHECK(classify(g).label == SexticLabel::SylvesterGeneric);
    CHECK(eigencubics_numeric(g).any_square_free());
  }
}
