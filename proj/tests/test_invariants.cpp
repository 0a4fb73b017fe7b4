#include "doctest.h"

#include "germlab/associated.hpp"
#include "germlab/invariants.hpp"
#include "germlab/parser.hpp"
#include "support.hpp"

using namespace germlab;

namespace {

BinaryForm form(const std::string& text, long radicand = 0) {
  ParseOptions opts;
  opts.radicand = radicand;
  return BinaryForm::from_polynomial(parse_form(text, opts));
}

ExactScalar q(long num, long den = 1) { return ExactScalar(num, den); }

ExactScalar ten_fact() { return ExactScalar(factorial(10)); }

BinaryForm f_st(long s, long t) {
  return BinaryForm::from_coefficients({1, 0, 0, t, s, 1});
}

BinaryForm f_t(long t) { return BinaryForm::from_coefficients({1, 0, 0, t, 1, 0}); }

const char* sextic_vi = "2*z1^6 + 18*z1^5*z2 + 10*z1^3*z2^3 - z2^6";
const char* sextic_vii =
    "184*z1^6 - 192*z1^5*z2 - 300*z1^4*z2^2 - 320*z1^3*z2^3 - 150*z1^2*z2^4 - 48*z1*z2^5 + 23*z2^6";
const char* octavic_vi =
    "35*w1^8 + 8*w1^7*w2 - 280*w1^6*w2^2 - 952*w1^5*w2^3 + 2072*w1^4*w2^4 + 3080*w1^3*w2^5 - 2296*w1^2*w2^6 + "
    "944*w1*w2^7 + 224*w2^8";

BinaryForm octavic(const std::string& text) { return BinaryForm::from_polynomial(parse_polynomial(text, form_variables(2))); }

std::vector<ExactScalar> absolute(const InvariantValues& v) {
  std::vector<ExactScalar> out;
  for (const auto& name : sextic_absolute_names()) out.push_back(v.at(name));
  return out;
}

ExactScalar power(const ExactScalar& x, int e) { return pow(x, static_cast<unsigned>(e)); }

}  // namespace

TEST_CASE("bracket schemes are well formed") {
  for (const BracketScheme* s : {&schemes::sextic_i2(), &schemes::sextic_i4(), &schemes::sextic_i6(), &schemes::sextic_i10(),
                                 &schemes::sextic_i15(), &schemes::octavic_i2(), &schemes::octavic_i3(),
                                 &schemes::octavic_i4(), &schemes::octavic_i5()}) {
    CHECK_NOTHROW(s->validate());
  }
  CHECK(schemes::sextic_i10().letters() == 10);
  CHECK(schemes::sextic_i15().letters() == 15);
  BracketScheme bad{"bad", 6, {{1, 2, 5}}};
  CHECK_THROWS(bad.validate());
}

TEST_CASE("bracket I2 agrees with the self transvectant") {
  Rng rng(11);
  for (int k = 0; k < 20; ++k) {
    auto s = random_binary_form(rng, 6, 5);
    CHECK(bracket_eval(schemes::sextic_i2(), s) * power(ExactScalar(factorial(6)), 2) == transvectant_self(s));
    auto o = random_binary_form(rng, 8, 3);
    CHECK(bracket_eval(schemes::octavic_i2(), o) * power(ExactScalar(factorial(8)), 2) == transvectant_self(o));
  }
  auto fermat = form("z1^6 + z2^6");
  CHECK(bracket_eval(schemes::sextic_i2(), fermat) == q(2));
  CHECK(bracket_eval(schemes::sextic_i4(), fermat) == q(2));
}

TEST_CASE("quartic and ternary cubic invariants") {
  auto v = quartic_invariants(form("z1^4 + z2^4"));
  CHECK(v.at("I2") == q(1));
  CHECK(v.at("I3") == q(0));
  CHECK(v.at("J") == q(1));
  CHECK_FALSE(v.defined("K"));
  CHECK_THROWS_AS(v.at("K"), DivisionByVanishingInvariant);
  auto twelve = quartic_invariants(BinaryForm::from_polynomial(parse_polynomial("-12*w1^2*w2^2", form_variables(2))));
  CHECK(twelve.at("K") == q(1));
  for (long t : {-5L, -1L, 1L, 3L, 7L}) {
    auto qt = quartic_invariants(form("z1^4 + " + std::to_string(t) + "*z1^2*z2^2 + z2^4"));
    ExactScalar a2(t, 6);
    CHECK(qt.at("I2") == q(1) + q(3) * a2 * a2);
    CHECK(qt.at("I3") == a2 - a2 * a2 * a2);
  }
  auto c = ternary_cubic_invariants(parse_form("z1^3 + z2^3 + z3^3"));
  CHECK(c.at("I4") == q(0));
  CHECK(c.at("I6") == q(1));
  CHECK(c.at("J") == q(0));
  auto ct = ternary_cubic_invariants(parse_form("z1^3 + z2^3 + z3^3 + 12*z1*z2*z3"));
  ExactScalar d(2);
  CHECK(ct.at("I4") == d - d * d * d * d);
  CHECK_THROWS_AS(ternary_cubic_invariants(parse_form("z1^2*z2 + z3^3")), WrongShape);
}

TEST_CASE("quintic families") {
  for (long t = -5; t <= 5; ++t) {
    auto v = quintic_invariants(f_t(t));
    CHECK(v.at("Delta") == q(256 - 27 * t * t * t * t, 3125));
    CHECK(v.at("T10") == q(-172800) * ten_fact() * q(t * t));
    ExactScalar tt(t);
    ExactScalar i12 = -(q(421875) * power(tt, 10) - q(17500000) * power(tt, 6) + q(300000000) * tt * tt) /
                      (q(15625) * power(q(10), 10));
    CHECK(v.at("I12") == i12);
    for (long s = -5; s <= 5; ++s) {
      auto w = quintic_invariants(f_st(s, t));
      ExactScalar ss(s);
      CHECK(w.at("T10") == q(57600) * ten_fact() * (q(125) - q(3) * ss * tt * tt));
      ExactScalar delta = (q(256) * power(ss, 5) - q(1600) * power(ss, 3) * tt - q(27) * ss * ss * power(tt, 4) +
                           q(2250) * ss * tt * tt + q(108) * power(tt, 5) + q(3125)) /
                          q(3125);
      CHECK(w.at("Delta") == delta);
      ExactScalar poly = q(19200) * power(ss, 6) * tt * tt - q(160000) * power(ss, 4) * power(tt, 3) -
                         q(1120) * power(ss, 3) * power(tt, 6) + q(440000) * ss * ss * power(tt, 4) +
                         q(3600) * ss * power(tt, 7) + q(27) * power(tt, 10) - q(400000) * power(tt, 5);
      CHECK(w.at("I12") == -poly / power(q(10), 10));
    }
  }
}

TEST_CASE("I18 square identity on random quintics") {
  Rng rng(18);
  int checked = 0;
  while (checked < 25) {
    auto f = random_binary_form(rng, 5, 6);
    if (f.is_zero()) continue;
    CHECK(i18_square_check(f));
    ++checked;
  }
}

TEST_CASE("relative invariants under linear changes") {
  Rng rng(5);
  struct Weighted {
    const BracketScheme* scheme;
    int weight;
  };
  std::vector<Weighted> sextic = {{&schemes::sextic_i2(), 6}, {&schemes::sextic_i4(), 12}, {&schemes::sextic_i6(), 18},
                                  {&schemes::sextic_i10(), 30}};
  std::vector<Weighted> oct = {{&schemes::octavic_i2(), 8}, {&schemes::octavic_i3(), 12}};
  for (int k = 0; k < 4; ++k) {
    auto f = random_binary_form(rng, 6, 4);
    Matrix m = random_unimodular(rng, 2);
    m(0, 0) = m(0, 0) * q(2);
    m(0, 1) = m(0, 1) * q(2);
    ExactScalar det = m.determinant();
    REQUIRE(det == q(2));
    auto g = f.linear_change(m);
    for (const auto& w : sextic) {
      CHECK(bracket_eval(*w.scheme, g) == power(det, w.weight) * bracket_eval(*w.scheme, f));
      CHECK(bracket_eval(*w.scheme, f.scaled(q(3))) ==
            power(q(3), w.scheme->letters()) * bracket_eval(*w.scheme, f));
    }
    CHECK(discriminant(g) == power(det, 30) * discriminant(f));
    auto o = random_binary_form(rng, 8, 3);
    auto og = o.linear_change(m);
    for (const auto& w : oct) CHECK(bracket_eval(*w.scheme, og) == power(det, w.weight) * bracket_eval(*w.scheme, o));
    auto v = sextic_invariants(f);
    if (!v.defined("M")) continue;
    CHECK(absolute(sextic_invariants(g)) == absolute(v));
  }
}

TEST_CASE("I10 is fitted by Delta and products of I2, I4, I6") {
  Rng rng(10);
  auto row = [](const InvariantValues& v) {
    ExactScalar i2 = v.at("I2"), i4 = v.at("I4"), i6 = v.at("I6");
    return std::vector<ExactScalar>{v.at("Delta"), power(i2, 5), power(i2, 3) * i4, i2 * i4 * i4, i2 * i2 * i6, i4 * i6};
  };
  Matrix a(6, 6);
  std::vector<ExactScalar> b(6);
  for (std::size_t r = 0; r < 6; ++r) {
    auto v = sextic_invariants(random_binary_form(rng, 6, 5));
    auto x = row(v);
    for (std::size_t c = 0; c < 6; ++c) a(r, c) = x[c];
    b[r] = v.at("I10");
  }
  auto solution = a.solve(b);
  REQUIRE(solution.has_value());
  SexticI10Relation stored;
  std::vector<mpq_class> expected = {stored.delta, stored.i2_5, stored.i2_3_i4, stored.i2_i4_2, stored.i2_2_i6, stored.i4_i6};
  for (std::size_t c = 0; c < 6; ++c) CHECK((*solution)[c] == ExactScalar(expected[c]));
  for (int k = 0; k < 5; ++k) {
    auto v = sextic_invariants(random_binary_form(rng, 6, 7));
    auto x = row(v);
    ExactScalar fit;
    for (std::size_t c = 0; c < 6; ++c) fit += x[c] * ExactScalar(expected[c]);
    CHECK(fit == v.at("I10"));
  }
}

TEST_CASE("sextics (v), (vi), (vii)") {
  auto v = sextic_invariants(form("z1^6 + z1*z2^5"));
  for (const auto& x : absolute(v)) CHECK(x == q(0));

  auto vi = sextic_invariants(form(sextic_vi));
  CHECK(vi.at("I2") == q(-9));
  CHECK(vi.at("I4") == q(27));
  CHECK(vi.at("I6") == q(567));
  CHECK(vi.at("I10") == q(-34992));
  std::vector<ExactScalar> vi_abs = {q(9, 637),  q(1, 1217307), q(-1, 1245699), q(1, 637),
                                     q(3, 637), q(-1, 273),    q(-1, 91),      q(-1, 10647)};
  CHECK(absolute(vi) == vi_abs);

  std::vector<ExactScalar> table = {q(-7, 324),  q(3125, 36006768), q(-343, 34012224), q(-25, 2268),
                                    q(-5, 324), q(-5, 324),       q(-7, 324),        q(49, 104976)};
  CHECK(absolute(sextic_invariants(form(sextic_vii))) == table);
  auto irrational = sextic_invariants(
      form("z1^6 + 18*z1^5*z2 + 40*(1 - 2*r)*z1^3*z2^3 + 32*(115 - 41*r)*z2^6", 7));
  CHECK(absolute(irrational) == table);
}

TEST_CASE("I15 squares into the ring of even invariants") {
  auto v = sextic_invariants(form("z1^6 + z2^6"), true);
  CHECK(v.at("I15") == q(0));
  Rng rng(15);
  auto f = random_binary_form(rng, 6, 3);
  auto g = f.linear_change(Matrix::from_integers({{1, 1}, {0, 1}}));
  CHECK(sextic_invariants(g, true).at("I15") == sextic_invariants(f, true).at("I15"));
  auto swap = f.linear_change(Matrix::from_integers({{0, 1}, {1, 0}}));
  CHECK(sextic_invariants(swap, true).at("I15") == -sextic_invariants(f, true).at("I15"));
}

TEST_CASE("octavic invariants of associated forms") {
  auto v = octavic_invariants(octavic("28*w1^5*w2^3 - 3*w2^8"));
  for (const auto& x : absolute(v)) CHECK(x == q(0));
  auto listed = octavic_invariants(octavic(octavic_vi));
  CHECK(absolute(listed) == absolute(sextic_invariants(form(sextic_vi))));
  auto computed = BinaryForm::from_polynomial(associated_form_exp2(parse_form(sextic_vi)));
  CHECK(absolute(octavic_invariants(computed)) == absolute(listed));
  auto vii = BinaryForm::from_polynomial(associated_form_exp2(parse_form(sextic_vii)));
  CHECK(absolute(octavic_invariants(vii)) == absolute(sextic_invariants(form(sextic_vii))));
}

TEST_CASE("fingerprints") {
  auto a = fingerprint(Family::Sextic, sextic_invariants(form(sextic_vii)));
  auto b = fingerprint(Family::Sextic, sextic_invariants(form(sextic_vii).linear_change(
                                           Matrix::from_integers({{2, 1}, {1, 1}}))));
  CHECK(a == b);
  CHECK_FALSE(a == fingerprint(Family::Sextic, sextic_invariants(form(sextic_vi))));
  CHECK(family_name(Family::TernaryCubic) == "ternary-cubic");
  CHECK_THROWS_AS(sextic_invariants(form("z1^5 + z2^5")), WrongShape);
}
