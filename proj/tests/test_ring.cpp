#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qsc/ring.hpp"

using namespace qsc;

namespace {

const SignedLaurent x = SignedLaurent::x_pow(1);
const SignedLaurent xi = SignedLaurent::x_pow(-1);
const SignedLaurent s = SignedLaurent::sigma();

SignedLaurent random_sl(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(-4, 4), coef(-3, 3), terms(0, 3);
  LaurentZ e, o;
  for (int k = terms(rng); k > 0; --k) e += LaurentZ::monomial(exp(rng), coef(rng));
  for (int k = terms(rng); k > 0; --k) o += LaurentZ::monomial(exp(rng), coef(rng));
  return {e, o};
}

}  // namespace

TEST_CASE("sl_mul examples") {
  CHECK(sl_mul(x + xi, s) == SignedLaurent(LaurentZ{}, (x + xi).even()));
  CHECK(sl_mul(s, s) == SignedLaurent(1));
  CHECK(sl_mul(x - xi, x + xi) == SignedLaurent::x_pow(2) - SignedLaurent::x_pow(-2));
}

TEST_CASE("quantum integers") {
  CHECK(quantum_int(0).is_zero());
  CHECK(quantum_int(1) == LaurentZ(1));
  CHECK(quantum_int(3) == LaurentZ::monomial(2) + LaurentZ(1) + LaurentZ::monomial(-2));
  CHECK_THROWS_AS(quantum_int(-1), std::invalid_argument);
  CHECK(quantum_int_signed(-3) == -quantum_int(3));

  const LaurentZ d = LaurentZ::monomial(1) - LaurentZ::monomial(-1);
  for (int m = 0; m <= 20; ++m) CHECK(quantum_int(m) * d == LaurentZ::monomial(m) - LaurentZ::monomial(-m));
}

TEST_CASE("fraction equality is cross-multiplicative") {
  const SignedLaurent x2 = SignedLaurent::x_pow(2), xm2 = SignedLaurent::x_pow(-2);
  CHECK(fraction_eq(FractionSL(x2 - xm2, x - xi), FractionSL(x + xi, 1)));
  CHECK(fraction_eq(FractionSL(0, x - xi), FractionSL(0, 1)));
  CHECK_FALSE(fraction_eq(FractionSL(s, 1), FractionSL(1, 1)));
  CHECK_THROWS(FractionSL(1, SignedLaurent{}));
}

TEST_CASE("fraction arithmetic") {
  FractionSL half(1, 2), third(1, 3);
  CHECK(half + third == FractionSL(5, 6));
  CHECK(half - third == FractionSL(1, 6));
  CHECK(half * third == FractionSL(1, 6));
  CHECK(FractionSL(s, x) * FractionSL(s, xi) == FractionSL(1, 1));
}

TEST_CASE("ring axioms on random signed Laurent polynomials") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    SignedLaurent a = random_sl(rng), b = random_sl(rng), c = random_sl(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (b + c) == (a + b) + c);
    CHECK(a * SignedLaurent(1) == a);
    CHECK(a - a == SignedLaurent{});
    CHECK(a * b == sl_mul(a, b));
  }
}

TEST_CASE("exact division") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    SignedLaurent a = random_sl(rng), d = random_sl(rng);
    if (d.is_zero_divisor()) continue;
    auto q = (a * d).exact_div(d);
    REQUIRE(q.has_value());
    CHECK(*q == a);
    ++checked;
  }
  CHECK(checked > 50);
  CHECK_FALSE(LaurentZ(1).exact_div(LaurentZ(1) + LaurentZ::monomial(1)).has_value());
}

TEST_CASE("zero divisors") {
  CHECK((SignedLaurent(1) + s).is_zero_divisor());
  CHECK((SignedLaurent(1) + s) * (SignedLaurent(1) - s) == SignedLaurent{});
  CHECK_FALSE((x + xi).is_zero_divisor());
  CHECK((x + s).at_sigma(-1) == LaurentZ::monomial(1) - LaurentZ(1));
}

TEST_CASE("rendering") {
  CHECK((x + xi).to_string() == "q^r + q^-r");
  CHECK(s.to_string() == "(-1)^r");
  CHECK((-s).to_string() == "-(-1)^r");
  CHECK((s * (x + xi)).to_string() == "(-1)^r(q^r + q^-r)");
  CHECK(SignedLaurent{}.to_string() == "0");
  CHECK(quantum_int(3).to_string("q^r") == "q^2r + 1 + q^-2r");
}

TEST_CASE("two-variable polynomials") {
  // q qt at qt = -q^-1 is -1
  CHECK(LaurentQQ::monomial(1, 1).at_qt_neg_qinv() == LaurentZ(-1));
  CHECK(LaurentQQ::monomial(0, -3).at_qt_neg_qinv() == -LaurentZ::monomial(3));
  LaurentQQ a = LaurentQQ::monomial(1, 0) + LaurentQQ::monomial(0, 1);
  LaurentQQ b = LaurentQQ::monomial(1, 0) - LaurentQQ::monomial(0, 1);
  CHECK(a * b == LaurentQQ::monomial(2, 0) - LaurentQQ::monomial(0, 2));
  CHECK(RationalQQ(a * b, b) == RationalQQ(a, 1));
  CHECK_FALSE(RationalQQ(a, 1) == RationalQQ(b, 1));
}
