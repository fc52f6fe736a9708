#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulerdenom/denominator.hpp"

using namespace eulerdenom;

TEST_CASE("rational_denominator") {
  CHECK(rational_denominator(make_rational(17, 4)) == 4);
  CHECK(rational_denominator(Rat(-2)) == 1);
  CHECK(rational_denominator(Rat(0)) == 1);
}

TEST_CASE("poly_denominator") {
  // x^3 - 3/2 x^2 + 1/2
  Polynomial p({make_rational(1, 2), Rat(0), make_rational(-3, 2), Rat(1)});
  CHECK(poly_denominator(p) == 2);
  CHECK(poly_denominator(Polynomial()) == 1);
  CHECK(poly_denominator(shifted_euler(7)) == 4);
}

TEST_CASE("coefficient denominator formula, including the clamp") {
  CHECK(coeff_denom_formula(3, 3) == 4);
  CHECK(coeff_denom_formula(4, 1) == 1);  // raw exponent -1, clamped
  CHECK(coeff_denom_formula(5, 1) == 2);
  CHECK_THROWS_AS(coeff_denom_formula(4, 2), std::domain_error);
  CHECK_THROWS_AS(coeff_denom_formula(4, 5), std::domain_error);
  CHECK_THROWS_AS(coeff_denom_formula(4, 0), std::domain_error);

  // the clamp case really is an integral coefficient
  CHECK(euler_coeff_explicit(4, 1) == Rat(-2));
  CHECK(rational_denominator(euler_coeff_explicit(4, 1)) == 1);
}

TEST_CASE("coefficient formula matches actual denominators") {
  for (long n = 1; n <= 64; ++n) {
    for (long k = 1; k <= n; k += 2) {
      CHECK(coeff_denom_formula(n, k) ==
            rational_denominator(euler_coeff_explicit(n, k)));
    }
  }
}

TEST_CASE("shifted coefficient denominator formula") {
  CHECK(shifted_coeff_denom_formula(7, 7) == 4);
  CHECK(shifted_coeff_denom_formula(3, 1) == 2);
  CHECK(shifted_coeff_denom_formula(2, 1) == 1);
  CHECK_THROWS_AS(shifted_coeff_denom_formula(4, 2), std::domain_error);

  for (long n = 1; n <= 64; ++n) {
    const Polynomial star = shifted_euler(n);
    for (long k = 1; k <= n; k += 2) {
      CHECK(shifted_coeff_denom_formula(n, k) ==
            rational_denominator(star.coeff(n - k)));
    }
  }
}

TEST_CASE("valuation identity v2(k+1) - v2(C(n,k)) = v2(n+1) - v2(C(n+1,k+1))") {
  for (long n = 1; n <= 128; ++n) {
    for (long k = 1; k <= n; k += 2) {
      CHECK(v2(Int(k + 1)) - v2(binomial(n, k)) ==
            v2(Int(n + 1)) - v2(binomial(n + 1, k + 1)));
    }
  }
}

TEST_CASE("closed form for the shifted polynomial denominator") {
  CHECK(shifted_poly_denom_closed(0) == 1);
  CHECK(shifted_poly_denom_closed(3) == 2);
  CHECK(shifted_poly_denom_closed(4) == 1);
  CHECK(shifted_poly_denom_closed(7) == 4);
  CHECK_THROWS_AS(shifted_poly_denom_closed(-1), std::domain_error);
}

TEST_CASE("carry form equals the closed form") {
  CHECK(shifted_poly_denom_carry_form(1) == 1);
  CHECK(shifted_poly_denom_carry_form(5) == 2);
  CHECK(shifted_poly_denom_carry_form(7) == 4);
  for (long n = 1; n <= 256; ++n) {
    CHECK(shifted_poly_denom_carry_form(n) == shifted_poly_denom_closed(n));
  }
}

TEST_CASE("Mersenne branch: minimum 1, attained at k = n") {
  for (long m = 1; m <= 8; ++m) {
    const long n = (1L << m) - 1;
    long min_term = -1;
    for (long k = 1; k <= n; k += 2) {
      const long term = carries_base2(n + 1, k + 1) + (k == n ? 1 : 0);
      if (min_term < 0 || term < min_term) min_term = term;
    }
    CHECK(min_term == 1);
    CHECK(carries_base2(n + 1, n + 1) + 1 == 1);
  }
}

TEST_CASE("non-Mersenne branch: k = 2^(u(n)-1) - 1 kills every carry") {
  for (long n = 2; n <= 512; ++n) {
    if (g(n) == 1) continue;
    const long k = (1L << (bit_length(n) - 1)) - 1;
    CHECK(k % 2 == 1);
    CHECK(k < n);
    CHECK(carries_base2(n + 1, k + 1) == 0);
  }
}

TEST_CASE("coefficient denominators carry no odd prime") {
  for (long n = 1; n <= 64; ++n) {
    for (long k = 1; k <= n; k += 2) {
      const Int d = rational_denominator(euler_coeff_explicit(n, k));
      CHECK(d == Int(1) << v2(d));
    }
  }
}

TEST_CASE("luschny_sequence") {
  const SequenceTable table = luschny_sequence(7);
  const std::vector<Int> expected{1, 1, 1, 2, 1, 2, 1, 4};
  REQUIRE(table.size() == expected.size());
  for (std::int64_t n = 0; n <= 7; ++n) {
    CHECK(table.at(n) == expected[static_cast<std::size_t>(n)]);
  }
  // Mersenne-type indices give 2^(m-1)
  const SequenceTable big = luschny_sequence((1L << 10) - 1);
  for (long m = 1; m <= 10; ++m) {
    CHECK(big.at((1L << m) - 1) == Int(1) << (m - 1));
  }
  CHECK(luschny_sequence(0).at(0) == 1);
}

TEST_CASE("verify_theorem") {
  const VerificationReport report = verify_theorem(16);
  CHECK(report.records.size() == 17);
  CHECK(report.fail_count == 0);
  CHECK(report.pass_count == 17);
  for (const DenomRecord& rec : report.records) {
    CHECK(rec.pass);
    CHECK(rec.direct == rec.closed);
    CHECK(rec.closed == Int(1) << rec.exponent);
    CHECK(rec.coeff_dump.empty());
  }

  const VerificationReport zero = verify_theorem(0);
  CHECK(zero.records.size() == 1);
  CHECK(zero.records[0].direct == 1);
  CHECK(zero.records[0].closed == 1);
  CHECK(zero.records[0].pass);

  CHECK(verify_theorem(32, PolyRoute::recurrence).fail_count == 0);
}
