#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulerdenom/euler.hpp"

using namespace eulerdenom;

namespace {

Rat rat(long num, long den = 1) { return make_rational(num, den); }

Polynomial poly(std::vector<Rat> ascending) {
  return Polynomial(std::move(ascending));
}

}  // namespace

TEST_CASE("Polynomial canonical form") {
  CHECK(Polynomial().is_zero());
  CHECK(Polynomial().degree() == -1);
  CHECK(poly({rat(0), rat(0)}).is_zero());
  CHECK(poly({rat(1), rat(2), rat(0)}).degree() == 1);
  CHECK(poly({rat(5)}) == Polynomial::constant(rat(5)));
  CHECK(Polynomial::monomial(3).coeff(3) == 1);
  CHECK(Polynomial::monomial(3).coeff(7) == 0);
  CHECK(Polynomial::monomial(3).coeff(-1) == 0);

  Polynomial p = Polynomial::monomial(2);
  p.add_scaled(rat(-1), Polynomial::monomial(2));
  CHECK(p.is_zero());

  p = poly({rat(1), rat(2)});
  p.set_coeff(1, rat(0));
  CHECK(p.degree() == 0);
}

TEST_CASE("recurrence route reproduces the small Euler polynomials") {
  CHECK(euler_poly_recurrence(0) == Polynomial::constant(rat(1)));
  CHECK(euler_poly_recurrence(1) == poly({rat(-1, 2), rat(1)}));
  CHECK(euler_poly_recurrence(2) == poly({rat(0), rat(-1), rat(1)}));
  CHECK(euler_poly_recurrence(3) == poly({rat(1, 4), rat(0), rat(-3, 2), rat(1)}));
  // E_7 = x^7 - 7/2 x^6 + 35/4 x^4 - 21/2 x^2 + 17/8
  CHECK(euler_poly_recurrence(7) ==
        poly({rat(17, 8), rat(0), rat(-21, 2), rat(0), rat(35, 4), rat(0),
              rat(-7, 2), rat(1)}));
}

TEST_CASE("explicit coefficients on known values") {
  CHECK(euler_coeff_explicit(4, 1) == rat(-2));
  CHECK(euler_coeff_explicit(5, 3) == rat(5, 2));
  CHECK(euler_coeff_explicit(9, 0) == rat(1));
  for (long n : {2L, 5L, 9L, 16L}) {
    for (long k = 2; k <= n; k += 2) {
      CHECK(euler_coeff_explicit(n, k) == 0);
    }
  }
  CHECK_THROWS_AS(euler_coeff_explicit(3, 4), std::domain_error);
  CHECK_THROWS_AS(euler_coeff_explicit(3, -1), std::domain_error);
}

TEST_CASE("both explicit forms agree (Bernoulli vs Stirling)") {
  for (long n = 1; n <= 64; ++n) {
    for (long k = 1; k <= n; k += 2) {
      CHECK(euler_coeff_explicit(n, k, CoeffRoute::bernoulli_form) ==
            euler_coeff_explicit(n, k, CoeffRoute::stirling_form));
    }
  }
}

TEST_CASE("explicit route reproduces polynomials and matches the recurrence") {
  CHECK(euler_poly_explicit(0) == Polynomial::constant(rat(1)));
  CHECK(euler_poly_explicit(2) == poly({rat(0), rat(-1), rat(1)}));
  CHECK(euler_poly_explicit(7) ==
        poly({rat(17, 8), rat(0), rat(-21, 2), rat(0), rat(35, 4), rat(0),
              rat(-7, 2), rat(1)}));
  const auto recurrence = euler_polys_recurrence(64);
  for (long n = 0; n <= 64; ++n) {
    CHECK(euler_poly_explicit(n) == recurrence[static_cast<std::size_t>(n)]);
    CHECK(euler_poly_explicit(n, CoeffRoute::stirling_form) ==
          recurrence[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("evaluate") {
  CHECK(evaluate(euler_poly_recurrence(1), rat(1, 2)) == 0);
  CHECK(evaluate(Polynomial(), rat(123, 7)) == 0);
  CHECK(evaluate(euler_poly_recurrence(3), rat(1)) == rat(-1, 4));
  CHECK(evaluate(poly({rat(1), rat(2), rat(3)}), rat(-2, 3)) ==
        rat(1) + rat(2) * rat(-2, 3) + rat(3) * rat(4, 9));
}

TEST_CASE("derivative") {
  CHECK(derivative(Polynomial::monomial(3)) == Polynomial::monomial(2, rat(3)));
  CHECK(derivative(Polynomial::constant(rat(9))).is_zero());
  CHECK(derivative(Polynomial()).is_zero());
  // E_3' = 3 E_2 = 3x^2 - 3x
  CHECK(derivative(euler_poly_recurrence(3)) ==
        poly({rat(0), rat(-3), rat(3)}));
}

TEST_CASE("derivative identity E_n' = n E_(n-1) across the sweep") {
  const auto polys = euler_polys_recurrence(64);
  for (long n = 1; n <= 64; ++n) {
    Polynomial expected;
    expected.add_scaled(rat(n), polys[static_cast<std::size_t>(n - 1)]);
    CHECK(derivative(polys[static_cast<std::size_t>(n)]) == expected);
  }
}

TEST_CASE("euler_at_zero closed form") {
  CHECK(euler_at_zero(3) == rat(1, 4));
  CHECK(euler_at_zero(2) == 0);
  CHECK(euler_at_zero(7) == rat(17, 8));
  CHECK_THROWS_AS(euler_at_zero(0), std::domain_error);
  const auto polys = euler_polys_recurrence(64);
  for (long n = 1; n <= 64; ++n) {
    const Rat at_zero = evaluate(polys[static_cast<std::size_t>(n)], rat(0));
    const Rat at_one = evaluate(polys[static_cast<std::size_t>(n)], rat(1));
    CHECK(euler_at_zero(n) == at_zero);
    CHECK(euler_at_zero(n) == -at_one);
  }
}

TEST_CASE("shifted polynomials") {
  CHECK(shifted_euler(0).is_zero());
  CHECK(shifted_euler(2) == poly({rat(0), rat(-1), rat(1)}));
  CHECK(shifted_euler(3) == poly({rat(1, 2), rat(0), rat(-3, 2), rat(1)}));
  for (long n = 1; n <= 48; ++n) {
    const Polynomial e = euler_poly_explicit(n);
    Polynomial expected = e;
    expected += Polynomial::constant(evaluate(e, rat(0)));
    CHECK(shifted_euler(n) == expected);
    CHECK(shifted_euler(n, PolyRoute::recurrence) == expected);
    // E*_n(x) = E_n(x) - E_n(1) definitionally
    Polynomial direct = e;
    direct.add_scaled(rat(-1), Polynomial::constant(evaluate(e, rat(1))));
    CHECK(shifted_euler(n) == direct);
  }
}

TEST_CASE("reflection (-1)^n E_n(-x) = 2x^n - E_n(x) at fixed points") {
  const auto polys = euler_polys_recurrence(48);
  const std::vector<Rat> points{rat(0),      rat(1),     rat(-1), rat(1, 2),
                                rat(-3, 7),  rat(22, 5), rat(9),  rat(-101, 13)};
  for (long n = 0; n <= 48; ++n) {
    const Polynomial& e = polys[static_cast<std::size_t>(n)];
    for (const Rat& x : points) {
      Rat lhs = evaluate(e, -x);
      if (n % 2 == 1) lhs = -lhs;
      CHECK(lhs == 2 * rat_pow(x, n) - evaluate(e, x));
    }
  }
}

TEST_CASE("difference equation e_k(n) = n/(n-k) e_k(n-1)") {
  for (long n = 2; n <= 64; ++n) {
    for (long k = 1; k < n; k += 2) {
      CHECK(euler_coeff_explicit(n, k) ==
            make_rational(n, n - k) * euler_coeff_explicit(n - 1, k));
    }
  }
}

TEST_CASE("monic with alternating-sign odd coefficients") {
  for (long n = 0; n <= 128; ++n) {
    const Polynomial e = euler_poly_explicit(n);
    CHECK(e.degree() == n);
    CHECK(e.coeff(n) == 1);
    for (long k = 1; k <= n; k += 2) {
      const Rat c = e.coeff(n - k);
      REQUIRE(c != 0);
      CHECK((c > 0) == (((k + 1) / 2) % 2 == 0));
    }
  }
}

TEST_CASE("coefficient formatting") {
  CHECK(format_coefficients(euler_poly_recurrence(1)) == "0\t-1/2\n1\t1/1\n");
  CHECK(format_coefficients(Polynomial()) == "0\t0/1\n");
  CHECK(to_string(euler_poly_recurrence(3)) == "x^3 - 3/2 x^2 + 1/4");
  CHECK(to_string(Polynomial()) == "0");
  CHECK(to_string(poly({rat(-1, 2), rat(1)})) == "x - 1/2");
}
