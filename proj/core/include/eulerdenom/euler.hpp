#pragma once

#include <span>
#include <string>
#include <vector>

#include "eulerdenom/numeric.hpp"

namespace eulerdenom {

/// Dense univariate polynomial with exact rational coefficients, stored
/// ascending by power: coefficient i multiplies x^i.  The trailing stored
/// coefficient is always nonzero; the zero polynomial stores nothing.
///
/// Note the index flip against the classical layout of
/// E_n(x) = e_0(n) x^n + e_1(n) x^{n-1} + ... + e_n(n): there e_k(n) is the
/// coefficient of x^{n-k}, i.e. coeff(n - k) here.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rat> coefficients);

  static Polynomial monomial(long degree, Rat coefficient = Rat(1));
  static Polynomial constant(Rat value);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }

  /// Coefficient of x^i; zero outside the stored range.
  const Rat& coeff(long i) const;
  std::span<const Rat> coefficients() const { return coefficients_; }

  void set_coeff(long i, Rat value);

  /// *this += c * p.
  Polynomial& add_scaled(const Rat& c, const Polynomial& p);
  Polynomial& operator+=(const Polynomial& p);

  bool operator==(const Polynomial& other) const = default;

 private:
  void trim();
  std::vector<Rat> coefficients_;
};

/// Which closed form produces explicit coefficients: the Bernoulli-number
/// form -(2/(k+1))(2^{k+1}-1) B_{k+1} C(n,k), or the equivalent
/// Stirling-number form -C(n,k) sum_j (-1)^j S(k+1,j+1) j!/2^j.
enum class CoeffRoute { bernoulli_form, stirling_form };

#ifdef EULERDENOM_STIRLING_COEFF_DEFAULT
inline constexpr CoeffRoute default_coeff_route = CoeffRoute::stirling_form;
#else
inline constexpr CoeffRoute default_coeff_route = CoeffRoute::bernoulli_form;
#endif

/// Which construction yields a whole polynomial: the generating-function
/// recurrence (no Bernoulli/Stirling machinery) or the explicit coefficient
/// formula.  The two must agree; the recurrence is the oracle side.
enum class PolyRoute { recurrence, explicit_form };

/// E_0 .. E_max_n in one sweep of the recurrence
///
///   E_n(x) = x^n - (1/2) sum_{k=0}^{n-1} C(n,k) E_k(x),
///
/// which follows from the generating function 2 e^{xt} / (e^t + 1)
/// = sum_n E_n(x) t^n / n!: multiply through by e^t + 1 and match t^n
/// coefficients to get 2 x^n = E_n(x) + sum_{k=0}^{n} C(n,k) E_k(x).
std::vector<Polynomial> euler_polys_recurrence(long max_n);

/// E_n(x) by the recurrence route.
Polynomial euler_poly_recurrence(long n);

/// e_k(n), the coefficient of x^{n-k} in E_n(x): 1 for k = 0, 0 for even
/// k >= 2, and the selected closed form for odd k.  Requires 0 <= k <= n.
Rat euler_coeff_explicit(long n, long k, CoeffRoute route = default_coeff_route);

/// E_n(x) assembled coefficientwise from euler_coeff_explicit.
Polynomial euler_poly_explicit(long n, CoeffRoute route = default_coeff_route);

/// Exact Horner evaluation.
Rat evaluate(const Polynomial& p, const Rat& x);

/// Formal derivative.
Polynomial derivative(const Polynomial& p);

/// E_n(0) = -E_n(1) = -(2/(n+1))(2^{n+1}-1) B_{n+1} for n >= 1.
Rat euler_at_zero(long n);

/// E_n(x) - E_n(1) given an already constructed E_n; equals
/// E_n(x) + E_n(0), so the constant term doubles.  n = 0 gives the zero
/// polynomial.
Polynomial shifted_from_euler(Polynomial euler_n, long n);

/// E*_n(x) = E_n(x) - E_n(1).
Polynomial shifted_euler(long n, PolyRoute route = PolyRoute::explicit_form);

/// One "power<TAB>numerator/denominator" line per power, ascending.  The
/// zero polynomial prints the single line "0<TAB>0/1".
std::string format_coefficients(const Polynomial& p);

/// Human-readable form, e.g. "x^3 - 3/2 x^2 + 1/4".
std::string to_string(const Polynomial& p);

}  // namespace eulerdenom
