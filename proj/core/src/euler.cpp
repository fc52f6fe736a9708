#include "eulerdenom/euler.hpp"

#include <sstream>
#include <utility>

#include "eulerdenom/special.hpp"

namespace eulerdenom {

namespace {
const Rat rat_zero(0);
}

Polynomial::Polynomial(std::vector<Rat> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::monomial(long degree, Rat coefficient) {
  if (degree < 0) {
    throw std::domain_error("Polynomial::monomial: negative degree");
  }
  Polynomial p;
  if (coefficient != 0) {
    p.coefficients_.resize(static_cast<std::size_t>(degree) + 1);
    p.coefficients_.back() = std::move(coefficient);
  }
  return p;
}

Polynomial Polynomial::constant(Rat value) { return monomial(0, std::move(value)); }

const Rat& Polynomial::coeff(long i) const {
  if (i < 0 || i > degree()) {
    return rat_zero;
  }
  return coefficients_[static_cast<std::size_t>(i)];
}

void Polynomial::set_coeff(long i, Rat value) {
  if (i < 0) {
    throw std::domain_error("Polynomial::set_coeff: negative power");
  }
  if (i > degree()) {
    if (value == 0) return;
    coefficients_.resize(static_cast<std::size_t>(i) + 1);
  }
  coefficients_[static_cast<std::size_t>(i)] = std::move(value);
  trim();
}

Polynomial& Polynomial::add_scaled(const Rat& c, const Polynomial& p) {
  if (c == 0 || p.is_zero()) {
    return *this;
  }
  if (p.degree() > degree()) {
    coefficients_.resize(static_cast<std::size_t>(p.degree()) + 1);
  }
  for (std::size_t i = 0; i < p.coefficients_.size(); ++i) {
    coefficients_[i] += c * p.coefficients_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& p) {
  return add_scaled(Rat(1), p);
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

std::vector<Polynomial> euler_polys_recurrence(long max_n) {
  if (max_n < 0) {
    throw std::domain_error("euler_polys_recurrence: n must be nonnegative");
  }
  std::vector<Polynomial> polys;
  polys.reserve(static_cast<std::size_t>(max_n) + 1);
  polys.push_back(Polynomial::constant(Rat(1)));  // E_0 = 1
  const Rat minus_half = make_rational(-1, 2);
  for (long n = 1; n <= max_n; ++n) {
    Polynomial sum;  // sum_{k<n} C(n,k) E_k
    Int c = 1;       // C(n, k), updated along the row
    for (long k = 0; k < n; ++k) {
      sum.add_scaled(Rat(c), polys[static_cast<std::size_t>(k)]);
      c = c * (n - k) / (k + 1);
    }
    Polynomial e = Polynomial::monomial(n);
    e.add_scaled(minus_half, sum);
    polys.push_back(std::move(e));
  }
  return polys;
}

Polynomial euler_poly_recurrence(long n) {
  return std::move(euler_polys_recurrence(n).back());
}

Rat euler_coeff_explicit(long n, long k, CoeffRoute route) {
  if (k < 0 || k > n) {
    throw std::domain_error("euler_coeff_explicit: k outside [0, n]");
  }
  if (k == 0) {
    return Rat(1);
  }
  if (k % 2 == 0) {
    return Rat(0);
  }
  if (route == CoeffRoute::bernoulli_form) {
    // e_k(n) = -(2/(k+1)) (2^{k+1} - 1) B_{k+1} C(n, k)
    const Int mersenne = (Int(1) << (k + 1)) - 1;
    return make_rational(-2 * mersenne * binomial(n, k), k + 1) * bernoulli(k + 1);
  }
  // e_k(n) = -C(n,k) sum_{j=0}^{k} (-1)^j S(k+1, j+1) j!/2^j
  //        = -C(n,k) * acc / 2^k with integral acc
  Int acc = 0;
  Int factorial = 1;      // j!
  Int pw = Int(1) << k;   // 2^{k-j}
  for (long j = 0; j <= k; ++j) {
    if (j > 0) {
      factorial *= j;
      pw >>= 1;
    }
    const Int term = stirling2(k + 1, j + 1) * factorial * pw;
    if (j & 1) {
      acc -= term;
    } else {
      acc += term;
    }
  }
  return make_rational(-binomial(n, k) * acc, Int(1) << k);
}

Polynomial euler_poly_explicit(long n, CoeffRoute route) {
  if (n < 0) {
    throw std::domain_error("euler_poly_explicit: n must be nonnegative");
  }
  std::vector<Rat> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs[static_cast<std::size_t>(n)] = 1;  // e_0(n) = 1
  for (long k = 1; k <= n; k += 2) {
    coeffs[static_cast<std::size_t>(n - k)] = euler_coeff_explicit(n, k, route);
  }
  return Polynomial(std::move(coeffs));
}

Rat evaluate(const Polynomial& p, const Rat& x) {
  Rat acc(0);
  for (long i = p.degree(); i >= 0; --i) {
    acc = acc * x + p.coeff(i);
  }
  return acc;
}

Polynomial derivative(const Polynomial& p) {
  if (p.degree() < 1) {
    return Polynomial();
  }
  std::vector<Rat> coeffs(static_cast<std::size_t>(p.degree()));
  for (long i = 1; i <= p.degree(); ++i) {
    coeffs[static_cast<std::size_t>(i - 1)] = Rat(i) * p.coeff(i);
  }
  return Polynomial(std::move(coeffs));
}

Rat euler_at_zero(long n) {
  if (n < 1) {
    throw std::domain_error("euler_at_zero: closed form requires n >= 1");
  }
  const Int mersenne = (Int(1) << (n + 1)) - 1;
  return make_rational(-2 * mersenne, n + 1) * bernoulli(n + 1);
}

Polynomial shifted_from_euler(Polynomial euler_n, long n) {
  if (n == 0) {
    return Polynomial();  // E_0 = E_0(1) = 1
  }
  // E_n(1) = -E_n(0), so subtracting it doubles the constant term.
  euler_n.set_coeff(0, 2 * euler_n.coeff(0));
  return euler_n;
}

Polynomial shifted_euler(long n, PolyRoute route) {
  if (n < 0) {
    throw std::domain_error("shifted_euler: n must be nonnegative");
  }
  Polynomial e = route == PolyRoute::recurrence ? euler_poly_recurrence(n)
                                                : euler_poly_explicit(n);
  return shifted_from_euler(std::move(e), n);
}

std::string format_coefficients(const Polynomial& p) {
  std::ostringstream out;
  const long top = std::max(p.degree(), 0L);
  for (long i = 0; i <= top; ++i) {
    const Rat& c = p.coeff(i);
    out << i << '\t' << numerator(c) << '/' << denominator(c) << '\n';
  }
  return out.str();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  for (long i = p.degree(); i >= 0; --i) {
    const Rat& c = p.coeff(i);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const Rat a = negative ? Rat(-c) : c;
    if (a != 1 || i == 0) {
      out << numerator(a);
      if (denominator(a) != 1) out << '/' << denominator(a);
      if (i > 0) out << ' ';
    }
    if (i == 1) {
      out << 'x';
    } else if (i > 1) {
      out << "x^" << i;
    }
  }
  return out.str();
}

}  // namespace eulerdenom
